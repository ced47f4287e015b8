#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "plstab/rational.hpp"

namespace plstab {

struct Breakpoint {
  Rational x;
  Rational y;
  friend bool operator==(const Breakpoint&, const Breakpoint&) = default;
};

/// PL homeomorphism of a closed interval [a, b], stored as its canonical
/// breakpoint list (no collinear interior breakpoints). Representational
/// equality is therefore equality of maps.
class PLMap1D {
 public:
  /// Validates (x strictly increasing, y strictly monotone, endpoints onto
  /// endpoints) and canonicalizes. Throws Error{InvalidMap}.
  static PLMap1D create(std::vector<Breakpoint> breakpoints);
  static PLMap1D identity(const Rational& a, const Rational& b);

  const std::vector<Breakpoint>& breakpoints() const { return bp_; }
  const Rational& left() const { return bp_.front().x; }
  const Rational& right() const { return bp_.back().x; }
  bool orientation_preserving() const { return bp_.front().y == left(); }
  bool is_identity() const;

  /// Exact evaluation; throws Error{OutOfInterval}.
  Rational operator()(const Rational& x) const;

  friend bool operator==(const PLMap1D&, const PLMap1D&) = default;

 private:
  explicit PLMap1D(std::vector<Breakpoint> bp) : bp_(std::move(bp)) {}
  std::vector<Breakpoint> bp_;
};

/// Drops interior breakpoints whose neighbours are collinear with them.
std::vector<Breakpoint> canonicalize(std::vector<Breakpoint> breakpoints);

Rational eval1d(const PLMap1D& f, const Rational& x);
/// f ∘ g. Breakpoints are g's breakpoints merged with g-preimages of f's.
PLMap1D compose1d(const PLMap1D& f, const PLMap1D& g);
PLMap1D inverse1d(const PLMap1D& f);

enum class Side { Left, Right };

/// Slope of the affine piece adjacent to the fixed point p on `side`.
Rational one_sided_derivative(const PLMap1D& f, const Rational& p, Side side);

struct CharacterPairCheck {
  std::size_t first = 0;
  std::size_t second = 0;
  Rational composite;  // d(f_first ∘ f_second)(left+)
  Rational product;    // d f_first(left+) * d f_second(left+)
  bool ok = false;
};

struct CharacterReport {
  std::vector<Rational> characters;  // g ↦ dg(left+)
  std::vector<CharacterPairCheck> pairs;
  bool all_pass = true;
};

/// Verifies the chain rule for right derivatives at the left endpoint over
/// all ordered pairs. Maps must fix the left endpoint and preserve
/// orientation.
CharacterReport derivative_homomorphism_check(std::span<const PLMap1D> maps);

struct ClosedInterval {
  Rational lo;
  Rational hi;
  bool is_point() const { return lo == hi; }
  friend bool operator==(const ClosedInterval&, const ClosedInterval&) = default;
};

/// Maximal closed intervals (possibly points) where f(x) = x, sorted.
std::vector<ClosedInterval> fixed_set_1d(const PLMap1D& f);

struct RayWitness {
  Rational a;             // sup of the initial segment where all maps are the identity
  std::size_t generator;  // a map that is not the identity just right of `a`
  friend bool operator==(const RayWitness&, const RayWitness&) = default;
};

/// nullopt means every generator is the identity.
std::optional<RayWitness> ray_triviality_certifier(std::span<const PLMap1D> generators);

// Text format: header `interval <a> <b>`, then `<x> <y>` lines.
PLMap1D parse_map1d(std::string_view text);
std::string write_map1d(const PLMap1D& f);

}  // namespace plstab
