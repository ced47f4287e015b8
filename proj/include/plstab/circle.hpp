#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "plstab/interval.hpp"

namespace plstab {

/// Lift F: R -> R of an orientation-preserving PL circle homeomorphism,
/// stored by its canonical breakpoints on [0, 1] with F(1) = F(0) + 1.
class CircleLift {
 public:
  /// Throws Error{InvalidMap}.
  static CircleLift create(std::vector<Breakpoint> breakpoints);
  static CircleLift rotation(const Rational& alpha);
  static CircleLift identity() { return rotation(0); }

  const std::vector<Breakpoint>& breakpoints() const { return bp_; }
  /// Exact evaluation anywhere on R via F(x + k) = F(x) + k.
  Rational operator()(const Rational& x) const;
  /// F^{-1}(y) anywhere on R.
  Rational preimage(const Rational& y) const;

  friend bool operator==(const CircleLift&, const CircleLift&) = default;

 private:
  explicit CircleLift(std::vector<Breakpoint> bp) : bp_(std::move(bp)) {}
  std::vector<Breakpoint> bp_;
};

Rational eval_lift(const CircleLift& f, const Rational& x);
/// F ∘ G.
CircleLift compose_lift(const CircleLift& f, const CircleLift& g);
CircleLift inverse_lift(const CircleLift& f);
/// F^k for k >= 0 by repeated composition.
CircleLift power_lift(const CircleLift& f, unsigned k);

struct RotationEnclosure {
  Rational lo;
  Rational hi;
  unsigned iterations = 0;
  bool contains(const Rational& x) const { return !(x < lo) && !(hi < x); }
};

/// [(F^n(0) - 1)/n, (F^n(0) + 1)/n], which contains the rotation number.
RotationEnclosure rotation_enclosure(const CircleLift& f, unsigned n);

struct RationalRotation {
  Rational rotation;  // p/q in lowest terms
  long p = 0;
  unsigned q = 0;
  Rational periodic_point;  // F^q(x) = x + p
};

struct RotationDetection {
  std::optional<RationalRotation> found;
  /// Enclosure at n = qmax, reported whether or not detection succeeded.
  RotationEnclosure enclosure;
  /// Without a detection: true when the enclosure alone already contains
  /// no p/q with q <= qmax; false means only the exhaustive search rules
  /// those out and rationality stays undecided.
  bool excluded_by_enclosure = false;
  /// Breakpoint count of F^q at the last q tried.
  std::size_t max_breakpoints = 0;
};

RotationDetection detect_rational_rotation(const CircleLift& f, unsigned qmax = 64);

/// Solutions of F(x) = x + p on one period, sorted. An arc wrapping past 1
/// is reported with hi > 1; the whole circle is [0, 1].
std::vector<ClosedInterval> fixed_set_circle(const CircleLift& f, long p);

// Text format: header `circle`, then `<x> <y>` breakpoint lines.
CircleLift parse_lift(std::string_view text);
std::string write_lift(const CircleLift& f);

}  // namespace plstab
