#include "plstab/interval.hpp"

#include <algorithm>

#include "plstab/error.hpp"
#include "text.hpp"

namespace plstab {

namespace {

Rational slope(const Breakpoint& a, const Breakpoint& b) { return (b.y - a.y) / (b.x - a.x); }

bool collinear(const Breakpoint& a, const Breakpoint& b, const Breakpoint& c) {
  return (b.y - a.y) * (c.x - a.x) == (c.y - a.y) * (b.x - a.x);
}

// Index k of the piece [x_k, x_{k+1}] containing x; a breakpoint selects the
// piece it starts, except at the right end.
std::size_t piece_of(const std::vector<Breakpoint>& bp, const Rational& x) {
  auto it = std::upper_bound(bp.begin(), bp.end(), x, [](const Rational& v, const Breakpoint& b) { return v < b.x; });
  std::size_t k = static_cast<std::size_t>(it - bp.begin());
  if (k == 0) return 0;
  return std::min(k - 1, bp.size() - 2);
}

Rational interpolate(const Breakpoint& a, const Breakpoint& b, const Rational& x) {
  return a.y + slope(a, b) * (x - a.x);
}

}  // namespace

std::vector<Breakpoint> canonicalize(std::vector<Breakpoint> bp) {
  if (bp.size() <= 2) return bp;
  std::vector<Breakpoint> out;
  out.push_back(bp.front());
  for (std::size_t i = 1; i + 1 < bp.size(); ++i) {
    if (!collinear(out.back(), bp[i], bp[i + 1])) out.push_back(bp[i]);
  }
  out.push_back(bp.back());
  return out;
}

PLMap1D PLMap1D::create(std::vector<Breakpoint> bp) {
  if (bp.size() < 2) fail(ErrorCode::InvalidMap, "a PL interval map needs at least two breakpoints");
  for (std::size_t i = 1; i < bp.size(); ++i) {
    if (!(bp[i - 1].x < bp[i].x)) fail(ErrorCode::InvalidMap, "breakpoint x values must increase strictly");
  }
  const bool increasing = bp[0].y < bp[1].y;
  for (std::size_t i = 1; i < bp.size(); ++i) {
    const bool up = bp[i - 1].y < bp[i].y;
    if (up != increasing || bp[i - 1].y == bp[i].y) {
      fail(ErrorCode::InvalidMap, "breakpoint y values must be strictly monotone");
    }
  }
  const Rational& a = bp.front().x;
  const Rational& b = bp.back().x;
  const bool onto = increasing ? (bp.front().y == a && bp.back().y == b) : (bp.front().y == b && bp.back().y == a);
  if (!onto) fail(ErrorCode::InvalidMap, "endpoints must map onto endpoints");
  return PLMap1D(canonicalize(std::move(bp)));
}

PLMap1D PLMap1D::identity(const Rational& a, const Rational& b) { return create({{a, a}, {b, b}}); }

bool PLMap1D::is_identity() const { return bp_.size() == 2 && orientation_preserving(); }

Rational PLMap1D::operator()(const Rational& x) const {
  if (x < left() || right() < x) {
    fail(ErrorCode::OutOfInterval, x.str() + " is outside [" + left().str() + ", " + right().str() + "]");
  }
  const std::size_t k = piece_of(bp_, x);
  return interpolate(bp_[k], bp_[k + 1], x);
}

Rational eval1d(const PLMap1D& f, const Rational& x) { return f(x); }

PLMap1D inverse1d(const PLMap1D& f) {
  std::vector<Breakpoint> bp;
  for (const auto& b : f.breakpoints()) bp.push_back({b.y, b.x});
  if (!f.orientation_preserving()) std::reverse(bp.begin(), bp.end());
  return PLMap1D::create(std::move(bp));
}

PLMap1D compose1d(const PLMap1D& f, const PLMap1D& g) {
  if (f.left() != g.left() || f.right() != g.right()) {
    fail(ErrorCode::InvalidArgument, "composed maps must share their interval");
  }
  const PLMap1D g_inv = inverse1d(g);
  std::vector<Rational> xs;
  for (const auto& b : g.breakpoints()) xs.push_back(b.x);
  for (const auto& b : f.breakpoints()) xs.push_back(g_inv(b.x));
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  std::vector<Breakpoint> bp;
  bp.reserve(xs.size());
  for (const auto& x : xs) bp.push_back({x, f(g(x))});
  return PLMap1D::create(std::move(bp));
}

Rational one_sided_derivative(const PLMap1D& f, const Rational& p, Side side) {
  if (f(p) != p) fail(ErrorCode::NotFixedPoint, p.str() + " is not a fixed point");
  const auto& bp = f.breakpoints();
  if (side == Side::Right) {
    if (!(p < f.right())) fail(ErrorCode::SideOutsideInterval, "no right side at " + p.str());
    std::size_t k = piece_of(bp, p);
    if (bp[k + 1].x == p) ++k;
    return slope(bp[k], bp[k + 1]);
  }
  if (!(f.left() < p)) fail(ErrorCode::SideOutsideInterval, "no left side at " + p.str());
  std::size_t k = piece_of(bp, p);
  if (bp[k].x == p) --k;
  return slope(bp[k], bp[k + 1]);
}

CharacterReport derivative_homomorphism_check(std::span<const PLMap1D> maps) {
  CharacterReport report;
  for (const auto& f : maps) {
    if (!f.orientation_preserving()) {
      fail(ErrorCode::OrientationReversing, "derivative characters need orientation-preserving maps");
    }
    report.characters.push_back(one_sided_derivative(f, f.left(), Side::Right));
  }
  for (std::size_t i = 0; i < maps.size(); ++i) {
    for (std::size_t j = 0; j < maps.size(); ++j) {
      CharacterPairCheck c;
      c.first = i;
      c.second = j;
      const PLMap1D fg = compose1d(maps[i], maps[j]);
      c.composite = one_sided_derivative(fg, fg.left(), Side::Right);
      c.product = report.characters[i] * report.characters[j];
      c.ok = c.composite == c.product;
      report.all_pass = report.all_pass && c.ok;
      report.pairs.push_back(std::move(c));
    }
  }
  return report;
}

std::vector<ClosedInterval> fixed_set_1d(const PLMap1D& f) {
  const auto& bp = f.breakpoints();
  std::vector<ClosedInterval> pieces;
  for (std::size_t k = 0; k + 1 < bp.size(); ++k) {
    const Rational d0 = bp[k].y - bp[k].x;
    const Rational d1 = bp[k + 1].y - bp[k + 1].x;
    if (d0.is_zero() && d1.is_zero()) {
      pieces.push_back({bp[k].x, bp[k + 1].x});
    } else if (d0.is_zero()) {
      pieces.push_back({bp[k].x, bp[k].x});
    } else if (d1.is_zero()) {
      pieces.push_back({bp[k + 1].x, bp[k + 1].x});
    } else if (d0.sign() != d1.sign()) {
      const Rational t = d0 / (d0 - d1);
      const Rational x = bp[k].x + t * (bp[k + 1].x - bp[k].x);
      pieces.push_back({x, x});
    }
  }
  std::vector<ClosedInterval> out;
  for (auto& p : pieces) {
    if (!out.empty() && !(out.back().hi < p.lo)) {
      out.back().hi = max(out.back().hi, p.hi);
    } else {
      out.push_back(std::move(p));
    }
  }
  return out;
}

std::optional<RayWitness> ray_triviality_certifier(std::span<const PLMap1D> generators) {
  std::optional<RayWitness> best;
  for (std::size_t i = 0; i < generators.size(); ++i) {
    const PLMap1D& g = generators[i];
    if (g(g.left()) != g.left()) fail(ErrorCode::NotFixedPoint, "generator does not fix the left endpoint");
    if (g.is_identity()) continue;
    // Canonical form: the first piece is the identity iff its right end is
    // on the diagonal, and then the next piece is not.
    const auto& bp = g.breakpoints();
    const Rational a = (bp[1].y == bp[1].x) ? bp[1].x : bp[0].x;
    if (!best || a < best->a) best = RayWitness{a, i};
  }
  return best;
}

PLMap1D parse_map1d(std::string_view input) {
  const auto lines = text::tokenize(input);
  if (lines.empty() || lines[0].tokens[0] != "interval" || lines[0].tokens.size() != 3) {
    fail(ErrorCode::Parse, "expected header `interval <a> <b>`");
  }
  const Rational a = text::parse_rational(lines[0], lines[0].tokens[1]);
  const Rational b = text::parse_rational(lines[0], lines[0].tokens[2]);
  std::vector<Breakpoint> bp;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    if (lines[i].tokens.size() != 2) text::parse_error(lines[i], "expected `<x> <y>`");
    bp.push_back({text::parse_rational(lines[i], lines[i].tokens[0]), text::parse_rational(lines[i], lines[i].tokens[1])});
  }
  if (bp.size() < 2 || bp.front().x != a || bp.back().x != b) {
    fail(ErrorCode::Parse, "breakpoints must start at the interval's left end and finish at its right end");
  }
  return PLMap1D::create(std::move(bp));
}

std::string write_map1d(const PLMap1D& f) {
  std::string out = "interval " + f.left().str() + " " + f.right().str() + "\n";
  for (const auto& b : f.breakpoints()) out += b.x.str() + " " + b.y.str() + "\n";
  return out;
}

}  // namespace plstab
