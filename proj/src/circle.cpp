#include "plstab/circle.hpp"

#include <algorithm>
#include <functional>

#include "plstab/error.hpp"
#include "text.hpp"

namespace plstab {

namespace {

// Index of the piece [x_k, x_{k+1}] containing t in [lo, hi].
template <class Key>
std::size_t piece(const std::vector<Breakpoint>& bp, const Rational& t, Key key) {
  auto it = std::upper_bound(bp.begin(), bp.end(), t, [&](const Rational& v, const Breakpoint& b) { return v < key(b); });
  const std::size_t k = static_cast<std::size_t>(it - bp.begin());
  if (k == 0) return 0;
  return std::min(k - 1, bp.size() - 2);
}

Rational lerp(const Rational& x0, const Rational& y0, const Rational& x1, const Rational& y1, const Rational& x) {
  return y0 + (y1 - y0) / (x1 - x0) * (x - x0);
}

// Samples a lift at sorted candidate points of [0, 1].
CircleLift sample(std::vector<Rational> xs, const std::function<Rational(const Rational&)>& fn) {
  xs.push_back(0);
  xs.push_back(1);
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  std::vector<Breakpoint> bp;
  for (const auto& x : xs) {
    if (x.sign() < 0 || Rational(1) < x) continue;
    bp.push_back({x, fn(x)});
  }
  return CircleLift::create(std::move(bp));
}

}  // namespace

CircleLift CircleLift::create(std::vector<Breakpoint> bp) {
  if (bp.size() < 2) fail(ErrorCode::InvalidMap, "a circle lift needs at least two breakpoints");
  if (!bp.front().x.is_zero() || bp.back().x != 1) fail(ErrorCode::InvalidMap, "lift breakpoints must run from x = 0 to x = 1");
  for (std::size_t i = 1; i < bp.size(); ++i) {
    if (!(bp[i - 1].x < bp[i].x)) fail(ErrorCode::InvalidMap, "breakpoint x values must increase strictly");
    if (!(bp[i - 1].y < bp[i].y)) fail(ErrorCode::InvalidMap, "lift values must increase strictly");
  }
  if (bp.back().y != bp.front().y + 1) fail(ErrorCode::InvalidMap, "lift must satisfy F(1) = F(0) + 1");
  return CircleLift(canonicalize(std::move(bp)));
}

CircleLift CircleLift::rotation(const Rational& alpha) { return create({{0, alpha}, {1, alpha + 1}}); }

Rational CircleLift::operator()(const Rational& x) const {
  const mpz_class k = x.floor();
  const Rational t = x - Rational(k);
  const std::size_t i = piece(bp_, t, [](const Breakpoint& b) -> const Rational& { return b.x; });
  return lerp(bp_[i].x, bp_[i].y, bp_[i + 1].x, bp_[i + 1].y, t) + Rational(k);
}

Rational CircleLift::preimage(const Rational& y) const {
  const mpz_class k = (y - bp_.front().y).floor();
  const Rational t = y - Rational(k);
  const std::size_t i = piece(bp_, t, [](const Breakpoint& b) -> const Rational& { return b.y; });
  return lerp(bp_[i].y, bp_[i].x, bp_[i + 1].y, bp_[i + 1].x, t) + Rational(k);
}

Rational eval_lift(const CircleLift& f, const Rational& x) { return f(x); }

CircleLift compose_lift(const CircleLift& f, const CircleLift& g) {
  std::vector<Rational> xs;
  for (const auto& b : g.breakpoints()) xs.push_back(b.x);
  // g maps [0, 1] onto [g(0), g(0) + 1]; pull back f's breakpoints there.
  const Rational g0 = g.breakpoints().front().y;
  for (const auto& b : f.breakpoints()) {
    const mpz_class k0 = (g0 - b.x).ceil();
    for (mpz_class k = k0; Rational(k) + b.x <= g0 + 1; ++k) xs.push_back(g.preimage(b.x + Rational(k)));
  }
  return sample(std::move(xs), [&](const Rational& x) { return f(g(x)); });
}

CircleLift inverse_lift(const CircleLift& f) {
  std::vector<Rational> xs;
  for (const auto& b : f.breakpoints()) {
    const Rational frac = b.y - Rational(b.y.floor());
    xs.push_back(frac);
  }
  return sample(std::move(xs), [&](const Rational& y) { return f.preimage(y); });
}

CircleLift power_lift(const CircleLift& f, unsigned k) {
  CircleLift out = CircleLift::identity();
  for (unsigned i = 0; i < k; ++i) out = compose_lift(f, out);
  return out;
}

RotationEnclosure rotation_enclosure(const CircleLift& f, unsigned n) {
  if (n == 0) fail(ErrorCode::InvalidArgument, "enclosure needs n >= 1");
  Rational x = 0;
  for (unsigned i = 0; i < n; ++i) x = f(x);
  const Rational nn(static_cast<long>(n));
  return {(x - 1) / nn, (x + 1) / nn, n};
}

std::vector<ClosedInterval> fixed_set_circle(const CircleLift& f, long p) {
  const auto& bp = f.breakpoints();
  std::vector<ClosedInterval> pieces;
  for (std::size_t k = 0; k + 1 < bp.size(); ++k) {
    const Rational d0 = bp[k].y - bp[k].x - p;
    const Rational d1 = bp[k + 1].y - bp[k + 1].x - p;
    if (d0.is_zero() && d1.is_zero()) {
      pieces.push_back({bp[k].x, bp[k + 1].x});
    } else if (d0.is_zero()) {
      pieces.push_back({bp[k].x, bp[k].x});
    } else if (d1.is_zero()) {
      pieces.push_back({bp[k + 1].x, bp[k + 1].x});
    } else if (d0.sign() != d1.sign()) {
      const Rational x = bp[k].x + d0 / (d0 - d1) * (bp[k + 1].x - bp[k].x);
      pieces.push_back({x, x});
    }
  }
  std::vector<ClosedInterval> out;
  for (auto& c : pieces) {
    if (!out.empty() && !(out.back().hi < c.lo)) {
      out.back().hi = max(out.back().hi, c.hi);
    } else {
      out.push_back(std::move(c));
    }
  }
  // 1 and 0 are the same point of the circle.
  if (out.size() > 1 && out.back().hi == 1) {
    if (out.back().lo == 1) {
      out.pop_back();
    } else {
      out.back().hi = 1 + out.front().hi;
      out.erase(out.begin());
    }
  }
  return out;
}

RotationDetection detect_rational_rotation(const CircleLift& f, unsigned qmax) {
  if (qmax == 0) fail(ErrorCode::InvalidArgument, "qmax must be positive");
  RotationDetection out;
  CircleLift g = CircleLift::identity();
  for (unsigned q = 1; q <= qmax && !out.found; ++q) {
    g = compose_lift(f, g);
    out.max_breakpoints = g.breakpoints().size();
    // The displacement g(x) - x is PL and periodic; its extremes sit at
    // breakpoints, and every integer between them is attained.
    Rational lo = g.breakpoints().front().y - g.breakpoints().front().x;
    Rational hi = lo;
    for (const auto& b : g.breakpoints()) {
      lo = min(lo, b.y - b.x);
      hi = max(hi, b.y - b.x);
    }
    const mpz_class p = lo.ceil();
    if (hi < Rational(p)) continue;
    const auto fix = fixed_set_circle(g, p.get_si());
    out.found = RationalRotation{Rational(p) / Rational(static_cast<long>(q)), p.get_si(), q, fix.front().lo};
  }
  out.enclosure = rotation_enclosure(f, qmax);
  if (!out.found) {
    // Any p/q in [lo, hi] with q <= qmax?
    bool hit = false;
    for (unsigned q = 1; q <= qmax && !hit; ++q) {
      const Rational qq(static_cast<long>(q));
      hit = !(qq * out.enclosure.hi < Rational((qq * out.enclosure.lo).ceil()));
    }
    out.excluded_by_enclosure = !hit;
  }
  return out;
}

CircleLift parse_lift(std::string_view input) {
  const auto lines = text::tokenize(input);
  if (lines.empty() || lines[0].tokens.size() != 1 || lines[0].tokens[0] != "circle") {
    fail(ErrorCode::Parse, "expected header `circle`");
  }
  std::vector<Breakpoint> bp;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    if (lines[i].tokens.size() != 2) text::parse_error(lines[i], "expected `<x> <y>`");
    bp.push_back({text::parse_rational(lines[i], lines[i].tokens[0]), text::parse_rational(lines[i], lines[i].tokens[1])});
  }
  return CircleLift::create(std::move(bp));
}

std::string write_lift(const CircleLift& f) {
  std::string out = "circle\n";
  for (const auto& b : f.breakpoints()) out += b.x.str() + " " + b.y.str() + "\n";
  return out;
}

}  // namespace plstab
