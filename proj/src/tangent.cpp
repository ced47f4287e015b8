#include "plstab/tangent.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "plstab/error.hpp"

namespace plstab {

Point normalize_ray(const Point& d) {
  if (d.is_zero()) fail(ErrorCode::InvalidArgument, "a ray needs a nonzero direction");
  mpz_class l = 1;
  for (const auto& c : d.coords()) l = lcm(l, c.denominator());
  std::vector<mpz_class> ints;
  mpz_class g = 0;
  for (const auto& c : d.coords()) {
    ints.push_back(c.numerator() * (l / c.denominator()));
    g = gcd(g, ints.back());
  }
  std::vector<Rational> out;
  for (const auto& n : ints) out.emplace_back(mpz_class(n / g));
  return Point(std::move(out));
}

namespace {

// 0 for directions in [0, pi) measured counter-clockwise from s, else 1.
int half(const Point& s, const Point& a) {
  const int c = cross(s, a).sign();
  if (c > 0) return 0;
  if (c == 0 && dot(s, a).sign() > 0) return 0;
  return 1;
}

bool angle_less(const Point& s, const Point& a, const Point& b) {
  const int ha = half(s, a), hb = half(s, b);
  if (ha != hb) return ha < hb;
  return cross(a, b).sign() > 0;
}

Point east(int dim) { return dim == 2 ? Point{1, 0} : Point{1}; }

// Sorted, deduplicated fan over `rays` starting at `start` (interior fans
// always start from the first ray at or after angle zero).
Fan make_fan(const Point& apex, int dim, bool interior, std::vector<Point> rays, const Point& start) {
  for (auto& r : rays) r = normalize_ray(r);
  if (dim == 1) {
    std::sort(rays.begin(), rays.end());
  } else {
    const Point s = interior ? east(2) : start;
    std::sort(rays.begin(), rays.end(), [&](const Point& a, const Point& b) { return angle_less(s, a, b); });
  }
  rays.erase(std::unique(rays.begin(), rays.end()), rays.end());
  return Fan{apex, dim, std::move(rays), interior};
}

// A direction strictly inside cone i.
Point inner_direction(const Fan& f, std::size_t i) {
  const auto [a, b] = f.cone(i);
  return f.dim == 1 ? a : a + b;
}

void check_same_support(const Fan& a, const Fan& b) {
  if (a.dim != b.dim || a.apex != b.apex || a.interior != b.interior) {
    fail(ErrorCode::SupportMismatch, "fans differ in apex or support type");
  }
  if (!a.interior && a.dim == 2 && (a.rays.front() != b.rays.front() || a.rays.back() != b.rays.back())) {
    fail(ErrorCode::SupportMismatch, "boundary fans span different sectors");
  }
  if (!a.interior && a.dim == 1 && a.rays != b.rays) fail(ErrorCode::SupportMismatch, "half-lines differ");
}

std::size_t containing_cone(const Fan& f, const Point& d) {
  const auto i = f.cone_containing(d);
  if (!i) fail(ErrorCode::SupportMismatch, "direction (" + d.str() + ") leaves the fan's support");
  return *i;
}

}  // namespace

std::size_t Fan::cone_count() const {
  if (dim == 1 || interior) return rays.size();
  return rays.size() - 1;
}

std::pair<Point, Point> Fan::cone(std::size_t i) const {
  if (dim == 1) return {rays[i], rays[i]};
  return {rays[i], rays[(i + 1) % rays.size()]};
}

std::optional<std::size_t> Fan::cone_containing(const Point& d) const {
  for (std::size_t i = 0; i < cone_count(); ++i) {
    const auto [a, b] = cone(i);
    if (dim == 1) {
      if (positively_parallel(a, d)) return i;
    } else if (cross(a, d).sign() >= 0 && cross(d, b).sign() >= 0) {
      return i;
    }
  }
  return std::nullopt;
}

std::string to_string(SphereType t) {
  switch (t) {
    case SphereType::Circle: return "circle";
    case SphereType::Arc: return "arc";
    case SphereType::TwoPoints: return "two-points";
    case SphereType::Point: return "point";
  }
  return "?";
}

Germ build_germ(const PLMap2D& f, VertexId p) {
  if (p >= f.base().vertex_count()) fail(ErrorCode::VertexNotInComplex, "vertex " + std::to_string(p) + " is not in the base");
  return build_germ_at(f, f.base().point(p));
}

Germ build_germ_at(const PLMap2D& f, const Point& p) {
  if (f(p) != p) fail(ErrorCode::NotFixedPoint, "(" + p.str() + ") is not fixed");
  const Complex& dom = f.domain();
  const auto v = dom.find_vertex(p);
  if (!v) fail(ErrorCode::InvalidArgument, "(" + p.str() + ") is not a vertex of the refinement");
  const bool interior = !dom.is_boundary_vertex(*v);
  if (f.dim() == 1 && dom.ambient_dim() == 1) {
    std::vector<std::pair<Point, Matrix>> cones;
    for (std::size_t idx : dom.incident(*v)) {
      const Simplex& s = dom.simplices()[idx];
      const VertexId w = s[0] == *v ? s[1] : s[0];
      cones.emplace_back(normalize_ray(dom.point(w) - p), f.linear_part(idx));
    }
    std::sort(cones.begin(), cones.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    Germ g{Fan{p, 1, {}, interior}, {}};
    for (auto& [r, m] : cones) {
      g.fan.rays.push_back(r);
      g.matrices.push_back(m);
    }
    return g;
  }
  if (f.dim() != 2 || dom.ambient_dim() != 2) fail(ErrorCode::Unsupported, "germs need a planar surface or a line");

  struct Cone {
    Point a, b;
    Matrix m;
  };
  std::map<Point, Cone> by_first;
  std::vector<Point> seconds;
  for (std::size_t idx : dom.incident(*v)) {
    std::vector<Point> others;
    for (VertexId w : dom.simplices()[idx].vertices()) {
      if (w != *v) others.push_back(normalize_ray(dom.point(w) - p));
    }
    if (cross(others[0], others[1]).sign() < 0) std::swap(others[0], others[1]);
    seconds.push_back(others[1]);
    by_first.emplace(others[0], Cone{others[0], others[1], f.linear_part(idx)});
  }
  Point start = by_first.begin()->first;
  if (interior) {
    for (const auto& [r, c] : by_first) {
      if (angle_less(east(2), r, start)) start = r;
    }
  } else {
    for (const auto& [r, c] : by_first) {
      if (std::find(seconds.begin(), seconds.end(), r) == seconds.end()) start = r;
    }
  }
  Germ g{Fan{p, 2, {start}, interior}, {}};
  Point cur = start;
  for (std::size_t k = 0; k < by_first.size(); ++k) {
    const Cone& c = by_first.at(cur);
    g.matrices.push_back(c.m);
    cur = c.b;
    if (!interior || k + 1 < by_first.size()) g.fan.rays.push_back(cur);
  }
  return g;
}

Germ subdivide(const Germ& g, std::span<const Point> extra) {
  std::vector<Point> rays = g.fan.rays;
  for (const auto& r : extra) {
    if (g.fan.cone_containing(r)) rays.push_back(r);
  }
  Fan fan = make_fan(g.fan.apex, g.fan.dim, g.fan.interior, std::move(rays), g.fan.rays.front());
  std::vector<Matrix> mats;
  for (std::size_t i = 0; i < fan.cone_count(); ++i) {
    mats.push_back(g.matrices[containing_cone(g.fan, inner_direction(fan, i))]);
  }
  return Germ{std::move(fan), std::move(mats)};
}

std::vector<Germ> refine_fans(std::span<const Germ> germs) {
  if (germs.empty()) return {};
  std::vector<Point> rays;
  for (const auto& g : germs) {
    check_same_support(germs[0].fan, g.fan);
    rays.insert(rays.end(), g.fan.rays.begin(), g.fan.rays.end());
  }
  std::vector<Germ> out;
  for (const auto& g : germs) out.push_back(subdivide(g, rays));
  return out;
}

Germ compose_germs(const Germ& f, const Germ& g) {
  check_same_support(f.fan, g.fan);
  std::vector<Point> extra;
  for (std::size_t i = 0; i < g.fan.cone_count(); ++i) {
    const auto inv = g.matrices[i].inverse();
    if (!inv) fail(ErrorCode::NondegenerateViolation, "singular cone matrix");
    for (const auto& r : f.fan.rays) {
      const Point pre = inv->apply(r);
      const auto [a, b] = g.fan.cone(i);
      if (g.fan.dim == 2 ? (cross(a, pre).sign() >= 0 && cross(pre, b).sign() >= 0) : positively_parallel(a, pre)) {
        extra.push_back(normalize_ray(pre));
      }
    }
  }
  Germ out = subdivide(g, extra);
  for (std::size_t i = 0; i < out.fan.cone_count(); ++i) {
    const Point img = out.matrices[i].apply(inner_direction(out.fan, i));
    out.matrices[i] = f.matrices[containing_cone(f.fan, img)] * out.matrices[i];
  }
  return out;
}

Germ inverse_germ(const Germ& g) {
  std::vector<Point> rays;
  std::vector<Matrix> inverses;
  for (std::size_t i = 0; i < g.fan.cone_count(); ++i) {
    const auto inv = g.matrices[i].inverse();
    if (!inv) fail(ErrorCode::NondegenerateViolation, "singular cone matrix");
    inverses.push_back(*inv);
    const auto [a, b] = g.fan.cone(i);
    rays.push_back(g.matrices[i].apply(a));
    rays.push_back(g.matrices[i].apply(b));
  }
  Fan fan = make_fan(g.fan.apex, g.fan.dim, g.fan.interior, std::move(rays), g.fan.rays.front());
  if (!g.fan.interior && g.fan.dim == 2 && (fan.rays.front() != g.fan.rays.front() || fan.rays.back() != g.fan.rays.back())) {
    // The germ swaps the two boundary rays; restart the arc at the image of the first ray.
    fan = make_fan(g.fan.apex, 2, false, fan.rays, g.fan.rays.back());
  }
  std::vector<Matrix> mats;
  for (std::size_t i = 0; i < fan.cone_count(); ++i) {
    const Point d = inner_direction(fan, i);
    std::optional<std::size_t> src;
    for (std::size_t j = 0; j < inverses.size() && !src; ++j) {
      const Point pre = inverses[j].apply(d);
      const auto [a, b] = g.fan.cone(j);
      const bool inside = g.fan.dim == 2 ? (cross(a, pre).sign() >= 0 && cross(pre, b).sign() >= 0)
                                         : positively_parallel(a, pre);
      if (inside) src = j;
    }
    if (!src) fail(ErrorCode::SupportMismatch, "germ does not map its fan onto itself");
    mats.push_back(inverses[*src]);
  }
  return Germ{std::move(fan), std::move(mats)};
}

bool equivalent_germs(const Germ& a, const Germ& b) {
  const Germ both[2] = {a, b};
  const auto r = refine_fans(both);
  return r[0].fan == r[1].fan && r[0].matrices == r[1].matrices;
}

Point apply_ray(const Germ& g, const Point& ray) {
  return normalize_ray(g.matrices[containing_cone(g.fan, ray)].apply(ray));
}

bool is_trivial_on_tangent_sphere(const Germ& g) { return !moved_ray(g).has_value(); }

std::optional<MovedRay> moved_ray(const Germ& g) {
  for (std::size_t i = 0; i < g.fan.cone_count(); ++i) {
    const auto [a, b] = g.fan.cone(i);
    // A fixes every ray of a 2D cone iff it fixes a, b and a + b.
    for (const Point& c : {a, b, a + b}) {
      const Point img = g.matrices[i].apply(c);
      if (!positively_parallel(c, img)) return MovedRay{i, normalize_ray(c), normalize_ray(img)};
    }
  }
  return std::nullopt;
}

RayMap ray_map(const Germ& g) {
  std::vector<Point> extra;
  for (std::size_t i = 0; i < g.fan.cone_count(); ++i) {
    const auto inv = g.matrices[i].inverse();
    for (const auto& r : g.fan.rays) extra.push_back(inv->apply(r));
  }
  // Keep only preimages that land in the cone they were pulled back through.
  std::vector<Point> kept;
  for (std::size_t i = 0, k = 0; i < g.fan.cone_count(); ++i) {
    const auto [a, b] = g.fan.cone(i);
    for (std::size_t j = 0; j < g.fan.rays.size(); ++j, ++k) {
      const Point& pre = extra[k];
      const bool inside = g.fan.dim == 2 ? (cross(a, pre).sign() >= 0 && cross(pre, b).sign() >= 0)
                                         : positively_parallel(a, pre);
      if (inside) kept.push_back(normalize_ray(pre));
    }
  }
  RayMap out{subdivide(g, kept), {}};
  for (std::size_t i = 0; i < out.source.fan.cone_count(); ++i) {
    out.target.push_back(containing_cone(g.fan, out.source.matrices[i].apply(inner_direction(out.source.fan, i))));
  }
  return out;
}

SphereType tangent_sphere_type(const Fan& f) {
  if (f.dim == 1) return f.interior ? SphereType::TwoPoints : SphereType::Point;
  return f.interior ? SphereType::Circle : SphereType::Arc;
}

std::string write_germ(const Germ& g) {
  std::string out = "apex " + g.fan.apex.str() + "\n";
  out += std::string("fan ") + (g.fan.interior ? "interior" : "boundary") + "\n";
  for (const auto& r : g.fan.rays) out += "ray " + r.str() + "\n";
  for (std::size_t i = 0; i < g.matrices.size(); ++i) {
    out += "cone " + std::to_string(i);
    const Matrix& m = g.matrices[i];
    for (std::size_t r = 0; r < m.rows(); ++r) {
      for (std::size_t c = 0; c < m.cols(); ++c) out += " " + m(r, c).str();
    }
    out += "\n";
  }
  return out;
}

}  // namespace plstab
