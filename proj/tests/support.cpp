#include "support.hpp"

#include <algorithm>
#include <set>

#include "plstab/error.hpp"

namespace plstab::testing {

Rational random_rational(Rng& rng, const Rational& lo, const Rational& hi, long den) {
  const Rational scale(den);
  const long a = (lo * scale).ceil().get_si();
  const long b = (hi * scale).floor().get_si();
  std::uniform_int_distribution<long> dist(a, b);
  return Rational(dist(rng), den);
}

namespace {

Point pt(long x, long y) { return Point{Rational(x), Rational(y)}; }

}  // namespace

Complex square4() {
  return Complex::create({pt(-1, -1), pt(1, -1), pt(1, 1), pt(-1, 1), pt(0, 0)},
                         {{0, 1, 4}, {1, 2, 4}, {2, 3, 4}, {0, 3, 4}});
}

Complex unit_square4() {
  return Complex::create({pt(0, 0), pt(1, 0), pt(1, 1), pt(0, 1), Point{Rational(1, 2), Rational(1, 2)}},
                         {{0, 1, 4}, {1, 2, 4}, {2, 3, 4}, {0, 3, 4}});
}

Complex unit_square_diag() {
  return Complex::create({pt(0, 0), pt(1, 0), pt(1, 1), pt(0, 1)}, {{0, 1, 2}, {0, 2, 3}});
}

Complex unit_square_antidiag() {
  return Complex::create({pt(0, 0), pt(1, 0), pt(1, 1), pt(0, 1)}, {{0, 1, 3}, {1, 2, 3}});
}

Complex triangle_disk() { return Complex::create({pt(0, 0), pt(1, 0), pt(0, 1)}, {{0, 1, 2}}); }

Complex tetrahedron_boundary() {
  auto p3 = [](long x, long y, long z) { return Point{Rational(x), Rational(y), Rational(z)}; };
  return Complex::create({p3(0, 0, 0), p3(1, 0, 0), p3(0, 1, 0), p3(0, 0, 1)},
                         {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}});
}

Complex three_cycle() {
  return Complex::create({pt(0, 0), pt(1, 0), pt(0, 1)}, {{0, 1}, {1, 2}, {0, 2}});
}

Complex interval_complex(const Rational& a, const Rational& b, std::vector<Rational> cuts) {
  std::vector<Rational> xs{a};
  std::sort(cuts.begin(), cuts.end());
  xs.insert(xs.end(), cuts.begin(), cuts.end());
  xs.push_back(b);
  std::vector<Point> points;
  std::vector<Simplex> edges;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    points.push_back(Point{xs[i]});
    if (i) edges.push_back(Simplex{i - 1, i});
  }
  return Complex::create(std::move(points), std::move(edges));
}

ComplexRecords split_simplex(const Complex& c, std::size_t simplex_index, const Point& p) {
  ComplexRecords r{c.points(), {}};
  const VertexId np = r.points.size();
  r.points.push_back(p);
  for (std::size_t i = 0; i < c.simplices().size(); ++i) {
    const Simplex& s = c.simplices()[i];
    if (i != simplex_index) {
      r.simplices.push_back(s);
      continue;
    }
    for (const auto& f : s.facets()) {
      auto v = f.vertices();
      v.push_back(np);
      r.simplices.emplace_back(std::move(v));
    }
  }
  return r;
}

ComplexRecords split_edge(const Complex& c, const Simplex& edge, const Point& p) {
  ComplexRecords r{c.points(), {}};
  const VertexId np = r.points.size();
  r.points.push_back(p);
  for (const auto& s : c.simplices()) {
    if (!s.contains(edge)) {
      r.simplices.push_back(s);
      continue;
    }
    for (VertexId keep : edge.vertices()) {
      std::vector<VertexId> v;
      for (VertexId x : s.vertices()) {
        if (!edge.contains(x) || x == keep) v.push_back(x);
      }
      v.push_back(np);
      r.simplices.emplace_back(std::move(v));
    }
  }
  return r;
}

namespace {

Point random_interior(Rng& rng, const std::vector<Point>& verts) {
  std::uniform_int_distribution<long> w(1, 6);
  std::vector<long> weights;
  long total = 0;
  for (std::size_t i = 0; i < verts.size(); ++i) {
    weights.push_back(w(rng));
    total += weights.back();
  }
  Point p = Point::zero(verts[0].dim());
  for (std::size_t i = 0; i < verts.size(); ++i) p = p + Rational(weights[i], total) * verts[i];
  return p;
}

// Flips interior edge shared by two triangles when the quadrilateral is
// strictly convex.
std::optional<ComplexRecords> try_flip(const Complex& c, const Simplex& edge) {
  if (c.dim() != 2 || c.facet_degree(edge) != 2) return std::nullopt;
  std::vector<VertexId> opposite;
  for (const auto& s : c.simplices()) {
    if (!s.contains(edge)) continue;
    for (VertexId x : s.vertices()) {
      if (!edge.contains(x)) opposite.push_back(x);
    }
  }
  const Point& a = c.point(edge[0]);
  const Point& b = c.point(edge[1]);
  const Point& p = c.point(opposite[0]);
  const Point& q = c.point(opposite[1]);
  if (orient2d(p, q, a).sign() * orient2d(p, q, b).sign() >= 0) return std::nullopt;
  if (orient2d(a, b, p).sign() * orient2d(a, b, q).sign() >= 0) return std::nullopt;
  ComplexRecords r{c.points(), {}};
  for (const auto& s : c.simplices()) {
    if (!s.contains(edge)) r.simplices.push_back(s);
  }
  r.simplices.push_back(Simplex{opposite[0], opposite[1], edge[0]});
  r.simplices.push_back(Simplex{opposite[0], opposite[1], edge[1]});
  return r;
}

}  // namespace

Complex random_subdivision(Rng& rng, const Complex& c) {
  std::uniform_int_distribution<int> coin(0, 1);
  if (coin(rng) == 0 || c.dim() == 1) {
    const auto& edges = c.faces(1);
    std::uniform_int_distribution<std::size_t> pick(0, edges.size() - 1);
    const Simplex e = edges[pick(rng)];
    return Complex::create(split_edge(c, e, random_interior(rng, c.realize(e))));
  }
  std::uniform_int_distribution<std::size_t> pick(0, c.simplices().size() - 1);
  const std::size_t idx = pick(rng);
  return Complex::create(split_simplex(c, idx, random_interior(rng, c.realize(c.simplices()[idx]))));
}

Complex random_square_triangulation(Rng& rng, std::size_t max_triangles) {
  std::uniform_int_distribution<int> coin(0, 1);
  Complex c = coin(rng) ? unit_square_diag() : unit_square_antidiag();
  std::uniform_int_distribution<std::size_t> target_dist(2, max_triangles);
  const std::size_t target = target_dist(rng);
  while (c.simplices().size() + 2 <= target) {
    c = random_subdivision(rng, c);
    // A few flips keep the triangulations from being purely stellar.
    for (int k = 0; k < 2; ++k) {
      const auto& edges = c.faces(1);
      std::uniform_int_distribution<std::size_t> pick(0, edges.size() - 1);
      if (auto flipped = try_flip(c, edges[pick(rng)])) c = Complex::create(std::move(*flipped));
    }
  }
  return c;
}

namespace {

std::vector<Rational> random_sorted(Rng& rng, std::size_t n, const Rational& a, const Rational& b) {
  std::set<Rational> s;
  while (s.size() < n) {
    Rational r = random_rational(rng, a, b, 256);
    if (a < r && r < b) s.insert(r);
  }
  return {s.begin(), s.end()};
}

}  // namespace

PLMap1D random_map1d(Rng& rng, std::size_t max_breakpoints, const Rational& a, const Rational& b) {
  std::uniform_int_distribution<std::size_t> count(0, max_breakpoints - 2);
  const std::size_t n = count(rng);
  auto xs = random_sorted(rng, n, a, b);
  auto ys = random_sorted(rng, n, a, b);
  xs.insert(xs.begin(), a);
  xs.push_back(b);
  ys.insert(ys.begin(), a);
  ys.push_back(b);
  std::uniform_int_distribution<int> die(0, 2);
  for (std::size_t i = 1; i + 1 < xs.size(); ++i) {
    if (die(rng) == 0 && ys[i - 1] < xs[i] && xs[i] < ys[i + 1]) ys[i] = xs[i];
  }
  std::vector<Breakpoint> bp;
  for (std::size_t i = 0; i < xs.size(); ++i) bp.push_back({xs[i], ys[i]});
  return PLMap1D::create(std::move(bp));
}

PLMap1D random_map1d_with_identity_prefix(Rng& rng, std::size_t max_breakpoints) {
  std::uniform_int_distribution<int> die(0, 2);
  const Rational c = die(rng) == 0 ? Rational(0) : random_rational(rng, Rational(1, 16), Rational(3, 4), 16);
  const PLMap1D tail = random_map1d(rng, max_breakpoints, c, 1);
  std::vector<Breakpoint> bp;
  if (c.sign() > 0) bp.push_back({0, 0});
  for (const auto& b : tail.breakpoints()) bp.push_back(b);
  return PLMap1D::create(std::move(bp));
}

}  // namespace plstab::testing

namespace plstab::testing {

namespace {

Point q2(const Rational& x, const Rational& y) { return Point{x, y}; }

}  // namespace

PLMap2D quarter_rotation() {
  const Complex base = square4();
  std::vector<Point> images;
  for (const auto& p : base.points()) images.push_back(q2(-p[1], p[0]));
  return PLMap2D::from_vertex_images(base, std::move(images));
}

PLMap2D shear_map() {
  const Complex base = unit_square4();
  const Complex domain = Complex::create(split_simplex(base, 0, q2(Rational(1, 2), Rational(1, 4))));
  std::vector<Point> images = domain.points();
  images[5] = q2(Rational(1, 2), Rational(3, 8));
  return PLMap2D::create(base, domain, std::move(images));
}

PLMap2D left_half_map() {
  const Rational h(1, 2), t(3, 4);
  // 0..4 lie in x <= 1/2; 5 is the fan center of the right half.
  std::vector<Point> pts{q2(0, 0), q2(0, 1), q2(h, 0), q2(h, h), q2(h, 1), q2(t, h),
                         q2(t, 0), q2(1, 0), q2(1, h), q2(1, 1), q2(t, 1)};
  std::vector<Simplex> tris{{0, 2, 3}, {0, 1, 3}, {1, 3, 4}};
  const std::vector<VertexId> arc{2, 6, 7, 8, 9, 10, 4, 3, 2};
  for (std::size_t i = 0; i + 1 < arc.size(); ++i) tris.push_back(Simplex{5, arc[i], arc[i + 1]});
  const Complex base = Complex::create(pts, tris);
  std::vector<Point> images = pts;
  images[5] = q2(t, Rational(5, 8));
  images[6] = pts[7];
  images[7] = pts[8];
  images[8] = pts[9];
  images[9] = pts[10];
  images[10] = q2(Rational(5, 8), 1);
  return PLMap2D::from_vertex_images(base, std::move(images));
}

PLMap2D cycle_rotation() {
  const Complex base = three_cycle();
  return PLMap2D::from_vertex_images(base, {base.point(1), base.point(2), base.point(0)});
}

Point random_square_point(Rng& rng, long den) {
  return q2(random_rational(rng, 0, 1, den), random_rational(rng, 0, 1, den));
}

PLMap2D random_square_map(Rng& rng, std::size_t max_triangles) {
  const Complex base = unit_square_diag();
  Complex domain = base;
  std::uniform_int_distribution<std::size_t> target_dist(2, max_triangles);
  const std::size_t target = target_dist(rng);
  while (domain.simplices().size() + 2 <= target) domain = random_subdivision(rng, domain);
  std::vector<Point> images = domain.points();
  for (VertexId v = 0; v < domain.vertex_count(); ++v) {
    if (domain.is_boundary_vertex(v)) continue;
    const auto& around = domain.incident(v);
    std::uniform_int_distribution<std::size_t> pick(0, around.size() - 1);
    const auto tri = domain.realize(domain.simplices()[around[pick(rng)]]);
    std::vector<Point> trial = images;
    trial[v] = random_interior(rng, tri);
    try {
      PLMap2D::create(base, domain, trial);
      images = std::move(trial);
    } catch (const Error&) {
    }
  }
  return PLMap2D::create(base, domain, std::move(images));
}

}  // namespace plstab::testing

namespace plstab::testing {

CircleLift random_lift(Rng& rng, std::size_t max_breakpoints) {
  std::uniform_int_distribution<std::size_t> count(0, max_breakpoints - 2);
  const std::size_t n = count(rng);
  const auto xs = random_sorted(rng, n, 0, 1);
  const auto ys = random_sorted(rng, n, 0, 1);
  const Rational shift = random_rational(rng, -1, 1, 32);
  std::vector<Breakpoint> bp{{0, shift}};
  for (std::size_t i = 0; i < n; ++i) bp.push_back({xs[i], ys[i] + shift});
  bp.push_back({1, shift + 1});
  return CircleLift::create(std::move(bp));
}

}  // namespace plstab::testing
