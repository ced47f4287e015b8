#include "oracles.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <optional>

namespace plstab::testing {

namespace {

std::vector<ClosedInterval> merge(std::vector<ClosedInterval> hits) {
  std::sort(hits.begin(), hits.end(), [](auto& l, auto& r) { return l.lo < r.lo || (l.lo == r.lo && l.hi < r.hi); });
  std::vector<ClosedInterval> merged;
  for (auto& h : hits) {
    if (!merged.empty() && !(merged.back().hi < h.lo)) {
      merged.back().hi = max(merged.back().hi, h.hi);
    } else {
      merged.push_back(h);
    }
  }
  return merged;
}

Point barycenter(const SubComplex& s, const Simplex& x) {
  Point c = Point::zero(s.points.front().dim());
  for (auto v : x.vertices()) c = c + Rational(1, static_cast<long>(x.size())) * s.points[v];
  return c;
}

Point p2(const Rational& x, const Rational& y) { return Point{x, y}; }

std::vector<Point> ring(long r) {
  const Rational q(r);
  return {{q, 0}, {q, q}, {0, q}, {-q, q}, {-q, 0}, {-q, -q}, {0, -q}, {q, -q}};
}

Matrix random_matrix(Rng& rng) {
  std::uniform_int_distribution<int> kind(0, 3);
  const Rational s = random_rational(rng, Rational(1, 4), 4, 8);
  switch (kind(rng)) {
    case 0: return Matrix::scalar(2, s);
    case 1: return Matrix::from_rows({{0, -s}, {s, 0}});
    case 2: return Matrix::from_rows({{s, random_rational(rng, -2, 2, 4)}, {0, s}});
    default: {
      Matrix m(2, 2);
      do {
        for (std::size_t r = 0; r < 2; ++r) {
          for (std::size_t c = 0; c < 2; ++c) m(r, c) = random_rational(rng, -3, 3, 2);
        }
      } while (m.determinant().is_zero());
      return m;
    }
  }
}

}  // namespace

std::vector<ClosedInterval> brute_fixed_set_1d(const PLMap1D& f) {
  std::vector<ClosedInterval> hits;
  const auto& bp = f.breakpoints();
  for (std::size_t k = 0; k + 1 < bp.size(); ++k) {
    const Rational a = (bp[k + 1].y - bp[k].y) / (bp[k + 1].x - bp[k].x);
    const Rational c = bp[k].y - a * bp[k].x;
    if (a == 1) {
      if (c.is_zero()) hits.push_back({bp[k].x, bp[k + 1].x});
      continue;
    }
    const Rational x = c / (Rational(1) - a);
    if (!(x < bp[k].x) && !(bp[k + 1].x < x)) hits.push_back({x, x});
  }
  return merge(std::move(hits));
}

std::set<Point> brute_fixed_piece(const PLMap2D& f, std::size_t i) {
  const Simplex& s = f.domain().simplices()[i];
  std::vector<Point> v, d;
  for (auto id : s.vertices()) {
    v.push_back(f.domain().point(id));
    d.push_back(f.image(id) - f.domain().point(id));
  }
  if (std::all_of(d.begin(), d.end(), [](const Point& x) { return x.is_zero(); })) return {v.begin(), v.end()};
  std::set<Point> cand;
  for (std::size_t a = 0; a < v.size(); ++a) {
    for (std::size_t b = a + 1; b < v.size(); ++b) {
      if (d[a].is_zero()) cand.insert(v[a]);
      if (d[b].is_zero()) cand.insert(v[b]);
      std::optional<Rational> t;
      for (std::size_t r = 0; r < d[a].dim() && !t; ++r) {
        if (d[a][r] != d[b][r]) t = d[a][r] / (d[a][r] - d[b][r]);
      }
      if (!t || t->sign() < 0 || Rational(1) < *t) continue;
      if (!((Rational(1) - *t) * d[a] + *t * d[b]).is_zero()) continue;
      cand.insert(v[a] + *t * (v[b] - v[a]));
    }
  }
  if (cand.empty() && v.size() == 3) {
    const Matrix m = f.linear_part(i);
    const Point b = f.image(s[0]) - m.apply(v[0]);
    const Rational a11 = m(0, 0) - 1, a12 = m(0, 1), a21 = m(1, 0), a22 = m(1, 1) - 1;
    const Rational det = a11 * a22 - a12 * a21;
    if (!det.is_zero()) {
      const Point x{(-b[0] * a22 + a12 * b[1]) / det, (-a11 * b[1] + a21 * b[0]) / det};
      if (in_closed_simplex(v, x)) cand.insert(x);
    }
  }
  if (cand.size() > 2) cand = {*cand.begin(), *cand.rbegin()};
  return cand;
}

bool fixed_locus_matches_brute(const PLMap2D& f) {
  const FixedLocus fl = fixed_subcomplex(f);
  std::map<std::size_t, std::set<Point>> got;
  for (const auto& c : fl.provenance) {
    for (auto v : c.cell.vertices()) got[c.piece].insert(fl.subcomplex.points[v]);
  }
  for (std::size_t i = 0; i < f.domain().simplices().size(); ++i) {
    const auto it = got.find(i);
    if (brute_fixed_piece(f, i) != (it == got.end() ? std::set<Point>{} : it->second)) return false;
  }
  for (const Simplex& s : fl.subcomplex.simplices) {
    for (auto v : s.vertices()) {
      if (f(fl.subcomplex.points[v]) != fl.subcomplex.points[v]) return false;
    }
    const Point c = barycenter(fl.subcomplex, s);
    if (f(c) != c) return false;
  }
  if (!fl.subcomplex.empty() && !fl.everything) {
    const auto nf = canonical_invariant(fl);
    if (!is_closed_manifold(nf.n_f) || nf.n_f.dim() >= f.dim()) return false;
  }
  return true;
}

std::vector<ClosedInterval> as_intervals(const SubComplex& s) {
  std::vector<ClosedInterval> out;
  for (const Simplex& m : s.maximal()) {
    Rational lo = s.points[m[0]][0], hi = lo;
    for (auto v : m.vertices()) {
      lo = min(lo, s.points[v][0]);
      hi = max(hi, s.points[v][0]);
    }
    out.push_back({lo, hi});
  }
  return merge(std::move(out));
}

std::set<Point> vertex_set(const SubComplex& s) {
  std::set<Point> out;
  for (auto v : s.vertex_ids()) out.insert(s.points[v]);
  return out;
}

bool preserves(const PLMap2D& g, const PLMap2D& ginv, const SubComplex& s) {
  for (const Simplex& x : s.simplices) {
    for (const Point& p : {barycenter(s, x), s.points[x[0]]}) {
      if (!realization_contains(s, g(p)) || !realization_contains(s, ginv(p))) return false;
    }
  }
  return true;
}

PLMap2D annulus_twist() {
  const long radii[5] = {2, 3, 4, 5, 6};
  const int shifts[5] = {2, 1, 0, 1, 2};
  std::vector<Point> points, images;
  for (int k = 0; k < 5; ++k) {
    const auto r = ring(radii[k]);
    for (int j = 0; j < 8; ++j) {
      points.push_back(r[static_cast<std::size_t>(j)]);
      images.push_back(r[static_cast<std::size_t>((j + shifts[k]) % 8)]);
    }
  }
  std::vector<Simplex> tris;
  auto id = [](int k, int j) { return static_cast<VertexId>(8 * k + (j % 8)); };
  for (int k = 0; k < 4; ++k) {
    // Diagonals lean with the relative twist of the band.
    const bool inner_ahead = shifts[k] > shifts[k + 1];
    for (int j = 0; j < 8; ++j) {
      if (inner_ahead) {
        tris.push_back({id(k, j), id(k + 1, j + 1), id(k + 1, j)});
        tris.push_back({id(k, j), id(k, j + 1), id(k + 1, j + 1)});
      } else {
        tris.push_back({id(k, j), id(k, j + 1), id(k + 1, j)});
        tris.push_back({id(k, j + 1), id(k + 1, j + 1), id(k + 1, j)});
      }
    }
  }
  const Complex base = Complex::create(points, tris);
  return PLMap2D::create(base, base, images);
}

PLMap2D radial_map() {
  const Rational h(1, 2);
  std::vector<Point> pts{{1, 1}, {-1, 1}, {-1, -1}, {1, -1}, {h, h}, {-h, h}, {-h, -h}, {h, -h}, {0, 0}};
  std::vector<Simplex> tris;
  for (VertexId i = 0; i < 4; ++i) {
    const VertexId j = (i + 1) % 4;
    tris.push_back({8, 4 + i, 4 + j});
    tris.push_back({4 + i, 4 + j, j});
    tris.push_back({4 + i, i, j});
  }
  std::vector<Point> images = pts;
  for (std::size_t i = 4; i < 8; ++i) images[i] = Rational(1, 2) * pts[i];
  return PLMap2D::create(square4(), Complex::create(pts, tris), images);
}

PLMap2D unit_square_rotation() {
  const Complex c = unit_square_diag();
  std::vector<Point> images;
  for (const Point& p : c.points()) images.push_back({Rational(1) - p[1], p[0]});
  return PLMap2D::from_vertex_images(c, images);
}

Complex grid() {
  std::vector<Point> pts;
  for (long j = 0; j < 4; ++j) {
    for (long i = 0; i < 4; ++i) pts.push_back({Rational(i, 3), Rational(j, 3)});
  }
  std::vector<Simplex> tris;
  for (VertexId j = 0; j < 3; ++j) {
    for (VertexId i = 0; i < 3; ++i) {
      const VertexId a = 4 * j + i;
      tris.push_back({a, a + 1, a + 5});
      tris.push_back({a, a + 4, a + 5});
    }
  }
  return Complex::create(pts, tris);
}

PLMap2D far_bump() {
  const Complex g = grid();
  std::vector<Point> images = g.points();
  images[10] = {Rational(2, 3) + Rational(1, 30), Rational(2, 3) + Rational(1, 40)};
  return PLMap2D::from_vertex_images(g, images);
}

VertexId first_reaching(const Complex& c, VertexId p, VertexId v) {
  std::vector<bool> seen(c.vertex_count(), false);
  std::deque<VertexId> q{p};
  seen[p] = true;
  while (!q.empty()) {
    const VertexId u = q.front();
    q.pop_front();
    const auto nb = c.neighbors(u);
    if (u == v || std::find(nb.begin(), nb.end(), v) != nb.end()) return u;
    for (auto n : nb) {
      if (!seen[n]) {
        seen[n] = true;
        q.push_back(n);
      }
    }
  }
  return c.vertex_count();
}

bool sampled_trivial(const Germ& g) {
  for (std::size_t i = 0; i < g.fan.cone_count(); ++i) {
    const auto [a, b] = g.fan.cone(i);
    for (long k = 1; k <= 100; ++k) {
      const Point d = Rational(101 - k, 101) * a + Rational(k, 101) * b;
      if (!positively_parallel(d, g.matrices[i].apply(d))) return false;
    }
  }
  return true;
}

Germ random_germ(Rng& rng) {
  const std::vector<Point> compass{p2(1, 0), p2(1, 1), p2(0, 1), p2(-1, 1), p2(-1, 0), p2(-1, -1), p2(0, -1), p2(1, -1)};
  std::vector<std::size_t> idx;
  for (;;) {
    idx.resize(compass.size());
    std::iota(idx.begin(), idx.end(), 0);
    std::shuffle(idx.begin(), idx.end(), rng);
    idx.resize(static_cast<std::size_t>(std::uniform_int_distribution<int>(3, 8)(rng)));
    std::sort(idx.begin(), idx.end());
    // Cones must be salient: no gap of half a turn or more.
    bool salient = true;
    for (std::size_t i = 0; i < idx.size(); ++i) {
      const std::size_t next = idx[(i + 1) % idx.size()] + (i + 1 == idx.size() ? 8 : 0);
      if (next - idx[i] >= 4) salient = false;
    }
    if (salient) break;
  }
  std::vector<Point> rays;
  for (auto i : idx) rays.push_back(compass[i]);
  Germ g{Fan{p2(0, 0), 2, rays, true}, {}};
  const bool scalar = std::uniform_int_distribution<int>(0, 2)(rng) == 0;
  for (std::size_t i = 0; i < g.fan.cone_count(); ++i) {
    g.matrices.push_back(scalar ? Matrix::scalar(2, random_rational(rng, Rational(1, 4), 4, 8)) : random_matrix(rng));
  }
  return g;
}

Rational triangle_area(const std::vector<Point>& tri) { return orient2d(tri[0], tri[1], tri[2]).abs() / 2; }

bool contained_in_one(const Complex& t, const std::vector<Point>& cell) {
  const Point c = Rational(1, 3) * (cell[0] + cell[1] + cell[2]);
  int hits = 0;
  for (const auto& s : t.simplices()) {
    const auto tri = t.realize(s);
    if (!in_relative_interior(tri, c)) continue;
    ++hits;
    for (const auto& p : cell) {
      if (!in_closed_simplex(tri, p)) return false;
    }
  }
  return hits == 1;
}

mpz_class minor_gcd(const IntMatrix& m, std::size_t k) {
  mpz_class g = 0;
  std::vector<bool> rsel(m.rows(), false), csel(m.cols(), false);
  std::fill(rsel.begin(), rsel.begin() + static_cast<long>(k), true);
  do {
    std::fill(csel.begin(), csel.end(), false);
    std::fill(csel.begin(), csel.begin() + static_cast<long>(k), true);
    do {
      IntMatrix sub(k, k);
      std::size_t ri = 0;
      for (std::size_t r = 0; r < m.rows(); ++r) {
        if (!rsel[r]) continue;
        std::size_t ci = 0;
        for (std::size_t c = 0; c < m.cols(); ++c) {
          if (csel[c]) sub(ri, ci++) = m(r, c);
        }
        ++ri;
      }
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), mpz_class(sub.determinant()).get_mpz_t());
    } while (std::prev_permutation(csel.begin(), csel.end()));
  } while (std::prev_permutation(rsel.begin(), rsel.end()));
  return g;
}

IntMatrix random_int_matrix(Rng& rng) {
  std::uniform_int_distribution<long> entry(-9, 9);
  std::uniform_int_distribution<std::size_t> rows(1, 6), cols(1, 8), zero(0, 3), dup(0, 4);
  IntMatrix m(rows(rng), cols(rng));
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) m(r, c) = zero(rng) == 0 ? 0 : entry(rng);
  }
  // Low-rank cases: a doubled row now and then.
  if (m.rows() > 1 && dup(rng) == 0) {
    for (std::size_t c = 0; c < m.cols(); ++c) m(1, c) = 2 * m(0, c);
  }
  return m;
}

Word random_word(Rng& rng, int gens, int max_len) {
  std::uniform_int_distribution<int> len(0, max_len), g(1, gens), s(0, 1);
  Word w;
  for (int i = len(rng); i > 0; --i) w.push_back(s(rng) ? g(rng) : -g(rng));
  return w;
}

}  // namespace plstab::testing
