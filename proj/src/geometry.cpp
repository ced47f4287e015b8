#include "plstab/geometry.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>

#include "plstab/error.hpp"

namespace plstab {

bool Point::is_zero() const {
  return std::all_of(coords_.begin(), coords_.end(), [](const Rational& c) { return c.is_zero(); });
}

std::string Point::str() const {
  std::string out;
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (i) out += ' ';
    out += coords_[i].str();
  }
  return out;
}

Point operator+(const Point& a, const Point& b) {
  assert(a.dim() == b.dim());
  std::vector<Rational> c(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) c[i] = a[i] + b[i];
  return Point(std::move(c));
}

Point operator-(const Point& a, const Point& b) {
  assert(a.dim() == b.dim());
  std::vector<Rational> c(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) c[i] = a[i] - b[i];
  return Point(std::move(c));
}

Point operator*(const Rational& s, const Point& p) {
  std::vector<Rational> c(p.dim());
  for (std::size_t i = 0; i < p.dim(); ++i) c[i] = s * p[i];
  return Point(std::move(c));
}

Rational dot(const Point& a, const Point& b) {
  Rational s;
  for (std::size_t i = 0; i < a.dim(); ++i) s += a[i] * b[i];
  return s;
}

Rational cross(const Point& a, const Point& b) { return a[0] * b[1] - a[1] * b[0]; }

Point cross3(const Point& a, const Point& b) {
  return Point{a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

Rational orient2d(const Point& a, const Point& b, const Point& c) {
  return (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0]);
}

bool parallel(const Point& a, const Point& b) {
  // All 2x2 minors vanish.
  for (std::size_t i = 0; i < a.dim(); ++i) {
    for (std::size_t j = i + 1; j < a.dim(); ++j) {
      if (a[i] * b[j] != a[j] * b[i]) return false;
    }
  }
  return true;
}

bool positively_parallel(const Point& a, const Point& b) {
  if (a.is_zero() || b.is_zero()) return false;
  return parallel(a, b) && dot(a, b).sign() > 0;
}

// ---------------------------------------------------------------------------
// Matrix

Matrix Matrix::identity(std::size_t n) { return scalar(n, Rational(1)); }

Matrix Matrix::scalar(std::size_t n, const Rational& s) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = s;
  return m;
}

Matrix Matrix::from_columns(std::span<const Point> columns) {
  const std::size_t rows = columns.empty() ? 0 : columns.front().dim();
  Matrix m(rows, columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c) {
    for (std::size_t r = 0; r < rows; ++r) m(r, c) = columns[c][r];
  }
  return m;
}

Matrix Matrix::from_rows(std::initializer_list<std::initializer_list<Rational>> rows) {
  const std::size_t cols = rows.size() == 0 ? 0 : rows.begin()->size();
  Matrix m(rows.size(), cols);
  std::size_t r = 0;
  for (const auto& row : rows) {
    if (row.size() != cols) fail(ErrorCode::InvalidArgument, "ragged matrix rows");
    std::size_t c = 0;
    for (const auto& v : row) m(r, c++) = v;
    ++r;
  }
  return m;
}

Point Matrix::apply(const Point& v) const {
  assert(v.dim() == cols_);
  std::vector<Rational> out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) out[r] += (*this)(r, c) * v[c];
  }
  return Point(std::move(out));
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  assert(a.cols_ == b.rows_);
  Matrix m(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      if (a(i, k).is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) m(i, j) += a(i, k) * b(k, j);
    }
  }
  return m;
}

Rational Matrix::determinant() const {
  if (rows_ != cols_) fail(ErrorCode::InvalidArgument, "determinant of non-square matrix");
  Matrix m = *this;
  Rational det(1);
  const std::size_t n = rows_;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && m(pivot, col).is_zero()) ++pivot;
    if (pivot == n) return Rational(0);
    if (pivot != col) {
      for (std::size_t c = 0; c < n; ++c) std::swap(m(pivot, c), m(col, c));
      det = -det;
    }
    det *= m(col, col);
    for (std::size_t r = col + 1; r < n; ++r) {
      if (m(r, col).is_zero()) continue;
      const Rational factor = m(r, col) / m(col, col);
      for (std::size_t c = col; c < n; ++c) m(r, c) -= factor * m(col, c);
    }
  }
  return det;
}

namespace {

// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> rref(Matrix& m, std::size_t limit_cols) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < limit_cols && row < m.rows(); ++col) {
    std::size_t pivot = row;
    while (pivot < m.rows() && m(pivot, col).is_zero()) ++pivot;
    if (pivot == m.rows()) continue;
    if (pivot != row) {
      for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(pivot, c), m(row, c));
    }
    const Rational inv = m(row, col).reciprocal();
    for (std::size_t c = 0; c < m.cols(); ++c) m(row, c) *= inv;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == row || m(r, col).is_zero()) continue;
      const Rational factor = m(r, col);
      for (std::size_t c = 0; c < m.cols(); ++c) m(r, c) -= factor * m(row, c);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

std::size_t Matrix::rank() const {
  Matrix m = *this;
  return rref(m, cols_).size();
}

std::optional<Matrix> Matrix::inverse() const {
  if (rows_ != cols_) return std::nullopt;
  const std::size_t n = rows_;
  Matrix aug(n, 2 * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) aug(r, c) = (*this)(r, c);
    aug(r, n + r) = Rational(1);
  }
  if (rref(aug, n).size() != n) return std::nullopt;
  Matrix inv(n, n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) inv(r, c) = aug(r, n + c);
  }
  return inv;
}

std::optional<Rational> Matrix::scalar_factor() const {
  if (rows_ != cols_ || rows_ == 0) return std::nullopt;
  const Rational s = (*this)(0, 0);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) {
      if ((*this)(r, c) != (r == c ? s : Rational(0))) return std::nullopt;
    }
  }
  return s;
}

std::string Matrix::str() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t r = 0; r < rows_; ++r) {
    if (r) os << ", ";
    os << '(';
    for (std::size_t c = 0; c < cols_; ++c) {
      if (c) os << ", ";
      os << (*this)(r, c);
    }
    os << ')';
  }
  os << ')';
  return os.str();
}

std::optional<LinearSolution> solve_linear(const Matrix& a, std::span<const Rational> b) {
  assert(b.size() == a.rows());
  const std::size_t n = a.cols();
  Matrix aug(a.rows(), n + 1);
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < n; ++c) aug(r, c) = a(r, c);
    aug(r, n) = b[r];
  }
  const auto pivots = rref(aug, n);
  for (std::size_t r = pivots.size(); r < aug.rows(); ++r) {
    if (!aug(r, n).is_zero()) return std::nullopt;
  }
  LinearSolution sol;
  sol.particular.assign(n, Rational(0));
  std::vector<bool> is_pivot(n, false);
  for (std::size_t i = 0; i < pivots.size(); ++i) {
    sol.particular[pivots[i]] = aug(i, n);
    is_pivot[pivots[i]] = true;
  }
  for (std::size_t free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Rational> k(n, Rational(0));
    k[free] = Rational(1);
    for (std::size_t i = 0; i < pivots.size(); ++i) k[pivots[i]] = -aug(i, free);
    sol.kernel.push_back(std::move(k));
  }
  return sol;
}

bool affinely_independent(std::span<const Point> points) {
  if (points.size() <= 1) return true;
  std::vector<Point> diffs;
  for (std::size_t i = 1; i < points.size(); ++i) diffs.push_back(points[i] - points[0]);
  return Matrix::from_columns(diffs).rank() == diffs.size();
}

std::optional<std::vector<Rational>> barycentric(std::span<const Point> vertices, const Point& x) {
  assert(!vertices.empty());
  const std::size_t k = vertices.size() - 1;
  std::vector<Rational> lambda(k + 1);
  if (k == 0) {
    if (x != vertices[0]) return std::nullopt;
    lambda[0] = Rational(1);
    return lambda;
  }
  if (k == 2 && x.dim() == 2) {
    // Planar triangle: ratios of signed areas.
    const Rational total = orient2d(vertices[0], vertices[1], vertices[2]);
    lambda[1] = orient2d(vertices[0], x, vertices[2]) / total;
    lambda[2] = orient2d(vertices[0], vertices[1], x) / total;
    lambda[0] = Rational(1) - lambda[1] - lambda[2];
    return lambda;
  }
  if (k == 1 && x.dim() == 1) {
    lambda[1] = (x[0] - vertices[0][0]) / (vertices[1][0] - vertices[0][0]);
    lambda[0] = Rational(1) - lambda[1];
    return lambda;
  }
  std::vector<Point> diffs;
  for (std::size_t i = 1; i <= k; ++i) diffs.push_back(vertices[i] - vertices[0]);
  const Point rhs = x - vertices[0];
  auto sol = solve_linear(Matrix::from_columns(diffs), rhs.coords());
  if (!sol) return std::nullopt;
  Rational rest(1);
  for (std::size_t i = 0; i < k; ++i) {
    lambda[i + 1] = sol->particular[i];
    rest -= sol->particular[i];
  }
  lambda[0] = rest;
  return lambda;
}

bool in_closed_simplex(std::span<const Point> vertices, const Point& x) {
  auto lambda = barycentric(vertices, x);
  if (!lambda) return false;
  return std::all_of(lambda->begin(), lambda->end(), [](const Rational& l) { return l.sign() >= 0; });
}

bool in_relative_interior(std::span<const Point> vertices, const Point& x) {
  auto lambda = barycentric(vertices, x);
  if (!lambda) return false;
  return std::all_of(lambda->begin(), lambda->end(), [](const Rational& l) { return l.sign() > 0; });
}

Rational relative_measure(std::span<const Point> outer, std::span<const Point> inner) {
  const std::size_t n = outer.size();
  assert(inner.size() == n);
  Matrix bary(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    auto lambda = barycentric(outer, inner[i]);
    if (!lambda) fail(ErrorCode::InvalidArgument, "inner simplex leaves the outer affine hull");
    for (std::size_t j = 0; j < n; ++j) bary(i, j) = (*lambda)[j];
  }
  return bary.determinant().abs();
}

// ---------------------------------------------------------------------------
// Relative-interior predicates

bool segment_interiors_meet(const Point& a, const Point& b, const Point& c, const Point& d) {
  if (a.dim() == 2) {
    const int o1 = orient2d(a, b, c).sign();
    const int o2 = orient2d(a, b, d).sign();
    if (o1 != 0 || o2 != 0) {
      return o1 * o2 < 0 && orient2d(c, d, a).sign() * orient2d(c, d, b).sign() < 0;
    }
  }
  const Point u = b - a;
  const Point v = c - d;
  const Point w = c - a;
  const Point cols[2] = {u, v};
  auto sol = solve_linear(Matrix::from_columns(cols), w.coords());
  if (!sol) return false;
  if (sol->kernel.empty()) {
    const Rational& s = sol->particular[0];
    const Rational& t = sol->particular[1];
    return s.sign() > 0 && s < 1 && t.sign() > 0 && t < 1;
  }
  // Collinear: compare open parameter intervals along a->b.
  const Rational uu = dot(u, u);
  const Rational sc = dot(c - a, u) / uu;
  const Rational sd = dot(d - a, u) / uu;
  const Rational lo = max(Rational(0), min(sc, sd));
  const Rational hi = min(Rational(1), max(sc, sd));
  return lo < hi;
}

namespace {

// Open parameter interval {t in (0,1) : all lambda_i(t) > 0} is nonempty,
// where lambda(t) = (1-t) la + t lb.
bool open_interval_inside(const std::vector<Rational>& la, const std::vector<Rational>& lb) {
  Rational lo(0), hi(1);
  for (std::size_t i = 0; i < la.size(); ++i) {
    // la_i + t (lb_i - la_i) > 0
    const Rational slope = lb[i] - la[i];
    if (slope.is_zero()) {
      if (la[i].sign() <= 0) return false;
      continue;
    }
    const Rational root = -la[i] / slope;
    if (slope.sign() > 0) {
      lo = max(lo, root);
    } else {
      hi = min(hi, root);
    }
  }
  return lo < hi;
}

Rational plane_offset(const Point& normal, const Point& origin, const Point& x) {
  return dot(normal, x - origin);
}

// Endpoints of the open segment ri(tri) ∩ plane, when nonempty.
std::optional<std::pair<Point, Point>> section_with_plane(std::span<const Point> tri, const Point& normal,
                                                          const Point& origin) {
  Rational dist[3];
  bool pos = false, neg = false;
  for (int i = 0; i < 3; ++i) {
    dist[i] = plane_offset(normal, origin, tri[i]);
    pos |= dist[i].sign() > 0;
    neg |= dist[i].sign() < 0;
  }
  if (!pos || !neg) return std::nullopt;
  std::vector<Point> hits;
  for (int i = 0; i < 3; ++i) {
    if (dist[i].is_zero()) hits.push_back(tri[i]);
  }
  for (int i = 0; i < 3; ++i) {
    const int j = (i + 1) % 3;
    if (dist[i].sign() * dist[j].sign() < 0) {
      const Rational t = dist[i] / (dist[i] - dist[j]);
      hits.push_back(tri[i] + t * (tri[j] - tri[i]));
    }
  }
  assert(hits.size() == 2);
  return std::make_pair(hits[0], hits[1]);
}

}  // namespace

std::pair<std::size_t, std::size_t> projection_axes(std::span<const Point> tri) {
  const Point n = cross3(tri[1] - tri[0], tri[2] - tri[0]);
  std::size_t drop = 0;
  for (std::size_t i = 1; i < 3; ++i) {
    if (n[i].abs() > n[drop].abs()) drop = i;
  }
  if (n[drop].is_zero()) fail(ErrorCode::InvalidArgument, "degenerate triangle has no plane");
  if (drop == 0) return {1, 2};
  if (drop == 1) return {0, 2};
  return {0, 1};
}

Point project(const Point& p, std::pair<std::size_t, std::size_t> axes) {
  return Point{p[axes.first], p[axes.second]};
}

bool segment_meets_triangle_interior(const Point& a, const Point& b, std::span<const Point> tri) {
  if (a.dim() == 2) {
    auto la = barycentric(tri, a);
    auto lb = barycentric(tri, b);
    return open_interval_inside(*la, *lb);
  }
  assert(a.dim() == 3);
  const Point normal = cross3(tri[1] - tri[0], tri[2] - tri[0]);
  const Rational da = plane_offset(normal, tri[0], a);
  const Rational db = plane_offset(normal, tri[0], b);
  if (da.is_zero() && db.is_zero()) {
    return open_interval_inside(*barycentric(tri, a), *barycentric(tri, b));
  }
  if (da.sign() * db.sign() >= 0) return false;
  const Rational t = da / (da - db);
  return in_relative_interior(tri, a + t * (b - a));
}

bool triangle_interiors_meet(std::span<const Point> t1, std::span<const Point> t2) {
  if (t1[0].dim() == 2) {
    // Open convex sets are disjoint iff some edge line weakly separates them.
    auto separated_by_edge_of = [](std::span<const Point> t, std::span<const Point> other) {
      const int inside = orient2d(t[0], t[1], t[2]).sign();
      for (std::size_t i = 0; i < 3; ++i) {
        const Point& p = t[i];
        const Point& q = t[(i + 1) % 3];
        bool all_out = true;
        for (const auto& r : other) all_out = all_out && orient2d(p, q, r).sign() * inside <= 0;
        if (all_out) return true;
      }
      return false;
    };
    return !separated_by_edge_of(t1, t2) && !separated_by_edge_of(t2, t1);
  }
  const Point n1 = cross3(t1[1] - t1[0], t1[2] - t1[0]);
  const Point n2 = cross3(t2[1] - t2[0], t2[2] - t2[0]);
  const Point line = cross3(n1, n2);
  if (line.is_zero()) {
    if (!plane_offset(n1, t1[0], t2[0]).is_zero()) return false;
    const auto axes = projection_axes(t1);
    std::vector<Point> p1, p2;
    for (const auto& p : t1) p1.push_back(project(p, axes));
    for (const auto& p : t2) p2.push_back(project(p, axes));
    return triangle_interiors_meet(p1, p2);
  }
  auto s1 = section_with_plane(t1, n2, t2[0]);
  auto s2 = section_with_plane(t2, n1, t1[0]);
  if (!s1 || !s2) return false;
  const Rational a0 = dot(line, s1->first), a1 = dot(line, s1->second);
  const Rational b0 = dot(line, s2->first), b1 = dot(line, s2->second);
  return max(min(a0, a1), min(b0, b1)) < min(max(a0, a1), max(b0, b1));
}

// ---------------------------------------------------------------------------
// Planar polygons

Rational twice_signed_area(std::span<const Point> polygon) {
  Rational s;
  for (std::size_t i = 0; i < polygon.size(); ++i) {
    s += cross(polygon[i], polygon[(i + 1) % polygon.size()]);
  }
  return s;
}

std::vector<Point> simplify_polygon(std::vector<Point> polygon) {
  bool changed = true;
  while (changed && polygon.size() >= 3) {
    changed = false;
    for (std::size_t i = 0; i < polygon.size() && polygon.size() >= 3; ++i) {
      const std::size_t n = polygon.size();
      const Point& prev = polygon[(i + n - 1) % n];
      const Point& next = polygon[(i + 1) % n];
      if (polygon[i] == prev || orient2d(prev, polygon[i], next).is_zero()) {
        polygon.erase(polygon.begin() + static_cast<std::ptrdiff_t>(i));
        changed = true;
        break;
      }
    }
  }
  if (polygon.size() == 2 && polygon[0] == polygon[1]) polygon.pop_back();
  return polygon;
}

std::vector<Point> clip_convex(std::span<const Point> subject, std::span<const Point> clip) {
  std::vector<Point> out(subject.begin(), subject.end());
  for (std::size_t e = 0; e < clip.size() && !out.empty(); ++e) {
    const Point& c0 = clip[e];
    const Point& c1 = clip[(e + 1) % clip.size()];
    std::vector<Point> next;
    for (std::size_t i = 0; i < out.size(); ++i) {
      const Point& p = out[i];
      const Point& q = out[(i + 1) % out.size()];
      const Rational sp = orient2d(c0, c1, p);
      const Rational sq = orient2d(c0, c1, q);
      if (sp.sign() >= 0) next.push_back(p);
      if (sp.sign() * sq.sign() < 0) {
        const Rational t = sp / (sp - sq);
        next.push_back(p + t * (q - p));
      }
    }
    out = std::move(next);
  }
  return simplify_polygon(std::move(out));
}

}  // namespace plstab
