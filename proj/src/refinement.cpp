#include "plstab/refinement.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "plstab/error.hpp"
#include "text.hpp"

namespace plstab {

namespace {

struct Box {
  std::vector<Rational> lo, hi;
};

Box box_of(const std::vector<Point>& pts) {
  Box b{pts[0].coords(), pts[0].coords()};
  for (const auto& p : pts) {
    for (std::size_t k = 0; k < p.dim(); ++k) {
      b.lo[k] = min(b.lo[k], p[k]);
      b.hi[k] = max(b.hi[k], p[k]);
    }
  }
  return b;
}

bool overlap(const Box& a, const Box& b) {
  for (std::size_t k = 0; k < a.lo.size(); ++k) {
    if (a.hi[k] < b.lo[k] || b.hi[k] < a.lo[k]) return false;
  }
  return true;
}

bool coplanar(const std::vector<Point>& t1, const std::vector<Point>& t2) {
  if (t1[0].dim() < 3) return true;
  const Point n = cross3(t1[1] - t1[0], t1[2] - t1[0]);
  return std::all_of(t2.begin(), t2.end(), [&](const Point& q) { return dot(n, q - t1[0]).is_zero(); });
}

std::vector<Point> counter_clockwise(std::vector<Point> tri) {
  if (orient2d(tri[0], tri[1], tri[2]).sign() < 0) std::swap(tri[1], tri[2]);
  return tri;
}

Point combine(const std::vector<Rational>& lambda, const std::vector<Point>& verts) {
  Point out = Point::zero(verts[0].dim());
  for (std::size_t i = 0; i < verts.size(); ++i) out = out + lambda[i] * verts[i];
  return out;
}

// Intersection polygon of two coplanar triangles, counter-clockwise in the
// projected plane; empty when the interiors are disjoint.
std::vector<Point> intersect_triangles(const std::vector<Point>& t1, const std::vector<Point>& t2) {
  if (t1[0].dim() == 2) {
    auto poly = clip_convex(counter_clockwise(t1), counter_clockwise(t2));
    if (poly.size() < 3) return {};
    return poly;
  }
  const auto axes = projection_axes(t1);
  std::vector<Point> p1, p2;
  for (const auto& p : t1) p1.push_back(project(p, axes));
  for (const auto& p : t2) p2.push_back(project(p, axes));
  auto poly = clip_convex(counter_clockwise(p1), counter_clockwise(p2));
  if (poly.size() < 3) return {};
  for (auto& q : poly) q = combine(*barycentric(p1, q), t1);
  return poly;
}

std::vector<Point> intersect_segments(const std::vector<Point>& s1, const std::vector<Point>& s2) {
  const Point u = s1[1] - s1[0];
  if (!parallel(u, s2[1] - s2[0])) return {};
  const Point w = s2[0] - s1[0];
  if (!w.is_zero() && !parallel(u, w)) return {};
  const Rational uu = dot(u, u);
  const Rational tc = dot(s2[0] - s1[0], u) / uu;
  const Rational td = dot(s2[1] - s1[0], u) / uu;
  const Rational lo = max(Rational(0), min(tc, td));
  const Rational hi = min(Rational(1), max(tc, td));
  if (!(lo < hi)) return {};
  return {s1[0] + lo * u, s1[0] + hi * u};
}

// Triangles fanned from the lexicographically smallest polygon vertex.
std::vector<std::vector<Point>> fan(std::vector<Point> poly) {
  auto first = std::min_element(poly.begin(), poly.end());
  std::rotate(poly.begin(), first, poly.end());
  std::vector<std::vector<Point>> out;
  for (std::size_t i = 1; i + 1 < poly.size(); ++i) out.push_back({poly[0], poly[i], poly[i + 1]});
  return out;
}

Complex numbered_complex(const std::vector<std::vector<Point>>& cells, std::map<Point, VertexId>& ids) {
  for (const auto& c : cells) {
    for (const auto& p : c) ids.emplace(p, 0);
  }
  std::vector<Point> points;
  for (auto& [p, id] : ids) {
    id = points.size();
    points.push_back(p);
  }
  std::vector<Simplex> simplices;
  for (const auto& c : cells) {
    std::vector<VertexId> v;
    for (const auto& p : c) v.push_back(ids.at(p));
    simplices.emplace_back(std::move(v));
  }
  return Complex::from_disjoint_cells(std::move(points), std::move(simplices));
}

std::vector<Box> boxes_of(const Complex& c) {
  std::vector<Box> out;
  for (const auto& s : c.simplices()) out.push_back(box_of(c.realize(s)));
  return out;
}

}  // namespace

Overlay overlay(const Complex& t1, const Complex& t2) {
  if (t1.dim() != t2.dim() || t1.ambient_dim() != t2.ambient_dim()) {
    fail(ErrorCode::RealizationMismatch, "triangulations differ in dimension");
  }
  const auto b1 = boxes_of(t1);
  const auto b2 = boxes_of(t2);
  std::vector<std::vector<Point>> cells;
  std::vector<std::pair<std::size_t, std::size_t>> origin;
  std::vector<Rational> cover1(t1.simplices().size()), cover2(t2.simplices().size());
  for (std::size_t i = 0; i < t1.simplices().size(); ++i) {
    const auto s1 = t1.realize(t1.simplices()[i]);
    for (std::size_t j = 0; j < t2.simplices().size(); ++j) {
      if (!overlap(b1[i], b2[j])) continue;
      const auto s2 = t2.realize(t2.simplices()[j]);
      std::vector<std::vector<Point>> pieces;
      if (t1.dim() == 1) {
        auto seg = intersect_segments(s1, s2);
        if (!seg.empty()) pieces.push_back(std::move(seg));
      } else if (!coplanar(s1, s2)) {
        if (triangle_interiors_meet(s1, s2)) {
          fail(ErrorCode::NonCoplanarOverlap, "overlapping triangles are not coplanar");
        }
      } else {
        auto poly = intersect_triangles(s1, s2);
        if (!poly.empty()) pieces = fan(std::move(poly));
      }
      for (auto& p : pieces) {
        cover1[i] += relative_measure(s1, p);
        cover2[j] += relative_measure(s2, p);
        cells.push_back(std::move(p));
        origin.emplace_back(i, j);
      }
    }
  }
  for (const auto& c : cover1) {
    if (c != 1) fail(ErrorCode::RealizationMismatch, "first triangulation is not covered by the second");
  }
  for (const auto& c : cover2) {
    if (c != 1) fail(ErrorCode::RealizationMismatch, "second triangulation is not covered by the first");
  }
  std::map<Point, VertexId> ids;
  Complex complex = numbered_complex(cells, ids);
  std::map<Simplex, std::pair<std::size_t, std::size_t>> by_cell;
  for (std::size_t k = 0; k < cells.size(); ++k) {
    std::vector<VertexId> v;
    for (const auto& p : cells[k]) v.push_back(ids.at(p));
    by_cell.emplace(Simplex(std::move(v)), origin[k]);
  }
  std::vector<std::pair<std::size_t, std::size_t>> provenance;
  for (const auto& s : complex.simplices()) provenance.push_back(by_cell.at(s));
  return Overlay{std::move(complex), std::move(provenance)};
}

// ---------------------------------------------------------------------------

namespace {

void check_refinement(const Complex& base, const Complex& fine) {
  std::vector<Rational> cover(base.simplices().size());
  for (const auto& s : fine.simplices()) {
    const auto pts = fine.realize(s);
    Point centroid = Point::zero(base.ambient_dim());
    for (const auto& p : pts) centroid = centroid + p;
    centroid = Rational(1, static_cast<long>(pts.size())) * centroid;
    const auto where = base.locate(centroid);
    bool inside = where.has_value();
    std::vector<Point> outer;
    if (inside) {
      outer = base.realize(base.simplices()[*where]);
      for (const auto& p : pts) inside = inside && in_closed_simplex(outer, p);
    }
    if (!inside) fail(ErrorCode::InvalidMap, "refinement cell does not lie in a base simplex");
    cover[*where] += relative_measure(outer, pts);
  }
  for (const auto& c : cover) {
    if (c != 1) fail(ErrorCode::InvalidMap, "refinement does not cover the base");
  }
}

void check_boundary(const Complex& base, const Complex& domain, const std::vector<Point>& images) {
  const SubComplex db = boundary(base);
  const auto facets = db.of_dim(base.dim() - 1);
  const SubComplex dd = boundary(domain);
  for (VertexId v : dd.vertex_ids()) {
    const Point& q = images[v];
    bool on = false;
    for (const auto& f : facets) {
      std::vector<Point> pts;
      for (VertexId w : f.vertices()) pts.push_back(db.points[w]);
      if (in_closed_simplex(pts, q)) {
        on = true;
        break;
      }
    }
    if (!on) fail(ErrorCode::InvalidMap, "boundary vertex " + std::to_string(v) + " maps off the boundary");
  }
}

}  // namespace

PLMap2D PLMap2D::create(Complex base, Complex domain, std::vector<Point> images) {
  if (base.dim() != domain.dim() || base.ambient_dim() != domain.ambient_dim()) {
    fail(ErrorCode::InvalidMap, "refinement and base differ in dimension");
  }
  if (images.size() != domain.vertex_count()) {
    fail(ErrorCode::InvalidMap, "expected one image per refinement vertex");
  }
  for (const auto& q : images) {
    if (q.dim() != base.ambient_dim()) fail(ErrorCode::InvalidMap, "image has the wrong ambient dimension");
  }
  check_refinement(base, domain);
  PLMap2D f(std::move(base), std::move(domain), std::move(images));
  std::optional<Complex> img;
  try {
    img = f.image_complex();
  } catch (const Error& e) {
    fail(ErrorCode::InvalidMap, std::string("image triangulation is not embedded: ") + e.what());
  }
  try {
    overlay(f.base_, *img);
  } catch (const Error& e) {
    fail(ErrorCode::InvalidMap, std::string("image does not realize the base: ") + e.what());
  }
  check_boundary(f.base_, f.domain_, f.images_);
  return f;
}

PLMap2D PLMap2D::identity(const Complex& base) { return PLMap2D(base, base, base.points()); }

PLMap2D PLMap2D::from_vertex_images(const Complex& base, std::vector<Point> images) {
  return create(base, base, std::move(images));
}

PLMap2D PLMap2D::from_interval_map(const Complex& base, const PLMap1D& f) {
  if (base.dim() != 1 || base.ambient_dim() != 1) {
    fail(ErrorCode::InvalidMap, "interval maps need a 1D complex on the line");
  }
  std::vector<Rational> xs;
  for (const auto& p : base.points()) xs.push_back(p[0]);
  for (const auto& b : f.breakpoints()) xs.push_back(b.x);
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  if (xs.front() != f.left() || xs.back() != f.right()) {
    fail(ErrorCode::InvalidMap, "base complex does not realize the map's interval");
  }
  std::vector<Point> points, images;
  std::vector<Simplex> edges;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    points.push_back(Point{xs[i]});
    images.push_back(Point{f(xs[i])});
    if (i) edges.push_back(Simplex{i - 1, i});
  }
  return create(base, Complex::create(std::move(points), std::move(edges)), std::move(images));
}

Complex PLMap2D::image_complex() const { return Complex::create(images_, domain_.simplices()); }

Point PLMap2D::apply_piece(std::size_t i, const Point& x) const {
  const Simplex& s = domain_.simplices().at(i);
  const auto lambda = barycentric(domain_.realize(s), x);
  if (!lambda) fail(ErrorCode::PointOutsideComplex, "point is off the simplex's affine hull");
  std::vector<Point> q;
  for (VertexId v : s.vertices()) q.push_back(images_[v]);
  return combine(*lambda, q);
}

Matrix PLMap2D::linear_part(std::size_t i) const {
  const Simplex& s = domain_.simplices().at(i);
  if (static_cast<std::size_t>(dim()) != domain_.ambient_dim()) {
    fail(ErrorCode::Unsupported, "linear parts need a full-dimensional complex");
  }
  std::vector<Point> du, dq;
  for (std::size_t k = 1; k < s.size(); ++k) {
    du.push_back(domain_.point(s[k]) - domain_.point(s[0]));
    dq.push_back(images_[s[k]] - images_[s[0]]);
  }
  return Matrix::from_columns(dq) * *Matrix::from_columns(du).inverse();
}

Point PLMap2D::operator()(const Point& x) const {
  const auto where = x.dim() == domain_.ambient_dim() ? domain_.locate(x) : std::nullopt;
  if (!where) fail(ErrorCode::PointOutsideComplex, "(" + x.str() + ") is outside the complex");
  return apply_piece(*where, x);
}

bool PLMap2D::is_identity() const { return images_ == domain_.points(); }

PLMap2D assemble_map(const Complex& base, const std::vector<std::vector<std::pair<Point, Point>>>& cells) {
  std::map<Point, Point> image_of;
  std::vector<std::vector<Point>> shapes;
  for (const auto& c : cells) {
    std::vector<Point> shape;
    for (const auto& [p, q] : c) {
      auto [it, fresh] = image_of.emplace(p, q);
      if (!fresh && it->second != q) fail(ErrorCode::InvalidMap, "pieces disagree at (" + p.str() + ")");
      shape.push_back(p);
    }
    shapes.push_back(std::move(shape));
  }
  std::map<Point, VertexId> ids;
  Complex domain = numbered_complex(shapes, ids);
  std::vector<Point> images;
  for (const auto& [p, id] : ids) images.push_back(image_of.at(p));
  return PLMap2D(base, std::move(domain), std::move(images));
}

Point eval2d(const PLMap2D& f, const Point& x) { return f(x); }

PLMap2D compose2d(const PLMap2D& f, const PLMap2D& g) {
  if (!(f.base() == g.base())) fail(ErrorCode::InvalidArgument, "composed maps must share their base");
  // g is a validated homeomorphism, so its image cells are embedded.
  const Complex gi = Complex::from_disjoint_cells(g.images(), g.domain().simplices());
  const Overlay ov = overlay(gi, f.domain());
  std::vector<std::vector<std::pair<Point, Point>>> cells;
  for (std::size_t k = 0; k < ov.cells.simplices().size(); ++k) {
    const auto [tau, rho] = ov.provenance[k];
    const auto target = gi.realize(gi.simplices()[tau]);
    const auto source = g.domain().realize(g.domain().simplices()[tau]);
    std::vector<std::pair<Point, Point>> cell;
    for (const auto& c : ov.cells.realize(ov.cells.simplices()[k])) {
      cell.emplace_back(combine(*barycentric(target, c), source), f.apply_piece(rho, c));
    }
    cells.push_back(std::move(cell));
  }
  return assemble_map(g.base(), cells);
}

PLMap2D inverse2d(const PLMap2D& f) {
  std::vector<std::vector<std::pair<Point, Point>>> cells;
  for (const auto& s : f.domain().simplices()) {
    std::vector<std::pair<Point, Point>> cell;
    for (VertexId v : s.vertices()) cell.emplace_back(f.image(v), f.domain().point(v));
    cells.push_back(std::move(cell));
  }
  return assemble_map(f.base(), cells);
}

bool same_map(const PLMap2D& f, const PLMap2D& g) { return compose2d(inverse2d(g), f).is_identity(); }

std::optional<std::string> map2d_base_path(std::string_view input) {
  for (const auto& line : text::tokenize(input)) {
    if (line.tokens[0] == "base") {
      if (line.tokens.size() != 2) text::parse_error(line, "expected `base <file>`");
      return std::string(line.tokens[1]);
    }
  }
  return std::nullopt;
}

PLMap2D parse_map2d(std::string_view input, const Complex& base) {
  // Route v/s records to the complex parser, keeping line numbers intact.
  std::string records;
  std::map<std::size_t, Point> images;
  std::istringstream in{std::string(input)};
  std::string raw;
  std::size_t number = 0;
  bool saw_base = false;
  while (std::getline(in, raw)) {
    ++number;
    auto lines = text::tokenize(raw);
    if (!lines.empty()) lines[0].number = number;
    if (!lines.empty() && lines[0].tokens[0] == "base") {
      saw_base = true;
      records += "\n";
    } else if (!lines.empty() && lines[0].tokens[0] == "img") {
      const auto& line = lines[0];
      if (line.tokens.size() != 2 + base.ambient_dim()) text::parse_error(line, "expected `img <index> <coords...>`");
      std::vector<Rational> coords;
      for (std::size_t k = 2; k < line.tokens.size(); ++k) coords.push_back(text::parse_rational(line, line.tokens[k]));
      if (!images.emplace(text::parse_index(line, line.tokens[1]), Point(std::move(coords))).second) {
        text::parse_error(line, "duplicate image record");
      }
      records += "\n";
    } else {
      records += raw + "\n";
    }
  }
  if (!saw_base) fail(ErrorCode::Parse, "missing `base <file>` record");
  Complex domain = parse_complex(records);
  std::vector<Point> imgs;
  for (auto& [idx, q] : images) {
    if (idx != imgs.size()) fail(ErrorCode::Parse, "image indices must be 0..n-1 without gaps");
    imgs.push_back(std::move(q));
  }
  return PLMap2D::create(base, std::move(domain), std::move(imgs));
}

std::string write_map2d(const PLMap2D& f, const std::string& base_path) {
  std::string out = "base " + base_path + "\n" + write_complex(f.domain());
  for (std::size_t v = 0; v < f.images().size(); ++v) out += "img " + std::to_string(v) + " " + f.images()[v].str() + "\n";
  return out;
}

}  // namespace plstab
