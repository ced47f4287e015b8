#include "plstab/complex.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <set>
#include <sstream>

#include "plstab/error.hpp"
#include "text.hpp"

namespace plstab {

// ---------------------------------------------------------------------------
// Simplex

Simplex::Simplex(std::vector<VertexId> vertices) : v_(std::move(vertices)) {
  std::sort(v_.begin(), v_.end());
  if (std::adjacent_find(v_.begin(), v_.end()) != v_.end()) {
    fail(ErrorCode::InvalidComplex, "simplex repeats a vertex");
  }
}

bool Simplex::contains(VertexId v) const { return std::binary_search(v_.begin(), v_.end(), v); }

bool Simplex::contains(const Simplex& face) const {
  return std::includes(v_.begin(), v_.end(), face.v_.begin(), face.v_.end());
}

std::vector<Simplex> Simplex::facets() const {
  std::vector<Simplex> out;
  if (v_.size() <= 1) return out;
  for (std::size_t skip = v_.size(); skip-- > 0;) {
    std::vector<VertexId> f;
    for (std::size_t i = 0; i < v_.size(); ++i) {
      if (i != skip) f.push_back(v_[i]);
    }
    out.emplace_back(std::move(f));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Simplex> Simplex::all_faces() const {
  std::vector<Simplex> out;
  const std::size_t n = v_.size();
  for (unsigned mask = 1; mask < (1u << n); ++mask) {
    std::vector<VertexId> f;
    for (std::size_t i = 0; i < n; ++i) {
      if (mask & (1u << i)) f.push_back(v_[i]);
    }
    out.emplace_back(std::move(f));
  }
  std::sort(out.begin(), out.end());
  return out;
}

// ---------------------------------------------------------------------------
// SubComplex

int SubComplex::dim() const {
  int d = -1;
  for (const auto& s : simplices) d = std::max(d, s.dim());
  return d;
}

std::vector<Simplex> SubComplex::maximal() const {
  std::vector<Simplex> out;
  for (const auto& s : simplices) {
    const bool covered = std::any_of(simplices.begin(), simplices.end(), [&](const Simplex& t) {
      return t.size() > s.size() && t.contains(s);
    });
    if (!covered) out.push_back(s);
  }
  return out;
}

std::vector<Simplex> SubComplex::of_dim(int d) const {
  std::vector<Simplex> out;
  for (const auto& s : simplices) {
    if (s.dim() == d) out.push_back(s);
  }
  return out;
}

std::vector<VertexId> SubComplex::vertex_ids() const {
  std::vector<VertexId> out;
  for (const auto& s : simplices) {
    if (s.size() == 1) out.push_back(s[0]);
  }
  return out;
}

long SubComplex::euler_characteristic() const {
  long chi = 0;
  for (const auto& s : simplices) chi += (s.dim() % 2 == 0) ? 1 : -1;
  return chi;
}

SubComplex SubComplex::closure(std::vector<Point> points, const std::vector<Simplex>& cells) {
  std::set<Simplex> all;
  for (const auto& c : cells) {
    for (auto& f : c.all_faces()) all.insert(std::move(f));
  }
  SubComplex sc;
  sc.points = std::move(points);
  sc.simplices.assign(all.begin(), all.end());
  return sc;
}

// ---------------------------------------------------------------------------
// Complex validation

namespace {

struct Box {
  std::vector<Rational> lo, hi;
};

Box bounding_box(const std::vector<Point>& pts) {
  Box b{pts.front().coords(), pts.front().coords()};
  for (const auto& p : pts) {
    for (std::size_t i = 0; i < p.dim(); ++i) {
      if (p[i] < b.lo[i]) b.lo[i] = p[i];
      if (b.hi[i] < p[i]) b.hi[i] = p[i];
    }
  }
  return b;
}

bool boxes_meet(const Box& a, const Box& b) {
  for (std::size_t i = 0; i < a.lo.size(); ++i) {
    if (a.hi[i] < b.lo[i] || b.hi[i] < a.lo[i]) return false;
  }
  return true;
}

std::vector<Simplex> edges_of(const Simplex& s) {
  std::vector<Simplex> out;
  for (const auto& f : s.all_faces()) {
    if (f.size() == 2) out.push_back(f);
  }
  return out;
}

[[noreturn]] void invalid(const std::string& what) { fail(ErrorCode::InvalidComplex, what); }

std::string describe(const Simplex& s) {
  std::string out = "[";
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(s[i]);
  }
  return out + "]";
}

// Checks that the realizations of two maximal simplices meet exactly in
// their common face.
void check_proper_pair(const Complex& c, const Simplex& s, const Simplex& t) {
  const auto ps = c.realize(s);
  const auto pt = c.realize(t);
  for (VertexId w : t.vertices()) {
    if (!s.contains(w) && in_closed_simplex(ps, c.point(w))) {
      invalid("vertex " + std::to_string(w) + " lies on simplex " + describe(s));
    }
  }
  for (VertexId w : s.vertices()) {
    if (!t.contains(w) && in_closed_simplex(pt, c.point(w))) {
      invalid("vertex " + std::to_string(w) + " lies on simplex " + describe(t));
    }
  }
  const auto es = edges_of(s);
  const auto et = edges_of(t);
  for (const auto& e : es) {
    for (const auto& f : et) {
      if (e == f) continue;
      if (segment_interiors_meet(c.point(e[0]), c.point(e[1]), c.point(f[0]), c.point(f[1]))) {
        invalid("edges " + describe(e) + " and " + describe(f) + " cross");
      }
    }
  }
  // In the plane, vertex containment and edge crossings already decide
  // overlap except for the final interior test.
  if (s.size() == 3 && ps[0].dim() == 2) {
    if (triangle_interiors_meet(ps, pt)) invalid("triangles " + describe(s) + " and " + describe(t) + " overlap");
    return;
  }
  if (s.size() == 3) {
    for (const auto& f : et) {
      if (!s.contains(f) && segment_meets_triangle_interior(c.point(f[0]), c.point(f[1]), ps)) {
        invalid("edge " + describe(f) + " enters triangle " + describe(s));
      }
    }
    for (const auto& e : es) {
      if (!t.contains(e) && segment_meets_triangle_interior(c.point(e[0]), c.point(e[1]), pt)) {
        invalid("edge " + describe(e) + " enters triangle " + describe(t));
      }
    }
    if (triangle_interiors_meet(ps, pt)) {
      invalid("triangles " + describe(s) + " and " + describe(t) + " overlap");
    }
  }
}

bool link_is_connected(const Complex& c, VertexId v) {
  // Link edges of a 2D vertex: opposite edges of incident triangles.
  std::vector<std::pair<VertexId, VertexId>> edges;
  for (std::size_t idx : c.incident(v)) {
    std::vector<VertexId> rest;
    for (VertexId w : c.simplices()[idx].vertices()) {
      if (w != v) rest.push_back(w);
    }
    edges.emplace_back(rest[0], rest[1]);
  }
  std::map<VertexId, VertexId> parent;
  auto find = [&](VertexId x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (auto [a, b] : edges) {
    parent.try_emplace(a, a);
    parent.try_emplace(b, b);
  }
  for (auto [a, b] : edges) parent[find(a)] = find(b);
  std::set<VertexId> roots;
  for (auto& [x, _] : parent) roots.insert(find(x));
  return roots.size() == 1;
}

}  // namespace

std::vector<Point> Complex::realize(const Simplex& s) const {
  std::vector<Point> out;
  out.reserve(s.size());
  for (VertexId v : s.vertices()) out.push_back(points_.at(v));
  return out;
}

Complex Complex::create(std::vector<Point> points, std::vector<Simplex> simplices) {
  return build(std::move(points), std::move(simplices), true);
}

Complex Complex::from_disjoint_cells(std::vector<Point> points, std::vector<Simplex> simplices) {
  return build(std::move(points), std::move(simplices), false);
}

Complex Complex::build(std::vector<Point> points, std::vector<Simplex> simplices, bool check_embedding) {
  if (points.empty()) invalid("complex has no vertices");
  if (simplices.empty()) invalid("complex has no simplices");
  const std::size_t ambient = points.front().dim();
  if (ambient < 1 || ambient > 3) invalid("ambient dimension must be 1, 2 or 3");
  for (const auto& p : points) {
    if (p.dim() != ambient) invalid("points have mixed ambient dimension");
  }
  const std::size_t k = simplices.front().size();
  if (k < 2 || k > 3) invalid("maximal simplices must be edges or triangles");
  if (k - 1 > ambient) invalid("simplex dimension exceeds ambient dimension");

  Complex c;
  c.dim_ = static_cast<int>(k) - 1;
  std::vector<bool> used(points.size(), false);
  for (const auto& s : simplices) {
    if (s.size() != k) invalid("complex is not pure");
    for (VertexId v : s.vertices()) {
      if (v >= points.size()) invalid("simplex references unknown vertex " + std::to_string(v));
      used[v] = true;
    }
  }
  for (std::size_t v = 0; v < points.size(); ++v) {
    if (!used[v]) invalid("vertex " + std::to_string(v) + " belongs to no simplex");
    auto [it, fresh] = c.vertex_lookup_.emplace(points[v], v);
    if (!fresh) invalid("vertices " + std::to_string(it->second) + " and " + std::to_string(v) + " coincide");
  }
  std::sort(simplices.begin(), simplices.end());
  if (std::adjacent_find(simplices.begin(), simplices.end()) != simplices.end()) {
    invalid("duplicate simplex");
  }
  c.points_ = std::move(points);
  c.simplices_ = std::move(simplices);

  for (const auto& s : c.simplices_) {
    if (!affinely_independent(c.realize(s))) invalid("degenerate simplex " + describe(s));
  }

  c.incident_.assign(c.points_.size(), {});
  std::set<Simplex> face_sets[3];
  for (std::size_t i = 0; i < c.simplices_.size(); ++i) {
    const auto& s = c.simplices_[i];
    for (VertexId v : s.vertices()) c.incident_[v].push_back(i);
    for (const auto& f : s.facets()) ++c.facet_degree_[f];
    for (const auto& f : s.all_faces()) face_sets[f.dim()].insert(f);
  }
  for (const auto& [f, deg] : c.facet_degree_) {
    if (deg > 2) invalid("face " + describe(f) + " has " + std::to_string(deg) + " cofaces");
  }
  c.faces_.resize(static_cast<std::size_t>(c.dim_) + 1);
  for (int d = 0; d <= c.dim_; ++d) c.faces_[d].assign(face_sets[d].begin(), face_sets[d].end());

  if (c.dim_ == 2) {
    for (VertexId v = 0; v < c.points_.size(); ++v) {
      if (!link_is_connected(c, v)) invalid("link of vertex " + std::to_string(v) + " is disconnected");
    }
  }

  // Pairwise geometric check, swept along the first coordinate.
  if (!check_embedding) return finish_connectivity(std::move(c));
  std::vector<Box> boxes;
  for (const auto& s : c.simplices_) boxes.push_back(bounding_box(c.realize(s)));
  std::vector<std::size_t> order(c.simplices_.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return boxes[a].lo[0] < boxes[b].lo[0]; });
  for (std::size_t i = 0; i < order.size(); ++i) {
    for (std::size_t j = i + 1; j < order.size(); ++j) {
      const Box& a = boxes[order[i]];
      const Box& b = boxes[order[j]];
      if (a.hi[0] < b.lo[0]) break;
      if (!boxes_meet(a, b)) continue;
      check_proper_pair(c, c.simplices_[order[i]], c.simplices_[order[j]]);
    }
  }

  return finish_connectivity(std::move(c));
}

Complex Complex::finish_connectivity(Complex c) {
  // Connectivity through shared vertices.
  std::vector<VertexId> parent(c.points_.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](VertexId x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& s : c.simplices_) {
    for (VertexId v : s.vertices()) parent[find(v)] = find(s[0]);
  }
  std::size_t roots = 0;
  for (VertexId v = 0; v < parent.size(); ++v) roots += find(v) == v;
  c.connected_ = roots == 1;
  return c;
}

std::size_t Complex::facet_degree(const Simplex& facet) const {
  auto it = facet_degree_.find(facet);
  return it == facet_degree_.end() ? 0 : it->second;
}

bool Complex::is_boundary_vertex(VertexId v) const {
  if (v >= points_.size()) fail(ErrorCode::UnknownVertex, "unknown vertex " + std::to_string(v));
  if (dim_ == 1) return incident_[v].size() == 1;
  for (std::size_t idx : incident_[v]) {
    for (const auto& f : simplices_[idx].facets()) {
      if (f.contains(v) && facet_degree(f) == 1) return true;
    }
  }
  return false;
}

std::vector<VertexId> Complex::neighbors(VertexId v) const {
  std::set<VertexId> out;
  for (std::size_t idx : incident_.at(v)) {
    for (VertexId w : simplices_[idx].vertices()) {
      if (w != v) out.insert(w);
    }
  }
  return {out.begin(), out.end()};
}

std::optional<VertexId> Complex::find_vertex(const Point& p) const {
  auto it = vertex_lookup_.find(p);
  if (it == vertex_lookup_.end()) return std::nullopt;
  return it->second;
}

std::optional<std::size_t> Complex::locate(const Point& p) const {
  if (p.dim() != ambient_dim()) return std::nullopt;
  for (std::size_t i = 0; i < simplices_.size(); ++i) {
    if (in_closed_simplex(realize(simplices_[i]), p)) return i;
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Operations

long euler_characteristic(const Complex& c) {
  long chi = 0;
  for (int d = 0; d <= c.dim(); ++d) {
    const long n = static_cast<long>(c.faces(d).size());
    chi += (d % 2 == 0) ? n : -n;
  }
  return chi;
}

namespace {

void require_vertex(const Complex& c, VertexId v) {
  if (v >= c.vertex_count()) fail(ErrorCode::UnknownVertex, "unknown vertex " + std::to_string(v));
}

}  // namespace

SubComplex star(const Complex& c, VertexId v) {
  require_vertex(c, v);
  std::vector<Simplex> cells;
  for (std::size_t idx : c.incident(v)) cells.push_back(c.simplices()[idx]);
  return SubComplex::closure(c.points(), cells);
}

SubComplex link(const Complex& c, VertexId v) {
  SubComplex st = star(c, v);
  std::erase_if(st.simplices, [v](const Simplex& s) { return s.contains(v); });
  return st;
}

SubComplex boundary(const Complex& c) {
  std::vector<Simplex> cells;
  for (const auto& f : c.faces(c.dim() - 1)) {
    if (c.facet_degree(f) == 1) cells.push_back(f);
  }
  return SubComplex::closure(c.points(), cells);
}

ComplexRecords sort_vertices(ComplexRecords records) {
  std::vector<VertexId> order(records.points.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](VertexId a, VertexId b) { return records.points[a] < records.points[b]; });
  std::vector<VertexId> relabel(order.size());
  std::vector<Point> points;
  points.reserve(order.size());
  for (std::size_t i = 0; i < order.size(); ++i) {
    relabel[order[i]] = i;
    points.push_back(std::move(records.points[order[i]]));
  }
  std::vector<Simplex> simplices;
  simplices.reserve(records.simplices.size());
  for (const auto& s : records.simplices) {
    std::vector<VertexId> v;
    for (VertexId x : s.vertices()) v.push_back(relabel[x]);
    simplices.emplace_back(std::move(v));
  }
  std::sort(simplices.begin(), simplices.end());
  return {std::move(points), std::move(simplices)};
}

// ---------------------------------------------------------------------------
// Text format

ComplexRecords parse_complex_records(std::string_view input) {
  std::map<std::size_t, Point> points;
  std::vector<Simplex> simplices;
  std::size_t ambient = 0;
  for (const auto& line : text::tokenize(input)) {
    const auto& tok = line.tokens;
    if (tok[0] == "v") {
      if (tok.size() < 3 || tok.size() > 5) text::parse_error(line, "expected `v <index> <x> [<y> [<z>]]`");
      const std::size_t idx = text::parse_index(line, tok[1]);
      std::vector<Rational> coords;
      for (std::size_t i = 2; i < tok.size(); ++i) coords.push_back(text::parse_rational(line, tok[i]));
      if (ambient == 0) ambient = coords.size();
      if (coords.size() != ambient) text::parse_error(line, "inconsistent coordinate count");
      if (!points.emplace(idx, Point(std::move(coords))).second) {
        text::parse_error(line, "duplicate vertex index " + std::to_string(idx));
      }
    } else if (tok[0] == "s") {
      if (tok.size() < 2 || tok.size() > 4) text::parse_error(line, "expected `s <i> [<j> [<k>]]`");
      std::vector<VertexId> v;
      for (std::size_t i = 1; i < tok.size(); ++i) v.push_back(text::parse_index(line, tok[i]));
      try {
        simplices.emplace_back(std::move(v));
      } catch (const Error&) {
        text::parse_error(line, "simplex repeats a vertex");
      }
    } else {
      text::parse_error(line, "unknown record '" + std::string(tok[0]) + "'");
    }
  }
  ComplexRecords out;
  std::size_t expected = 0;
  for (auto& [idx, p] : points) {
    if (idx != expected++) fail(ErrorCode::Parse, "vertex indices must be 0..n-1 without gaps");
    out.points.push_back(std::move(p));
  }
  out.simplices = std::move(simplices);
  return out;
}

Complex parse_complex(std::string_view input) { return Complex::create(parse_complex_records(input)); }

std::string write_records(const std::vector<Point>& points, const std::vector<Simplex>& simplices) {
  std::string out;
  for (std::size_t i = 0; i < points.size(); ++i) {
    out += "v " + std::to_string(i) + " " + points[i].str() + "\n";
  }
  for (const auto& s : simplices) {
    out += "s";
    for (VertexId v : s.vertices()) out += " " + std::to_string(v);
    out += "\n";
  }
  return out;
}

std::string write_complex(const Complex& c) { return write_records(c.points(), c.simplices()); }

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorCode::Io, "cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Complex load_complex(const std::string& path) { return parse_complex(read_file(path)); }

}  // namespace plstab
