#include "plstab/fixed_locus.hpp"

#include <algorithm>
#include <map>

#include "plstab/error.hpp"

namespace plstab {

namespace {

Point combine(const std::vector<Point>& v, const std::vector<Rational>& lambda) {
  Point x = Point::zero(v.front().dim());
  for (std::size_t j = 0; j < v.size(); ++j) x = x + lambda[j] * v[j];
  return x;
}

// Fixed points of the affine piece v_j -> w_j inside the closed simplex,
// as the vertices of the resulting cell (empty when there are none).
// Solves sum l_j (w_j - v_j) = 0, sum l_j = 1 in barycentric coordinates.
std::vector<Point> solve_piece(const std::vector<Point>& v, const std::vector<Point>& w) {
  const std::size_t n = v.size();
  const std::size_t amb = v.front().dim();
  Matrix a(amb + 1, n);
  std::vector<Rational> b(amb + 1);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t r = 0; r < amb; ++r) a(r, j) = w[j][r] - v[j][r];
    a(amb, j) = 1;
  }
  b[amb] = 1;
  const auto sol = solve_linear(a, b);
  if (!sol) return {};
  const auto& p = sol->particular;
  if (sol->kernel.empty()) {
    if (std::any_of(p.begin(), p.end(), [](const Rational& l) { return l.sign() < 0; })) return {};
    return {combine(v, p)};
  }
  if (sol->kernel.size() + 1 == n) return v;
  if (sol->kernel.size() != 1) fail(ErrorCode::Unsupported, "fixed sets are solved in dimensions 1 and 2 only");

  // A line l = p + t k; clip t to the simplex.
  const auto& k = sol->kernel.front();
  std::optional<Rational> lo, hi;
  for (std::size_t j = 0; j < n; ++j) {
    if (k[j].is_zero()) {
      if (p[j].sign() < 0) return {};
      continue;
    }
    const Rational t = -p[j] / k[j];
    if (k[j].sign() > 0) {
      lo = lo ? max(*lo, t) : t;
    } else {
      hi = hi ? min(*hi, t) : t;
    }
  }
  if (*hi < *lo) return {};
  auto at = [&](const Rational& t) {
    std::vector<Rational> l(n);
    for (std::size_t j = 0; j < n; ++j) l[j] = p[j] + t * k[j];
    return combine(v, l);
  };
  if (*lo == *hi) return {at(*lo)};
  return {at(*lo), at(*hi)};
}

}  // namespace

FixedLocus fixed_subcomplex(const PLMap2D& f) {
  const Complex& dom = f.domain();
  const int top = dom.dim();
  std::vector<std::vector<Point>> cells;
  std::vector<std::size_t> pieces;
  std::vector<bool> full(dom.simplices().size(), false);
  for (std::size_t i = 0; i < dom.simplices().size(); ++i) {
    const Simplex& s = dom.simplices()[i];
    std::vector<Point> v, w;
    for (auto id : s.vertices()) {
      v.push_back(dom.point(id));
      w.push_back(f.image(id));
    }
    auto cell = solve_piece(v, w);
    if (cell.empty()) continue;
    full[i] = cell.size() == s.size() && s.dim() == top;
    cells.push_back(std::move(cell));
    pieces.push_back(i);
  }

  FixedLocus out;
  out.everything = std::all_of(full.begin(), full.end(), [](bool b) { return b; });

  std::map<Point, VertexId> ids;
  for (const auto& c : cells) {
    for (const auto& p : c) ids.emplace(p, 0);
  }
  std::vector<Point> points;
  for (auto& [p, id] : ids) {
    id = points.size();
    points.push_back(p);
  }
  std::vector<Simplex> simplices;
  for (std::size_t c = 0; c < cells.size(); ++c) {
    std::vector<VertexId> vs;
    for (const auto& p : cells[c]) vs.push_back(ids.at(p));
    simplices.emplace_back(std::move(vs));
    out.provenance.push_back({simplices.back(), pieces[c]});
  }
  out.subcomplex = SubComplex::closure(points, simplices);

  // A cell is interior to Fix when it is a face of the refinement whose
  // maximal cofaces are all fixed pointwise. Everything else is frontier.
  std::vector<Simplex> frontier;
  for (const Simplex& s : out.subcomplex.simplices) {
    if (s.dim() == top) continue;
    bool interior = true;
    std::vector<std::size_t> cofaces;
    for (std::size_t j = 0; j < s.size() && interior; ++j) {
      const auto v = dom.find_vertex(points[s[j]]);
      if (!v) {
        interior = false;
        break;
      }
      const auto& inc = dom.incident(*v);
      if (j == 0) {
        cofaces = inc;
      } else {
        std::vector<std::size_t> keep;
        std::set_intersection(cofaces.begin(), cofaces.end(), inc.begin(), inc.end(), std::back_inserter(keep));
        cofaces = std::move(keep);
      }
    }
    if (interior) {
      interior = !cofaces.empty() && std::all_of(cofaces.begin(), cofaces.end(), [&](std::size_t t) { return full[t]; });
    }
    if (!interior) frontier.push_back(s);
  }
  out.frontier = SubComplex::closure(points, frontier);
  return out;
}

namespace {

std::map<VertexId, int> degrees(const SubComplex& s) {
  std::map<VertexId, int> deg;
  for (const Simplex& x : s.simplices) {
    if (x.dim() == 0) deg.emplace(x[0], 0);
    if (x.dim() == 1) {
      ++deg[x[0]];
      ++deg[x[1]];
    }
  }
  return deg;
}

}  // namespace

bool is_closed_manifold(const SubComplex& s) {
  if (s.dim() <= 0) return true;
  if (s.dim() > 1) return false;
  const auto deg = degrees(s);
  return std::all_of(deg.begin(), deg.end(), [](const auto& d) { return d.second == 2; });
}

CanonicalInvariant canonical_invariant(const FixedLocus& fl) {
  if (fl.subcomplex.empty()) fail(ErrorCode::FixIsEmpty, "f has no fixed points");
  if (fl.everything) fail(ErrorCode::FixIsEverything, "f is the identity");
  if (is_closed_manifold(fl.frontier)) return {fl.frontier, 1};
  // Endpoints, branch points and isolated points of the frontier graph.
  std::vector<Simplex> marked;
  for (const auto& [v, d] : degrees(fl.frontier)) {
    if (d != 2) marked.push_back(Simplex{v});
  }
  return {SubComplex::closure(fl.frontier.points, marked), 2};
}

FullerReport fuller_search(const PLMap2D& f, unsigned kmax) {
  if (kmax == 0) fail(ErrorCode::InvalidArgument, "kmax must be positive");
  FullerReport out;
  out.euler_characteristic = euler_characteristic(f.base());
  PLMap2D g = f;
  for (unsigned k = 1; k <= kmax; ++k) {
    if (k > 1) g = compose2d(f, g);
    out.max_cells = std::max(out.max_cells, g.domain().simplices().size());
    const FixedLocus fl = fixed_subcomplex(g);
    if (fl.subcomplex.empty()) continue;
    const Simplex& cell = fl.provenance.front().cell;
    PeriodicHit hit{k, {}};
    for (auto v : cell.vertices()) hit.witness_cell.push_back(fl.subcomplex.points[v]);
    out.hit = std::move(hit);
    break;
  }
  return out;
}

bool realization_contains(const SubComplex& s, const Point& x) {
  for (const Simplex& m : s.maximal()) {
    std::vector<Point> v;
    for (auto id : m.vertices()) v.push_back(s.points[id]);
    if (in_closed_simplex(v, x)) return true;
  }
  return false;
}

}  // namespace plstab
