#include "plstab/stability.hpp"

#include <algorithm>
#include <deque>
#include <filesystem>
#include <set>
#include <stdexcept>

#include "plstab/error.hpp"
#include "text.hpp"

namespace plstab {

ActionSpec ActionSpec::on_complex(Complex base, std::vector<std::string> names, std::vector<PLMap2D> maps,
                                  std::optional<Presentation> presentation) {
  if (names.size() != maps.size()) fail(ErrorCode::InvalidArgument, "one name per generator");
  for (const auto& f : maps) {
    if (!(f.base() == base)) fail(ErrorCode::InvalidArgument, "all generators must act on the action's base");
  }
  ActionSpec a;
  a.base_ = std::move(base);
  a.names_ = std::move(names);
  a.maps_ = std::move(maps);
  a.attach(std::move(presentation));
  return a;
}

ActionSpec ActionSpec::on_circle(std::vector<std::string> names, std::vector<CircleLift> lifts,
                                 std::optional<Presentation> presentation) {
  if (names.size() != lifts.size()) fail(ErrorCode::InvalidArgument, "one name per generator");
  ActionSpec a;
  a.names_ = std::move(names);
  a.lifts_ = std::move(lifts);
  a.attach(std::move(presentation));
  return a;
}

void ActionSpec::attach(std::optional<Presentation> p) {
  const std::set<std::string> unique(names_.begin(), names_.end());
  if (unique.size() != names_.size()) fail(ErrorCode::InvalidArgument, "generator names must be distinct");
  if (!p) return;
  if (p->generators().size() != names_.size()) {
    fail(ErrorCode::InvalidArgument, "presentation and action have different generator counts");
  }
  for (const auto& g : p->generators()) {
    const auto i = index_of(g);
    if (i < 0) fail(ErrorCode::InvalidArgument, "presentation generator `" + g + "` has no map");
    letter_map_.push_back(static_cast<int>(i) + 1);
  }
  presentation_ = std::move(p);
}

const Complex& ActionSpec::base() const {
  if (!base_) fail(ErrorCode::Unsupported, "circle actions have no base complex");
  return *base_;
}

std::ptrdiff_t ActionSpec::index_of(const std::string& name) const {
  const auto it = std::find(names_.begin(), names_.end(), name);
  return it == names_.end() ? -1 : it - names_.begin();
}

Word ActionSpec::relator(std::size_t i) const {
  Word w = presentation_.value().relators().at(i);
  for (int& l : w) l = l > 0 ? letter_map_[static_cast<std::size_t>(l) - 1] : -letter_map_[static_cast<std::size_t>(-l) - 1];
  return w;
}

ActionSpec ActionSpec::subset(const std::vector<std::size_t>& keep) const {
  ActionSpec a;
  a.base_ = base_;
  for (auto k : keep) {
    a.names_.push_back(names_.at(k));
    if (!maps_.empty()) a.maps_.push_back(maps_[k]);
    if (!lifts_.empty()) a.lifts_.push_back(lifts_[k]);
  }
  return a;
}

namespace {

Complex interval_base(const PLMap1D& f) {
  return Complex::create({Point{f.left()}, Point{f.right()}}, {Simplex{0, 1}});
}

std::string first_token(std::string_view text) {
  const auto lines = text::tokenize(text);
  return lines.empty() ? std::string() : std::string(lines[0].tokens[0]);
}

}  // namespace

ActionSpec load_action(const std::string& dir, const std::optional<std::string>& presentation_path) {
  namespace fs = std::filesystem;
  const fs::path root(dir);
  const std::string manifest = read_file((root / "action.txt").string());
  std::optional<std::string> base_path, pres_path;
  std::vector<std::pair<std::string, std::string>> gens;
  for (const auto& line : text::tokenize(manifest)) {
    const auto& t = line.tokens;
    if (t[0] == "base" && t.size() == 2) {
      base_path = std::string(t[1]);
    } else if (t[0] == "gen" && t.size() == 3) {
      gens.emplace_back(std::string(t[1]), std::string(t[2]));
    } else if (t[0] == "presentation" && t.size() == 2) {
      pres_path = std::string(t[1]);
    } else {
      text::parse_error(line, "expected `base <file>`, `gen <name> <file>` or `presentation <file>`");
    }
  }
  if (gens.empty()) fail(ErrorCode::Parse, "action has no generators");

  std::optional<Presentation> pres;
  if (presentation_path) {
    pres = parse_presentation(read_file(*presentation_path));
  } else if (pres_path) {
    pres = parse_presentation(read_file((root / *pres_path).string()));
  }

  std::vector<std::string> names, texts;
  for (const auto& [name, file] : gens) {
    names.push_back(name);
    texts.push_back(read_file((root / file).string()));
  }
  const std::string kind = first_token(texts[0]);
  if (kind == "circle") {
    std::vector<CircleLift> lifts;
    for (const auto& t : texts) lifts.push_back(parse_lift(t));
    return ActionSpec::on_circle(std::move(names), std::move(lifts), std::move(pres));
  }
  std::optional<Complex> base;
  if (base_path) base = load_complex((root / *base_path).string());
  std::vector<PLMap2D> maps;
  for (const auto& t : texts) {
    const std::string k = first_token(t);
    if (k == "circle") fail(ErrorCode::InvalidArgument, "cannot mix circle lifts with other generators");
    if (k == "interval") {
      const PLMap1D f = parse_map1d(t);
      if (!base) base = interval_base(f);
      maps.push_back(PLMap2D::from_interval_map(*base, f));
    } else {
      if (!base) fail(ErrorCode::Parse, "action with 2D maps needs a `base` line");
      maps.push_back(parse_map2d(t, *base));
    }
  }
  return ActionSpec::on_complex(std::move(*base), std::move(names), std::move(maps), std::move(pres));
}

RelatorCheck verify_relators(const ActionSpec& a) {
  if (!a.presentation()) fail(ErrorCode::InvalidArgument, "relator check needs a presentation");
  const std::size_t count = a.presentation()->relators().size();
  RelatorCheck out;
  if (a.is_circle()) {
    std::vector<CircleLift> inv;
    for (const auto& f : a.lifts()) inv.push_back(inverse_lift(f));
    for (std::size_t r = 0; r < count; ++r) {
      const Word w = a.relator(r);
      CircleLift g = CircleLift::identity();
      for (auto it = w.rbegin(); it != w.rend(); ++it) {
        const std::size_t k = static_cast<std::size_t>(std::abs(*it)) - 1;
        g = compose_lift(*it > 0 ? a.lifts()[k] : inv[k], g);
      }
      // Deck translations x + k are the identity on the circle.
      const Rational shift = g.breakpoints().front().y;
      if (shift.is_integer() && g == CircleLift::rotation(shift)) continue;
      Rational x = 0;
      for (const auto& b : g.breakpoints()) {
        if (!(b.y - b.x).is_integer()) {
          x = b.x;
          break;
        }
      }
      return {false, r, Point{x}, Point{g(x)}};
    }
    return out;
  }
  std::vector<PLMap2D> inv;
  for (const auto& f : a.maps()) inv.push_back(inverse2d(f));
  for (std::size_t r = 0; r < count; ++r) {
    const Word w = a.relator(r);
    PLMap2D g = PLMap2D::identity(a.base());
    for (auto it = w.rbegin(); it != w.rend(); ++it) {
      const std::size_t k = static_cast<std::size_t>(std::abs(*it)) - 1;
      g = compose2d(*it > 0 ? a.maps()[k] : inv[k], g);
    }
    if (g.is_identity()) continue;
    for (std::size_t v = 0; v < g.images().size(); ++v) {
      if (g.images()[v] != g.domain().point(v)) return {false, r, g.domain().point(v), g.images()[v]};
    }
  }
  return out;
}

std::string to_string(Status s) {
  switch (s) {
    case Status::Trivial: return "Trivial";
    case Status::Obstructed: return "Obstructed";
    case Status::HypothesisFailed: return "HypothesisFailed";
  }
  return "?";
}

std::string to_string(Stage s) {
  switch (s) {
    case Stage::H1Gate: return "H1Gate";
    case Stage::FixedPointGate: return "FixedPointGate";
    case Stage::TangentGate: return "TangentGate";
    case Stage::Propagation: return "Propagation";
  }
  return "?";
}

namespace {

std::vector<Point> cell_at(const PLMap2D& g, const Point& x) {
  std::vector<Point> out;
  if (const auto s = g.domain().locate(x)) out = g.domain().realize(g.domain().simplices()[*s]);
  return out;
}

// A point p + s*ray, s = 2^-k, where g agrees with its germ.
std::optional<Point> point_along(const PLMap2D& g, const Point& p, const Point& ray, const Matrix& m) {
  Rational s = 1;
  for (int k = 0; k < 64; ++k, s /= 2) {
    const Point x = p + s * ray;
    if (!g.base().locate(x)) continue;
    if (g(x) == p + m.apply(s * ray)) return x;
  }
  return std::nullopt;
}

struct StarCheck {
  std::size_t generator;
  VertexId moved;  // domain vertex of the generator
};

}  // namespace

Certificate certify_trivial(const ActionSpec& a, VertexId p) {
  if (a.is_circle()) fail(ErrorCode::Unsupported, "the certifier runs on complexes, not circle lifts");
  const Complex& base = a.base();
  if (!base.connected()) fail(ErrorCode::DisconnectedComplex, "the base complex is disconnected");
  if (p >= base.vertex_count()) fail(ErrorCode::VertexNotInComplex, "vertex " + std::to_string(p) + " is not in the base");

  Certificate c;
  c.stage = Stage::H1Gate;
  if (a.presentation()) {
    c.h1 = abelianization(*a.presentation());
    c.assumptions.push_back("H1 computed from the supplied presentation, which is assumed to present the acting group");
    if (c.h1->free_rank > 0) {
      c.status = Status::HypothesisFailed;
      return c;
    }
  } else {
    c.assumptions.push_back("H1(G;R) = 0 assumed by the caller; no presentation supplied");
  }

  c.stage = Stage::FixedPointGate;
  const Point& P = base.point(p);
  for (std::size_t i = 0; i < a.size(); ++i) {
    const Point img = a.maps()[i](P);
    if (img == P) continue;
    c.status = Status::HypothesisFailed;
    c.witness = Witness{p, a.names()[i], cell_at(a.maps()[i], P), std::nullopt, std::nullopt, std::nullopt, P, img};
    return c;
  }

  c.stage = Stage::TangentGate;
  std::vector<Germ> germs;
  for (const auto& g : a.maps()) germs.push_back(build_germ_at(g, P));
  const auto refined = refine_fans(germs);
  for (std::size_t i = 0; i < refined.size(); ++i) {
    const auto moved = moved_ray(refined[i]);
    if (!moved) continue;
    const Matrix& m = refined[i].matrices[moved->cone];
    const auto x = point_along(a.maps()[i], P, moved->ray, m);
    if (!x) fail(ErrorCode::Unsupported, "could not place a tangent witness point");
    c.status = Status::Obstructed;
    c.witness = Witness{p, a.names()[i], cell_at(a.maps()[i], *x), moved->ray, moved->image, m, *x, a.maps()[i](*x)};
    return c;
  }
  c.assumptions.push_back("tangent action checked on the fan of the generators' own refinements");

  // Moved refinement vertices, per generator.
  std::vector<StarCheck> moved;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const PLMap2D& g = a.maps()[i];
    for (VertexId v = 0; v < g.images().size(); ++v) {
      if (g.images()[v] != g.domain().point(v)) moved.push_back({i, v});
    }
  }

  c.stage = Stage::Propagation;
  std::vector<bool> seen(base.vertex_count(), false);
  std::deque<VertexId> queue{p};
  seen[p] = true;
  while (!queue.empty()) {
    const VertexId v = queue.front();
    queue.pop_front();
    // The generators are the identity on the closed star of v iff no moved
    // refinement vertex lies in it.
    for (const auto& mv : moved) {
      const PLMap2D& g = a.maps()[mv.generator];
      const Point& x = g.domain().point(mv.moved);
      const bool in_star = std::any_of(base.incident(v).begin(), base.incident(v).end(), [&](std::size_t s) {
        return in_closed_simplex(base.realize(base.simplices()[s]), x);
      });
      if (!in_star) continue;
      c.status = Status::Obstructed;
      c.witness = Witness{v, a.names()[mv.generator], cell_at(g, x), std::nullopt, std::nullopt, std::nullopt, x, g.image(mv.moved)};
      return c;
    }
    c.verified_stars.push_back(v);
    for (VertexId n : base.neighbors(v)) {
      if (!seen[n]) {
        seen[n] = true;
        queue.push_back(n);
      }
    }
  }
  for (const auto& g : a.maps()) {
    if (!g.is_identity()) throw std::logic_error("certifier reported Trivial for a non-identity generator");
  }
  c.status = Status::Trivial;
  return c;
}

bool recheck_witness(const ActionSpec& a, const Certificate& c) {
  if (!c.witness || a.is_circle()) return false;
  const Witness& w = c.witness.value();
  const auto i = a.index_of(w.generator);
  if (i < 0) return false;
  const PLMap2D& g = a.maps()[static_cast<std::size_t>(i)];
  bool ok = w.point != w.image && g(w.point) == w.image;
  if (!w.cell.empty()) ok = ok && in_closed_simplex(w.cell, w.point);
  if (w.ray) {
    const Point& P = a.base().point(w.vertex);
    ok = ok && w.cone_matrix && w.ray_image && *w.ray != *w.ray_image &&
         normalize_ray(w.cone_matrix->apply(*w.ray)) == *w.ray_image && positively_parallel(w.point - P, *w.ray) &&
         positively_parallel(w.image - P, *w.ray_image);
  }
  return ok;
}

ActionAnalysis analyze_action(const ActionSpec& a, const AnalyzeOptions& options) {
  ActionAnalysis out;
  if (a.presentation()) {
    out.h1 = abelianization(*a.presentation());
    out.relators = verify_relators(a);
  }
  for (std::size_t i = 0; i < a.size(); ++i) {
    GeneratorAnalysis g;
    g.name = a.names()[i];
    if (a.is_circle()) {
      const CircleLift& f = a.lifts()[i];
      g.enclosure = rotation_enclosure(f, options.n);
      g.detection = detect_rational_rotation(f, options.qmax);
      if (const auto& hit = g.detection->found) g.periodic_fix = fixed_set_circle(power_lift(f, static_cast<unsigned>(hit->q)), hit->p);
    } else {
      const PLMap2D& f = a.maps()[i];
      g.fix = fixed_subcomplex(f);
      try {
        g.invariant = canonical_invariant(*g.fix);
      } catch (const Error& e) {
        g.invariant_note = std::string(to_string(e.code()));
      }
      g.fuller = fuller_search(f, options.kmax);
    }
    out.generators.push_back(std::move(g));
  }
  return out;
}

}  // namespace plstab
