#include "report.hpp"

#include "json_pretty.hpp"
#include "plstab/error.hpp"

namespace plstab::report {

Json to_json(const Rational& r) { return r.str(); }

Json to_json(const Point& p) {
  Json out = Json::array();
  for (const auto& c : p.coords()) out.push_back(c.str());
  return out;
}

Json to_json(const Matrix& m) {
  Json out = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m(r, c).str());
    out.push_back(std::move(row));
  }
  return out;
}

Json to_json(const std::vector<Point>& ps) {
  Json out = Json::array();
  for (const auto& p : ps) out.push_back(to_json(p));
  return out;
}

Json to_json(const Simplex& s) { return Json(s.vertices()); }

Json to_json(const SubComplex& s) {
  Json simplices = Json::array();
  for (const auto& m : s.maximal()) simplices.push_back(to_json(m));
  return Json{{"dim", s.dim()},
              {"points", to_json(s.points)},
              {"maximal", std::move(simplices)},
              {"euler_characteristic", s.euler_characteristic()}};
}

Json to_json(const ClosedInterval& i) { return Json::array({i.lo.str(), i.hi.str()}); }

Json to_json(const std::vector<ClosedInterval>& is) {
  Json out = Json::array();
  for (const auto& i : is) out.push_back(to_json(i));
  return out;
}

Json to_json(const FixedLocus& f) {
  Json prov = Json::array();
  for (const auto& c : f.provenance) prov.push_back(Json{{"cell", to_json(c.cell)}, {"piece", c.piece}});
  return Json{{"everything", f.everything},
              {"locus", to_json(f.subcomplex)},
              {"provenance", std::move(prov)},
              {"frontier", to_json(f.frontier)}};
}

Json to_json(const CanonicalInvariant& n) {
  return Json{{"derivation_depth", n.derivation_depth},
              {"closed_manifold", is_closed_manifold(n.n_f)},
              {"complex", to_json(n.n_f)}};
}

Json fixset_json(const FixedLocus& f) {
  Json out = to_json(f);
  try {
    out["n_f"] = to_json(canonical_invariant(f));
  } catch (const Error& e) {
    out["n_f"] = nullptr;
    out["n_f_note"] = std::string(to_string(e.code()));
  }
  return out;
}

Json to_json(const FullerReport& r) {
  Json out{{"euler_characteristic", r.euler_characteristic}, {"max_cells", r.max_cells}};
  if (r.hit) {
    out["k"] = r.hit->k;
    out["witness_cell"] = to_json(r.hit->witness_cell);
  } else {
    out["k"] = nullptr;
  }
  return out;
}

Json to_json(const RotationEnclosure& e) {
  return Json{{"lo", e.lo.str()}, {"hi", e.hi.str()}, {"iterations", e.iterations}};
}

Json to_json(const RotationDetection& d) {
  Json out;
  if (d.found) {
    out["rational"] = Json{{"rotation", d.found->rotation.str()},
                           {"p", d.found->p},
                           {"q", d.found->q},
                           {"periodic_point", d.found->periodic_point.str()}};
  } else {
    out["rational"] = nullptr;
  }
  out["enclosure"] = to_json(d.enclosure);
  out["excluded_by_enclosure"] = d.excluded_by_enclosure;
  out["max_breakpoints"] = d.max_breakpoints;
  return out;
}

Json to_json(const AbelianizationReport& a) {
  Json factors = Json::array();
  for (const auto& f : a.invariant_factors) factors.push_back(f.get_str());
  return Json{{"invariant_factors", std::move(factors)}, {"free_rank", a.free_rank}, {"group", describe(a)}};
}

Json to_json(const Germ& g) {
  Json cones = Json::array();
  for (std::size_t i = 0; i < g.matrices.size(); ++i) {
    const auto [a, b] = g.fan.cone(i);
    cones.push_back(Json{{"rays", Json::array({to_json(a), to_json(b)})}, {"matrix", to_json(g.matrices[i])}});
  }
  Json out{{"apex", to_json(g.fan.apex)},
           {"dim", g.fan.dim},
           {"interior", g.fan.interior},
           {"rays", to_json(g.fan.rays)},
           {"cones", std::move(cones)}};
  if (g.fan.dim == 2) out["sphere_type"] = to_string(tangent_sphere_type(g.fan));
  out["trivial"] = is_trivial_on_tangent_sphere(g);
  if (const auto m = moved_ray(g)) {
    out["moved_ray"] = Json{{"cone", m->cone}, {"ray", to_json(m->ray)}, {"image", to_json(m->image)}};
  } else {
    out["moved_ray"] = nullptr;
  }
  return out;
}

namespace {
template <class T>
Json opt(const std::optional<T>& v) {
  return v ? to_json(*v) : Json(nullptr);
}
}  // namespace

Json to_json(const Witness& w) {
  return Json{{"vertex", w.vertex},
              {"generator", w.generator},
              {"cell", to_json(w.cell)},
              {"ray", opt(w.ray)},
              {"ray_image", opt(w.ray_image)},
              {"cone_matrix", opt(w.cone_matrix)},
              {"point", to_json(w.point)},
              {"image", to_json(w.image)}};
}

Json to_json(const Certificate& c) {
  return Json{{"status", to_string(c.status)},
              {"stage", to_string(c.stage)},
              {"verified_stars", c.verified_stars},
              {"witness", opt(c.witness)},
              {"assumptions", c.assumptions},
              {"h1", opt(c.h1)}};
}

Json to_json(const RelatorCheck& r, const ActionSpec& a) {
  Json out{{"pass", r.pass}};
  if (!r.pass) {
    out["relator"] = r.relator;
    if (a.presentation()) out["word"] = a.presentation()->format(a.presentation()->relators()[r.relator]);
    out["sample"] = to_json(r.sample);
    out["image"] = to_json(r.image);
  }
  return out;
}

Json to_json(const ActionAnalysis& a, const ActionSpec& spec) {
  Json gens = Json::array();
  for (const auto& g : a.generators) {
    Json j{{"name", g.name}};
    if (g.fix) j["fix"] = to_json(*g.fix);
    if (g.invariant) j["n_f"] = to_json(*g.invariant);
    if (!g.invariant_note.empty()) j["n_f_note"] = g.invariant_note;
    if (g.fuller) j["fuller"] = to_json(*g.fuller);
    if (g.enclosure) j["enclosure"] = to_json(*g.enclosure);
    if (g.detection) j["detection"] = to_json(*g.detection);
    if (g.periodic_fix) j["periodic_fix"] = to_json(*g.periodic_fix);
    gens.push_back(std::move(j));
  }
  Json out{{"generators", std::move(gens)}, {"h1", opt(a.h1)}};
  out["relators"] = a.relators ? to_json(*a.relators, spec) : Json(nullptr);
  return out;
}

std::string dump(const Json& j) { return pretty_json(j); }

}  // namespace plstab::report
