#include "plstab/plstab.h"

#include <cstdlib>
#include <cstring>
#include <filesystem>
#include <new>
#include <sstream>
#include <variant>

#include "plstab/error.hpp"
#include "plstab/stability.hpp"
#include "report.hpp"

using namespace plstab;
using report::Json;

struct plstab_complex {
  Complex c;
};

struct plstab_map {
  std::variant<PLMap1D, PLMap2D, CircleLift> m;
  std::string base_ref;  // as written in the `base` record
};

struct plstab_presentation {
  Presentation p;
};

struct plstab_action {
  ActionSpec a;
};

namespace {

thread_local std::string last_error;

plstab_status code_of(ErrorCode c) { return static_cast<plstab_status>(static_cast<int>(c) + 1); }

template <class F>
plstab_status guarded(F&& body) {
  last_error.clear();
  try {
    body();
    return PLSTAB_OK;
  } catch (const Error& e) {
    last_error = e.what();
    return code_of(e.code());
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
  } catch (const std::exception& e) {
    last_error = e.what();
  } catch (...) {
    last_error = "unknown failure";
  }
  return PLSTAB_E_INTERNAL;
}

char* dup(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void put(char** out, const std::string& s) {
  if (out) *out = dup(s);
}

void require(const void* p, const char* what) {
  if (!p) fail(ErrorCode::InvalidArgument, std::string("null ") + what);
}

Point parse_point(const char* text) {
  require(text, "point");
  std::istringstream in(text);
  std::vector<Rational> coords;
  for (std::string tok; in >> tok;) coords.push_back(Rational::parse(tok));
  if (coords.empty()) fail(ErrorCode::Parse, "empty point");
  return Point(std::move(coords));
}

Complex interval_base(const PLMap1D& f) {
  return Complex::create({Point{f.left()}, Point{f.right()}}, {Simplex{0, 1}});
}

/// Interval maps are handled as maps of their 1D base.
PLMap2D as_complex_map(const plstab_map& m) {
  if (const auto* f = std::get_if<PLMap2D>(&m.m)) return *f;
  if (const auto* f = std::get_if<PLMap1D>(&m.m)) return PLMap2D::from_interval_map(interval_base(*f), *f);
  fail(ErrorCode::Unsupported, "operation needs a map of a complex, not a circle lift");
}

std::string first_token(const std::string& text) {
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) {
    std::istringstream ls(line);
    std::string tok;
    if (ls >> tok && tok[0] != '#') return tok;
  }
  return {};
}

}  // namespace

extern "C" {

const char* plstab_last_error(void) { return last_error.c_str(); }

const char* plstab_status_name(plstab_status s) {
  if (s == PLSTAB_OK) return "Ok";
  if (s == PLSTAB_E_INTERNAL) return "Internal";
  if (s < PLSTAB_OK || s > PLSTAB_E_INTERNAL) return "Unknown";
  return to_string(static_cast<ErrorCode>(static_cast<int>(s) - 1)).data();
}

void plstab_string_free(char* s) { std::free(s); }

plstab_status plstab_complex_load(const char* path, plstab_complex** out) {
  return guarded([&] {
    require(path, "path");
    require(out, "output");
    *out = new plstab_complex{load_complex(path)};
  });
}

plstab_status plstab_complex_parse(const char* text, plstab_complex** out) {
  return guarded([&] {
    require(text, "text");
    require(out, "output");
    *out = new plstab_complex{parse_complex(text)};
  });
}

void plstab_complex_free(plstab_complex* c) { delete c; }

plstab_status plstab_complex_euler(const plstab_complex* c, long* out) {
  return guarded([&] {
    require(c, "complex");
    require(out, "output");
    *out = euler_characteristic(c->c);
  });
}

plstab_status plstab_complex_write(const plstab_complex* c, char** out) {
  return guarded([&] {
    require(c, "complex");
    put(out, write_complex(c->c));
  });
}

plstab_status plstab_overlay(const plstab_complex* a, const plstab_complex* b, char** out) {
  return guarded([&] {
    require(a, "complex");
    require(b, "complex");
    const Overlay o = overlay(a->c, b->c);
    std::string text = write_complex(o.cells);
    for (std::size_t i = 0; i < o.provenance.size(); ++i) {
      text += "# cell " + std::to_string(i) + " from " + std::to_string(o.provenance[i].first) + " " +
              std::to_string(o.provenance[i].second) + "\n";
    }
    put(out, text);
  });
}

plstab_status plstab_map_load(const char* path, plstab_map** out) {
  return guarded([&] {
    require(path, "path");
    require(out, "output");
    const std::string text = read_file(path);
    const std::string kind = first_token(text);
    if (kind == "interval") {
      *out = new plstab_map{parse_map1d(text), {}};
    } else if (kind == "circle") {
      *out = new plstab_map{parse_lift(text), {}};
    } else {
      const auto ref = map2d_base_path(text);
      if (!ref) fail(ErrorCode::Parse, std::string(path) + ": map has no base record");
      const auto base_path = std::filesystem::path(path).parent_path() / *ref;
      *out = new plstab_map{parse_map2d(text, load_complex(base_path.string())), *ref};
    }
  });
}

void plstab_map_free(plstab_map* m) { delete m; }

plstab_map_kind plstab_map_get_kind(const plstab_map* m) {
  if (!m) return PLSTAB_MAP_SURFACE;
  switch (m->m.index()) {
    case 0: return PLSTAB_MAP_INTERVAL;
    case 1: return PLSTAB_MAP_SURFACE;
    default: return PLSTAB_MAP_CIRCLE;
  }
}

plstab_status plstab_map_eval(const plstab_map* m, const char* point, char** out) {
  return guarded([&] {
    require(m, "map");
    const Point x = parse_point(point);
    std::string result;
    if (const auto* f = std::get_if<PLMap2D>(&m->m)) {
      if (x.dim() != f->base().ambient_dim()) fail(ErrorCode::InvalidArgument, "point has the wrong dimension");
      result = (*f)(x).str();
    } else {
      if (x.dim() != 1) fail(ErrorCode::InvalidArgument, "expected one coordinate");
      if (const auto* g = std::get_if<PLMap1D>(&m->m)) {
        result = (*g)(x[0]).str();
      } else {
        result = std::get<CircleLift>(m->m)(x[0]).str();
      }
    }
    put(out, result);
  });
}

plstab_status plstab_map_compose(const plstab_map* f, const plstab_map* g, plstab_map** out) {
  return guarded([&] {
    require(f, "map");
    require(g, "map");
    require(out, "output");
    if (f->m.index() != g->m.index()) fail(ErrorCode::InvalidArgument, "maps of different kinds");
    if (const auto* a = std::get_if<PLMap1D>(&f->m)) {
      *out = new plstab_map{compose1d(*a, std::get<PLMap1D>(g->m)), {}};
    } else if (const auto* a = std::get_if<PLMap2D>(&f->m)) {
      *out = new plstab_map{compose2d(*a, std::get<PLMap2D>(g->m)), f->base_ref};
    } else {
      *out = new plstab_map{compose_lift(std::get<CircleLift>(f->m), std::get<CircleLift>(g->m)), {}};
    }
  });
}

plstab_status plstab_map_invert(const plstab_map* m, plstab_map** out) {
  return guarded([&] {
    require(m, "map");
    require(out, "output");
    if (const auto* a = std::get_if<PLMap1D>(&m->m)) {
      *out = new plstab_map{inverse1d(*a), {}};
    } else if (const auto* a = std::get_if<PLMap2D>(&m->m)) {
      *out = new plstab_map{inverse2d(*a), m->base_ref};
    } else {
      *out = new plstab_map{inverse_lift(std::get<CircleLift>(m->m)), {}};
    }
  });
}

plstab_status plstab_map_write(const plstab_map* m, char** out) {
  return guarded([&] {
    require(m, "map");
    if (const auto* a = std::get_if<PLMap1D>(&m->m)) {
      put(out, write_map1d(*a));
    } else if (const auto* a = std::get_if<PLMap2D>(&m->m)) {
      put(out, write_map2d(*a, m->base_ref));
    } else {
      put(out, write_lift(std::get<CircleLift>(m->m)));
    }
  });
}

plstab_status plstab_map_fixset(const plstab_map* m, long p, char** complex_text, char** provenance, char** json) {
  return guarded([&] {
    require(m, "map");
    if (const auto* lift = std::get_if<CircleLift>(&m->m)) {
      const auto arcs = fixed_set_circle(*lift, p);
      std::string text;
      for (const auto& a : arcs) text += "arc " + a.lo.str() + " " + a.hi.str() + "\n";
      put(complex_text, text);
      put(provenance, "");
      put(json, report::dump(Json{{"shift", p}, {"arcs", report::to_json(arcs)}}));
      return;
    }
    if (p != 0) fail(ErrorCode::InvalidArgument, "a shift only applies to circle lifts");
    const FixedLocus fl = fixed_subcomplex(as_complex_map(*m));
    put(complex_text, write_records(fl.subcomplex.points, fl.subcomplex.maximal()));
    std::string prov;
    for (const auto& c : fl.provenance) {
      prov += "cell";
      for (auto v : c.cell.vertices()) prov += " " + std::to_string(v);
      prov += " piece " + std::to_string(c.piece) + "\n";
    }
    put(provenance, prov);
    put(json, report::dump(report::fixset_json(fl)));
  });
}

plstab_status plstab_map_rotation(const plstab_map* m, unsigned n, unsigned qmax, char** json) {
  return guarded([&] {
    require(m, "map");
    const auto* lift = std::get_if<CircleLift>(&m->m);
    if (!lift) fail(ErrorCode::Unsupported, "rotation numbers need a circle lift");
    if (n == 0 || qmax == 0) fail(ErrorCode::InvalidArgument, "n and qmax must be positive");
    Json out{{"enclosure", report::to_json(rotation_enclosure(*lift, n))},
             {"detection", report::to_json(detect_rational_rotation(*lift, qmax))}};
    put(json, report::dump(out));
  });
}

namespace {
plstab_status tangent_common(const plstab_map* m, char** text, char** json, auto&& build) {
  return guarded([&] {
    require(m, "map");
    const Germ g = build(as_complex_map(*m));
    put(text, write_germ(g));
    put(json, report::dump(report::to_json(g)));
  });
}
}  // namespace

plstab_status plstab_map_tangent(const plstab_map* m, const char* point, char** text, char** json) {
  return tangent_common(m, text, json, [&](const PLMap2D& f) { return build_germ_at(f, parse_point(point)); });
}

plstab_status plstab_map_tangent_vertex(const plstab_map* m, size_t vertex, char** text, char** json) {
  return tangent_common(m, text, json, [&](const PLMap2D& f) { return build_germ(f, vertex); });
}

plstab_status plstab_map_fuller(const plstab_map* m, unsigned kmax, char** json) {
  return guarded([&] {
    require(m, "map");
    put(json, report::dump(report::to_json(fuller_search(as_complex_map(*m), kmax))));
  });
}

plstab_status plstab_presentation_load(const char* path, plstab_presentation** out) {
  return guarded([&] {
    require(path, "path");
    require(out, "output");
    *out = new plstab_presentation{parse_presentation(read_file(path))};
  });
}

void plstab_presentation_free(plstab_presentation* p) { delete p; }

plstab_status plstab_abelianize(const plstab_presentation* p, char** json) {
  return guarded([&] {
    require(p, "presentation");
    put(json, report::dump(report::to_json(abelianization(p->p))));
  });
}

plstab_status plstab_word_ball(const plstab_presentation* p, unsigned radius, char** json) {
  return guarded([&] {
    require(p, "presentation");
    Json words = Json::array();
    for (const auto& w : word_ball(p->p, radius)) words.push_back(p->p.format(w));
    put(json, report::dump(Json{{"radius", radius}, {"words", std::move(words)}}));
  });
}

plstab_status plstab_action_load(const char* dir, const char* presentation_path, plstab_action** out) {
  return guarded([&] {
    require(dir, "directory");
    require(out, "output");
    std::optional<std::string> pres;
    if (presentation_path) pres = presentation_path;
    *out = new plstab_action{load_action(dir, pres)};
  });
}

void plstab_action_free(plstab_action* a) { delete a; }

plstab_status plstab_certify(const plstab_action* a, size_t vertex, plstab_certificate_status* result, char** json) {
  return guarded([&] {
    require(a, "action");
    const Certificate c = certify_trivial(a->a, vertex);
    if (result) {
      *result = c.status == Status::Trivial      ? PLSTAB_CERT_TRIVIAL
                : c.status == Status::Obstructed ? PLSTAB_CERT_OBSTRUCTED
                                                 : PLSTAB_CERT_HYPOTHESIS_FAILED;
    }
    put(json, report::dump(report::to_json(c)));
  });
}

plstab_status plstab_verify_relators(const plstab_action* a, int* pass, char** json) {
  return guarded([&] {
    require(a, "action");
    const RelatorCheck r = verify_relators(a->a);
    if (pass) *pass = r.pass ? 1 : 0;
    put(json, report::dump(report::to_json(r, a->a)));
  });
}

plstab_status plstab_analyze(const plstab_action* a, unsigned kmax, unsigned qmax, unsigned n, char** json) {
  return guarded([&] {
    require(a, "action");
    if (kmax == 0 || qmax == 0 || n == 0) fail(ErrorCode::InvalidArgument, "options must be positive");
    put(json, report::dump(report::to_json(analyze_action(a->a, {kmax, qmax, n}), a->a)));
  });
}

}  // extern "C"
