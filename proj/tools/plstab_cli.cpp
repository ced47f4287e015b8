// Command-line front end. Links only the C interface; reports come back as
// JSON and are either rewrapped (--json) or rendered as text.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "json_pretty.hpp"
#include "plstab/plstab.h"

namespace {

using Json = nlohmann::ordered_json;

constexpr int kUsage = 64;
constexpr int kData = 65;

struct Failure {
  plstab_status status;
  std::string message;
};

void check(plstab_status s) {
  if (s != PLSTAB_OK) throw Failure{s, plstab_last_error()};
}

// Owns a string handed out by the library.
struct Text {
  char* p = nullptr;
  Text() = default;
  Text(const Text&) = delete;
  ~Text() { plstab_string_free(p); }
  char** out() { return &p; }
  std::string str() const { return p ? p : ""; }
  Json json() const { return Json::parse(str()); }
};

template <class T, void (*Free)(T*)>
struct Handle {
  T* p = nullptr;
  Handle() = default;
  Handle(const Handle&) = delete;
  ~Handle() { Free(p); }
  T** out() { return &p; }
};

using ComplexH = Handle<plstab_complex, plstab_complex_free>;
using MapH = Handle<plstab_map, plstab_map_free>;
using ActionH = Handle<plstab_action, plstab_action_free>;
using PresH = Handle<plstab_presentation, plstab_presentation_free>;

void write_file(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f || !(f << text)) throw Failure{PLSTAB_E_IO, "cannot write " + path};
}

struct Options {
  bool json = false;
  std::string map, map2, complex_a, complex_b, action, presentation, point, out;
  long vertex = -1;
  long shift = 0;
  unsigned n = 64, qmax = 64, kmax = 4;
};

// Each command fills `result` (for --json) and `text` (otherwise) and
// returns its exit code.
struct Outcome {
  Json result;
  std::string text;
  int code = 0;
};

void load_map(const std::string& path, MapH& m) { check(plstab_map_load(path.c_str(), m.out())); }

Outcome emit_map(plstab_map* m, const std::string& out) {
  Text t;
  check(plstab_map_write(m, t.out()));
  if (!out.empty()) {
    write_file(out, t.str());
    return {Json{{"written", out}}, ""};
  }
  return {Json{{"map", t.str()}}, t.str()};
}

Outcome cmd_eval(const Options& o) {
  MapH m;
  load_map(o.map, m);
  Text t;
  check(plstab_map_eval(m.p, o.point.c_str(), t.out()));
  Json image = Json::array();
  std::istringstream in(t.str());
  for (std::string c; in >> c;) image.push_back(c);
  return {Json{{"image", image}}, t.str() + "\n"};
}

Outcome cmd_compose(const Options& o) {
  MapH f, g, h;
  load_map(o.map, f);
  load_map(o.map2, g);
  check(plstab_map_compose(f.p, g.p, h.out()));
  return emit_map(h.p, o.out);
}

Outcome cmd_invert(const Options& o) {
  MapH f, h;
  load_map(o.map, f);
  check(plstab_map_invert(f.p, h.out()));
  return emit_map(h.p, o.out);
}

Outcome cmd_fixset(const Options& o) {
  MapH m;
  load_map(o.map, m);
  Text cx, prov, js;
  check(plstab_map_fixset(m.p, o.shift, cx.out(), prov.out(), js.out()));
  Outcome r{js.json(), ""};
  if (!o.out.empty()) {
    write_file(o.out, cx.str());
    write_file(o.out + ".prov", prov.str());
    r.text = "wrote " + o.out + " and " + o.out + ".prov\n";
    return r;
  }
  r.text = cx.str().empty() ? "# empty\n" : cx.str();
  std::istringstream in(prov.str());
  for (std::string line; std::getline(in, line);) r.text += "# " + line + "\n";
  if (r.result.contains("n_f") && !r.result["n_f"].is_null()) {
    r.text += "# n_f depth " + r.result["n_f"]["derivation_depth"].dump() + "\n";
  } else if (r.result.contains("n_f_note")) {
    r.text += "# n_f none: " + r.result["n_f_note"].get<std::string>() + "\n";
  }
  return r;
}

Outcome cmd_rotno(const Options& o) {
  MapH m;
  load_map(o.map, m);
  Text js;
  check(plstab_map_rotation(m.p, o.n, o.qmax, js.out()));
  Outcome r{js.json(), ""};
  const Json& det = r.result["detection"]["rational"];
  if (!det.is_null()) {
    const auto q = det["rotation"].get<std::string>();
    r.text = "[" + q + ", " + q + "]\n";
  } else {
    const Json& e = r.result["enclosure"];
    r.text = "[" + e["lo"].get<std::string>() + ", " + e["hi"].get<std::string>() + "]\n";
  }
  return r;
}

Outcome cmd_euler(const Options& o) {
  ComplexH c;
  check(plstab_complex_load(o.complex_a.c_str(), c.out()));
  long chi = 0;
  check(plstab_complex_euler(c.p, &chi));
  return {Json{{"euler_characteristic", chi}}, std::to_string(chi) + "\n"};
}

Outcome cmd_tangent(const Options& o) {
  MapH m;
  load_map(o.map, m);
  Text t, js;
  if (!o.point.empty()) {
    check(plstab_map_tangent(m.p, o.point.c_str(), t.out(), js.out()));
  } else {
    check(plstab_map_tangent_vertex(m.p, static_cast<size_t>(o.vertex), t.out(), js.out()));
  }
  return {js.json(), t.str()};
}

Outcome cmd_certify(const Options& o) {
  ActionH a;
  check(plstab_action_load(o.action.c_str(), o.presentation.empty() ? nullptr : o.presentation.c_str(), a.out()));
  plstab_certificate_status st = PLSTAB_CERT_TRIVIAL;
  Text js;
  check(plstab_certify(a.p, static_cast<size_t>(o.vertex), &st, js.out()));
  Outcome r{js.json(), js.str(), static_cast<int>(st)};
  return r;
}

Outcome cmd_abelianize(const Options& o) {
  PresH p;
  check(plstab_presentation_load(o.presentation.c_str(), p.out()));
  Text js;
  check(plstab_abelianize(p.p, js.out()));
  Outcome r{js.json(), ""};
  std::string factors;
  for (const auto& f : r.result["invariant_factors"]) factors += (factors.empty() ? "" : " ") + f.get<std::string>();
  r.text = "invariant factors: " + (factors.empty() ? std::string("none") : factors) + "\n" +
           "group: " + r.result["group"].get<std::string>() + "\n";
  return r;
}

Outcome cmd_overlay(const Options& o) {
  ComplexH a, b;
  check(plstab_complex_load(o.complex_a.c_str(), a.out()));
  check(plstab_complex_load(o.complex_b.c_str(), b.out()));
  Text t;
  check(plstab_overlay(a.p, b.p, t.out()));
  if (!o.out.empty()) {
    write_file(o.out, t.str());
    return {Json{{"written", o.out}}, ""};
  }
  return {Json{{"complex", t.str()}}, t.str()};
}

std::string summarize_analysis(const Json& a) {
  std::string s;
  for (const auto& g : a["generators"]) {
    s += "generator " + g["name"].get<std::string>() + "\n";
    if (g.contains("fix")) {
      const Json& fix = g["fix"];
      s += "  fix: " + std::string(fix["everything"].get<bool>() ? "everything" : "dim " + fix["locus"]["dim"].dump()) +
           ", " + std::to_string(fix["locus"]["points"].size()) + " points\n";
    }
    if (g.contains("n_f")) {
      s += "  n_f: dim " + g["n_f"]["complex"]["dim"].dump() + ", depth " + g["n_f"]["derivation_depth"].dump() + "\n";
    }
    if (g.contains("n_f_note")) s += "  n_f: none (" + g["n_f_note"].get<std::string>() + ")\n";
    if (g.contains("fuller")) {
      const Json& f = g["fuller"];
      s += "  fuller: chi " + f["euler_characteristic"].dump() + ", k " + (f["k"].is_null() ? "none" : f["k"].dump()) + "\n";
    }
    if (g.contains("enclosure")) {
      const Json& e = g["enclosure"];
      s += "  rotation in [" + e["lo"].get<std::string>() + ", " + e["hi"].get<std::string>() + "]\n";
    }
    if (g.contains("detection")) {
      const Json& d = g["detection"]["rational"];
      s += "  rational: " + (d.is_null() ? std::string("none") : d["rotation"].get<std::string>()) + "\n";
    }
    if (g.contains("periodic_fix")) s += "  periodic fix: " + g["periodic_fix"].dump() + "\n";
  }
  if (!a["h1"].is_null()) s += "h1: " + a["h1"]["group"].get<std::string>() + "\n";
  if (!a["relators"].is_null()) s += std::string("relators: ") + (a["relators"]["pass"].get<bool>() ? "pass" : "fail") + "\n";
  return s;
}

Outcome cmd_analyze(const Options& o) {
  ActionH a;
  check(plstab_action_load(o.action.c_str(), o.presentation.empty() ? nullptr : o.presentation.c_str(), a.out()));
  Text js;
  check(plstab_analyze(a.p, o.kmax, o.qmax, o.n, js.out()));
  Outcome r{js.json(), ""};
  r.text = summarize_analysis(r.result);
  return r;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact PL homeomorphisms: fixed loci, rotation numbers, tangent germs and triviality certificates"};
  app.require_subcommand(1);
  Options o;
  app.add_flag("--json", o.json, "Wrap the report in versioned JSON");

  const auto positive = CLI::PositiveNumber;
  std::map<CLI::App*, Outcome (*)(const Options&)> commands;

  auto* eval = app.add_subcommand("eval", "Evaluate a map at a point");
  eval->add_option("--map", o.map, "Map file")->required()->check(CLI::ExistingFile);
  eval->add_option("--point", o.point, "Space-separated coordinates")->required();
  commands[eval] = cmd_eval;

  auto* compose = app.add_subcommand("compose", "Print f o g");
  compose->add_option("--f", o.map, "Outer map")->required()->check(CLI::ExistingFile);
  compose->add_option("--g", o.map2, "Inner map")->required()->check(CLI::ExistingFile);
  compose->add_option("--out", o.out, "Write the map here");
  commands[compose] = cmd_compose;

  auto* invert = app.add_subcommand("invert", "Print the inverse map");
  invert->add_option("--map", o.map, "Map file")->required()->check(CLI::ExistingFile);
  invert->add_option("--out", o.out, "Write the map here");
  commands[invert] = cmd_invert;

  auto* fixset = app.add_subcommand("fixset", "Fixed locus as a complex with provenance");
  fixset->add_option("--map", o.map, "Map file")->required()->check(CLI::ExistingFile);
  fixset->add_option("--shift", o.shift, "Circle lifts: solve F(x) = x + shift");
  fixset->add_option("--out", o.out, "Write the complex here and provenance to <out>.prov");
  commands[fixset] = cmd_fixset;

  auto* rotno = app.add_subcommand("rotno", "Rotation number of a circle lift");
  rotno->add_option("--map", o.map, "Circle lift file")->required()->check(CLI::ExistingFile);
  rotno->add_option("--n", o.n, "Iterations for the enclosure")->check(positive);
  rotno->add_option("--qmax", o.qmax, "Largest period searched")->check(positive);
  commands[rotno] = cmd_rotno;

  auto* euler = app.add_subcommand("euler", "Euler characteristic");
  euler->add_option("--complex", o.complex_a, "Complex file")->required()->check(CLI::ExistingFile);
  commands[euler] = cmd_euler;

  auto* tangent = app.add_subcommand("tangent", "Germ of a map at a fixed point");
  tangent->add_option("--map", o.map, "Map file")->required()->check(CLI::ExistingFile);
  auto* tv = tangent->add_option("--vertex", o.vertex, "Base vertex index")->check(CLI::NonNegativeNumber);
  auto* tp = tangent->add_option("--point", o.point, "Space-separated coordinates");
  tv->excludes(tp);
  commands[tangent] = cmd_tangent;

  auto* certify = app.add_subcommand("certify", "Certify that an action is trivial");
  certify->add_option("--action", o.action, "Action directory")->required()->check(CLI::ExistingDirectory);
  certify->add_option("--vertex", o.vertex, "Global fixed vertex")->required()->check(CLI::NonNegativeNumber);
  certify->add_option("--presentation", o.presentation, "Presentation file")->check(CLI::ExistingFile);
  commands[certify] = cmd_certify;

  auto* abelianize = app.add_subcommand("abelianize", "Invariant factors of the abelianization");
  abelianize->add_option("--presentation", o.presentation, "Presentation file")->required()->check(CLI::ExistingFile);
  commands[abelianize] = cmd_abelianize;

  auto* overlay = app.add_subcommand("overlay", "Common refinement of two triangulations");
  overlay->add_option("--a", o.complex_a, "First complex")->required()->check(CLI::ExistingFile);
  overlay->add_option("--b", o.complex_b, "Second complex")->required()->check(CLI::ExistingFile);
  overlay->add_option("--out", o.out, "Write the complex here");
  commands[overlay] = cmd_overlay;

  auto* analyze = app.add_subcommand("analyze", "Fixed loci, periodic points and rotation data per generator");
  analyze->add_option("--action", o.action, "Action directory")->required()->check(CLI::ExistingDirectory);
  analyze->add_option("--presentation", o.presentation, "Presentation file")->check(CLI::ExistingFile);
  analyze->add_option("--kmax", o.kmax, "Largest power searched for periodic points")->check(positive);
  analyze->add_option("--qmax", o.qmax, "Largest period for rotation detection")->check(positive);
  analyze->add_option("--n", o.n, "Iterations for rotation enclosures")->check(positive);
  commands[analyze] = cmd_analyze;

  for (auto* sub : app.get_subcommands({})) sub->add_flag("--json", o.json, "Wrap the report in versioned JSON");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  CLI::App* chosen = app.get_subcommands().front();
  if (chosen == tangent && o.point.empty() && o.vertex < 0) {
    std::cerr << "tangent: one of --vertex or --point is required\n";
    return kUsage;
  }
  try {
    const Outcome r = commands.at(chosen)(o);
    if (o.json) {
      const Json wrapped{{"schema_version", 1}, {"command", chosen->get_name()}, {"result", r.result}};
      std::cout << plstab::pretty_json(wrapped);
    } else {
      std::cout << r.text;
    }
    return r.code;
  } catch (const Failure& f) {
    std::cerr << "error: " << plstab_status_name(f.status) << ": " << f.message << "\n";
    return f.status == PLSTAB_E_INVALID_ARGUMENT ? kUsage : kData;
  } catch (const Json::exception& e) {
    std::cerr << "error: malformed report: " << e.what() << "\n";
    return kData;
  }
}
