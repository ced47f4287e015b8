#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "plstab/circle.hpp"
#include "plstab/fixed_locus.hpp"
#include "plstab/presentation.hpp"
#include "plstab/refinement.hpp"
#include "plstab/tangent.hpp"

namespace plstab {

/// Named generators acting on a complex (interval maps are realized on a
/// 1D base) or, with no base, on the circle by lifts.
class ActionSpec {
 public:
  static ActionSpec on_complex(Complex base, std::vector<std::string> names, std::vector<PLMap2D> maps,
                               std::optional<Presentation> presentation = std::nullopt);
  static ActionSpec on_circle(std::vector<std::string> names, std::vector<CircleLift> lifts,
                              std::optional<Presentation> presentation = std::nullopt);

  bool is_circle() const { return !base_; }
  const Complex& base() const;
  const std::vector<std::string>& names() const { return names_; }
  const std::vector<PLMap2D>& maps() const { return maps_; }
  const std::vector<CircleLift>& lifts() const { return lifts_; }
  std::size_t size() const { return names_.size(); }
  std::ptrdiff_t index_of(const std::string& name) const;

  const std::optional<Presentation>& presentation() const { return presentation_; }
  /// Relator i with letters renumbered to this spec's generator order.
  Word relator(std::size_t i) const;

  /// The same action restricted to some generators; drops the presentation.
  ActionSpec subset(const std::vector<std::size_t>& keep) const;

 private:
  ActionSpec() = default;
  void attach(std::optional<Presentation> p);

  std::optional<Complex> base_;
  std::vector<std::string> names_;
  std::vector<PLMap2D> maps_;
  std::vector<CircleLift> lifts_;
  std::optional<Presentation> presentation_;
  std::vector<int> letter_map_;  // presentation generator -> 1-based spec index
};

/// Reads `<dir>/action.txt`: `base <file>`, `gen <name> <file>` lines and an
/// optional `presentation <file>`; paths are relative to the directory.
/// Generator files may hold 2D maps, interval maps or circle lifts.
ActionSpec load_action(const std::string& dir, const std::optional<std::string>& presentation_path = std::nullopt);

struct RelatorCheck {
  bool pass = true;
  std::size_t relator = 0;
  /// A point moved by the failing relator and its image.
  Point sample, image;
};

/// Each relator must evaluate to the identity (for lifts: a deck translation).
RelatorCheck verify_relators(const ActionSpec& a);

enum class Status { Trivial, Obstructed, HypothesisFailed };
enum class Stage { H1Gate, FixedPointGate, TangentGate, Propagation };
std::string to_string(Status s);
std::string to_string(Stage s);

struct Witness {
  VertexId vertex = 0;
  std::string generator;
  /// Cell of the generator's refinement containing `point`.
  std::vector<Point> cell;
  /// Tangent witnesses: the moved ray, its image, and the cone's matrix.
  std::optional<Point> ray, ray_image;
  std::optional<Matrix> cone_matrix;
  /// generator(point) == image != point.
  Point point, image;
};

struct Certificate {
  Status status = Status::Trivial;
  Stage stage = Stage::H1Gate;
  std::vector<VertexId> verified_stars;
  std::optional<Witness> witness;
  std::vector<std::string> assumptions;
  std::optional<AbelianizationReport> h1;
};

/// Runs the gates at p, then verifies stars breadth-first from p.
/// Throws DisconnectedComplex, VertexNotInComplex, Unsupported (circle).
Certificate certify_trivial(const ActionSpec& a, VertexId p);

/// Exact re-evaluation of an Obstructed/HypothesisFailed witness.
bool recheck_witness(const ActionSpec& a, const Certificate& c);

struct AnalyzeOptions {
  unsigned kmax = 4;
  unsigned qmax = 64;
  unsigned n = 64;
};

struct GeneratorAnalysis {
  std::string name;
  std::optional<FixedLocus> fix;
  std::optional<CanonicalInvariant> invariant;
  std::string invariant_note;  // why there is no N_f
  std::optional<FullerReport> fuller;
  std::optional<RotationEnclosure> enclosure;
  std::optional<RotationDetection> detection;
  /// Fix of the detected power, as arcs of the circle.
  std::optional<std::vector<ClosedInterval>> periodic_fix;
};

struct ActionAnalysis {
  std::vector<GeneratorAnalysis> generators;
  std::optional<AbelianizationReport> h1;
  std::optional<RelatorCheck> relators;
};

ActionAnalysis analyze_action(const ActionSpec& a, const AnalyzeOptions& options = {});

}  // namespace plstab
