#pragma once

// JSON views of the core types. Rationals are "p/q" strings, points arrays
// of them; the key order of nlohmann::ordered_json is kept for stable output.

#include "json.hpp"
#include "plstab/circle.hpp"
#include "plstab/fixed_locus.hpp"
#include "plstab/presentation.hpp"
#include "plstab/stability.hpp"
#include "plstab/tangent.hpp"

namespace plstab::report {

using Json = nlohmann::ordered_json;

Json to_json(const Rational& r);
Json to_json(const Point& p);
Json to_json(const Matrix& m);
Json to_json(const std::vector<Point>& ps);
Json to_json(const Simplex& s);
Json to_json(const SubComplex& s);
Json to_json(const ClosedInterval& i);
Json to_json(const std::vector<ClosedInterval>& is);
Json to_json(const FixedLocus& f);
Json to_json(const CanonicalInvariant& n);
Json to_json(const FullerReport& r);
Json to_json(const RotationEnclosure& e);
Json to_json(const RotationDetection& d);
Json to_json(const AbelianizationReport& a);
Json to_json(const Germ& g);
Json to_json(const Witness& w);
Json to_json(const Certificate& c);
Json to_json(const RelatorCheck& r, const ActionSpec& a);
Json to_json(const ActionAnalysis& a, const ActionSpec& spec);

/// Frontier and N_f (or the reason there is none) for one fixed locus.
Json fixset_json(const FixedLocus& f);

/// Indented, with flat arrays on one line; newline-terminated.
std::string dump(const Json& j);

}  // namespace plstab::report
