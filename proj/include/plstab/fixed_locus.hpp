#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "plstab/complex.hpp"
#include "plstab/refinement.hpp"

namespace plstab {

struct FixedCell {
  Simplex cell;        // in FixedLocus::subcomplex indices
  std::size_t piece;   // domain simplex whose affine piece produced it
};

/// Fix(f) as a subcomplex. Points are numbered in sorted coordinate order.
struct FixedLocus {
  SubComplex subcomplex;
  std::vector<FixedCell> provenance;
  /// Topological frontier of Fix(f) in |M|, on the same points.
  SubComplex frontier;
  bool everything = false;
};

FixedLocus fixed_subcomplex(const PLMap2D& f);

/// Closed 0- or 1-manifold: a point set, or a graph with all degrees 2.
bool is_closed_manifold(const SubComplex& s);

struct CanonicalInvariant {
  SubComplex n_f;
  int derivation_depth = 1;
};

/// Frontier of Fix(f) if it is a closed manifold, else the points where the
/// frontier fails to be locally an open arc. Throws FixIsEverything,
/// FixIsEmpty.
CanonicalInvariant canonical_invariant(const FixedLocus& fl);

struct PeriodicHit {
  unsigned k = 0;
  std::vector<Point> witness_cell;
};

struct FullerReport {
  std::optional<PeriodicHit> hit;
  long euler_characteristic = 0;
  /// Largest refinement met while composing.
  std::size_t max_cells = 0;
};

/// Smallest k <= kmax with Fix(f^k) nonempty.
FullerReport fuller_search(const PLMap2D& f, unsigned kmax);

/// Whether x lies in the realization of s.
bool realization_contains(const SubComplex& s, const Point& x);

}  // namespace plstab
