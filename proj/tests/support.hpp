#pragma once

// Shared fixtures and random generators for the test binaries.

#include <cstdint>
#include <random>
#include <vector>

#include "plstab/circle.hpp"
#include "plstab/complex.hpp"
#include "plstab/interval.hpp"
#include "plstab/refinement.hpp"

namespace plstab::testing {

using Rng = std::mt19937_64;

/// Uniform rational in [lo, hi] with denominator dividing `den`.
Rational random_rational(Rng& rng, const Rational& lo, const Rational& hi, long den = 64);

/// Square [-1,1]^2 split into 4 triangles around the origin (vertex 4).
Complex square4();
/// Unit square [0,1]^2 split into 4 triangles around (1/2,1/2) (vertex 4).
Complex unit_square4();
/// Unit square [0,1]^2 as two triangles along the diagonal (0,0)-(1,1).
Complex unit_square_diag();
/// Unit square [0,1]^2 as two triangles along the diagonal (1,0)-(0,1).
Complex unit_square_antidiag();
Complex triangle_disk();
Complex tetrahedron_boundary();
/// Boundary of the triangle (0,0),(1,0),(0,1) as a 3-cycle graph.
Complex three_cycle();
/// [a,b] cut at the given interior points.
Complex interval_complex(const Rational& a, const Rational& b, std::vector<Rational> cuts = {});

/// Inserts p in the interior of triangle/edge `simplex_index` (stellar split).
ComplexRecords split_simplex(const Complex& c, std::size_t simplex_index, const Point& p);
/// Inserts p in the relative interior of edge `edge` (splits all cofaces).
ComplexRecords split_edge(const Complex& c, const Simplex& edge, const Point& p);

/// Random triangulation of the unit square with at most `max_triangles`.
Complex random_square_triangulation(Rng& rng, std::size_t max_triangles);
/// A random subdivision step (edge or face split) of `c`.
Complex random_subdivision(Rng& rng, const Complex& c);

/// Random orientation-preserving map of [a,b] with at most `max_breakpoints`
/// breakpoints; roughly a third of interior breakpoints lie on the diagonal.
PLMap1D random_map1d(Rng& rng, std::size_t max_breakpoints, const Rational& a = 0, const Rational& b = 1);

/// Random map of [a,b] fixing [a, c] pointwise for a random c (possibly a).
PLMap1D random_map1d_with_identity_prefix(Rng& rng, std::size_t max_breakpoints);

/// Random circle lift with at most `max_breakpoints` breakpoints.
CircleLift random_lift(Rng& rng, std::size_t max_breakpoints);

/// Rotation by a quarter turn about the origin, on square4().
PLMap2D quarter_rotation();
/// unit_square4() with (1/2,1/4) inserted in the lower triangle and moved
/// to (1/2,3/8); fixes the center (vertex 4 of the base).
PLMap2D shear_map();
/// On [0,1]^2: identity on x <= 1/2, a boundary-sliding map on x >= 1/2
/// that fixes the segment x = 1/2 and moves (3/4,1/2) to (3/4,5/8).
PLMap2D left_half_map();
/// Vertex rotation 0 -> 1 -> 2 -> 0 of three_cycle().
PLMap2D cycle_rotation();

/// Random PL homeomorphism of the unit square: a random refinement whose
/// interior vertices are displaced where that keeps the map embedded.
PLMap2D random_square_map(Rng& rng, std::size_t max_triangles);
/// Random point of the closed unit square.
Point random_square_point(Rng& rng, long den = 97);

}  // namespace plstab::testing
