#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "plstab/complex.hpp"
#include "plstab/interval.hpp"

namespace plstab {

/// Common refinement of two triangulations of one polyhedron.
struct Overlay {
  Complex cells;
  /// For each cell (aligned with cells.simplices()), the indices of the
  /// containing maximal simplices of the first and second input.
  std::vector<std::pair<std::size_t, std::size_t>> provenance;
};

/// Throws RealizationMismatch when the polyhedra differ and
/// NonCoplanarOverlap when overlapping triangles are not coplanar.
Overlay overlay(const Complex& t1, const Complex& t2);

/// A PL homeomorphism of |base|: affine on each simplex of a refinement.
class PLMap2D {
 public:
  /// Full validation: the refinement has the realization of `base` with
  /// every cell inside a base simplex, the image triangulation is embedded
  /// with realization |base|, and boundary goes to boundary.
  static PLMap2D create(Complex base, Complex domain_refinement, std::vector<Point> images);
  static PLMap2D identity(const Complex& base);
  /// Simplicial map: refinement = base, images given per base vertex.
  static PLMap2D from_vertex_images(const Complex& base, std::vector<Point> images);
  /// An interval map on a 1D complex in Q^1 realizing [f.left(), f.right()].
  static PLMap2D from_interval_map(const Complex& base, const PLMap1D& f);

  const Complex& base() const { return base_; }
  const Complex& domain() const { return domain_; }
  const std::vector<Point>& images() const { return images_; }
  const Point& image(VertexId v) const { return images_.at(v); }
  int dim() const { return base_.dim(); }

  /// Image triangulation: the refinement's simplices on the image points.
  Complex image_complex() const;
  /// Affine piece on domain simplex i: x = sum l_j P_j  ->  sum l_j Q_j.
  Point apply_piece(std::size_t simplex_index, const Point& x) const;
  /// Linear part on domain simplex i when dim == ambient dimension.
  Matrix linear_part(std::size_t simplex_index) const;

  Point operator()(const Point& x) const;
  bool is_identity() const;

 private:
  PLMap2D(Complex base, Complex domain, std::vector<Point> images)
      : base_(std::move(base)), domain_(std::move(domain)), images_(std::move(images)) {}
  friend PLMap2D assemble_map(const Complex& base, const std::vector<std::vector<std::pair<Point, Point>>>& cells);

  Complex base_;
  Complex domain_;
  std::vector<Point> images_;
};

/// Builds a map from cells given as (point, image) vertex lists; vertices
/// are deduplicated and numbered in sorted coordinate order. No validation
/// beyond the Complex invariants.
PLMap2D assemble_map(const Complex& base, const std::vector<std::vector<std::pair<Point, Point>>>& cells);

Point eval2d(const PLMap2D& f, const Point& x);
/// f ∘ g; the refinement of the result refines that of g.
PLMap2D compose2d(const PLMap2D& f, const PLMap2D& g);
PLMap2D inverse2d(const PLMap2D& f);
/// Equality as maps, independent of the refinements chosen.
bool same_map(const PLMap2D& f, const PLMap2D& g);

// Text format: `base <file>`, the refinement as `v`/`s` records, then
// `img <vertex-index> <coords...>` lines.
/// The path named by the `base` record, if any.
std::optional<std::string> map2d_base_path(std::string_view text);
PLMap2D parse_map2d(std::string_view text, const Complex& base);
std::string write_map2d(const PLMap2D& f, const std::string& base_path);

}  // namespace plstab
