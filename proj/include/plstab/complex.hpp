#pragma once

#include <compare>
#include <cstddef>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "plstab/geometry.hpp"

namespace plstab {

using VertexId = std::size_t;

/// A simplex as a sorted list of distinct vertex indices.
class Simplex {
 public:
  Simplex() = default;
  explicit Simplex(std::vector<VertexId> vertices);
  Simplex(std::initializer_list<VertexId> vertices) : Simplex(std::vector<VertexId>(vertices)) {}

  std::size_t size() const { return v_.size(); }
  int dim() const { return static_cast<int>(v_.size()) - 1; }
  const std::vector<VertexId>& vertices() const { return v_; }
  VertexId operator[](std::size_t i) const { return v_[i]; }
  bool contains(VertexId v) const;
  bool contains(const Simplex& face) const;

  /// Codimension-one faces, in sorted order.
  std::vector<Simplex> facets() const;
  /// All nonempty faces including the simplex itself.
  std::vector<Simplex> all_faces() const;

  friend bool operator==(const Simplex&, const Simplex&) = default;
  friend auto operator<=>(const Simplex& a, const Simplex& b) {
    if (a.v_.size() != b.v_.size()) return a.v_.size() <=> b.v_.size();
    return a.v_ <=> b.v_;
  }

 private:
  std::vector<VertexId> v_;
};

/// Raw vertex/simplex records as read from the complex text format.
struct ComplexRecords {
  std::vector<Point> points;
  std::vector<Simplex> simplices;
};

/// A finite simplicial complex closed under faces, with its own points.
/// Used for stars, links, boundaries and fixed loci.
struct SubComplex {
  std::vector<Point> points;
  std::vector<Simplex> simplices;  // face-closed, sorted (by dimension, then vertices)

  /// -1 when empty.
  int dim() const;
  bool empty() const { return simplices.empty(); }
  std::vector<Simplex> maximal() const;
  std::vector<Simplex> of_dim(int d) const;
  std::vector<VertexId> vertex_ids() const;
  long euler_characteristic() const;

  /// Builds the face closure of `cells` over `points`.
  static SubComplex closure(std::vector<Point> points, const std::vector<Simplex>& cells);
};

/// A validated triangulated 1- or 2-manifold (possibly with boundary)
/// embedded in Q^d, d <= 3.
class Complex {
 public:
  /// Validates eagerly; throws Error{InvalidComplex} on any violation.
  static Complex create(std::vector<Point> points, std::vector<Simplex> simplices);
  static Complex create(ComplexRecords records) {
    return create(std::move(records.points), std::move(records.simplices));
  }
  /// As create(), but trusts that the simplices have pairwise disjoint
  /// interiors and meet in common faces (e.g. cells of an exact overlay).
  static Complex from_disjoint_cells(std::vector<Point> points, std::vector<Simplex> simplices);

  const std::vector<Point>& points() const { return points_; }
  const Point& point(VertexId v) const { return points_.at(v); }
  const std::vector<Simplex>& simplices() const { return simplices_; }
  std::vector<Point> realize(const Simplex& s) const;

  int dim() const { return dim_; }
  std::size_t ambient_dim() const { return points_.front().dim(); }
  std::size_t vertex_count() const { return points_.size(); }
  bool connected() const { return connected_; }

  /// All faces of dimension k in sorted order.
  const std::vector<Simplex>& faces(int k) const { return faces_.at(static_cast<std::size_t>(k)); }
  /// Indices (into simplices()) of maximal simplices containing v.
  const std::vector<std::size_t>& incident(VertexId v) const { return incident_.at(v); }
  /// Number of maximal simplices containing a codimension-one face.
  std::size_t facet_degree(const Simplex& facet) const;
  bool is_boundary_vertex(VertexId v) const;
  std::vector<VertexId> neighbors(VertexId v) const;

  std::optional<VertexId> find_vertex(const Point& p) const;
  /// First maximal simplex (in sorted order) whose closure contains p.
  std::optional<std::size_t> locate(const Point& p) const;

  friend bool operator==(const Complex& a, const Complex& b) {
    return a.points_ == b.points_ && a.simplices_ == b.simplices_;
  }

 private:
  Complex() = default;
  static Complex build(std::vector<Point> points, std::vector<Simplex> simplices, bool check_embedding);
  static Complex finish_connectivity(Complex c);

  std::vector<Point> points_;
  std::vector<Simplex> simplices_;
  int dim_ = 0;
  bool connected_ = true;
  std::vector<std::vector<Simplex>> faces_;
  std::vector<std::vector<std::size_t>> incident_;
  std::map<Simplex, std::size_t> facet_degree_;
  std::map<Point, VertexId> vertex_lookup_;
};

long euler_characteristic(const Complex& c);
/// Closed star of v: maximal simplices containing v with all their faces.
SubComplex star(const Complex& c, VertexId v);
/// Faces of the closed star not containing v.
SubComplex link(const Complex& c, VertexId v);
/// Codimension-one faces with exactly one coface, closed under faces.
SubComplex boundary(const Complex& c);

/// Relabels vertices in lexicographic coordinate order.
ComplexRecords sort_vertices(ComplexRecords records);

// Text format: `v <index> <coords...>`, `s <i> [<j> [<k>]]`, `#` comments.
ComplexRecords parse_complex_records(std::string_view text);
Complex parse_complex(std::string_view text);
std::string write_complex(const Complex& c);
std::string write_records(const std::vector<Point>& points, const std::vector<Simplex>& simplices);
Complex load_complex(const std::string& path);

std::string read_file(const std::string& path);

}  // namespace plstab
