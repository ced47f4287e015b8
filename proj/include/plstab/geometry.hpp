#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "plstab/rational.hpp"

namespace plstab {

/// A point (or vector) in Q^d, 1 <= d <= 3.
class Point {
 public:
  Point() = default;
  explicit Point(std::vector<Rational> coords) : coords_(std::move(coords)) {}
  Point(std::initializer_list<Rational> coords) : coords_(coords) {}

  static Point zero(std::size_t dim) { return Point(std::vector<Rational>(dim)); }

  std::size_t dim() const { return coords_.size(); }
  const Rational& operator[](std::size_t i) const { return coords_[i]; }
  Rational& operator[](std::size_t i) { return coords_[i]; }
  const std::vector<Rational>& coords() const { return coords_; }

  bool is_zero() const;

  /// Space-separated canonical rationals.
  std::string str() const;

  friend bool operator==(const Point&, const Point&) = default;
  friend auto operator<=>(const Point& a, const Point& b) { return a.coords_ <=> b.coords_; }

 private:
  std::vector<Rational> coords_;
};

Point operator+(const Point& a, const Point& b);
Point operator-(const Point& a, const Point& b);
Point operator*(const Rational& s, const Point& p);
Rational dot(const Point& a, const Point& b);
/// z-component of the planar cross product.
Rational cross(const Point& a, const Point& b);
Point cross3(const Point& a, const Point& b);
/// Twice the signed area of (a, b, c) in the plane.
Rational orient2d(const Point& a, const Point& b, const Point& c);
/// Positive scalar multiple test: b = s*a with s > 0 (both nonzero).
bool positively_parallel(const Point& a, const Point& b);
bool parallel(const Point& a, const Point& b);

/// Dense rational matrix, row-major.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static Matrix identity(std::size_t n);
  static Matrix scalar(std::size_t n, const Rational& s);
  static Matrix from_columns(std::span<const Point> columns);
  static Matrix from_rows(std::initializer_list<std::initializer_list<Rational>> rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }

  Point apply(const Point& v) const;
  Rational determinant() const;
  std::size_t rank() const;
  std::optional<Matrix> inverse() const;
  /// If this is s*I for some s, returns s.
  std::optional<Rational> scalar_factor() const;

  std::string str() const;

  friend bool operator==(const Matrix&, const Matrix&) = default;
  friend Matrix operator*(const Matrix& a, const Matrix& b);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

/// Solution set {particular + span(kernel)} of A x = b.
struct LinearSolution {
  std::vector<Rational> particular;
  std::vector<std::vector<Rational>> kernel;
};

std::optional<LinearSolution> solve_linear(const Matrix& a, std::span<const Rational> b);

bool affinely_independent(std::span<const Point> points);

/// Barycentric coordinates of x w.r.t. affinely independent vertices, or
/// nullopt when x is not in their affine hull.
std::optional<std::vector<Rational>> barycentric(std::span<const Point> vertices, const Point& x);

bool in_closed_simplex(std::span<const Point> vertices, const Point& x);
bool in_relative_interior(std::span<const Point> vertices, const Point& x);

/// |vol(inner)| / |vol(outer)| for a simplex `inner` lying in the affine hull
/// of the same-dimensional simplex `outer`.
Rational relative_measure(std::span<const Point> outer, std::span<const Point> inner);

/// Relative-interior intersection predicates for simplices of dimension <= 2
/// in ambient dimension <= 3.
bool segment_interiors_meet(const Point& a, const Point& b, const Point& c, const Point& d);
bool segment_meets_triangle_interior(const Point& a, const Point& b, std::span<const Point> tri);
bool triangle_interiors_meet(std::span<const Point> t1, std::span<const Point> t2);

/// Coordinate pair spanning the projection of a non-degenerate 3D triangle's
/// plane onto a coordinate plane (bijective on that plane).
std::pair<std::size_t, std::size_t> projection_axes(std::span<const Point> tri);
Point project(const Point& p, std::pair<std::size_t, std::size_t> axes);

/// Twice the signed area of a planar polygon.
Rational twice_signed_area(std::span<const Point> polygon);
/// Intersection of two convex planar polygons given counter-clockwise.
/// The result is counter-clockwise, duplicate- and collinear-free.
std::vector<Point> clip_convex(std::span<const Point> subject, std::span<const Point> clip);
std::vector<Point> simplify_polygon(std::vector<Point> polygon);

}  // namespace plstab
