#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "plstab/refinement.hpp"

namespace plstab {

/// Rays are direction vectors scaled to primitive integer vectors, so ray
/// equality is vector equality.
Point normalize_ray(const Point& direction);

/// Directions of the star of an apex. In the plane, rays are listed
/// counter-clockwise and cone i spans rays i and i+1 (cyclically for an
/// interior apex). On the line, each ray is its own cone.
struct Fan {
  Point apex;
  int dim = 2;
  std::vector<Point> rays;
  bool interior = true;

  std::size_t cone_count() const;
  /// Spanning rays of cone i (the same ray twice on the line).
  std::pair<Point, Point> cone(std::size_t i) const;
  /// A cone whose closure contains the direction, if any.
  std::optional<std::size_t> cone_containing(const Point& direction) const;

  friend bool operator==(const Fan&, const Fan&) = default;
};

/// Linear parts of a map around a fixed apex, one per cone.
struct Germ {
  Fan fan;
  std::vector<Matrix> matrices;
};

enum class SphereType { Circle, Arc, TwoPoints, Point };
std::string to_string(SphereType t);

/// Throws NotFixedPoint when f moves p; p must be a vertex of the base.
Germ build_germ(const PLMap2D& f, VertexId p);
Germ build_germ_at(const PLMap2D& f, const Point& p);

/// Re-expresses every germ on the coarsest common refinement of their fans.
/// Throws SupportMismatch.
std::vector<Germ> refine_fans(std::span<const Germ> germs);
/// Subdivides a germ's fan at extra rays lying in its support.
Germ subdivide(const Germ& g, std::span<const Point> rays);

/// Germ of f ∘ g.
Germ compose_germs(const Germ& f, const Germ& g);
Germ inverse_germ(const Germ& g);
/// Same linear map on every direction.
bool equivalent_germs(const Germ& a, const Germ& b);

/// Image of a ray under the germ.
Point apply_ray(const Germ& g, const Point& ray);

/// Every ray fixed: each cone matrix is a positive multiple of the identity.
bool is_trivial_on_tangent_sphere(const Germ& g);

struct MovedRay {
  std::size_t cone = 0;
  Point ray;
  Point image;
};
/// A concrete ray moved by the germ, or nullopt when it is trivial.
std::optional<MovedRay> moved_ray(const Germ& g);

/// For each cone of the fan refined at preimages of its own rays, the
/// target cone (of the original fan) containing its image.
struct RayMap {
  Germ source;
  std::vector<std::size_t> target;
};
RayMap ray_map(const Germ& g);

SphereType tangent_sphere_type(const Fan& f);

/// `apex`, `fan interior|boundary`, `ray ...` lines, `cone k a11 ...` lines.
std::string write_germ(const Germ& g);

}  // namespace plstab
