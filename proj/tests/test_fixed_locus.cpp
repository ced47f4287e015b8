#include <algorithm>
#include <set>

#include "doctest.h"
#include "plstab/error.hpp"
#include "plstab/fixed_locus.hpp"
#include "oracles.hpp"

using namespace plstab;
using testing::Rng;

namespace {

std::vector<Point> ring(long r) {
  const Rational q(r);
  return {{q, 0}, {q, q}, {0, q}, {-q, q}, {-q, 0}, {-q, -q}, {0, -q}, {q, -q}};
}

void check_against_brute(const PLMap2D& f) { CHECK(testing::fixed_locus_matches_brute(f)); }

}  // namespace

using testing::annulus_twist;
using testing::as_intervals;
using testing::preserves;
using testing::radial_map;
using testing::unit_square_rotation;
using testing::vertex_set;

TEST_CASE("fixed subcomplex examples") {
  const FixedLocus id = fixed_subcomplex(PLMap2D::identity(testing::square4()));
  CHECK(id.everything);
  CHECK(id.subcomplex.maximal().size() == 4);
  CHECK_THROWS_AS(canonical_invariant(id), Error);

  const FixedLocus rot = fixed_subcomplex(testing::quarter_rotation());
  CHECK(rot.subcomplex.points == std::vector<Point>{{0, 0}});
  CHECK(rot.subcomplex.dim() == 0);
  const auto nr = canonical_invariant(rot);
  CHECK(nr.derivation_depth == 1);
  CHECK(vertex_set(nr.n_f) == std::set<Point>{{0, 0}});

  const PLMap2D lh = testing::left_half_map();
  const FixedLocus left = fixed_subcomplex(lh);
  CHECK(left.subcomplex.dim() == 2);
  for (const Simplex& m : left.subcomplex.maximal()) {
    CHECK(m.dim() == 2);
    for (auto v : m.vertices()) CHECK(left.subcomplex.points[v][0] <= Rational(1, 2));
  }
  Rational area = 0;
  for (const Simplex& m : left.subcomplex.of_dim(2)) {
    std::vector<Point> t;
    for (auto v : m.vertices()) t.push_back(left.subcomplex.points[v]);
    area += twice_signed_area(t).abs() / 2;
  }
  CHECK(area == Rational(1, 2));
  CHECK(vertex_set(left.frontier) == std::set<Point>{{Rational(1, 2), 0}, {Rational(1, 2), Rational(1, 2)}, {Rational(1, 2), 1}});
  const auto nl = canonical_invariant(left);
  CHECK(nl.derivation_depth == 2);
  CHECK(vertex_set(nl.n_f) == std::set<Point>{{Rational(1, 2), 0}, {Rational(1, 2), 1}});
  check_against_brute(lh);
  check_against_brute(testing::shear_map());
}

TEST_CASE("empty fixed set") {
  // Circle rotation has no fixed points.
  const FixedLocus cyc = fixed_subcomplex(testing::cycle_rotation());
  CHECK(cyc.subcomplex.empty());
  CHECK_THROWS_AS(canonical_invariant(cyc), Error);
}

TEST_CASE("an interior circle of an annulus") {
  const PLMap2D f = annulus_twist();
  CHECK(euler_characteristic(f.base()) == 0);
  const FixedLocus fl = fixed_subcomplex(f);
  CHECK(fl.subcomplex.dim() == 1);
  const auto nf = canonical_invariant(fl);
  CHECK(nf.derivation_depth == 1);
  CHECK(nf.n_f.of_dim(1).size() == 8);
  const auto r4 = ring(4);
  CHECK(vertex_set(nf.n_f) == std::set<Point>(r4.begin(), r4.end()));
  check_against_brute(f);
}

TEST_CASE("fixed sets of interval maps match the 1D solver") {
  Rng rng(61);
  for (int i = 0; i < 200; ++i) {
    const PLMap1D f = i % 2 ? testing::random_map1d(rng, 10) : testing::random_map1d_with_identity_prefix(rng, 10);
    const PLMap2D g = PLMap2D::from_interval_map(testing::interval_complex(f.left(), f.right()), f);
    const FixedLocus fl = fixed_subcomplex(g);
    CHECK(as_intervals(fl.subcomplex) == fixed_set_1d(f));
    CHECK(as_intervals(fl.subcomplex) == testing::brute_fixed_set_1d(f));
    if (!fl.everything) {
      const auto nf = canonical_invariant(fl);
      CHECK(nf.n_f.dim() == 0);
      CHECK(is_closed_manifold(nf.n_f));
    }
  }
}

TEST_CASE("fixed sets of constructed surface maps match the brute-force solver") {
  Rng rng(62);
  std::vector<PLMap2D> maps{testing::quarter_rotation(), testing::shear_map(), testing::left_half_map(), radial_map(),
                            annulus_twist(), compose2d(radial_map(), testing::quarter_rotation())};
  while (maps.size() < 30) maps.push_back(testing::random_square_map(rng, 10));
  const PLMap2D rot = unit_square_rotation();
  while (maps.size() < 40) maps.push_back(compose2d(rot, testing::random_square_map(rng, 8)));
  while (maps.size() < 50) {
    const PLMap2D a = testing::random_square_map(rng, 8);
    const PLMap2D b = testing::random_square_map(rng, 8);
    maps.push_back(compose2d(a, inverse2d(b)));
  }
  for (const auto& f : maps) check_against_brute(f);
}

TEST_CASE("N_f is preserved by symmetries preserving Fix") {
  const PLMap2D r = testing::quarter_rotation();
  const PLMap2D r2 = compose2d(r, r);
  const PLMap2D r3 = compose2d(r, r2);
  const std::vector<std::pair<PLMap2D, PLMap2D>> syms{{r, r3}, {r2, r2}, {r3, r}};
  int tested = 0;
  for (const PLMap2D& f : {radial_map(), r, r2, compose2d(radial_map(), r)}) {
    const FixedLocus fl = fixed_subcomplex(f);
    const auto nf = canonical_invariant(fl);
    for (const auto& [g, ginv] : syms) {
      if (!preserves(g, ginv, fl.subcomplex)) continue;
      ++tested;
      CHECK(preserves(g, ginv, nf.n_f));
    }
  }
  CHECK(tested == 12);

  // Conjugation moves N_f along: N(g f g^-1) = g(N(f)).
  Rng rng(63);
  const PLMap2D g = unit_square_rotation();
  const PLMap2D ginv = inverse2d(g);
  for (int i = 0; i < 20; ++i) {
    const PLMap2D f = testing::random_square_map(rng, 8);
    const FixedLocus fl = fixed_subcomplex(f);
    if (fl.everything) continue;
    const auto nf = canonical_invariant(fl);
    const auto nc = canonical_invariant(fixed_subcomplex(compose2d(g, compose2d(f, ginv))));
    std::set<Point> moved;
    for (const Point& p : vertex_set(nf.n_f)) moved.insert(g(p));
    if (nf.n_f.dim() == 0) CHECK(vertex_set(nc.n_f) == moved);
    CHECK(nc.derivation_depth == nf.derivation_depth);
    for (const Point& p : moved) CHECK(realization_contains(nc.n_f, p));
  }
}

TEST_CASE("fixed loci grow under powers") {
  Rng rng(64);
  for (int i = 0; i < 15; ++i) {
    const PLMap2D f = i % 3 ? testing::random_square_map(rng, 8) : compose2d(unit_square_rotation(), testing::random_square_map(rng, 6));
    const FixedLocus fl = fixed_subcomplex(f);
    PLMap2D g = f;
    for (int k = 2; k <= 3; ++k) {
      g = compose2d(f, g);
      const FixedLocus gl = fixed_subcomplex(g);
      for (const Simplex& s : fl.subcomplex.simplices) {
        Point c = Point::zero(2);
        for (auto v : s.vertices()) {
          CHECK(realization_contains(gl.subcomplex, fl.subcomplex.points[v]));
          c = c + Rational(1, static_cast<long>(s.size())) * fl.subcomplex.points[v];
        }
        CHECK(realization_contains(gl.subcomplex, c));
      }
    }
  }
}

TEST_CASE("Fuller search") {
  const FullerReport rot = fuller_search(testing::quarter_rotation(), 4);
  REQUIRE(rot.hit);
  CHECK(rot.hit->k == 1);
  CHECK(rot.hit->witness_cell == std::vector<Point>{{0, 0}});
  CHECK(rot.euler_characteristic == 1);

  const PLMap2D cyc = testing::cycle_rotation();
  const FullerReport c3 = fuller_search(cyc, 3);
  REQUIRE(c3.hit);
  CHECK(c3.hit->k == 3);
  CHECK(c3.euler_characteristic == 0);
  CHECK_FALSE(fuller_search(cyc, 2).hit);

  const FullerReport id = fuller_search(PLMap2D::identity(testing::square4()), 1);
  REQUIRE(id.hit);
  CHECK(id.hit->k == 1);
  CHECK_THROWS_AS(fuller_search(cyc, 0), Error);
}

TEST_CASE("fixed loci round-trip through the complex text format") {
  Rng rng(65);
  std::vector<PLMap2D> maps{testing::quarter_rotation(), testing::left_half_map(), testing::annulus_twist(),
                            testing::cycle_rotation()};
  for (int i = 0; i < 10; ++i) maps.push_back(testing::random_square_map(rng, 8));
  for (const auto& f : maps) {
    const SubComplex s = fixed_subcomplex(f).subcomplex;
    // Point loci are not manifold complexes, so read back as raw records.
    const ComplexRecords r = parse_complex_records(write_records(s.points, s.maximal()));
    const SubComplex back = SubComplex::closure(r.points, r.simplices);
    CHECK(back.points == s.points);
    CHECK(back.simplices == s.simplices);
  }
}
