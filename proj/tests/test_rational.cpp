#include "doctest.h"
#include "plstab/error.hpp"
#include "plstab/geometry.hpp"
#include "support.hpp"

using namespace plstab;

TEST_CASE("rational parsing and canonical printing") {
  CHECK(Rational::parse("2/4").str() == "1/2");
  CHECK(Rational::parse("-6/3").str() == "-2");
  CHECK(Rational::parse("0/5").str() == "0");
  CHECK(Rational::parse("17").str() == "17");
  CHECK(Rational(3, -9).str() == "-1/3");
  CHECK_THROWS_AS(Rational::parse("1/0"), Error);
  CHECK_THROWS_AS(Rational::parse("1.5"), Error);
  CHECK_THROWS_AS(Rational::parse("+1"), Error);
  CHECK_THROWS_AS(Rational::parse(""), Error);
  CHECK_THROWS_AS(Rational::parse("1/-2"), Error);
}

TEST_CASE("rational arithmetic stays canonical") {
  testing::Rng rng(7);
  for (int i = 0; i < 500; ++i) {
    const Rational a = testing::random_rational(rng, -5, 5, 97);
    if (a.is_zero()) continue;
    const Rational b = testing::random_rational(rng, 1, 9, 31);
    const Rational q = a / b;
    CHECK(q * (b / a) == Rational(1));
    CHECK(Rational::parse(q.str()) == q);
    // Canonical: gcd(num, den) = 1 and den > 0.
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), q.numerator().get_mpz_t(), q.denominator().get_mpz_t());
    CHECK(g == 1);
    CHECK(q.denominator() > 0);
  }
}

TEST_CASE("floor and ceil") {
  CHECK(Rational(-7, 2).floor() == -4);
  CHECK(Rational(-7, 2).ceil() == -3);
  CHECK(Rational(6, 3).floor() == 2);
  CHECK_THROWS_AS(Rational(0).reciprocal(), Error);
}

TEST_CASE("matrix inverse and scalar detection") {
  const Matrix rot = Matrix::from_rows({{0, -1}, {1, 0}});
  const Matrix inv = *rot.inverse();
  CHECK(rot * inv == Matrix::identity(2));
  CHECK_FALSE(rot.scalar_factor());
  CHECK(*Matrix::scalar(2, 3).scalar_factor() == 3);
  CHECK_FALSE(Matrix::from_rows({{1, 2}, {2, 4}}).inverse());
  CHECK(Matrix::from_rows({{2, 0}, {0, 3}}).determinant() == 6);
}

TEST_CASE("barycentric coordinates and relative measure") {
  const std::vector<Point> tri{Point{0, 0}, Point{1, 0}, Point{0, 1}};
  auto l = barycentric(tri, Point{Rational(1, 4), Rational(1, 4)});
  REQUIRE(l);
  CHECK((*l)[0] == Rational(1, 2));
  CHECK(in_relative_interior(tri, Point{Rational(1, 4), Rational(1, 4)}));
  CHECK_FALSE(in_relative_interior(tri, Point{Rational(1, 2), 0}));
  CHECK(in_closed_simplex(tri, Point{Rational(1, 2), 0}));
  const std::vector<Point> half{Point{0, 0}, Point{1, 0}, Point{Rational(1, 2), Rational(1, 2)}};
  CHECK(relative_measure(tri, half) == Rational(1, 2));
}

TEST_CASE("relative interior predicates") {
  const Point o{0, 0}, x{1, 0}, y{0, 1}, xy{1, 1};
  CHECK(segment_interiors_meet(o, xy, x, y));
  CHECK_FALSE(segment_interiors_meet(o, x, x, xy));
  CHECK(segment_interiors_meet(o, Point{2, 0}, x, Point{3, 0}));
  CHECK_FALSE(segment_interiors_meet(o, x, x, Point{2, 0}));
  const std::vector<Point> t1{o, x, y};
  const std::vector<Point> t2{x, xy, y};
  const std::vector<Point> t3{o, x, xy};
  CHECK_FALSE(triangle_interiors_meet(t1, t2));
  CHECK(triangle_interiors_meet(t1, t3));
  CHECK(segment_meets_triangle_interior(o, xy, t2));
  CHECK_FALSE(segment_meets_triangle_interior(o, x, t2));
  CHECK(segment_meets_triangle_interior(Point{0, Rational(1, 2)}, Point{1, Rational(1, 2)}, t1));
}

TEST_CASE("non-coplanar triangles in space") {
  auto p = [](long a, long b, long c) { return Point{Rational(a), Rational(b), Rational(c)}; };
  const std::vector<Point> flat{p(-2, -2, 0), p(2, -2, 0), p(0, 2, 0)};
  const std::vector<Point> piercing{p(0, -1, -1), p(0, 1, -1), p(0, 0, 1)};
  const std::vector<Point> above{p(0, -1, 1), p(0, 1, 1), p(0, 0, 2)};
  CHECK(triangle_interiors_meet(flat, piercing));
  CHECK_FALSE(triangle_interiors_meet(flat, above));
}
