#include "doctest.h"
#include "plstab/complex.hpp"
#include "plstab/error.hpp"
#include "support.hpp"

using namespace plstab;
using testing::interval_complex;

namespace {

// A 1D link is a single cycle iff connected with every vertex of degree 2,
// and a single arc iff connected with exactly two vertices of degree 1.
std::map<VertexId, int> degrees(const SubComplex& sc) {
  std::map<VertexId, int> deg;
  for (VertexId v : sc.vertex_ids()) deg[v] = 0;
  for (const auto& e : sc.of_dim(1)) {
    ++deg[e[0]];
    ++deg[e[1]];
  }
  return deg;
}

bool is_cycle(const SubComplex& sc) {
  auto deg = degrees(sc);
  return !deg.empty() && std::all_of(deg.begin(), deg.end(), [](auto& kv) { return kv.second == 2; }) &&
         sc.euler_characteristic() == 0;
}

bool is_arc(const SubComplex& sc) {
  auto deg = degrees(sc);
  int ends = 0;
  for (auto& [v, d] : deg) {
    if (d == 1) ++ends;
    else if (d != 2) return false;
  }
  return ends == 2 && sc.euler_characteristic() == 1;
}

}  // namespace

TEST_CASE("euler characteristic of standard complexes") {
  CHECK(euler_characteristic(testing::tetrahedron_boundary()) == 2);
  CHECK(euler_characteristic(testing::triangle_disk()) == 1);
  CHECK(euler_characteristic(testing::three_cycle()) == 0);
  CHECK(euler_characteristic(testing::square4()) == 1);
}

TEST_CASE("star") {
  const Complex sq = testing::square4();
  CHECK(star(sq, 4).of_dim(2).size() == 4);
  CHECK(star(testing::triangle_disk(), 0).of_dim(2).size() == 1);
  const auto st = star(testing::three_cycle(), 0);
  CHECK(st.of_dim(1).size() == 2);
  CHECK_THROWS_AS(star(sq, 9), Error);
}

TEST_CASE("link") {
  const Complex sq = testing::square4();
  const auto center = link(sq, 4);
  CHECK(center.of_dim(1).size() == 4);
  CHECK(is_cycle(center));
  const auto corner = link(sq, 0);
  CHECK(is_arc(corner));
  const auto end = link(interval_complex(0, 1), 0);
  CHECK(end.dim() == 0);
  CHECK(end.vertex_ids() == std::vector<VertexId>{1});
  CHECK_THROWS_AS(link(sq, 5), Error);
}

TEST_CASE("boundary") {
  CHECK(boundary(testing::triangle_disk()).of_dim(1).size() == 3);
  CHECK(boundary(testing::tetrahedron_boundary()).empty());
  const auto b = boundary(interval_complex(0, 1));
  CHECK(b.dim() == 0);
  CHECK(b.vertex_ids() == std::vector<VertexId>{0, 1});
}

TEST_CASE("links of surface vertices are cycles or arcs") {
  testing::Rng rng(11);
  for (int i = 0; i < 20; ++i) {
    const Complex c = testing::random_square_triangulation(rng, 12);
    for (VertexId v = 0; v < c.vertex_count(); ++v) {
      const auto l = link(c, v);
      if (c.is_boundary_vertex(v)) {
        CHECK(is_arc(l));
      } else {
        CHECK(is_cycle(l));
      }
    }
  }
}

TEST_CASE("euler characteristic is invariant under subdivision") {
  testing::Rng rng(3);
  const std::vector<Complex> seeds{testing::square4(), testing::triangle_disk(), testing::three_cycle(),
                                   interval_complex(0, 1, {Rational(1, 3)}), testing::unit_square_diag()};
  for (int i = 0; i < 100; ++i) {
    Complex c = seeds[static_cast<std::size_t>(i) % seeds.size()];
    const long chi = euler_characteristic(c);
    for (int k = 0; k < 1 + i % 4; ++k) c = testing::random_subdivision(rng, c);
    CHECK(euler_characteristic(c) == chi);
  }
}

TEST_CASE("validation rejects malformed complexes") {
  auto pt = [](long x, long y) { return Point{Rational(x), Rational(y)}; };
  SUBCASE("overlapping triangles") {
    CHECK_THROWS_AS(Complex::create({pt(0, 0), pt(2, 0), pt(0, 2), pt(1, 1), pt(2, 2)}, {{0, 1, 2}, {1, 3, 4}}),
                    Error);
  }
  SUBCASE("hanging vertex") {
    CHECK_THROWS_AS(
        Complex::create({pt(0, 0), pt(2, 0), pt(0, 2), pt(1, 0), pt(1, -1)}, {{0, 1, 2}, {0, 3, 4}, {1, 3, 4}}),
        Error);
  }
  SUBCASE("degenerate simplex") {
    CHECK_THROWS_AS(Complex::create({pt(0, 0), pt(1, 0), pt(2, 0)}, {{0, 1, 2}}), Error);
  }
  SUBCASE("three triangles on one edge") {
    CHECK_THROWS_AS(
        Complex::create({pt(0, 0), pt(1, 0), pt(0, 1), pt(0, -1), pt(5, 5)}, {{0, 1, 2}, {0, 1, 3}, {0, 1, 4}}),
        Error);
  }
  SUBCASE("bowtie is not a manifold") {
    CHECK_THROWS_AS(
        Complex::create({pt(0, 0), pt(1, 0), pt(0, 1), pt(-1, 0), pt(0, -1)}, {{0, 1, 2}, {0, 3, 4}}), Error);
  }
  SUBCASE("unused vertex") {
    CHECK_THROWS_AS(Complex::create({pt(0, 0), pt(1, 0), pt(0, 1), pt(3, 3)}, {{0, 1, 2}}), Error);
  }
  SUBCASE("coincident vertices") {
    CHECK_THROWS_AS(Complex::create({pt(0, 0), pt(1, 0), pt(0, 0)}, {{0, 1}, {1, 2}}), Error);
  }
}

TEST_CASE("disconnected complexes are flagged") {
  auto pt = [](long x) { return Point{Rational(x)}; };
  const Complex c = Complex::create({pt(0), pt(1), pt(2), pt(3)}, {{0, 1}, {2, 3}});
  CHECK_FALSE(c.connected());
  CHECK(testing::square4().connected());
}

TEST_CASE("text format round trip") {
  const std::string text =
      "# square\n"
      "v 1 2/4 0\n"
      "v 0 0 0\n"
      "v 2 0 1\n"
      "s 2 0 1\n";
  const Complex c = parse_complex(text);
  CHECK(c.point(1) == Point{Rational(1, 2), 0});
  const std::string out = write_complex(c);
  CHECK(out == "v 0 0 0\nv 1 1/2 0\nv 2 0 1\ns 0 1 2\n");
  CHECK(write_complex(parse_complex(out)) == out);
  CHECK(parse_complex(out) == c);

  testing::Rng rng(5);
  for (int i = 0; i < 20; ++i) {
    const Complex r = testing::random_square_triangulation(rng, 10);
    const std::string w = write_complex(r);
    CHECK(parse_complex(w) == r);
    CHECK(write_complex(parse_complex(w)) == w);
  }
}

TEST_CASE("text format errors") {
  CHECK_THROWS_AS(parse_complex("v 0 0\nv 2 1\ns 0 2\n"), Error);
  CHECK_THROWS_AS(parse_complex("v 0 0\nv 1 1 2\ns 0 1\n"), Error);
  CHECK_THROWS_AS(parse_complex("x 0\n"), Error);
  CHECK_THROWS_AS(parse_complex("v 0 a\n"), Error);
  CHECK_THROWS_AS(parse_complex("v 0 0\nv 1 1\ns 0 0\n"), Error);
}
