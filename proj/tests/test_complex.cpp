#include <doctest.h>

#include <set>
#include <string>
#include <utility>
#include <vector>

#include "kcube/complex.hpp"
#include "kcube/errors.hpp"
#include "kcube/fixtures.hpp"
#include "kcube/structures.hpp"

using namespace kcube;

TEST_CASE("one-vertex complex shape") {
  CubeComplex torus = build_one_vertex_complex(preset_structure("torus"));
  CHECK(torus.k() == 2);
  CHECK(torus.num_vertices() == 1);
  CHECK(torus.geom_edges().size() == 2);
  CHECK(torus.dedges().size() == 4);
  CHECK(torus.squares().size() == 1);
  CHECK(torus.connected());

  CubeComplex g1 = build_one_vertex_complex(preset_structure("gamma1"));
  CHECK(g1.geom_edges().size() == 9);
  CHECK(g1.dedges().size() == 18);
  CHECK(g1.squares().size() == 27);

  CubeComplex g2 = build_one_vertex_complex(preset_structure("gamma2"));
  CHECK(g2.geom_edges().size() == 9);
  CHECK(g2.dedges().size() == 18);
  CHECK(g2.squares().size() == 26);
}

TEST_CASE("directed traversals pair up under reversal") {
  CubeComplex c = build_one_vertex_complex(preset_structure("vh44"));
  for (int d = 0; d < static_cast<int>(c.dedges().size()); ++d) {
    int r = CubeComplex::reverse(d);
    CHECK(CubeComplex::reverse(r) == d);
    CHECK(c.color(r) == c.color(d));
    CHECK(c.dedges()[d].origin == c.dedges()[r].terminus);
    CHECK(c.dedges()[d].terminus == c.dedges()[r].origin);
    CHECK(c.dedges()[d].geom == c.dedges()[r].geom);
    CHECK(c.dedges()[d].positive != c.dedges()[r].positive);
  }
  // Downstairs labels of a one-vertex complex are the letters themselves.
  CHECK(c.base(c.dedge_by_label("a1")) == "a1");
  CHECK_THROWS_AS(c.dedge_by_label("nope"), InputError);
}

TEST_CASE("exchange map of the complex matches the presentation") {
  KCubeStructure s = preset_structure("gamma1");
  CubeComplex c = build_one_vertex_complex(s);
  for (int x : s.alphabet(1)) {
    for (int y : s.alphabet(2)) {
      auto [bp, ap] = s.phi_letters(x, y);
      auto im = c.phi(c.dedge_by_label(s.name(x)), c.dedge_by_label(s.name(y)));
      CHECK(c.label(im.first) == s.name(bp));
      CHECK(c.label(im.second) == s.name(ap));
    }
  }
  int a1 = c.dedge_by_label("a1");
  CHECK_THROWS_AS(c.phi(a1, a1), InputError);
}

TEST_CASE("square orbit and lookup") {
  CubeComplex c = build_one_vertex_complex(preset_structure("vh44"));
  for (int i = 0; i < static_cast<int>(c.squares().size()); ++i) {
    for (const ComplexSquare& reading : c.orbit(c.squares()[i])) {
      CHECK(c.find_square(reading) == i);
      CHECK(c.canonical(reading) == c.canonical(c.squares()[i]));
    }
  }
  CHECK(c.find_square({0, 0, 0, 0}) == -1);
}

TEST_CASE("cube counts of the presets") {
  CubeComplex g1 = build_one_vertex_complex(preset_structure("gamma1"));
  CHECK(enumerate_cubes(g1) == 27);
  CHECK(g1.cubes().size() == 27);
  CubeComplex g2 = build_one_vertex_complex(preset_structure("gamma2"));
  CHECK(enumerate_cubes(g2) == 24);
  // k = 2 has no 3-cells at all.
  CubeComplex torus = build_one_vertex_complex(preset_structure("torus"));
  CHECK(enumerate_cubes(torus) == 0);
  CubeComplex vh = build_one_vertex_complex(preset_structure("vh44"));
  CHECK(enumerate_cubes(vh) == 0);
}

TEST_CASE("cube faces are genuine squares covering all three color pairs") {
  CubeComplex g1 = build_one_vertex_complex(preset_structure("gamma1"));
  enumerate_cubes(g1);
  for (const ComplexCube& cube : g1.cubes()) {
    CHECK(g1.color(cube.corner[0]) == 1);
    CHECK(g1.color(cube.corner[1]) == 2);
    CHECK(g1.color(cube.corner[2]) == 3);
    std::multiset<std::pair<int, int>> pairs;
    for (int f : cube.faces) {
      REQUIRE(f >= 0);
      REQUIRE(f < static_cast<int>(g1.squares().size()));
      const ComplexSquare& sq = g1.squares()[f];
      pairs.insert({g1.color(sq.a), g1.color(sq.b)});
    }
    // Two opposite faces per color pair.
    CHECK(pairs.count({1, 2}) == 2);
    CHECK(pairs.count({1, 3}) == 2);
    CHECK(pairs.count({2, 3}) == 2);
  }
}

TEST_CASE("from_parts validates boundaries") {
  // A two-vertex circle in each color, then a square that cannot close up.
  std::vector<GeomSpec> geoms = {
      {0, 1, 1, "x^1", "X^1", "x", "X"},
      {1, 0, 1, "x^2", "X^2", "x", "X"},
      {0, 1, 2, "y^1", "Y^1", "y", "Y"},
      {1, 0, 2, "y^2", "Y^2", "y", "Y"},
  };
  // x^1 ends at vertex 1, so the b edge must start there; y^1 does not.
  CHECK_THROWS_AS(CubeComplex::from_parts(2, 2, geoms, {{0, 4, 4, 0}}),
                  InputError);
  // Valid closing: x^1 (0->1), y^2 (1->0) = b; b' = y^1 (0->1), a' = x^2.
  CubeComplex ok = CubeComplex::from_parts(2, 2, geoms, {{0, 6, 4, 2}});
  CHECK(ok.num_vertices() == 2);
  CHECK(ok.connected());
}

TEST_CASE("missing squares surface as math errors") {
  // Only one of the four vh44 squares: most exchanges are uncovered.
  AlphabetSpec as{1, {"a1", "a2", "a3", "a4"}, {{"a1", "a3"}, {"a2", "a4"}}};
  AlphabetSpec bs{2, {"b1", "b2", "b3", "b4"}, {{"b1", "b3"}, {"b2", "b4"}}};
  KCubeStructure partial =
      KCubeStructure::from_squares(2, {as, bs}, {{"a1", "b1", "b4", "a3"}});
  CubeComplex c = build_one_vertex_complex(partial);
  CHECK_THROWS_AS(c.phi(c.dedge_by_label("a2"), c.dedge_by_label("b1")),
                  MathError);
}
