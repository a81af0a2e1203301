#include <doctest.h>

#include <algorithm>
#include <array>
#include <set>
#include <string>
#include <vector>

#include "kcube/errors.hpp"
#include "kcube/fixtures.hpp"
#include "kcube/structures.hpp"

using namespace kcube;

namespace {

// Two alphabets with two letter pairs each; enough room for mutants.
KCubeStructure tiny(const std::vector<std::array<std::string, 4>>& squares) {
  AlphabetSpec xs{1, {"x1", "x2", "x3", "x4"}, {{"x1", "x3"}, {"x2", "x4"}}};
  AlphabetSpec ys{2, {"y1", "y2", "y3", "y4"}, {{"y1", "y3"}, {"y2", "y4"}}};
  return KCubeStructure::from_squares(2, {xs, ys}, squares);
}

} // namespace

TEST_CASE("letter table and inverse involution") {
  KCubeStructure g = preset_structure("gamma1");
  CHECK(g.k() == 3);
  CHECK(g.letter_count() == 18);
  for (int c = 1; c <= 3; ++c) CHECK(g.alphabet(c).size() == 6);
  for (int x = 0; x < g.letter_count(); ++x) {
    CHECK(g.inverse(g.inverse(x)) == x);
    CHECK(g.inverse(x) != x);
    CHECK(g.color(g.inverse(x)) == g.color(x));
  }
  CHECK(g.require("a1") == g.find("a1"));
  CHECK(g.find("a2") == -1);
  CHECK_THROWS_AS(g.require("a2"), InputError);
  CHECK(g.name(g.inverse(g.require("a1"))) == "a13");
  CHECK(g.name(g.inverse(g.require("b10"))) == "b22");
}

TEST_CASE("orbit gives the four corner readings and canonical is stable") {
  KCubeStructure g = preset_structure("vh44");
  const SquareRelation& s = g.squares()[0];
  auto orbit = g.orbit(s);
  // Each reading must describe the same geometric square, so canonical
  // agrees across the orbit and the orbit of any reading is the same set.
  SquareRelation canon = g.canonical(s);
  for (const SquareRelation& r : orbit) {
    CHECK(g.canonical(r) == canon);
    CHECK(g.color(r.a) == 1);
    CHECK(g.color(r.b) == 2);
  }
  std::set<SquareRelation> readings(orbit.begin(), orbit.end());
  CHECK(readings.size() == 4);
  CHECK(readings.count(canon) == 1);
  // The canonical representative is the least reading.
  for (const SquareRelation& r : orbit) CHECK(!(r < canon));
}

TEST_CASE("relator to square conversion") {
  // The relator a1 b2 a17 b22 closes up a square whose corner paths are
  // a1.b2 and b10.a5.
  KCubeStructure g = preset_structure("gamma1");
  SquareRelation expect{g.require("a1"), g.require("b2"), g.require("b10"),
                        g.require("a5")};
  bool found = false;
  for (const SquareRelation& s : g.squares())
    if (g.canonical(s) == g.canonical(expect)) found = true;
  CHECK(found);
  auto [bp, ap] = g.phi_letters(g.require("a1"), g.require("b2"));
  CHECK(g.name(bp) == "b10");
  CHECK(g.name(ap) == "a5");
}

TEST_CASE("round trip through relators") {
  for (const char* name : {"gamma1", "gamma2", "vh44", "torus"}) {
    KCubeStructure g = preset_structure(name);
    auto relators = g.to_relators();
    CHECK(relators.size() == g.squares().size());
    // Rebuilding from the exported relators reproduces the square set.
    std::vector<AlphabetSpec> alphabets;
    for (int c = 1; c <= g.k(); ++c) {
      AlphabetSpec spec;
      spec.color = c;
      for (int x : g.alphabet(c)) {
        spec.letters.push_back(g.name(x));
        if (x < g.inverse(x))
          spec.inverses.push_back({g.name(x), g.name(g.inverse(x))});
      }
      alphabets.push_back(spec);
    }
    KCubeStructure h = KCubeStructure::from_relators(g.k(), alphabets, relators);
    CHECK(h.canonical_square_names() == g.canonical_square_names());
  }
}

TEST_CASE("defining axioms pass on all presets") {
  for (const char* name :
       {"gamma1", "gamma2", "torus", "vh44", "free_product:2,3"}) {
    ValidationReport rep = validate_structure(preset_structure(name));
    CHECK_MESSAGE(rep.all_pass(), name);
    CHECK(rep.find("involution") != nullptr);
    CHECK(rep.find("generation") != nullptr);
    CHECK(rep.find("products") != nullptr);
    CHECK(rep.find("no_2_torsion") != nullptr);
  }
}

TEST_CASE("square counts of the embedded presets") {
  CHECK(preset_structure("gamma1").squares().size() == 27);
  CHECK(preset_structure("gamma2").squares().size() == 26);
  CHECK(preset_structure("vh44").squares().size() == 4);
  CHECK(preset_structure("torus").squares().size() == 1);
  KCubeStructure g2 = preset_structure("gamma2");
  CHECK(g2.alphabet(1).size() == 4);
  CHECK(g2.alphabet(2).size() == 6);
  CHECK(g2.alphabet(3).size() == 8);
}

TEST_CASE("incomplete product coverage is reported") {
  // Four letter pairs but a single square: most bicolored products have no
  // relation, which the products condition must flag.
  KCubeStructure s = tiny({{"x1", "y1", "y1", "x1"}});
  ValidationReport rep = validate_structure(s);
  CHECK(!rep.all_pass());
  const CheckItem* item = rep.find("products");
  REQUIRE(item != nullptr);
  CHECK(!item->pass);
  CHECK(!item->witnesses.empty());
}

TEST_CASE("a square forcing (xy)^2 = 1 is reported") {
  KCubeStructure s = tiny({{"x1", "y1", "y3", "x3"},
                           {"x1", "y2", "y4", "x3"},
                           {"x2", "y1", "y3", "x4"},
                           {"x2", "y2", "y4", "x4"}});
  ValidationReport rep = validate_structure(s);
  const CheckItem* item = rep.find("no_2_torsion");
  REQUIRE(item != nullptr);
  CHECK(!item->pass);
  CHECK(!item->witnesses.empty());
}

TEST_CASE("construction rejects malformed input") {
  AlphabetSpec xs{1, {"x1", "x2"}, {{"x1", "x2"}}};
  AlphabetSpec ys{2, {"y1", "y2"}, {{"y1", "y2"}}};
  // Unknown letter in a square.
  CHECK_THROWS_AS(
      KCubeStructure::from_squares(2, {xs, ys}, {{"x1", "zz", "y1", "x1"}}),
      InputError);
  // The same geometric square twice.
  CHECK_THROWS_AS(KCubeStructure::from_squares(
                      2, {xs, ys},
                      {{"x1", "y1", "y1", "x1"}, {"x2", "y1", "y1", "x2"}}),
                  InputError);
  // A relator whose colors do not alternate.
  CHECK_THROWS_AS(KCubeStructure::from_relators(
                      2, {xs, ys}, {{"x1", "x1", "y1", "y1"}}),
                  InputError);
  // Same-color pair has no exchange.
  KCubeStructure t = preset_structure("torus");
  CHECK_THROWS_AS(t.phi_letters(t.require("a1"), t.require("a2")), InputError);
  // Uncovered pair: x2.y* has no square here.
  AlphabetSpec xs4{1, {"x1", "x2", "x3", "x4"}, {{"x1", "x3"}, {"x2", "x4"}}};
  KCubeStructure u =
      KCubeStructure::from_squares(2, {xs4, ys}, {{"x1", "y1", "y1", "x1"}});
  CHECK_THROWS_AS(u.phi_letters(u.require("x2"), u.require("y1")), MathError);
}

TEST_CASE("arithmetic family matches the embedded 3-colour preset") {
  // Search a small window of irreducible quadratics and generators; one of
  // them must regenerate the embedded structure exactly.
  KCubeStructure g = preset_structure("gamma1");
  auto target = g.canonical_square_names();
  bool found = false;
  for (int p0 = 1; p0 < 5 && !found; ++p0)
    for (int p1 = 0; p1 < 5 && !found; ++p1)
      for (int d0 = 0; d0 < 5 && !found; ++d0)
        for (int d1 = 0; d1 < 5 && !found; ++d1) {
          try {
            KCubeStructure r = rsv_structure(5, p0, p1, {d0, d1}, {1, 2, 3});
            if (r.canonical_square_names() == target) found = true;
          } catch (const Error&) {
            continue;
          }
        }
  CHECK(found);
}

TEST_CASE("arithmetic family properties for another prime") {
  const int q = 7;
  bool built = false;
  for (int p0 = 1; p0 < q && !built; ++p0)
    for (int p1 = 0; p1 < q && !built; ++p1)
      for (int d0 = 0; d0 < q && !built; ++d0)
        for (int d1 = 0; d1 < q && !built; ++d1) {
          KCubeStructure r = [&]() -> KCubeStructure {
            try {
              return rsv_structure(q, p0, p1, {d0, d1}, {1, 2});
            } catch (const Error&) {
              return preset_structure("torus");
            }
          }();
          if (r.k() != 2 || r.letter_count() != 2 * (q + 1)) continue;
          built = true;
          // q+1 letters per residue class and full VH validity.
          CHECK(r.alphabet(1).size() == static_cast<size_t>(q + 1));
          CHECK(r.alphabet(2).size() == static_cast<size_t>(q + 1));
          CHECK(r.squares().size() ==
                static_cast<size_t>((q + 1) * (q + 1) / 4));
          CHECK(validate_structure(r).all_pass());
        }
  CHECK_MESSAGE(built, "no valid parameters found for q=" << q);
}

TEST_CASE("the smallest odd prime admits no two residue classes") {
  // Classes live mod q-1 = 2 and class 0 is excluded, so only one class
  // remains and every two-class request must be rejected. The field data
  // here is valid: t²+1 is irreducible over F₃ and 1+t generates F₉*.
  CHECK_THROWS_AS(rsv_structure(3, 1, 0, {1, 1}, {1, 2}), InputError);
  CHECK_THROWS_AS(rsv_structure(3, 1, 0, {1, 1}, {1, 3}), InputError);
}

TEST_CASE("arithmetic family rejects bad parameters") {
  CHECK_THROWS_AS(rsv_structure(4, 1, 1, {0, 1}, {1, 2}), InputError);
  CHECK_THROWS_AS(rsv_structure(9, 1, 1, {0, 1}, {1, 2}), InputError);
  // t^2 - 1 is reducible over any field.
  CHECK_THROWS_AS(rsv_structure(5, 4, 0, {0, 1}, {1, 2}), InputError);
  // Residue class 0 is unsupported, as is a repeated class.
  CHECK_THROWS_AS(rsv_structure(5, 2, 0, {0, 1}, {0, 1}), InputError);
  CHECK_THROWS_AS(rsv_structure(5, 2, 0, {0, 1}, {1, 1}), InputError);
  // delta = 1 never generates the multiplicative group.
  CHECK_THROWS_AS(rsv_structure(5, 2, 0, {1, 0}, {1, 2}), InputError);
}

TEST_CASE("free product family shape") {
  KCubeStructure f = free_product_structure({2, 3});
  CHECK(f.k() == 2);
  CHECK(f.alphabet(1).size() == 4);
  CHECK(f.alphabet(2).size() == 6);
  // All commuting squares between geometric generators: 2 * 3 of them.
  CHECK(f.squares().size() == 6);
  CHECK(validate_structure(f).all_pass());
  CHECK_THROWS_AS(free_product_structure({2}), InputError);
  CHECK_THROWS_AS(free_product_structure({0, 2}), InputError);
  // torus is the rank-(1,1) member.
  CHECK(preset_structure("torus").canonical_square_names() ==
        free_product_structure({1, 1}).canonical_square_names());
}
