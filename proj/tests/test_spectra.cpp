#include <doctest.h>

#include <cmath>
#include <string>
#include <vector>

#include "kcube/complex.hpp"
#include "kcube/covers.hpp"
#include "kcube/digraph.hpp"
#include "kcube/errors.hpp"
#include "kcube/fixtures.hpp"
#include "kcube/kgraph.hpp"
#include "kcube/spectra.hpp"
#include "kcube/structures.hpp"

using namespace kcube;

namespace {

constexpr double kTol = 1e-9;

ColoredDigraph preset_digraph(const std::string& name) {
  return digraph_from_complex(
      build_one_vertex_complex(preset_structure(name)));
}

IntMatrix square_matrix(const std::vector<std::vector<long long>>& rows) {
  IntMatrix m(static_cast<int>(rows.size()));
  for (int r = 0; r < m.n; ++r)
    for (int c = 0; c < m.n; ++c) m.at(r, c) = rows[r][c];
  return m;
}

// Squared cycle on n vertices: i joined to i +- 1 and i +- 2, 4-regular.
IntMatrix squared_cycle(int n) {
  IntMatrix m(n);
  for (int i = 0; i < n; ++i) {
    m.at(i, (i + 1) % n) += 1;
    m.at(i, (i + n - 1) % n) += 1;
    m.at(i, (i + 2) % n) += 1;
    m.at(i, (i + n - 2) % n) += 1;
  }
  return m;
}

// Directed single-color cycle on n vertices.
ColoredDigraph directed_cycle(int n) {
  std::vector<DigraphEdge> edges;
  for (int i = 0; i < n; ++i)
    edges.push_back({i, (i + 1) % n, 1, "e" + std::to_string(i)});
  return ColoredDigraph(1, n, edges, {});
}

} // namespace

TEST_CASE("eigenvalues of small symmetric matrices") {
  std::vector<double> swap2 = symmetric_eigenvalues(
      square_matrix({{0, 2}, {2, 0}}), kTol);
  REQUIRE(swap2.size() == 2);
  CHECK(swap2[0] == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(swap2[1] == doctest::Approx(-2.0).epsilon(1e-12));

  std::vector<double> id3 = symmetric_eigenvalues(
      square_matrix({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}), kTol);
  for (double v : id3) CHECK(v == doctest::Approx(1.0).epsilon(1e-12));

  std::vector<double> scalar = symmetric_eigenvalues(
      square_matrix({{6}}), kTol);
  REQUIRE(scalar.size() == 1);
  CHECK(scalar[0] == 6.0);

  std::vector<double> zero = symmetric_eigenvalues(IntMatrix(2), kTol);
  CHECK(zero == std::vector<double>{0.0, 0.0});

  CHECK_THROWS_AS(
      symmetric_eigenvalues(square_matrix({{0, 1}, {2, 0}}), kTol),
      InputError);
}

TEST_CASE("spectrum of the order-25 preset matrix") {
  IntMatrix m = preset_matrix25();
  std::vector<double> eig = symmetric_eigenvalues(m, kTol);
  REQUIRE(eig.size() == 25);
  for (size_t i = 0; i + 1 < eig.size(); ++i) CHECK(eig[i] >= eig[i + 1]);
  CHECK(eig[0] == doctest::Approx(6.0).epsilon(1e-9));
  CHECK(eig[1] == doctest::Approx(1.0 + std::sqrt(5.0)).epsilon(1e-9));
  CHECK(eig[1] <= 3.24);
  for (double v : eig) CHECK(std::abs(v) <= 6.0 + 1e-9);

  long long trace = 0;
  for (int i = 0; i < m.n; ++i) trace += m.at(i, i);
  double sum = 0;
  for (double v : eig) sum += v;
  CHECK(sum == doctest::Approx(static_cast<double>(trace)).epsilon(1e-7));
}

TEST_CASE("eigenvalues are invariant under vertex relabeling") {
  IntMatrix m = preset_matrix25();
  IntMatrix p(m.n);
  auto perm = [&](int i) { return (7 * i + 3) % 25; };
  for (int r = 0; r < m.n; ++r)
    for (int c = 0; c < m.n; ++c) p.at(perm(r), perm(c)) = m.at(r, c);
  std::vector<double> a = symmetric_eigenvalues(m, kTol);
  std::vector<double> b = symmetric_eigenvalues(p, kTol);
  REQUIRE(a.size() == b.size());
  for (size_t i = 0; i < a.size(); ++i)
    CHECK(a[i] == doctest::Approx(b[i]).epsilon(1e-9));
}

TEST_CASE("spectral gap verdicts in both modes") {
  SUBCASE("two-sheet coordinate matrix has no nontrivial spectrum") {
    std::vector<ColorVerdict> vs = ramanujan_check(
        {square_matrix({{0, 6}, {6, 0}})}, RamanujanMode::cubical, kTol);
    REQUIRE(vs.size() == 1);
    CHECK(vs[0].color == 1);
    CHECK(vs[0].L == 6);
    CHECK(!vs[0].has_lambda2);
    CHECK(vs[0].ramanujan);
    CHECK(vs[0].bound ==
          doctest::Approx(2.0 * std::sqrt(5.0)).epsilon(1e-12));
  }
  SUBCASE("order-25 preset passes in both modes") {
    IntMatrix m = preset_matrix25();
    for (RamanujanMode mode :
         {RamanujanMode::cubical, RamanujanMode::kgraph}) {
      std::vector<ColorVerdict> vs = ramanujan_check({m}, mode, kTol);
      REQUIRE(vs.size() == 1);
      CHECK(vs[0].L == 6);
      CHECK(vs[0].has_lambda2);
      CHECK(vs[0].lambda2 ==
            doctest::Approx(1.0 + std::sqrt(5.0)).epsilon(1e-9));
      CHECK(vs[0].ramanujan);
    }
  }
  SUBCASE("a squared 24-cycle fails the bound in both modes") {
    IntMatrix m = squared_cycle(24);
    double expected = 2.0 * std::cos(M_PI / 12.0) +
                      2.0 * std::cos(M_PI / 6.0);
    for (RamanujanMode mode :
         {RamanujanMode::cubical, RamanujanMode::kgraph}) {
      std::vector<ColorVerdict> vs = ramanujan_check({m}, mode, kTol);
      REQUIRE(vs.size() == 1);
      CHECK(vs[0].L == 4);
      REQUIRE(vs[0].has_lambda2);
      CHECK(vs[0].lambda2 == doctest::Approx(expected).epsilon(1e-9));
      CHECK(vs[0].lambda2 > vs[0].bound);
      CHECK(!vs[0].ramanujan);
    }
  }
  SUBCASE("irregular or asymmetric input is rejected") {
    CHECK_THROWS_AS(ramanujan_check({square_matrix({{0, 1}, {1, 2}})},
                                    RamanujanMode::cubical, kTol),
                    InputError);
    CHECK_THROWS_AS(ramanujan_check({square_matrix({{1, 1}, {0, 2}})},
                                    RamanujanMode::kgraph, kTol),
                    InputError);
  }
}

TEST_CASE("spectral radius vector of the presets") {
  std::vector<double> g1 =
      spectral_radius_vector(coordinate_matrices(preset_digraph("gamma1")),
                             kTol);
  REQUIRE(g1.size() == 3);
  for (double r : g1) CHECK(r == doctest::Approx(6.0).epsilon(1e-12));

  std::vector<double> g2 =
      spectral_radius_vector(coordinate_matrices(preset_digraph("gamma2")),
                             kTol);
  REQUIRE(g2.size() == 3);
  CHECK(g2[0] == doctest::Approx(4.0).epsilon(1e-12));
  CHECK(g2[1] == doctest::Approx(6.0).epsilon(1e-12));
  CHECK(g2[2] == doctest::Approx(8.0).epsilon(1e-12));

  std::vector<double> off =
      spectral_radius_vector({square_matrix({{0, 2}, {2, 0}})}, kTol);
  REQUIRE(off.size() == 1);
  CHECK(off[0] == doctest::Approx(2.0).epsilon(1e-12));
}

TEST_CASE("period lattice of a one-vertex complex is the full lattice") {
  PeriodLattice lat = period_lattice(preset_digraph("gamma1"), 4);
  CHECK(lat.k == 3);
  CHECK(lat.max_degree_sum == 4);
  CHECK(lat.lower_approximation);
  std::vector<std::vector<long long>> identity = {
      {1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
  CHECK(lat.basis == identity);
  CHECK(!lat.generators.empty());
  for (const PeriodLattice::Generator& g : lat.generators) {
    CHECK(g.diff.size() == 3);
    CHECK(!g.cycle_a.empty());
    CHECK(!g.cycle_b.empty());
  }
}

TEST_CASE("period lattice of a double cover keeps only even totals") {
  KCubeStructure s = preset_structure("free_product:2,2");
  CubeComplex cover = double_cover(build_one_vertex_complex(s));
  PeriodLattice lat = period_lattice(digraph_from_complex(cover), 4);
  std::vector<std::vector<long long>> expected = {{1, 1}, {0, 2}};
  CHECK(lat.basis == expected);
}

TEST_CASE("period lattice of directed cycles") {
  ColoredDigraph c6 = directed_cycle(6);
  REQUIRE(strongly_connected(c6));
  // No closed cycle fits under the bound, so the approximation is trivial.
  CHECK(period_lattice(c6, 4).basis.empty());
  std::vector<std::vector<long long>> six = {{6}};
  CHECK(period_lattice(c6, 6).basis == six);
  CHECK(period_lattice(c6, 12).basis == six);

  ColoredDigraph one_way(1, 2, {{0, 1, 1, "e0"}}, {});
  CHECK_THROWS_AS(period_lattice(one_way, 4), MathError);
}

TEST_CASE("factor type invariant from radii and lattice") {
  PeriodLattice even;
  even.k = 2;
  even.basis = {{1, 1}, {0, 2}};

  SUBCASE("equal integer radii give exact powers") {
    CHECK(factor_type_lambda({4.0, 4.0}, even, kTol) == 1.0 / 16.0);
    for (int L = 1; L <= 10; ++L) {
      double rho = 2.0 * L;
      CHECK(factor_type_lambda({rho, rho}, even, kTol) == 1.0 / (rho * rho));
    }
  }
  SUBCASE("full lattice with equal radii") {
    PeriodLattice full;
    full.k = 3;
    full.basis = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
    CHECK(factor_type_lambda({6.0, 6.0, 6.0}, full, kTol) == 1.0 / 6.0);
  }
  SUBCASE("zero row sums leave the invariant trivial") {
    PeriodLattice skew;
    skew.k = 2;
    skew.basis = {{1, -1}};
    CHECK(factor_type_lambda({4.0, 4.0}, skew, kTol) == 1.0);
  }
  SUBCASE("commensurable distinct radii") {
    PeriodLattice full;
    full.k = 2;
    full.basis = {{1, 0}, {0, 1}};
    CHECK(factor_type_lambda({4.0, 8.0}, full, kTol) ==
          doctest::Approx(0.5).epsilon(1e-9));
  }
  SUBCASE("incommensurable radii give a dense subgroup") {
    PeriodLattice full;
    full.k = 2;
    full.basis = {{1, 0}, {0, 1}};
    CHECK(factor_type_lambda({2.0, 3.0}, full, kTol) == 1.0);
  }
  SUBCASE("empty basis") {
    PeriodLattice trivial;
    trivial.k = 1;
    CHECK(factor_type_lambda({2.0}, trivial, kTol) == 1.0);
  }
  SUBCASE("input validation") {
    CHECK_THROWS_AS(factor_type_lambda({4.0}, even, kTol), InputError);
    CHECK_THROWS_AS(factor_type_lambda({1.0, 4.0}, even, kTol), InputError);
  }
}
