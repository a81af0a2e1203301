#include <doctest.h>

#include <json.hpp>

#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "kcube.h"

using nlohmann::json;

namespace {

// Adopt a malloc'd string from the library and parse or keep it.
std::string take(char* s) {
  REQUIRE(s != nullptr);
  std::string out(s);
  kc_string_free(s);
  return out;
}

struct StructureGuard {
  kc_structure_t* p = nullptr;
  ~StructureGuard() { kc_structure_free(p); }
};
struct ComplexGuard {
  kc_complex_t* p = nullptr;
  ~ComplexGuard() { kc_complex_free(p); }
};
struct DigraphGuard {
  kc_digraph_t* p = nullptr;
  ~DigraphGuard() { kc_digraph_free(p); }
};
struct MatricesGuard {
  kc_matrices_t* p = nullptr;
  ~MatricesGuard() { kc_matrices_free(p); }
};

} // namespace

TEST_CASE("full pipeline through the C interface") {
  StructureGuard s;
  REQUIRE(kc_structure_preset("gamma1", &s.p) == KCUBE_OK);

  char* text = nullptr;
  int all_pass = 0;
  REQUIRE(kc_structure_validate(s.p, &all_pass, &text) == KCUBE_OK);
  CHECK(all_pass == 1);
  json report = json::parse(take(text));
  CHECK(report["all_pass"] == true);
  CHECK(report["items"].size() == 4);

  REQUIRE(kc_structure_to_json(s.p, &text) == KCUBE_OK);
  std::string sjson = take(text);
  StructureGuard reparsed;
  REQUIRE(kc_structure_from_json(sjson.c_str(), &reparsed.p) == KCUBE_OK);
  REQUIRE(kc_structure_to_json(reparsed.p, &text) == KCUBE_OK);
  CHECK(take(text) == sjson);

  ComplexGuard c;
  REQUIRE(kc_complex_build(s.p, &c.p) == KCUBE_OK);
  long long cubes = -1;
  REQUIRE(kc_complex_enumerate_cubes(c.p, &cubes) == KCUBE_OK);
  CHECK(cubes == 27);
  int nv = 0, conn = 0;
  REQUIRE(kc_complex_num_vertices(c.p, &nv) == KCUBE_OK);
  REQUIRE(kc_complex_connected(c.p, &conn) == KCUBE_OK);
  CHECK(nv == 1);
  CHECK(conn == 1);

  DigraphGuard dg;
  REQUIRE(kc_digraph_from_complex(c.p, &dg.p) == KCUBE_OK);
  REQUIRE(kc_digraph_validate(dg.p, "f1,f2,rigidity,factorization", 3,
                              &all_pass, &text) == KCUBE_OK);
  CHECK(all_pass == 1);
  json axioms = json::parse(take(text));
  CHECK(axioms["all_pass"] == true);

  REQUIRE(kc_digraph_to_json(dg.p, &text) == KCUBE_OK);
  DigraphGuard dg2;
  REQUIRE(kc_digraph_from_json(take(text).c_str(), &dg2.p) == KCUBE_OK);

  REQUIRE(kc_digraph_structure_report(dg.p, &text) == KCUBE_OK);
  json srep = json::parse(take(text));
  CHECK(srep["purely_infinite_eligible"] == true);

  MatricesGuard ms;
  REQUIRE(kc_matrices_from_digraph(dg.p, &ms.p) == KCUBE_OK);
  int count = 0, n = 0;
  REQUIRE(kc_matrices_count(ms.p, &count) == KCUBE_OK);
  REQUIRE(kc_matrices_size(ms.p, &n) == KCUBE_OK);
  CHECK(count == 3);
  CHECK(n == 1);
  REQUIRE(kc_matrices_to_text(ms.p, &text) == KCUBE_OK);
  CHECK(take(text) == "1 3\n6\n6\n6\n");

  REQUIRE(kc_spectral_radius(ms.p, 1e-9, &text) == KCUBE_OK);
  json radii = json::parse(take(text));
  REQUIRE(radii.size() == 3);
  for (const auto& r : radii) CHECK(r.get<double>() == doctest::Approx(6.0));

  REQUIRE(kc_period_lattice(dg.p, 4, &text) == KCUBE_OK);
  json lat = json::parse(take(text));
  json identity = json::array({json::array({1, 0, 0}),
                               json::array({0, 1, 0}),
                               json::array({0, 0, 1})});
  CHECK(lat["basis"] == identity);

  double lambda = 0;
  REQUIRE(kc_factor_type_lambda(dg.p, 4, 1e-9, &lambda) == KCUBE_OK);
  CHECK(lambda == doctest::Approx(1.0 / 6.0).epsilon(1e-12));
}

TEST_CASE("double cover spectra through the C interface") {
  StructureGuard s;
  REQUIRE(kc_structure_preset("gamma1", &s.p) == KCUBE_OK);
  ComplexGuard base, cover;
  REQUIRE(kc_complex_build(s.p, &base.p) == KCUBE_OK);
  REQUIRE(kc_complex_double_cover(base.p, &cover.p) == KCUBE_OK);
  int nv = 0;
  REQUIRE(kc_complex_num_vertices(cover.p, &nv) == KCUBE_OK);
  CHECK(nv == 2);

  DigraphGuard dg;
  REQUIRE(kc_digraph_from_complex(cover.p, &dg.p) == KCUBE_OK);
  MatricesGuard ms;
  REQUIRE(kc_matrices_from_digraph(dg.p, &ms.p) == KCUBE_OK);

  char* text = nullptr;
  REQUIRE(kc_spectra_text(ms.p, 1e-9, &text) == KCUBE_OK);
  std::string block = "6.000000000\n-6.000000000\n";
  CHECK(take(text) == block + block + block);

  REQUIRE(kc_spectra_report(ms.p, "cubical", 1e-9, &text) == KCUBE_OK);
  json spec = json::parse(take(text));
  CHECK(spec["ramanujan"] == true);
  CHECK(spec["colors"][0]["lambda2"].is_null());

  // A cover of a cover is no longer a one-vertex complex.
  ComplexGuard again;
  CHECK(kc_complex_double_cover(cover.p, &again.p) == KCUBE_ERR_INPUT);
}

TEST_CASE("abelian quotient cover through the C interface") {
  StructureGuard s;
  REQUIRE(kc_structure_preset("gamma1", &s.p) == KCUBE_OK);
  char* text = nullptr;
  REQUIRE(kc_solve_abelian(s.p, 5, 2, &text) == KCUBE_OK);
  json sols = json::parse(take(text));
  REQUIRE(sols.size() == 1);
  CHECK(sols[0]["each_alphabet_generates"] == true);
  std::string assignment = sols[0]["assignment"].dump();

  int ok = 0;
  REQUIRE(kc_verify_hom(s.p, assignment.c_str(), &ok, &text) == KCUBE_OK);
  CHECK(ok == 1);
  CHECK(json::parse(take(text)).empty());

  ComplexGuard cover;
  REQUIRE(kc_complex_from_hom(s.p, assignment.c_str(), &cover.p) == KCUBE_OK);
  int nv = 0, conn = 0;
  REQUIRE(kc_complex_num_vertices(cover.p, &nv) == KCUBE_OK);
  REQUIRE(kc_complex_connected(cover.p, &conn) == KCUBE_OK);
  CHECK(nv == 25);
  CHECK(conn == 1);
  long long cubes = 0;
  REQUIRE(kc_complex_enumerate_cubes(cover.p, &cubes) == KCUBE_OK);
  CHECK(cubes == 27 * 25);

  // A failing assignment verifies with witnesses but does not build.
  std::string bad = "{\"N\": 2, \"images\": {\"a1\": [2, 1]}}";
  REQUIRE(kc_verify_hom(s.p, bad.c_str(), &ok, &text) == KCUBE_OK);
  CHECK(ok == 0);
  CHECK(!json::parse(take(text)).empty());
  ComplexGuard none;
  CHECK(kc_complex_from_hom(s.p, bad.c_str(), &none.p) == KCUBE_ERR_INPUT);
}

TEST_CASE("embedded matrix preset and powers") {
  MatricesGuard ms;
  REQUIRE(kc_matrices_preset25(&ms.p) == KCUBE_OK);
  int count = 0, n = 0;
  REQUIRE(kc_matrices_count(ms.p, &count) == KCUBE_OK);
  REQUIRE(kc_matrices_size(ms.p, &n) == KCUBE_OK);
  CHECK(count == 1);
  CHECK(n == 25);

  char* text = nullptr;
  REQUIRE(kc_matrix_power_to_text(ms.p, 0, 3, &text) == KCUBE_OK);
  std::istringstream in(take(text));
  int size = 0, blocks = 0;
  bool header_read = static_cast<bool>(in >> size >> blocks);
  REQUIRE(header_read);
  CHECK(size == 25);
  CHECK(blocks == 1);
  bool diag_ok = true, off_ok = true;
  for (int r = 0; r < 25; ++r)
    for (int c = 0; c < 25; ++c) {
      long long v = 0;
      bool entry_read = static_cast<bool>(in >> v);
      REQUIRE(entry_read);
      if (r == c)
        diag_ok = diag_ok && v == 12;
      else
        off_ok = off_ok && (v == 6 || v == 7 || v == 15);
    }
  CHECK(diag_ok);
  CHECK(off_ok);

  CHECK(kc_matrix_power_to_text(ms.p, 1, 3, &text) == KCUBE_ERR_INPUT);
  CHECK(kc_matrix_power_to_text(ms.p, 0, -1, &text) == KCUBE_ERR_INPUT);
  // Power zero is the identity matrix.
  REQUIRE(kc_matrix_power_to_text(ms.p, 0, 0, &text) == KCUBE_OK);
  std::istringstream ident(take(text));
  int isize = 0, iblocks = 0;
  bool ident_header = static_cast<bool>(ident >> isize >> iblocks);
  REQUIRE(ident_header);
  CHECK(isize == 25);
  CHECK(iblocks == 1);
  bool ident_ok = true;
  for (int r = 0; r < 25; ++r)
    for (int c = 0; c < 25; ++c) {
      long long v = -1;
      ident >> v;
      ident_ok = ident_ok && v == (r == c ? 1 : 0);
    }
  CHECK(ident_ok);

  // Round trip through the text form.
  REQUIRE(kc_matrices_to_text(ms.p, &text) == KCUBE_OK);
  std::string dump = take(text);
  MatricesGuard back;
  REQUIRE(kc_matrices_from_text(dump.c_str(), &back.p) == KCUBE_OK);
  REQUIRE(kc_matrices_to_text(back.p, &text) == KCUBE_OK);
  CHECK(take(text) == dump);
}

TEST_CASE("arithmetic presentation construction via the C interface") {
  bool built = false;
  for (int p0 = 1; p0 < 5 && !built; ++p0)
    for (int p1 = 0; p1 < 5 && !built; ++p1)
      for (int d0 = 0; d0 < 5 && !built; ++d0)
        for (int d1 = 0; d1 < 5 && !built; ++d1) {
          int residues[3] = {1, 2, 3};
          StructureGuard s;
          if (kc_structure_rsv(5, p0, p1, d0, d1, residues, 3, &s.p) !=
              KCUBE_OK)
            continue;
          built = true;
          int all_pass = 0;
          char* text = nullptr;
          REQUIRE(kc_structure_validate(s.p, &all_pass, &text) == KCUBE_OK);
          kc_string_free(text);
          CHECK(all_pass == 1);
        }
  CHECK(built);

  int residues[2] = {1, 2};
  StructureGuard bad;
  CHECK(kc_structure_rsv(4, 1, 1, 0, 1, residues, 2, &bad.p) ==
        KCUBE_ERR_INPUT);
}

TEST_CASE("error codes and messages") {
  StructureGuard s;
  CHECK(kc_structure_preset("no_such_preset", &s.p) == KCUBE_ERR_INPUT);
  CHECK(std::string(kc_last_error()).find("preset") != std::string::npos);
  CHECK(kc_structure_preset("matrix25", &s.p) == KCUBE_ERR_INPUT);
  CHECK(kc_structure_preset("gamma1", nullptr) == KCUBE_ERR_INPUT);
  CHECK(kc_structure_preset(nullptr, &s.p) == KCUBE_ERR_INPUT);
  CHECK(kc_structure_from_json("{", &s.p) == KCUBE_ERR_INPUT);

  REQUIRE(kc_structure_preset("gamma1", &s.p) == KCUBE_OK);
  char* text = nullptr;
  CHECK(kc_solve_abelian(s.p, 4, 2, &text) == KCUBE_ERR_INPUT);
  CHECK(kc_solve_abelian(s.p, 3, 2, &text) == KCUBE_ERR_MATH);
  CHECK(std::string(kc_last_error()).find("no surjective solution") !=
        std::string::npos);

  ComplexGuard c;
  REQUIRE(kc_complex_build(s.p, &c.p) == KCUBE_OK);
  DigraphGuard dg;
  REQUIRE(kc_digraph_from_complex(c.p, &dg.p) == KCUBE_OK);
  int all_pass = 0;
  CHECK(kc_digraph_validate(dg.p, "f1,vh", 4, &all_pass, &text) ==
        KCUBE_ERR_INPUT);
  CHECK(std::string(kc_last_error()).find("unknown axiom") !=
        std::string::npos);

  MatricesGuard ms;
  REQUIRE(kc_matrices_from_digraph(dg.p, &ms.p) == KCUBE_OK);
  CHECK(kc_spectra_report(ms.p, "fancy", 1e-9, &text) == KCUBE_ERR_INPUT);

  // Spectral invariants of a one-way digraph fail mathematically.
  DigraphGuard oneway;
  const char* oneway_json =
      "{\"k\": 1, \"num_vertices\": 2, \"edges\": [{\"id\": 0, \"origin\": 0,"
      " \"terminus\": 1, \"color\": 1, \"label\": \"e0\"}], \"phi\": []}";
  REQUIRE(kc_digraph_from_json(oneway_json, &oneway.p) == KCUBE_OK);
  CHECK(kc_period_lattice(oneway.p, 4, &text) == KCUBE_ERR_MATH);
  double lambda = 0;
  CHECK(kc_factor_type_lambda(oneway.p, 4, 1e-9, &lambda) == KCUBE_ERR_MATH);

  // Frees and the string release tolerate NULL.
  kc_string_free(nullptr);
  kc_structure_free(nullptr);
  kc_complex_free(nullptr);
  kc_digraph_free(nullptr);
  kc_matrices_free(nullptr);
}

TEST_CASE("preset name listing") {
  char* text = nullptr;
  REQUIRE(kc_preset_names(&text) == KCUBE_OK);
  json names = json::parse(take(text));
  REQUIRE(names.is_array());
  bool has_gamma1 = false, has_matrix = false;
  for (const auto& n : names) {
    if (n == "gamma1") has_gamma1 = true;
    if (n == "matrix25") has_matrix = true;
  }
  CHECK(has_gamma1);
  CHECK(has_matrix);
}
