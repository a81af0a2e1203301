#include "kcube.h"

#include <cstdlib>
#include <cstring>
#include <string>
#include <vector>

#include "kcube/complex.hpp"
#include "kcube/covers.hpp"
#include "kcube/digraph.hpp"
#include "kcube/errors.hpp"
#include "kcube/fixtures.hpp"
#include "kcube/io.hpp"
#include "kcube/kgraph.hpp"
#include "kcube/matrix.hpp"
#include "kcube/spectra.hpp"
#include "kcube/structures.hpp"

struct kc_structure_t {
  kcube::KCubeStructure v;
};
struct kc_complex_t {
  kcube::CubeComplex v;
};
struct kc_digraph_t {
  kcube::ColoredDigraph v;
};
struct kc_matrices_t {
  std::vector<kcube::IntMatrix> v;
};

namespace {

thread_local std::string g_last_error;

template <typename F>
int guarded(F&& body) {
  try {
    body();
    return KCUBE_OK;
  } catch (const kcube::Error& e) {
    g_last_error = e.what();
    return e.kind() == kcube::Error::Kind::math ? KCUBE_ERR_MATH
                                                : KCUBE_ERR_INPUT;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return KCUBE_ERR_MATH;
  }
}

int fail_input(const char* message) {
  g_last_error = message;
  return KCUBE_ERR_INPUT;
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

} // namespace

extern "C" {

const char* kc_last_error(void) { return g_last_error.c_str(); }

void kc_string_free(char* s) { std::free(s); }

int kc_structure_from_json(const char* json, kc_structure_t** out) {
  if (!json || !out) return fail_input("null argument");
  return guarded([&] {
    *out = new kc_structure_t{kcube::structure_from_json(json)};
  });
}

int kc_structure_preset(const char* name, kc_structure_t** out) {
  if (!name || !out) return fail_input("null argument");
  return guarded([&] {
    *out = new kc_structure_t{kcube::preset_structure(name)};
  });
}

int kc_structure_rsv(int q, int p0, int p1, int delta0, int delta1,
                     const int* residues, int n_residues,
                     kc_structure_t** out) {
  if (!residues || !out) return fail_input("null argument");
  return guarded([&] {
    std::vector<int> rs(residues, residues + n_residues);
    *out = new kc_structure_t{
        kcube::rsv_structure(q, p0, p1, {delta0, delta1}, rs)};
  });
}

int kc_structure_to_json(const kc_structure_t* s, char** json) {
  if (!s || !json) return fail_input("null argument");
  return guarded([&] {
    *json = dup_string(kcube::structure_to_json(s->v).dump(2) + "\n");
  });
}

int kc_structure_validate(const kc_structure_t* s, int* all_pass,
                          char** report_json) {
  if (!s || !all_pass || !report_json) return fail_input("null argument");
  return guarded([&] {
    kcube::ValidationReport rep = kcube::validate_structure(s->v);
    *all_pass = rep.all_pass() ? 1 : 0;
    *report_json = dup_string(kcube::validation_to_json(rep).dump(2) + "\n");
  });
}

void kc_structure_free(kc_structure_t* s) { delete s; }

int kc_complex_build(const kc_structure_t* s, kc_complex_t** out) {
  if (!s || !out) return fail_input("null argument");
  return guarded([&] {
    *out = new kc_complex_t{kcube::build_one_vertex_complex(s->v)};
  });
}

int kc_complex_enumerate_cubes(kc_complex_t* c, long long* count) {
  if (!c || !count) return fail_input("null argument");
  return guarded([&] { *count = kcube::enumerate_cubes(c->v); });
}

int kc_complex_double_cover(const kc_complex_t* c, kc_complex_t** out) {
  if (!c || !out) return fail_input("null argument");
  return guarded([&] { *out = new kc_complex_t{kcube::double_cover(c->v)}; });
}

int kc_complex_from_hom(const kc_structure_t* s, const char* assignment_json,
                        kc_complex_t** out) {
  if (!s || !assignment_json || !out) return fail_input("null argument");
  return guarded([&] {
    kcube::PermAssignment q = kcube::assignment_from_json(assignment_json);
    *out = new kc_complex_t{kcube::cover_from_hom(s->v, q)};
  });
}

int kc_complex_num_vertices(const kc_complex_t* c, int* out) {
  if (!c || !out) return fail_input("null argument");
  *out = c->v.num_vertices();
  return KCUBE_OK;
}

int kc_complex_connected(const kc_complex_t* c, int* out) {
  if (!c || !out) return fail_input("null argument");
  return guarded([&] { *out = c->v.connected() ? 1 : 0; });
}

int kc_complex_to_json(const kc_complex_t* c, char** json) {
  if (!c || !json) return fail_input("null argument");
  return guarded([&] {
    *json = dup_string(kcube::complex_to_json(c->v).dump(2) + "\n");
  });
}

void kc_complex_free(kc_complex_t* c) { delete c; }

int kc_digraph_from_complex(const kc_complex_t* c, kc_digraph_t** out) {
  if (!c || !out) return fail_input("null argument");
  return guarded([&] {
    *out = new kc_digraph_t{kcube::digraph_from_complex(c->v)};
  });
}

int kc_digraph_from_json(const char* json, kc_digraph_t** out) {
  if (!json || !out) return fail_input("null argument");
  return guarded([&] {
    *out = new kc_digraph_t{kcube::digraph_from_json(json)};
  });
}

int kc_digraph_to_json(const kc_digraph_t* dg, char** json) {
  if (!dg || !json) return fail_input("null argument");
  return guarded([&] {
    *json = dup_string(kcube::digraph_to_json(dg->v).dump(2) + "\n");
  });
}

int kc_digraph_validate(const kc_digraph_t* dg, const char* axioms_csv,
                        int max_degree_sum, int* all_pass,
                        char** report_json) {
  if (!dg || !axioms_csv || !all_pass || !report_json)
    return fail_input("null argument");
  return guarded([&] {
    kcube::ValidationReport merged;
    std::string csv(axioms_csv);
    size_t pos = 0;
    while (pos <= csv.size()) {
      size_t comma = csv.find(',', pos);
      std::string axiom = csv.substr(
          pos, comma == std::string::npos ? std::string::npos : comma - pos);
      pos = comma == std::string::npos ? csv.size() + 1 : comma + 1;
      if (axiom.empty()) continue;
      if (axiom == "f1") {
        for (auto& item : kcube::validate_f1(dg->v).items)
          merged.items.push_back(std::move(item));
      } else if (axiom == "f2") {
        for (auto& item : kcube::validate_f2(dg->v).items)
          merged.items.push_back(std::move(item));
      } else if (axiom == "rigidity") {
        kcube::RigidityReport rig = kcube::check_rigidity(dg->v);
        merged.items.push_back(
            {"rigidity", rig.left && rig.right, rig.witnesses});
      } else if (axiom == "factorization") {
        for (auto& item :
             kcube::check_unique_factorization(dg->v, max_degree_sum).items)
          merged.items.push_back(std::move(item));
      } else {
        throw kcube::InputError("unknown axiom: " + axiom);
      }
    }
    *all_pass = merged.all_pass() ? 1 : 0;
    *report_json = dup_string(kcube::validation_to_json(merged).dump(2) + "\n");
  });
}

int kc_digraph_structure_report(const kc_digraph_t* dg, char** json) {
  if (!dg || !json) return fail_input("null argument");
  return guarded([&] {
    kcube::StructureReport rep = kcube::structure_report(dg->v);
    *json = dup_string(kcube::structure_report_to_json(rep).dump(2) + "\n");
  });
}

void kc_digraph_free(kc_digraph_t* dg) { delete dg; }

int kc_verify_hom(const kc_structure_t* s, const char* assignment_json,
                  int* ok, char** witnesses_json) {
  if (!s || !assignment_json || !ok || !witnesses_json)
    return fail_input("null argument");
  return guarded([&] {
    kcube::PermAssignment q = kcube::assignment_from_json(assignment_json);
    kcube::HomReport rep = kcube::verify_hom(s->v, q);
    *ok = rep.ok ? 1 : 0;
    nlohmann::ordered_json arr = rep.witnesses;
    *witnesses_json = dup_string(arr.dump(2) + "\n");
  });
}

int kc_solve_abelian(const kc_structure_t* s, int p, int rank,
                     char** solutions_json) {
  if (!s || !solutions_json) return fail_input("null argument");
  return guarded([&] {
    auto sols = kcube::solve_abelian_quotient(s->v, p, rank);
    *solutions_json = dup_string(kcube::abelian_to_json(sols).dump(2) + "\n");
  });
}

int kc_matrices_from_digraph(const kc_digraph_t* dg, kc_matrices_t** out) {
  if (!dg || !out) return fail_input("null argument");
  return guarded([&] {
    *out = new kc_matrices_t{kcube::coordinate_matrices(dg->v)};
  });
}

int kc_matrices_preset25(kc_matrices_t** out) {
  if (!out) return fail_input("null argument");
  return guarded([&] {
    *out = new kc_matrices_t{{kcube::preset_matrix25()}};
  });
}

int kc_matrices_from_text(const char* text, kc_matrices_t** out) {
  if (!text || !out) return fail_input("null argument");
  return guarded([&] {
    *out = new kc_matrices_t{kcube::matrices_from_text(text)};
  });
}

int kc_matrices_to_text(const kc_matrices_t* ms, char** text) {
  if (!ms || !text) return fail_input("null argument");
  return guarded([&] { *text = dup_string(kcube::matrices_to_text(ms->v)); });
}

int kc_matrices_count(const kc_matrices_t* ms, int* count) {
  if (!ms || !count) return fail_input("null argument");
  *count = static_cast<int>(ms->v.size());
  return KCUBE_OK;
}

int kc_matrices_size(const kc_matrices_t* ms, int* n) {
  if (!ms || !n) return fail_input("null argument");
  *n = ms->v.empty() ? 0 : ms->v[0].n;
  return KCUBE_OK;
}

int kc_matrix_power_to_text(const kc_matrices_t* ms, int index, int power,
                            char** text) {
  if (!ms || !text) return fail_input("null argument");
  if (index < 0 || index >= static_cast<int>(ms->v.size()))
    return fail_input("matrix index out of range");
  if (power < 0) return fail_input("power must be non-negative");
  return guarded([&] {
    kcube::IntMatrix p = ms->v[index].pow(power);
    *text = dup_string(kcube::matrices_to_text({p}));
  });
}

void kc_matrices_free(kc_matrices_t* ms) { delete ms; }

int kc_spectra_report(const kc_matrices_t* ms, const char* mode, double tol,
                      char** json) {
  if (!ms || !mode || !json) return fail_input("null argument");
  kcube::RamanujanMode m;
  if (std::strcmp(mode, "cubical") == 0) {
    m = kcube::RamanujanMode::cubical;
  } else if (std::strcmp(mode, "kgraph") == 0) {
    m = kcube::RamanujanMode::kgraph;
  } else {
    return fail_input("mode must be cubical or kgraph");
  }
  return guarded([&] {
    auto verdicts = kcube::ramanujan_check(ms->v, m, tol);
    *json = dup_string(kcube::spectral_to_json(verdicts).dump(2) + "\n");
  });
}

int kc_spectra_text(const kc_matrices_t* ms, double tol, char** text) {
  if (!ms || !text) return fail_input("null argument");
  return guarded([&] {
    std::string out;
    for (const kcube::IntMatrix& m : ms->v)
      out += kcube::spectrum_to_text(kcube::symmetric_eigenvalues(m, tol));
    *text = dup_string(out);
  });
}

int kc_spectral_radius(const kc_matrices_t* ms, double tol, char** json) {
  if (!ms || !json) return fail_input("null argument");
  return guarded([&] {
    nlohmann::ordered_json arr = kcube::spectral_radius_vector(ms->v, tol);
    *json = dup_string(arr.dump() + "\n");
  });
}

int kc_period_lattice(const kc_digraph_t* dg, int max_degree_sum,
                      char** json) {
  if (!dg || !json) return fail_input("null argument");
  return guarded([&] {
    kcube::PeriodLattice lat = kcube::period_lattice(dg->v, max_degree_sum);
    *json = dup_string(kcube::lattice_to_json(lat).dump(2) + "\n");
  });
}

int kc_factor_type_lambda(const kc_digraph_t* dg, int max_degree_sum,
                          double tol, double* lambda) {
  if (!dg || !lambda) return fail_input("null argument");
  return guarded([&] {
    kcube::PeriodLattice lat = kcube::period_lattice(dg->v, max_degree_sum);
    auto ms = kcube::coordinate_matrices(dg->v);
    std::vector<double> rho = kcube::spectral_radius_vector(ms, tol);
    *lambda = kcube::factor_type_lambda(rho, lat, tol);
  });
}

int kc_preset_names(char** json) {
  if (!json) return fail_input("null argument");
  return guarded([&] {
    nlohmann::ordered_json arr = kcube::preset_names();
    *json = dup_string(arr.dump() + "\n");
  });
}

} // extern "C"
