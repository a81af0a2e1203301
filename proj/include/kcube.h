/* C interface to the k-cube toolkit.
 *
 * Every function returns a status code: 0 for success, 1 for a
 * mathematical failure (an axiom, relation, or bound does not hold), 2 for
 * malformed input. On failure kc_last_error() describes the problem; the
 * returned pointer stays valid until the next failing call on the same
 * thread. Strings handed out through char** parameters are heap-allocated
 * and must be released with kc_string_free(). Handles are opaque and are
 * released with their matching *_free function; passing NULL to a *_free
 * is a no-op.
 */
#ifndef KCUBE_H
#define KCUBE_H

#ifdef __cplusplus
extern "C" {
#endif

#define KCUBE_OK 0
#define KCUBE_ERR_MATH 1
#define KCUBE_ERR_INPUT 2

#ifndef KC_API
#if defined(_WIN32)
#define KC_API __declspec(dllexport)
#else
#define KC_API __attribute__((visibility("default")))
#endif
#endif

typedef struct kc_structure_t kc_structure_t;
typedef struct kc_complex_t kc_complex_t;
typedef struct kc_digraph_t kc_digraph_t;
typedef struct kc_matrices_t kc_matrices_t;

KC_API const char* kc_last_error(void);
KC_API void kc_string_free(char* s);

/* ---- group presentations -------------------------------------------- */

/* Parses {k, alphabets, squares XOR relators}. */
KC_API int kc_structure_from_json(const char* json, kc_structure_t** out);

/* Embedded presets: gamma1, gamma2, torus, vh44, free_product:L1,..,Lk. */
KC_API int kc_structure_preset(const char* name, kc_structure_t** out);

/* Quadratic-residue presentation over the field with q*q elements, delta
 * given by its two coordinates; residues picks the congruence classes of
 * the exponents mod q-1. */
KC_API int kc_structure_rsv(int q, int p0, int p1, int delta0, int delta1,
                            const int* residues, int n_residues,
                            kc_structure_t** out);

KC_API int kc_structure_to_json(const kc_structure_t* s, char** json);

/* Defining conditions of the presentation (involution, generation,
 * products-exactly-once, no 2-torsion); the full report is JSON. */
KC_API int kc_structure_validate(const kc_structure_t* s, int* all_pass,
                                 char** report_json);

KC_API void kc_structure_free(kc_structure_t* s);

/* ---- cube complexes -------------------------------------------------- */

/* One-vertex complex of a presentation. */
KC_API int kc_complex_build(const kc_structure_t* s, kc_complex_t** out);

/* Fills in the 3-cubes; fails when some corner has inconsistent
 * completions. The count is also stored on the handle. */
KC_API int kc_complex_enumerate_cubes(kc_complex_t* c, long long* count);

KC_API int kc_complex_double_cover(const kc_complex_t* c, kc_complex_t** out);

/* N-sheet cover from a permutation assignment {N, images}. */
KC_API int kc_complex_from_hom(const kc_structure_t* s,
                               const char* assignment_json,
                               kc_complex_t** out);

KC_API int kc_complex_num_vertices(const kc_complex_t* c, int* out);
KC_API int kc_complex_connected(const kc_complex_t* c, int* out);
KC_API int kc_complex_to_json(const kc_complex_t* c, char** json);
KC_API void kc_complex_free(kc_complex_t* c);

/* ---- colored digraphs ------------------------------------------------ */

KC_API int kc_digraph_from_complex(const kc_complex_t* c, kc_digraph_t** out);
KC_API int kc_digraph_from_json(const char* json, kc_digraph_t** out);
KC_API int kc_digraph_to_json(const kc_digraph_t* dg, char** json);

/* axioms_csv selects among f1, f2, rigidity, factorization (the last
 * bounded by max_degree_sum). all_pass reflects only the selected checks. */
KC_API int kc_digraph_validate(const kc_digraph_t* dg, const char* axioms_csv,
                               int max_degree_sum, int* all_pass,
                               char** report_json);

/* {rigid, strongly_connected, aperiodic, purely_infinite_eligible}. */
KC_API int kc_digraph_structure_report(const kc_digraph_t* dg, char** json);

KC_API void kc_digraph_free(kc_digraph_t* dg);

/* ---- covers over permutation images ---------------------------------- */

KC_API int kc_verify_hom(const kc_structure_t* s, const char* assignment_json,
                         int* ok, char** witnesses_json);

/* All rank-dimensional mod-p solutions of the abelianized relations, as a
 * JSON list of {assignment, each_alphabet_generates, vectors}. */
KC_API int kc_solve_abelian(const kc_structure_t* s, int p, int rank,
                            char** solutions_json);

/* ---- coordinate matrices and spectra --------------------------------- */

KC_API int kc_matrices_from_digraph(const kc_digraph_t* dg,
                                    kc_matrices_t** out);

/* The embedded 25-vertex 6-regular adjacency matrix. */
KC_API int kc_matrices_preset25(kc_matrices_t** out);

KC_API int kc_matrices_from_text(const char* text, kc_matrices_t** out);
KC_API int kc_matrices_to_text(const kc_matrices_t* ms, char** text);
KC_API int kc_matrices_count(const kc_matrices_t* ms, int* count);
KC_API int kc_matrices_size(const kc_matrices_t* ms, int* n);

/* Exact integer power of one matrix, written in the same text format. */
KC_API int kc_matrix_power_to_text(const kc_matrices_t* ms, int index,
                                   int power, char** text);

KC_API void kc_matrices_free(kc_matrices_t* ms);

/* mode is "cubical" or "kgraph"; JSON holds per-color eigenvalues,
 * lambda2, the bound, and the verdicts. */
KC_API int kc_spectra_report(const kc_matrices_t* ms, const char* mode,
                             double tol, char** json);

/* Per-color eigenvalue blocks, one value per line, nine decimals. */
KC_API int kc_spectra_text(const kc_matrices_t* ms, double tol, char** text);

/* JSON array with the per-color spectral radii. */
KC_API int kc_spectral_radius(const kc_matrices_t* ms, double tol,
                              char** json);

/* Cycle-degree-difference sublattice at vertex 0, bounded cycle length. */
KC_API int kc_period_lattice(const kc_digraph_t* dg, int max_degree_sum,
                             char** json);

/* Type invariant from the digraph's spectral radii and period lattice. */
KC_API int kc_factor_type_lambda(const kc_digraph_t* dg, int max_degree_sum,
                                 double tol, double* lambda);

/* ---- misc ------------------------------------------------------------ */

/* JSON array of the preset names. */
KC_API int kc_preset_names(char** json);

#ifdef __cplusplus
}
#endif

#endif /* KCUBE_H */
