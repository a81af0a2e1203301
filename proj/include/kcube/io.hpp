#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "kcube/complex.hpp"
#include "kcube/covers.hpp"
#include "kcube/digraph.hpp"
#include "kcube/kgraph.hpp"
#include "kcube/matrix.hpp"
#include "kcube/spectra.hpp"
#include "kcube/structures.hpp"

namespace kcube {

// All parsers throw InputError on malformed text or missing fields; all
// writers produce deterministic, insertion-ordered JSON.

// Structure JSON: {k, alphabets: [{color, letters, inverse}], squares}
// on output; input accepts exactly one of "squares" (4-letter arrays
// read as (a, b, b', a')) or "relators" (4-letter arrays read as a
// cyclic boundary word).
nlohmann::ordered_json structure_to_json(const KCubeStructure& s);
KCubeStructure structure_from_json(const std::string& text);

// Complex JSON: {k, num_vertices, geom_edges, squares (4 traversal
// labels each), cubes (6 square indices each)}.
nlohmann::ordered_json complex_to_json(const CubeComplex& c);

// Digraph JSON: {k, num_vertices, edges: [{id, origin, terminus, color,
// label}], phi: [[x, y, y_prime, x_prime]]}; edge ids must equal their
// positions, labels default to "e<id>" when absent.
nlohmann::ordered_json digraph_to_json(const ColoredDigraph& dg);
ColoredDigraph digraph_from_json(const std::string& text);

// Assignment JSON: {N, images: {letter: [1-based image list]}}.
nlohmann::ordered_json assignment_to_json(const PermAssignment& q);
PermAssignment assignment_from_json(const std::string& text);

// Matrix text: first line "N k", then k blocks of N rows of N integers.
std::string matrices_to_text(const std::vector<IntMatrix>& ms);
std::vector<IntMatrix> matrices_from_text(const std::string& text);

// Spectrum text: one eigenvalue per line, nine decimal digits, descending.
std::string spectrum_to_text(const std::vector<double>& eigenvalues);

nlohmann::ordered_json validation_to_json(const ValidationReport& r);
nlohmann::ordered_json rigidity_to_json(const RigidityReport& r);
nlohmann::ordered_json spectral_to_json(const std::vector<ColorVerdict>& v);
nlohmann::ordered_json lattice_to_json(const PeriodLattice& p);
nlohmann::ordered_json structure_report_to_json(const StructureReport& r);
nlohmann::ordered_json abelian_to_json(
    const std::vector<AbelianSolution>& sols);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

} // namespace kcube
