#pragma once

#include <string>
#include <vector>

#include "kcube/matrix.hpp"
#include "kcube/structures.hpp"

namespace kcube {

// Built-in presets. Structure presets: gamma1, gamma2, torus, vh44, and the
// parametrized family free_product(L1,..,Lk) (also accepted in the spelling
// free_product:L1,..,Lk). Matrix preset: matrix25.
//
// If the environment variable KCUBE_FIXTURES names a directory containing
// <name>.json (structures) or matrix25.txt, that file overrides the embedded
// data for the non-parametrized presets.

// True when the name denotes the matrix preset rather than a structure.
bool is_matrix_preset(const std::string& name);

KCubeStructure preset_structure(const std::string& name);

// The 25-vertex 6-regular symmetric adjacency matrix fixture.
IntMatrix preset_matrix25();

// Names for CLI listing; the family is shown with a placeholder parameter.
std::vector<std::string> preset_names();

// The free product family: one alphabet of 2L_i letters per color with
// x_{L_i+r} = x_r⁻¹, and all commuting squares x·y = y·x between geometric
// generators of distinct colors.
KCubeStructure free_product_structure(const std::vector<int>& L);

} // namespace kcube
