#pragma once

#include <map>
#include <string>
#include <vector>

#include "kcube/complex.hpp"
#include "kcube/structures.hpp"

namespace kcube {

// Images of the generators in a symmetric group on {1..N}, one-line
// notation with 1-based entries. Compositions are read right to left:
// the image of a product a·b sends n to images(a)[images(b)[n] - 1].
struct PermAssignment {
  int N = 1;
  std::map<std::string, std::vector<int>> images;
};

struct HomReport {
  bool ok = true;
  std::vector<std::string> witnesses;
};

// The explicit 2-sheet cover of a one-vertex complex: each geometric edge x
// yields x^1 (sheet 1 to sheet 2) and x^2 (sheet 2 to sheet 1), and each
// square (a, b, b', a') lifts to (a^1, b^2, (b')^1, (a')^2) and
// (a^2, b^1, (b')^2, (a')^1). The base letter of every lifted edge is
// recorded, so collapsing sheets recovers the base complex.
// Throws InputError when the input has more than one vertex.
CubeComplex double_cover(const CubeComplex& base);

// Checks that the assignment is a well-defined homomorphism on the
// structure: every letter has a permutation of {1..N}, inverse letters map
// to inverse permutations, and every square relation a·b = b'·a' holds as
// permutations of each sheet. Failures are reported as witnesses.
HomReport verify_hom(const KCubeStructure& s, const PermAssignment& q);

// The N-sheet cover encoded by a verified assignment: vertices are sheets
// 1..N, the letter x contributes an edge x^n from n to images(x)[n-1] for
// every sheet, and each square (a, b, b', a') with sheet n lifts to the
// square with corner paths (a')^n·(b')^s and b^n·a^r, where s is the image
// of n under a' and r its image under b. Throws InputError when verify_hom
// fails; a disconnected result is returned as-is (query connected()).
CubeComplex cover_from_hom(const KCubeStructure& s, const PermAssignment& q);

struct AbelianSolution {
  PermAssignment assignment;
  bool each_alphabet_generates = false;
  // Letter name -> image vector in (Z/p)^rank, for every letter.
  std::map<std::string, std::vector<int>> vectors;
};

// Solves the abelianized square relations v_a + v_b - v_b' - v_a' = 0 over
// (Z/p)^rank for the letter images, one value vector per geometric
// generator with v_{x^-1} = -v_x. Solutions are rank-dimensional subspaces
// of the mod-p solution space, each reported once through its canonical
// basis; the assignment is the left regular representation on the p^rank
// group elements in lexicographic order, so sheet counts are N = p^rank.
// Throws InputError for a non-prime or even p or rank outside {1, 2};
// throws MathError when no surjective solution exists.
std::vector<AbelianSolution> solve_abelian_quotient(const KCubeStructure& s,
                                                    int p, int rank);

} // namespace kcube
