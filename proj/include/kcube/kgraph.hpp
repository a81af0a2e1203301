#pragma once

#include <utility>
#include <vector>

#include "kcube/digraph.hpp"
#include "kcube/matrix.hpp"

namespace kcube {

// A composable edge sequence read from the origin side; the explicit origin
// carries the base vertex of the empty path (the identity morphism).
struct PathWord {
  int origin = 0;
  std::vector<int> edges;
  bool operator==(const PathWord&) const = default;
};

// Throws InputError when the edge sequence is not composable or does not
// start at the stated origin.
void validate_path(const ColoredDigraph& dg, const PathWord& p);

int terminus(const ColoredDigraph& dg, const PathWord& p);

// Per-color edge counts, index i holding the count of color i+1.
std::vector<int> degree(const ColoredDigraph& dg, const PathWord& p);

// Replaces the edge pair at 1-based position s by its exchange image.
// Degree and endpoints are unchanged. Throws InputError for an invalid
// position or a same-color pair, MathError when the exchange entry is
// missing or ambiguous.
PathWord divert(const ColoredDigraph& dg, const PathWord& p, int s);

// The canonical rainbow representative of p's rewriting class: colors
// non-increasing from the origin, reached by always diverting the leftmost
// ascending pair. Idempotent; constant on rewriting classes whenever the
// digraph satisfies both defining axioms.
PathWord normalize(const ColoredDigraph& dg, const PathWord& p);

// Splits p (as a morphism) into B after C with degree(C) = m, returning
// (B, C) as normalized representatives. Throws InputError when m has the
// wrong length or exceeds degree(p) componentwise.
std::pair<PathWord, PathWord> factorize(const ColoredDigraph& dg,
                                        const PathWord& p,
                                        const std::vector<int>& m);

// Brute-force unique-factorization audit: enumerates every path of length
// at most max_degree_sum, groups them into rewriting classes by closing
// over single diverts, and for every class and every componentwise split
// of its degree asserts that exactly one (B, C) class pair occurs and that
// factorize() lands on it. Report condition: "unique_factorization".
ValidationReport check_unique_factorization(const ColoredDigraph& dg,
                                            int max_degree_sum);

// M_i(v, w) = number of color-i edges from w to v; one matrix per color.
std::vector<IntMatrix> coordinate_matrices(const ColoredDigraph& dg);

struct StructureReport {
  bool rigid = false;
  bool strongly_connected = false;
  bool aperiodic = false;
  bool purely_infinite_eligible = false;
};

// Aperiodicity is certified through two-sided rigidity; eligibility for
// pure infiniteness additionally needs strong connectivity and at least
// two geometric edges of every color at every vertex (out-degree >= 4
// per color).
StructureReport structure_report(const ColoredDigraph& dg);

} // namespace kcube
