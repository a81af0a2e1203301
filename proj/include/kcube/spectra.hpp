#pragma once

#include <string>
#include <vector>

#include "kcube/digraph.hpp"
#include "kcube/matrix.hpp"

namespace kcube {

// Eigenvalues of a symmetric integer matrix by cyclic Jacobi rotations,
// sorted descending; the sweep stops once the off-diagonal norm falls
// below tol times the matrix norm. Throws InputError when the input is
// not symmetric.
std::vector<double> symmetric_eigenvalues(const IntMatrix& m, double tol);

// Per-color spectral radius (largest absolute eigenvalue).
std::vector<double> spectral_radius_vector(const std::vector<IntMatrix>& ms,
                                           double tol);

enum class RamanujanMode { cubical, kgraph };

struct ColorVerdict {
  int color = 0;
  long long L = 0;
  std::vector<double> eigenvalues; // descending
  bool has_lambda2 = false;
  double lambda2 = 0.0;
  double bound = 0.0; // 2 sqrt(L - 1)
  bool ramanujan = false;
};

// Ramanujan verification for regular symmetric matrices. cubical mode
// treats eigenvalues within 1e-6 of +L or -L as trivial and requires every
// remaining eigenvalue to lie below 2 sqrt(L-1) + tol as a value; kgraph
// mode requires the largest positive eigenvalue below L to meet the bound
// and is vacuously true when no such eigenvalue exists. Throws InputError
// when a matrix is not regular (equal row sums) or not symmetric.
std::vector<ColorVerdict> ramanujan_check(const std::vector<IntMatrix>& ms,
                                          RamanujanMode mode, double tol);

struct PeriodLattice {
  int k = 0;
  int max_degree_sum = 4;
  // The computed group is generated by cycle-degree differences up to the
  // bound only, so it is a verified sublattice of the full period group.
  bool lower_approximation = true;
  std::vector<std::vector<long long>> basis; // Hermite-normal-form rows
  struct Generator {
    std::vector<long long> diff;
    std::string cycle_a, cycle_b;
  };
  std::vector<Generator> generators;
};

// Collects the degree vectors of all cycles at vertex 0 with at most
// max_degree_sum edges (the empty cycle included), forms their pairwise
// differences with witness cycle pairs, and returns a Hermite-normal-form
// basis of the sublattice they generate. Throws MathError when the digraph
// is not strongly connected.
PeriodLattice period_lattice(const ColoredDigraph& dg, int max_degree_sum);

// The type invariant lambda in (0, 1]: the period lattice is pushed
// through g |-> sum_i g_i log(rho_i); when the image subgroup of the reals
// is discrete with smallest positive element t, lambda = exp(-t), and a
// dense image (incommensurable values) or zero lattice gives 1. Equal
// integer radii are handled in exact integer arithmetic; otherwise
// commensurability is decided by a continued-fraction search with
// coefficients up to 1e6 accepting |q a - p b| <= tol max(|a|, |b|).
// Throws InputError when some rho_i <= 1.
double factor_type_lambda(const std::vector<double>& rho,
                          const PeriodLattice& P, double tol);

} // namespace kcube
