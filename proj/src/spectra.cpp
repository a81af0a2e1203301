#include "kcube/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>

#include "kcube/errors.hpp"

namespace kcube {

std::vector<double> symmetric_eigenvalues(const IntMatrix& m, double tol) {
  if (!m.is_symmetric()) throw InputError("matrix is not symmetric");
  const int n = m.n;
  std::vector<double> a(static_cast<size_t>(n) * n);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c)
      a[r * n + c] = static_cast<double>(m.at(r, c));
  double frob = 0;
  for (double v : a) frob += v * v;
  frob = std::sqrt(frob);
  if (frob == 0.0) return std::vector<double>(n, 0.0);
  const double target = std::max(tol, 1e-14) * frob;
  for (int sweep = 0; sweep < 100; ++sweep) {
    double off = 0;
    for (int p = 0; p < n; ++p)
      for (int q = p + 1; q < n; ++q) off += 2 * a[p * n + q] * a[p * n + q];
    if (std::sqrt(off) < target) break;
    for (int p = 0; p < n; ++p) {
      for (int q = p + 1; q < n; ++q) {
        double apq = a[p * n + q];
        if (std::abs(apq) < 1e-300) continue;
        double theta = (a[q * n + q] - a[p * n + p]) / (2 * apq);
        double t = (theta >= 0 ? 1.0 : -1.0) /
                   (std::abs(theta) + std::sqrt(theta * theta + 1));
        double c = 1.0 / std::sqrt(t * t + 1);
        double s = t * c;
        for (int i = 0; i < n; ++i) {
          double aip = a[i * n + p], aiq = a[i * n + q];
          a[i * n + p] = c * aip - s * aiq;
          a[i * n + q] = s * aip + c * aiq;
        }
        for (int i = 0; i < n; ++i) {
          double api = a[p * n + i], aqi = a[q * n + i];
          a[p * n + i] = c * api - s * aqi;
          a[q * n + i] = s * api + c * aqi;
        }
      }
    }
  }
  std::vector<double> eig(n);
  for (int i = 0; i < n; ++i) eig[i] = a[i * n + i];
  std::sort(eig.begin(), eig.end(), std::greater<double>());
  return eig;
}

std::vector<double> spectral_radius_vector(const std::vector<IntMatrix>& ms,
                                           double tol) {
  std::vector<double> rho;
  rho.reserve(ms.size());
  for (const IntMatrix& m : ms) {
    std::vector<double> eig = symmetric_eigenvalues(m, tol);
    double r = 0;
    for (double v : eig) r = std::max(r, std::abs(v));
    rho.push_back(r);
  }
  return rho;
}

std::vector<ColorVerdict> ramanujan_check(const std::vector<IntMatrix>& ms,
                                          RamanujanMode mode, double tol) {
  constexpr double kTrivialTol = 1e-6;
  std::vector<ColorVerdict> out;
  for (size_t idx = 0; idx < ms.size(); ++idx) {
    const IntMatrix& m = ms[idx];
    long long L = m.n > 0 ? m.row_sum(0) : 0;
    for (int r = 0; r < m.n; ++r)
      if (m.row_sum(r) != L)
        throw InputError("matrix for color " + std::to_string(idx + 1) +
                         " is not regular: row sums differ");
    ColorVerdict v;
    v.color = static_cast<int>(idx) + 1;
    v.L = L;
    v.eigenvalues = symmetric_eigenvalues(m, tol);
    v.bound = 2.0 * std::sqrt(static_cast<double>(L) - 1.0);
    const double Ld = static_cast<double>(L);
    if (mode == RamanujanMode::cubical) {
      v.ramanujan = true;
      for (double lam : v.eigenvalues) {
        if (std::abs(lam - Ld) <= kTrivialTol ||
            std::abs(lam + Ld) <= kTrivialTol)
          continue;
        if (!v.has_lambda2 || lam > v.lambda2) {
          v.has_lambda2 = true;
          v.lambda2 = lam;
        }
        if (lam > v.bound + tol) v.ramanujan = false;
      }
    } else {
      for (double lam : v.eigenvalues) {
        if (lam <= 0.0 || lam >= Ld - kTrivialTol) continue;
        if (!v.has_lambda2 || lam > v.lambda2) {
          v.has_lambda2 = true;
          v.lambda2 = lam;
        }
      }
      v.ramanujan = !v.has_lambda2 || v.lambda2 <= v.bound + tol;
    }
    out.push_back(std::move(v));
  }
  return out;
}

namespace {

// Row-style Hermite normal form: upper echelon, positive pivots, entries
// above a pivot reduced into [0, pivot).
std::vector<std::vector<long long>> hnf_rows(
    std::vector<std::vector<long long>> rows, int k) {
  int r = 0;
  for (int c = 0; c < k && r < static_cast<int>(rows.size()); ++c) {
    while (true) {
      int best = -1;
      for (int i = r; i < static_cast<int>(rows.size()); ++i)
        if (rows[i][c] != 0 &&
            (best < 0 || std::llabs(rows[i][c]) < std::llabs(rows[best][c])))
          best = i;
      if (best < 0) break;
      std::swap(rows[r], rows[best]);
      bool below_clear = true;
      for (int i = r + 1; i < static_cast<int>(rows.size()); ++i) {
        if (rows[i][c] == 0) continue;
        long long f = rows[i][c] / rows[r][c];
        for (int j = 0; j < k; ++j) rows[i][j] -= f * rows[r][j];
        if (rows[i][c] != 0) below_clear = false;
      }
      if (below_clear) break;
    }
    if (rows[r][c] == 0) continue;
    if (rows[r][c] < 0)
      for (int j = 0; j < k; ++j) rows[r][j] = -rows[r][j];
    for (int i = 0; i < r; ++i) {
      long long f = rows[i][c] / rows[r][c];
      if (rows[i][c] % rows[r][c] < 0) f -= 1;
      if (f != 0)
        for (int j = 0; j < k; ++j) rows[i][j] -= f * rows[r][j];
    }
    ++r;
  }
  rows.resize(r);
  return rows;
}

} // namespace

PeriodLattice period_lattice(const ColoredDigraph& dg, int max_degree_sum) {
  if (!strongly_connected(dg))
    throw MathError("period lattice requires a strongly connected digraph");
  PeriodLattice lat;
  lat.k = dg.k();
  lat.max_degree_sum = max_degree_sum;
  // Degree vectors of cycles at vertex 0, each with its first witness.
  std::map<std::vector<long long>, std::string> cycles;
  cycles[std::vector<long long>(dg.k(), 0)] = "(empty)";
  std::vector<int> stack;
  auto record = [&]() {
    std::vector<long long> d(dg.k(), 0);
    std::string text;
    for (size_t i = 0; i < stack.size(); ++i) {
      d[dg.color(stack[i]) - 1] += 1;
      if (i) text += " ";
      text += dg.label(stack[i]);
    }
    cycles.emplace(std::move(d), std::move(text));
  };
  auto dfs = [&](auto&& self, int v, int depth) -> void {
    if (depth > 0 && v == 0) record();
    if (depth == max_degree_sum) return;
    for (int e : dg.out_edges(v)) {
      stack.push_back(e);
      self(self, dg.edge(e).terminus, depth + 1);
      stack.pop_back();
    }
  };
  dfs(dfs, 0, 0);
  // Pairwise differences, deduplicated by value with first witnesses.
  std::map<std::vector<long long>, std::pair<std::string, std::string>> diffs;
  for (const auto& [da, wa] : cycles) {
    for (const auto& [db, wb] : cycles) {
      std::vector<long long> d(dg.k());
      bool zero = true;
      for (int i = 0; i < dg.k(); ++i) {
        d[i] = da[i] - db[i];
        if (d[i] != 0) zero = false;
      }
      if (zero) continue;
      diffs.emplace(std::move(d), std::make_pair(wa, wb));
    }
  }
  std::vector<std::vector<long long>> rows;
  for (const auto& [d, wit] : diffs) {
    lat.generators.push_back({d, wit.first, wit.second});
    rows.push_back(d);
  }
  lat.basis = hnf_rows(std::move(rows), dg.k());
  return lat;
}

namespace {

// Greatest common measure of two positive reals when their ratio is a
// rational p/q with q bounded by 1e6; negative result means no such
// relation holds within the tolerance.
double real_gcd(double a, double b, double tol) {
  if (a < b) std::swap(a, b);
  double ratio = a / b;
  long long h0 = 1, h1 = 0, k0 = 0, k1 = 1; // convergent recurrences
  double x = ratio;
  for (int iter = 0; iter < 64; ++iter) {
    double fl = std::floor(x);
    if (fl > 2e18) break;
    long long ai = static_cast<long long>(fl);
    long long h = ai * h0 + h1, k = ai * k0 + k1;
    if (k > 1000000) break;
    // Accept when q*a - p*b vanishes as a linear combination.
    double err = std::abs(static_cast<double>(k) * a -
                          static_cast<double>(h) * b);
    if (err <= tol * std::max(std::abs(a), std::abs(b)))
      return b / static_cast<double>(k);
    h1 = h0; h0 = h;
    k1 = k0; k0 = k;
    double frac = x - fl;
    if (frac < 1e-15) break;
    x = 1.0 / frac;
  }
  return -1.0;
}

} // namespace

double factor_type_lambda(const std::vector<double>& rho,
                          const PeriodLattice& P, double tol) {
  if (static_cast<int>(rho.size()) != P.k)
    throw InputError("one spectral radius per color is required");
  for (double r : rho)
    if (r <= 1.0) throw InputError("spectral radius must exceed 1");
  if (P.basis.empty()) return 1.0;
  // Equal integer radii: the image subgroup is (gcd of row sums) log R,
  // evaluated in integer arithmetic so powers of 1/R come out exact.
  long long R = std::llround(rho.empty() ? 0.0 : rho[0]);
  bool integral = R >= 2;
  for (double r : rho)
    if (std::abs(r - static_cast<double>(R)) > 1e-6) integral = false;
  if (integral) {
    long long c = 0;
    for (const auto& row : P.basis) {
      long long s = std::accumulate(row.begin(), row.end(), 0LL);
      c = std::gcd(c, std::llabs(s));
    }
    if (c == 0) return 1.0;
    double denom = 1.0;
    for (long long i = 0; i < c; ++i) denom *= static_cast<double>(R);
    return 1.0 / denom;
  }
  std::vector<double> ts;
  for (const auto& row : P.basis) {
    double t = 0;
    for (size_t i = 0; i < row.size(); ++i)
      t += static_cast<double>(row[i]) * std::log(rho[i]);
    if (std::abs(t) > 1e-12) ts.push_back(std::abs(t));
  }
  if (ts.empty()) return 1.0;
  double g = ts[0];
  for (size_t i = 1; i < ts.size(); ++i) {
    g = real_gcd(g, ts[i], tol);
    if (g < 0) return 1.0; // dense subgroup of the reals
  }
  return std::exp(-g);
}

} // namespace kcube
