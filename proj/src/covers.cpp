#include "kcube/covers.hpp"

#include <algorithm>
#include <numeric>

#include "kcube/errors.hpp"

namespace kcube {

namespace {

bool is_odd_prime(int p) {
  if (p < 3 || p % 2 == 0) return false;
  for (int d = 3; d * d <= p; d += 2)
    if (p % d == 0) return false;
  return true;
}

bool is_permutation(const std::vector<int>& img, int n) {
  if (static_cast<int>(img.size()) != n) return false;
  std::vector<char> seen(n, 0);
  for (int v : img) {
    if (v < 1 || v > n || seen[v - 1]) return false;
    seen[v - 1] = 1;
  }
  return true;
}

std::vector<int> inverse_perm(const std::vector<int>& img) {
  std::vector<int> inv(img.size());
  for (size_t i = 0; i < img.size(); ++i) inv[img[i] - 1] = static_cast<int>(i) + 1;
  return inv;
}

} // namespace

CubeComplex double_cover(const CubeComplex& base) {
  if (base.num_vertices() != 1)
    throw InputError("double cover requires a one-vertex complex");
  const int num_geoms = static_cast<int>(base.geom_edges().size());
  std::vector<GeomSpec> geoms;
  geoms.reserve(2 * num_geoms);
  for (int g = 0; g < num_geoms; ++g) {
    const std::string& pos = base.label(2 * g);
    const std::string& neg = base.label(2 * g + 1);
    const std::string& pos_base = base.base(2 * g);
    const std::string& neg_base = base.base(2 * g + 1);
    int color = base.color(2 * g);
    // Sheet 1 copy runs 1 -> 2, sheet 2 copy runs 2 -> 1; the reverse of
    // x^e is (x^-1) on the other sheet.
    geoms.push_back({0, 1, color, pos + "^1", neg + "^2", pos_base, neg_base});
    geoms.push_back({1, 0, color, pos + "^2", neg + "^1", pos_base, neg_base});
  }
  // Directed edge x^sheet in the cover, for a base directed edge d.
  auto lift = [](int d, int sheet) {
    int g = d / 2;
    if ((d & 1) == 0) return 2 * (2 * g + sheet - 1);
    return 2 * (2 * g + (3 - sheet) - 1) + 1;
  };
  std::vector<ComplexSquare> squares;
  squares.reserve(2 * base.squares().size());
  for (const ComplexSquare& s : base.squares()) {
    squares.push_back({lift(s.a, 1), lift(s.b, 2), lift(s.b_prime, 1),
                       lift(s.a_prime, 2)});
    squares.push_back({lift(s.a, 2), lift(s.b, 1), lift(s.b_prime, 2),
                       lift(s.a_prime, 1)});
  }
  return CubeComplex::from_parts(base.k(), 2, geoms, std::move(squares));
}

HomReport verify_hom(const KCubeStructure& s, const PermAssignment& q) {
  HomReport rep;
  if (q.N < 1) {
    rep.ok = false;
    rep.witnesses.push_back("sheet count must be at least 1");
    return rep;
  }
  for (const auto& [name, img] : q.images) {
    if (s.find(name) < 0) {
      rep.ok = false;
      rep.witnesses.push_back("image given for unknown letter " + name);
    } else if (!is_permutation(img, q.N)) {
      rep.ok = false;
      rep.witnesses.push_back("image of " + name +
                              " is not a permutation of 1.." +
                              std::to_string(q.N));
    }
  }
  for (int x = 0; x < s.letter_count(); ++x) {
    if (!q.images.count(s.name(x))) {
      rep.ok = false;
      rep.witnesses.push_back("no image for letter " + s.name(x));
    }
  }
  if (!rep.ok) return rep;
  auto img = [&](int letter) -> const std::vector<int>& {
    return q.images.at(s.name(letter));
  };
  for (int x = 0; x < s.letter_count(); ++x) {
    int xi = s.inverse(x);
    if (img(xi) != inverse_perm(img(x))) {
      rep.ok = false;
      rep.witnesses.push_back("image of " + s.name(xi) +
                              " is not the inverse of the image of " +
                              s.name(x));
    }
  }
  for (const SquareRelation& sq : s.squares()) {
    const auto& qa = img(sq.a);
    const auto& qb = img(sq.b);
    const auto& qbp = img(sq.b_prime);
    const auto& qap = img(sq.a_prime);
    for (int n = 1; n <= q.N; ++n) {
      int lhs = qa[qb[n - 1] - 1];
      int rhs = qbp[qap[n - 1] - 1];
      if (lhs != rhs) {
        rep.ok = false;
        rep.witnesses.push_back(
            "square (" + s.name(sq.a) + ", " + s.name(sq.b) + ", " +
            s.name(sq.b_prime) + ", " + s.name(sq.a_prime) +
            ") fails at sheet " + std::to_string(n) + ": " +
            std::to_string(lhs) + " != " + std::to_string(rhs));
      }
    }
  }
  return rep;
}

CubeComplex cover_from_hom(const KCubeStructure& s, const PermAssignment& q) {
  HomReport rep = verify_hom(s, q);
  if (!rep.ok)
    throw InputError("assignment is not a homomorphism: " + rep.witnesses[0]);
  const int N = q.N;
  auto image_of = [&](int letter, int n) {
    return q.images.at(s.name(letter))[n - 1];
  };
  // One geometric cover edge per (positive letter, sheet), ordered by
  // letter id then sheet; the positive letter of a pair is the lower id.
  std::vector<int> positives;
  for (int x = 0; x < s.letter_count(); ++x)
    if (x < s.inverse(x)) positives.push_back(x);
  std::vector<int> pos_rank(s.letter_count(), -1);
  for (size_t i = 0; i < positives.size(); ++i)
    pos_rank[positives[i]] = static_cast<int>(i);
  std::vector<GeomSpec> geoms;
  geoms.reserve(positives.size() * N);
  for (int x : positives) {
    int xi = s.inverse(x);
    for (int n = 1; n <= N; ++n) {
      int m = image_of(x, n);
      geoms.push_back({n - 1, m - 1, s.color(x),
                       s.name(x) + "^" + std::to_string(n),
                       s.name(xi) + "^" + std::to_string(m), s.name(x),
                       s.name(xi)});
    }
  }
  // Directed cover edge x^n: for a positive letter the forward traversal of
  // its geometric edge; for an inverse letter the reverse of the positive
  // partner's edge at the matching sheet.
  auto lift = [&](int letter, int n) {
    int xi = s.inverse(letter);
    if (letter < xi) return 2 * (pos_rank[letter] * N + (n - 1));
    int m = image_of(letter, n);
    return 2 * (pos_rank[xi] * N + (m - 1)) + 1;
  };
  std::vector<ComplexSquare> squares;
  squares.reserve(s.squares().size() * N);
  for (const SquareRelation& sq : s.squares()) {
    for (int n = 1; n <= N; ++n) {
      int sheet_s = image_of(sq.a_prime, n);
      int sheet_r = image_of(sq.b, n);
      squares.push_back({lift(sq.a_prime, n), lift(sq.b_prime, sheet_s),
                         lift(sq.b, n), lift(sq.a, sheet_r)});
    }
  }
  return CubeComplex::from_parts(s.k(), N, geoms, std::move(squares));
}

namespace {

// Row-reduces an integer matrix mod p in place and returns the pivot
// columns; rows is a list of equal-length value vectors over 0..p-1.
std::vector<int> rref_mod_p(std::vector<std::vector<int>>& rows, int p) {
  std::vector<int> pivots;
  if (rows.empty()) return pivots;
  const int cols = static_cast<int>(rows[0].size());
  int r = 0;
  auto inv_mod = [&](int a) {
    int result = 1, base = a % p, e = p - 2;
    while (e > 0) {
      if (e & 1) result = result * base % p;
      base = base * base % p;
      e >>= 1;
    }
    return result;
  };
  for (int c = 0; c < cols && r < static_cast<int>(rows.size()); ++c) {
    int pivot = -1;
    for (int i = r; i < static_cast<int>(rows.size()); ++i)
      if (rows[i][c] % p != 0) { pivot = i; break; }
    if (pivot < 0) continue;
    std::swap(rows[r], rows[pivot]);
    int scale = inv_mod(((rows[r][c] % p) + p) % p);
    for (int j = 0; j < cols; ++j)
      rows[r][j] = (rows[r][j] % p + p) % p * scale % p;
    for (int i = 0; i < static_cast<int>(rows.size()); ++i) {
      if (i == r || rows[i][c] % p == 0) continue;
      int f = ((rows[i][c] % p) + p) % p;
      for (int j = 0; j < cols; ++j)
        rows[i][j] = ((rows[i][j] - f * rows[r][j]) % p + p) % p;
    }
    pivots.push_back(c);
    ++r;
  }
  rows.resize(pivots.size());
  return pivots;
}

int rank_mod_p(std::vector<std::vector<int>> rows, int p) {
  return static_cast<int>(rref_mod_p(rows, p).size());
}

} // namespace

std::vector<AbelianSolution> solve_abelian_quotient(const KCubeStructure& s,
                                                    int p, int rank) {
  if (!is_odd_prime(p)) throw InputError("p must be an odd prime");
  if (rank < 1 || rank > 2) throw InputError("rank must be 1 or 2");
  std::vector<int> positives;
  for (int x = 0; x < s.letter_count(); ++x)
    if (x < s.inverse(x)) positives.push_back(x);
  std::vector<int> pos_rank(s.letter_count(), -1);
  for (size_t i = 0; i < positives.size(); ++i)
    pos_rank[positives[i]] = static_cast<int>(i);
  const int L = static_cast<int>(positives.size());
  // Constraint rows: abelianized square relations over the positive
  // generators, with an inverse letter contributing the negated value.
  std::vector<std::vector<int>> eqs;
  eqs.reserve(s.squares().size());
  for (const SquareRelation& sq : s.squares()) {
    std::vector<int> row(L, 0);
    auto add = [&](int letter, int sign) {
      int xi = s.inverse(letter);
      int idx = letter < xi ? pos_rank[letter] : pos_rank[xi];
      int sgn = letter < xi ? sign : -sign;
      row[idx] = ((row[idx] + sgn) % p + p) % p;
    };
    add(sq.a, 1);
    add(sq.b, 1);
    add(sq.b_prime, -1);
    add(sq.a_prime, -1);
    eqs.push_back(std::move(row));
  }
  std::vector<int> pivots = rref_mod_p(eqs, p);
  // Null-space basis: one vector per free column.
  std::vector<char> is_pivot(L, 0);
  for (int c : pivots) is_pivot[c] = 1;
  std::vector<std::vector<int>> null_basis;
  for (int c = 0; c < L; ++c) {
    if (is_pivot[c]) continue;
    std::vector<int> v(L, 0);
    v[c] = 1;
    for (size_t r = 0; r < pivots.size(); ++r)
      v[pivots[r]] = (p - eqs[r][c] % p) % p;
    null_basis.push_back(std::move(v));
  }
  const int d = static_cast<int>(null_basis.size());
  if (d < rank) throw MathError("no surjective solution exists");

  // Enumerate the rank-dimensional subspaces of the solution space by
  // their reduced-echelon coefficient matrices over the null basis.
  std::vector<AbelianSolution> out;
  int N = 1;
  for (int i = 0; i < rank; ++i) N *= p;

  auto emit = [&](const std::vector<std::vector<int>>& coeff) {
    // Functionals on letters: coeff (rank x d) times null basis (d x L).
    std::vector<std::vector<int>> f(rank, std::vector<int>(L, 0));
    for (int i = 0; i < rank; ++i)
      for (int j = 0; j < d; ++j) {
        if (coeff[i][j] == 0) continue;
        for (int c = 0; c < L; ++c)
          f[i][c] = (f[i][c] + coeff[i][j] * null_basis[j][c]) % p;
      }
    AbelianSolution sol;
    sol.assignment.N = N;
    // Group elements of (Z/p)^rank in lexicographic order, 1-based.
    auto index_of = [&](const std::vector<int>& t) {
      int idx = 0;
      for (int i = 0; i < rank; ++i) idx = idx * p + t[i];
      return idx + 1;
    };
    std::vector<std::vector<int>> elems;
    elems.reserve(N);
    std::vector<int> t(rank, 0);
    for (int n = 0; n < N; ++n) {
      elems.push_back(t);
      for (int i = rank - 1; i >= 0; --i) {
        if (++t[i] < p) break;
        t[i] = 0;
      }
    }
    for (int x = 0; x < s.letter_count(); ++x) {
      int xi = s.inverse(x);
      int idx = x < xi ? pos_rank[x] : pos_rank[xi];
      std::vector<int> g(rank);
      for (int i = 0; i < rank; ++i) {
        int v = f[i][idx];
        g[i] = x < xi ? v : (p - v) % p;
      }
      sol.vectors[s.name(x)] = g;
      std::vector<int> perm(N);
      for (int n = 0; n < N; ++n) {
        std::vector<int> sum(rank);
        for (int i = 0; i < rank; ++i) sum[i] = (elems[n][i] + g[i]) % p;
        perm[n] = index_of(sum);
      }
      sol.assignment.images[s.name(x)] = std::move(perm);
    }
    // Does each alphabet on its own already generate (Z/p)^rank?
    sol.each_alphabet_generates = true;
    for (int color = 1; color <= s.k(); ++color) {
      std::vector<std::vector<int>> vals;
      for (int x : s.alphabet(color)) {
        int xi = s.inverse(x);
        if (x > xi) continue;
        std::vector<int> col(rank);
        for (int i = 0; i < rank; ++i) col[i] = f[i][pos_rank[x]];
        vals.push_back(std::move(col));
      }
      if (rank_mod_p(vals, p) < rank) {
        sol.each_alphabet_generates = false;
        break;
      }
    }
    out.push_back(std::move(sol));
  };

  // All strictly increasing pivot-column choices, then all free entries.
  std::vector<int> comb(rank);
  std::iota(comb.begin(), comb.end(), 0);
  while (true) {
    // Free positions: (row i, column c) with c > comb[i], c not a pivot.
    std::vector<std::pair<int, int>> free_pos;
    std::vector<char> pivot_col(d, 0);
    for (int i = 0; i < rank; ++i) pivot_col[comb[i]] = 1;
    for (int i = 0; i < rank; ++i)
      for (int c = comb[i] + 1; c < d; ++c)
        if (!pivot_col[c]) free_pos.push_back({i, c});
    std::vector<int> vals(free_pos.size(), 0);
    while (true) {
      std::vector<std::vector<int>> coeff(rank, std::vector<int>(d, 0));
      for (int i = 0; i < rank; ++i) coeff[i][comb[i]] = 1;
      for (size_t fidx = 0; fidx < free_pos.size(); ++fidx)
        coeff[free_pos[fidx].first][free_pos[fidx].second] = vals[fidx];
      emit(coeff);
      int pos = static_cast<int>(vals.size()) - 1;
      while (pos >= 0 && vals[pos] == p - 1) vals[pos--] = 0;
      if (pos < 0) break;
      ++vals[pos];
    }
    // Next combination in lexicographic order.
    int i = rank - 1;
    while (i >= 0 && comb[i] == d - rank + i) --i;
    if (i < 0) break;
    ++comb[i];
    for (int j = i + 1; j < rank; ++j) comb[j] = comb[j - 1] + 1;
  }
  return out;
}

} // namespace kcube
