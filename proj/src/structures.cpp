#include "kcube/structures.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace kcube {

bool ValidationReport::all_pass() const {
  for (const auto& item : items)
    if (!item.pass) return false;
  return true;
}

const CheckItem* ValidationReport::find(const std::string& condition) const {
  for (const auto& item : items)
    if (item.condition == condition) return &item;
  return nullptr;
}

const std::vector<int>& KCubeStructure::alphabet(int color) const {
  if (color < 1 || color > k_) throw InputError("alphabet color out of range: " + std::to_string(color));
  return alphabets_[color - 1];
}

int KCubeStructure::find(const std::string& name) const {
  auto it = by_name_.find(name);
  return it == by_name_.end() ? -1 : it->second;
}

int KCubeStructure::require(const std::string& name) const {
  int id = find(name);
  if (id < 0) throw InputError("unknown letter: " + name);
  return id;
}

std::array<SquareRelation, 4> KCubeStructure::orbit(const SquareRelation& s) const {
  const int a = s.a, b = s.b, bp = s.b_prime, ap = s.a_prime;
  return {SquareRelation{a, b, bp, ap},
          SquareRelation{inverse(a), bp, b, inverse(ap)},
          SquareRelation{inverse(ap), inverse(bp), inverse(b), inverse(a)},
          SquareRelation{ap, inverse(b), inverse(bp), a}};
}

SquareRelation KCubeStructure::canonical(const SquareRelation& s) const {
  auto reps = orbit(s);
  return *std::min_element(reps.begin(), reps.end());
}

KCubeStructure KCubeStructure::build(int k, const std::vector<AlphabetSpec>& alphabets) {
  if (k < 2) throw InputError("a cube structure needs k >= 2 colors");
  if (static_cast<int>(alphabets.size()) != k)
    throw InputError("expected " + std::to_string(k) + " alphabets, got " + std::to_string(alphabets.size()));

  KCubeStructure s;
  s.k_ = k;
  s.alphabets_.resize(k);

  std::vector<const AlphabetSpec*> by_color(k, nullptr);
  for (const auto& spec : alphabets) {
    if (spec.color < 1 || spec.color > k)
      throw InputError("alphabet color out of range 1..k: " + std::to_string(spec.color));
    if (by_color[spec.color - 1]) throw InputError("duplicate alphabet color " + std::to_string(spec.color));
    by_color[spec.color - 1] = &spec;
  }

  for (int c = 1; c <= k; ++c) {
    const AlphabetSpec& spec = *by_color[c - 1];
    if (spec.letters.empty()) throw InputError("alphabet " + std::to_string(c) + " is empty");
    for (const auto& letter : spec.letters) {
      if (letter.empty()) throw InputError("empty letter name");
      if (s.by_name_.count(letter)) throw InputError("duplicate letter name: " + letter);
      int id = static_cast<int>(s.names_.size());
      s.by_name_.emplace(letter, id);
      s.names_.push_back(letter);
      s.colors_.push_back(c);
      s.alphabets_[c - 1].push_back(id);
    }
  }

  s.inverse_.assign(s.names_.size(), -1);
  for (int c = 1; c <= k; ++c) {
    const AlphabetSpec& spec = *by_color[c - 1];
    for (const auto& [from, to] : spec.inverses) {
      int x = s.require(from), y = s.require(to);
      if (s.colors_[x] != c || s.colors_[y] != c)
        throw InputError("inverse pair (" + from + ", " + to + ") crosses alphabet " + std::to_string(c));
      if ((s.inverse_[x] != -1 && s.inverse_[x] != y) || (s.inverse_[y] != -1 && s.inverse_[y] != x))
        throw InputError("inverse map is not an involution at " + from);
      s.inverse_[x] = y;
      s.inverse_[y] = x;
    }
  }
  for (int id = 0; id < s.letter_count(); ++id)
    if (s.inverse_[id] == -1) throw InputError("letter without inverse: " + s.names_[id]);

  return s;
}

void KCubeStructure::index_squares() {
  std::sort(squares_.begin(), squares_.end());
  exchange_.clear();
  exchange_dups_.clear();
  std::set<long long> dups;
  for (const auto& sq : squares_) {
    for (const auto& rep : orbit(sq)) {
      // Each orbit element (A,B,B',A') carries two relations read as words:
      // the vertical-horizontal pair A·B = B'·A' and its mirror B'·A' = A·B.
      const std::array<std::array<int, 4>, 2> entries = {{{rep.a, rep.b, rep.b_prime, rep.a_prime},
                                                          {rep.b_prime, rep.a_prime, rep.a, rep.b}}};
      for (const auto& e : entries) {
        long long key = pair_key(e[0], e[1]);
        auto [it, fresh] = exchange_.emplace(key, std::make_pair(e[2], e[3]));
        if (!fresh) dups.insert(key);
      }
    }
  }
  exchange_dups_.assign(dups.begin(), dups.end());
}

std::pair<int, int> KCubeStructure::phi_letters(int x, int y) const {
  if (x < 0 || y < 0 || x >= letter_count() || y >= letter_count())
    throw InputError("letter id out of range");
  if (colors_[x] == colors_[y])
    throw InputError("pair (" + names_[x] + ", " + names_[y] + ") is not bicolored");
  long long key = pair_key(x, y);
  if (std::binary_search(exchange_dups_.begin(), exchange_dups_.end(), key))
    throw MathError("pair (" + names_[x] + ", " + names_[y] + ") is covered by multiple squares");
  auto it = exchange_.find(key);
  if (it == exchange_.end())
    throw MathError("pair (" + names_[x] + ", " + names_[y] + ") is covered by no square");
  return it->second;
}

namespace {

// Normalize a relation tuple (possibly given horizontal-first) to have
// color(a) < color(b): X·Y = Y'·X' with X of the higher color rereads as
// Y'·X' = X·Y.
SquareRelation lower_color_first(const KCubeStructure& s, int a, int b, int bp, int ap) {
  if (s.color(a) < s.color(b)) return SquareRelation{a, b, bp, ap};
  return SquareRelation{bp, ap, a, b};
}

void check_square_colors(const KCubeStructure& s, const SquareRelation& sq, const std::string& what) {
  if (s.color(sq.a) != s.color(sq.a_prime) || s.color(sq.b) != s.color(sq.b_prime) ||
      s.color(sq.a) == s.color(sq.b))
    throw InputError(what + " does not follow the color pattern (i,j,j,i): (" + s.name(sq.a) + ", " +
                     s.name(sq.b) + ", " + s.name(sq.b_prime) + ", " + s.name(sq.a_prime) + ")");
}

// Orbit representatives with exact duplicates removed (degenerate orbits,
// e.g. a 2-torsion square, repeat a tuple).
std::vector<SquareRelation> unique_orbit(const KCubeStructure& s, const SquareRelation& sq) {
  auto reps = s.orbit(sq);
  std::vector<SquareRelation> out;
  for (const auto& rep : reps)
    if (std::find(out.begin(), out.end(), rep) == out.end()) out.push_back(rep);
  return out;
}

} // namespace

KCubeStructure KCubeStructure::from_squares(int k, const std::vector<AlphabetSpec>& alphabets,
                                            const std::vector<std::array<std::string, 4>>& squares) {
  KCubeStructure s = build(k, alphabets);
  std::set<SquareRelation> seen;
  for (const auto& t : squares) {
    int a = s.require(t[0]), b = s.require(t[1]), bp = s.require(t[2]), ap = s.require(t[3]);
    if (s.color(a) == s.color(b))
      throw InputError("square (" + t[0] + ", " + t[1] + ", …) is not bicolored");
    SquareRelation raw = lower_color_first(s, a, b, bp, ap);
    check_square_colors(s, raw, "input square");
    SquareRelation canon = s.canonical(raw);
    if (!seen.insert(canon).second)
      throw InputError("duplicate square: (" + t[0] + ", " + t[1] + ", " + t[2] + ", " + t[3] + ")");
    // Cross-square pair collisions are left for validate_structure to report,
    // so that defective presentations can be constructed and diagnosed.
    s.squares_.push_back(canon);
  }
  s.index_squares();
  return s;
}

KCubeStructure KCubeStructure::from_relators(int k, const std::vector<AlphabetSpec>& alphabets,
                                             const std::vector<std::array<std::string, 4>>& relators) {
  KCubeStructure s = build(k, alphabets);
  std::map<std::pair<int, int>, SquareRelation> vh_seen;
  for (const auto& r : relators) {
    int e1 = s.require(r[0]), e2 = s.require(r[1]), e3 = s.require(r[2]), e4 = s.require(r[3]);
    if (s.color(e1) != s.color(e3) || s.color(e2) != s.color(e4) || s.color(e1) == s.color(e2))
      throw InputError("relator not color-alternating: " + r[0] + " " + r[1] + " " + r[2] + " " + r[3]);
    // e1·e2·e3·e4 = 1  ⟹  e1·e2 = e4⁻¹·e3⁻¹.
    SquareRelation rel = lower_color_first(s, e1, e2, s.inverse(e4), s.inverse(e3));
    check_square_colors(s, rel, "relator");
    SquareRelation canon = s.canonical(rel);
    for (const auto& rep : unique_orbit(s, canon)) {
      auto key = std::make_pair(rep.a, rep.b);
      if (vh_seen.count(key))
        throw InputError("pair (" + s.name(rep.a) + ", " + s.name(rep.b) + ") covered twice (relator " +
                         r[0] + " " + r[1] + " " + r[2] + " " + r[3] + ")");
      vh_seen.emplace(key, canon);
    }
    s.squares_.push_back(canon);
  }
  s.index_squares();
  return s;
}

std::vector<std::array<std::string, 4>> KCubeStructure::to_relators() const {
  std::vector<std::array<std::string, 4>> out;
  out.reserve(squares_.size());
  for (const auto& sq : squares_)
    out.push_back({name(sq.a), name(sq.b), name(inverse(sq.a_prime)), name(inverse(sq.b_prime))});
  return out;
}

std::vector<std::array<std::string, 4>> KCubeStructure::canonical_square_names() const {
  std::vector<std::array<std::string, 4>> out;
  out.reserve(squares_.size());
  for (const auto& sq : squares_)
    out.push_back({name(sq.a), name(sq.b), name(sq.b_prime), name(sq.a_prime)});
  std::sort(out.begin(), out.end());
  return out;
}

ValidationReport validate_structure(const KCubeStructure& s) {
  ValidationReport report;

  CheckItem involution{"involution", true, {}};
  for (int id = 0; id < s.letter_count(); ++id) {
    if (s.inverse(id) == id) {
      involution.pass = false;
      involution.witnesses.push_back("letter " + s.name(id) + " is its own inverse");
    }
    if (s.inverse(s.inverse(id)) != id) {
      involution.pass = false;
      involution.witnesses.push_back("inverse map not involutive at " + s.name(id));
    }
    if (s.color(s.inverse(id)) != s.color(id)) {
      involution.pass = false;
      involution.witnesses.push_back("inverse of " + s.name(id) + " changes color");
    }
  }
  report.items.push_back(std::move(involution));

  // The presented group is generated by the letters by construction; the
  // check degenerates to all alphabets being nonempty.
  CheckItem generation{"generation", true, {}};
  for (int c = 1; c <= s.k(); ++c) {
    if (s.alphabet(c).empty()) {
      generation.pass = false;
      generation.witnesses.push_back("alphabet " + std::to_string(c) + " is empty");
    }
  }
  report.items.push_back(std::move(generation));

  // Product completeness: orbit expansion must cover every ordered bicolored
  // pair exactly once, in both reading directions. This is the size condition
  // |A_i·A_j| = |A_i|·|A_j| together with A_i·A_j = A_j·A_i.
  CheckItem products{"products", true, {}};
  {
    std::map<std::pair<int, int>, int> cover;
    for (const auto& sq : s.squares())
      for (const auto& rep : s.orbit(sq)) {
        cover[{rep.a, rep.b}] += 1;
        cover[{rep.b_prime, rep.a_prime}] += 1;
      }
    for (int x = 0; x < s.letter_count(); ++x)
      for (int y = 0; y < s.letter_count(); ++y) {
        if (s.color(x) == s.color(y)) continue;
        auto it = cover.find({x, y});
        int n = it == cover.end() ? 0 : it->second;
        if (n != 1) {
          products.pass = false;
          products.witnesses.push_back("pair (" + s.name(x) + ", " + s.name(y) + ") covered " +
                                       std::to_string(n) + " times");
        }
      }
  }
  report.items.push_back(std::move(products));

  CheckItem torsion{"no_2_torsion", true, {}};
  for (const auto& sq : s.squares()) {
    if (sq.b_prime == s.inverse(sq.b) && sq.a_prime == s.inverse(sq.a)) {
      torsion.pass = false;
      torsion.witnesses.push_back("(" + s.name(sq.a) + "·" + s.name(sq.b) + ")² = 1 via square (" +
                                  s.name(sq.a) + ", " + s.name(sq.b) + ", " + s.name(sq.b_prime) + ", " +
                                  s.name(sq.a_prime) + ")");
    }
  }
  report.items.push_back(std::move(torsion));

  return report;
}

namespace {

bool is_odd_prime(int q) {
  if (q < 3 || q % 2 == 0) return false;
  for (int d = 3; static_cast<long long>(d) * d <= q; d += 2)
    if (q % d == 0) return false;
  return true;
}

// F_{q²} as pairs (c0, c1) = c0 + c1·t over Z/q with t² = −(p1·t + p0).
struct QuadField {
  int q, p0, p1;
  using E = std::pair<int, int>;

  QuadField(int q_, int p0_, int p1_) : q(q_), p0(p0_), p1(p1_) {
    for (int r = 0; r < q; ++r)
      if ((r * r + p1 * r + p0) % q == 0)
        throw InputError("reducible field polynomial: t² + " + std::to_string(p1) + "t + " +
                         std::to_string(p0) + " has root " + std::to_string(r) + " mod " + std::to_string(q));
  }

  E one() const { return {1, 0}; }
  E add(E x, E y) const { return {(x.first + y.first) % q, (x.second + y.second) % q}; }
  E mul(E x, E y) const {
    long long c0 = static_cast<long long>(x.first) * y.first;
    long long c1 = static_cast<long long>(x.first) * y.second + static_cast<long long>(x.second) * y.first;
    long long c2 = static_cast<long long>(x.second) * y.second;
    // Reduce the t² coefficient with t² ≡ −p1·t − p0.
    c1 -= c2 * p1;
    c0 -= c2 * p0;
    auto m = [this](long long v) { return static_cast<int>(((v % q) + q) % q); };
    return {m(c0), m(c1)};
  }
  int key(E x) const { return x.first * q + x.second; }
};

} // namespace

KCubeStructure rsv_structure(int q, int p0, int p1, std::pair<int, int> delta,
                             std::vector<int> residues) {
  if (!is_odd_prime(q)) throw InputError("q must be an odd prime, got " + std::to_string(q));
  auto normmod = [](long long v, int m) { return static_cast<int>(((v % m) + m) % m); };
  p0 = normmod(p0, q);
  p1 = normmod(p1, q);
  QuadField F(q, p0, p1);
  const int n = q * q - 1;
  const int half = n / 2;

  QuadField::E d = {normmod(delta.first, q), normmod(delta.second, q)};
  if (d == std::make_pair(0, 0)) throw InputError("delta must be nonzero");

  // Discrete log table by exhaustive enumeration; doubles as the order check.
  std::unordered_map<int, int> dlog;
  std::vector<QuadField::E> power(n);
  QuadField::E acc = F.one();
  for (int e = 0; e < n; ++e) {
    if (dlog.count(F.key(acc)))
      throw InputError("delta is not a generator of the multiplicative group (order " +
                       std::to_string(e) + " < " + std::to_string(n) + ")");
    dlog.emplace(F.key(acc), e);
    power[e] = acc;
    acc = F.mul(acc, d);
  }
  if (acc != F.one()) throw InputError("delta is not a generator of the multiplicative group");

  // Residue classes mod (q−1), one alphabet per class, ascending.
  const int m = q - 1;
  std::set<int> rset;
  for (int r : residues) {
    int rr = normmod(r, m);
    if (rr == 0) throw InputError("residue class 0 mod (q-1) is not supported");
    if (!rset.insert(rr).second) throw InputError("residues not pairwise distinct");
  }
  if (rset.size() < 2) throw InputError("need at least 2 residue classes");
  if (rset.size() > 26) throw InputError("too many residue classes for letter naming");

  std::vector<int> classes(rset.begin(), rset.end());
  const int k = static_cast<int>(classes.size());

  // Letters a_i named with one prefix per color: 'a' + index, 'b' + index, …
  std::vector<AlphabetSpec> alphabets(k);
  std::vector<std::string> name_of(n);
  std::vector<int> class_of(n, -1);
  for (int c = 0; c < k; ++c) {
    alphabets[c].color = c + 1;
    char prefix = static_cast<char>('a' + c);
    for (int i = classes[c]; i < n; i += m) {
      name_of[i] = std::string(1, prefix) + std::to_string(i);
      class_of[i] = c;
      alphabets[c].letters.push_back(name_of[i]);
    }
    for (int i = classes[c]; i < n; i += m) {
      int j = (i + half) % n;
      if (i < j) alphabets[c].inverses.emplace_back(name_of[i], name_of[j]);
    }
  }

  // Squares a_i·a_j = a_{k(i,j)}·a_{l(i,j)} for letters in distinct classes.
  // The enumeration visits each geometric square once per orbit element, so
  // deduplicate by the least orbit tuple at the index level.
  auto inv = [&](int i) { return (i + half) % n; };
  std::set<std::array<int, 4>> canon_keys;
  std::vector<std::array<std::string, 4>> squares;
  for (int ci = 0; ci < k; ++ci)
    for (int cj = ci + 1; cj < k; ++cj)
      for (int i = classes[ci]; i < n; i += m)
        for (int j = classes[cj]; j < n; j += m) {
          QuadField::E v = F.add(F.one(), power[normmod(j - i, n)]);
          auto it = dlog.find(F.key(v));
          if (it == dlog.end()) throw MathError("1 + delta^(j-i) vanished unexpectedly");
          int x = it->second;
          int y = normmod(static_cast<long long>(x) + i - j, n);
          int l = normmod(static_cast<long long>(i) - static_cast<long long>(x) * m, n);
          int kk = normmod(static_cast<long long>(j) - static_cast<long long>(y) * m, n);
          if (class_of[l] != ci || class_of[kk] != cj)
            throw MathError("square completion left its residue class");
          std::array<std::array<int, 4>, 4> reps = {{{i, j, kk, l},
                                                     {inv(i), kk, j, inv(l)},
                                                     {inv(l), inv(kk), inv(j), inv(i)},
                                                     {l, inv(j), inv(kk), i}}};
          std::array<int, 4> key = *std::min_element(reps.begin(), reps.end());
          if (canon_keys.insert(key).second)
            squares.push_back({name_of[key[0]], name_of[key[1]], name_of[key[2]], name_of[key[3]]});
        }

  return KCubeStructure::from_squares(k, alphabets, squares);
}

} // namespace kcube
