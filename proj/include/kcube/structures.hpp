#pragma once

#include <array>
#include <compare>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "kcube/errors.hpp"

namespace kcube {

// One defining relation a·b = b'·a', stored with color(a) < color(b).
// Letters are small integer ids into the owning structure's letter table.
struct SquareRelation {
  int a = -1, b = -1, b_prime = -1, a_prime = -1;
  auto operator<=>(const SquareRelation&) const = default;
};

// One alphabet: the letters of a single color together with the involution
// pairing each letter with its inverse. Pairs may be given in one direction;
// the reverse direction is inferred.
struct AlphabetSpec {
  int color = 0;
  std::vector<std::string> letters;
  std::vector<std::pair<std::string, std::string>> inverses;
};

// Outcome of one named validation condition.
struct CheckItem {
  std::string condition;
  bool pass = true;
  std::vector<std::string> witnesses;
};

struct ValidationReport {
  std::vector<CheckItem> items;
  bool all_pass() const;
  const CheckItem* find(const std::string& condition) const;
};

// A group presentation with k alphabets of formal letters and square
// relations a·b = b'·a', one per geometric square. Construction performs
// structural well-formedness checks only (names resolve, colors match,
// inverses form an involution table, no duplicate squares); the defining
// axioms are checked separately by validate_structure.
class KCubeStructure {
public:
  // Squares given as letter-name 4-tuples (a, b, b', a') meaning a·b = b'·a'.
  // A tuple may lead with the higher color; it is reread lower-color-first.
  static KCubeStructure from_squares(int k, const std::vector<AlphabetSpec>& alphabets,
                                     const std::vector<std::array<std::string, 4>>& squares);

  // Relators e1·e2·e3·e4 = 1 with colors alternating between two alphabets.
  // Each relator yields the square (e1, e2, e4⁻¹, e3⁻¹). Throws InputError
  // if a relator is not color-alternating or if two relators cover the same
  // ordered pair.
  static KCubeStructure from_relators(int k, const std::vector<AlphabetSpec>& alphabets,
                                      const std::vector<std::array<std::string, 4>>& relators);

  int k() const { return k_; }
  int letter_count() const { return static_cast<int>(names_.size()); }
  const std::string& name(int id) const { return names_[id]; }
  int color(int id) const { return colors_[id]; }
  int inverse(int id) const { return inverse_[id]; }
  const std::vector<int>& alphabet(int color) const;
  const std::vector<SquareRelation>& squares() const { return squares_; }

  // Letter id by name; find returns -1 when absent, require throws InputError.
  int find(const std::string& name) const;
  int require(const std::string& name) const;

  // The four algebraically equal readings of one geometric square:
  //   (a, b, b', a'), (a⁻¹, b', b, a'⁻¹), (a'⁻¹, b'⁻¹, b⁻¹, a⁻¹), (a', b⁻¹, b'⁻¹, a).
  std::array<SquareRelation, 4> orbit(const SquareRelation& s) const;

  // Lexicographically least orbit element; the stored representative.
  SquareRelation canonical(const SquareRelation& s) const;

  // The unique (b', a') with x·y = b'·a', from any orbit reading. Throws
  // InputError if x, y share a color, MathError if the pair is covered by
  // zero or several squares.
  std::pair<int, int> phi_letters(int x, int y) const;

  // Squares as length-4 relators [a, b, a'⁻¹, b'⁻¹].
  std::vector<std::array<std::string, 4>> to_relators() const;

  // Sorted canonical square tuples by name; a structure fingerprint.
  std::vector<std::array<std::string, 4>> canonical_square_names() const;

private:
  KCubeStructure() = default;

  static KCubeStructure build(int k, const std::vector<AlphabetSpec>& alphabets);
  void index_squares();
  static long long pair_key(int x, int y) {
    return (static_cast<long long>(x) << 24) | static_cast<long long>(y);
  }

  int k_ = 0;
  std::vector<std::string> names_;
  std::vector<int> colors_;
  std::vector<int> inverse_;
  std::vector<std::vector<int>> alphabets_;
  std::vector<SquareRelation> squares_;
  std::unordered_map<std::string, int> by_name_;
  std::unordered_map<long long, std::pair<int, int>> exchange_;
  std::vector<long long> exchange_dups_;
};

// Checks the defining axioms of a k-cube presentation: the inverse map is a
// fixed-point-free involution preserving color, every alphabet is nonempty,
// every ordered bicolored pair is covered by exactly one square reading, and
// no square forces (a·b)² = 1. Intersection triviality is not checked.
ValidationReport validate_structure(const KCubeStructure& s);

// The arithmetic family over F_{q²} = F_q[t]/(t² + p1·t + p0): letters are
// powers δ^i of a fixed generator δ, grouped into alphabets by the residue
// of i mod (q−1), with relations δ^i·δ^j = δ^{k(i,j)}·δ^{l(i,j)} where
// δ^{x(i,j)} = 1 + δ^{j−i}, y = x + i − j, l = i − x·(q−1), k = j − y·(q−1).
// Inversion is i ↦ i + (q²−1)/2. Throws InputError for composite or even q,
// a reducible polynomial, a non-generator delta, repeated residues, or the
// unsupported residue class 0.
KCubeStructure rsv_structure(int q, int p0, int p1, std::pair<int, int> delta,
                             std::vector<int> residues);

} // namespace kcube
