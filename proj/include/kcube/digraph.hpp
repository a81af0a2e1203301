#pragma once

#include <array>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "kcube/complex.hpp"
#include "kcube/structures.hpp"

namespace kcube {

struct DigraphEdge {
  int origin = 0, terminus = 0, color = 0;
  std::string label;
};

// A k-dimensional digraph: colored directed edges and the exchange relation
// phi on bicolored 2-paths, stored as entries [x, y, y', x'] meaning
// x·y ∼ y'·x'. Entries are kept verbatim (deduplicated exact repeats) so
// defective tables can be represented and diagnosed by the validators.
class ColoredDigraph {
public:
  ColoredDigraph(int k, int num_vertices, std::vector<DigraphEdge> edges,
                 std::vector<std::array<int, 4>> phi_entries);

  int k() const { return k_; }
  int num_vertices() const { return num_vertices_; }
  const std::vector<DigraphEdge>& edges() const { return edges_; }
  const DigraphEdge& edge(int e) const { return edges_[e]; }
  int color(int e) const { return edges_[e].color; }
  const std::string& label(int e) const { return edges_[e].label; }
  const std::vector<std::array<int, 4>>& phi_entries() const { return phi_entries_; }

  // Edge id by label; InputError when absent.
  int edge_by_label(const std::string& label) const;

  // The image (y', x') of the 2-path x·y; nullopt when no entry exists,
  // MathError when several conflicting entries exist.
  std::optional<std::pair<int, int>> phi(int x, int y) const;

  const std::vector<int>& out_edges(int v) const { return out_[v]; }
  const std::vector<int>& in_edges(int v) const { return in_[v]; }

private:
  static long long pair_key(int x, int y) {
    return (static_cast<long long>(x) << 32) | static_cast<unsigned>(y);
  }

  int k_ = 0;
  int num_vertices_ = 0;
  std::vector<DigraphEdge> edges_;
  std::vector<std::array<int, 4>> phi_entries_;
  std::unordered_map<std::string, int> by_label_;
  std::unordered_map<long long, std::pair<int, int>> table_;
  std::vector<long long> dups_;
  std::vector<std::vector<int>> out_, in_;
};

// Reads the digraph off a cube complex: the directed traversals become the
// edges and each square contributes its exchange entries. Throws MathError
// when some bicolored 2-path lies in zero or in two or more squares.
ColoredDigraph digraph_from_complex(const CubeComplex& c);

// First defining axiom: phi is total and single-valued on bicolored
// 2-paths (stray entries on non-2-paths also count as defects), image
// colors swap, endpoints agree (o(y')=o(x), t(x')=t(y), image is again a
// 2-path), and phi² = id. Report conditions: "totality", "colors",
// "endpoints", "involution".
ValidationReport validate_f1(const ColoredDigraph& dg);

// Second defining axiom: for every tricolored 2-path triple x·y·z the two
// completion chains produce the same far edges. Report condition: "f2".
ValidationReport validate_f2(const ColoredDigraph& dg);

struct RigidityReport {
  bool left = true, right = true;
  std::vector<std::string> witnesses;
};

// Right rigid: every ordered pair of distinctly colored edges with a common
// origin is completed to exactly one exchange relation x·y' ∼ y·x'. Left
// rigid dually at common termini.
RigidityReport check_rigidity(const ColoredDigraph& dg);

bool strongly_connected(const ColoredDigraph& dg);

} // namespace kcube
