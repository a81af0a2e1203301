#pragma once

#include <array>
#include <string>
#include <unordered_map>
#include <vector>

#include "kcube/structures.hpp"

namespace kcube {

// One geometric (undirected) edge; its two directed traversals get ids
// 2*geom (positive) and 2*geom+1 (negative).
struct GeomEdge {
  int v0 = 0, v1 = 0, color = 0;
  std::string label;
};

// One directed traversal of a geometric edge.
struct DEdge {
  int origin = 0, terminus = 0, color = 0, geom = -1;
  bool positive = true;
  std::string label; // unique within the complex, e.g. "a1" or "a1^3"
  std::string base;  // letter downstairs under the covering map
};

// One 2-cell, stored as directed-edge ids with a·b = b'·a' and
// color(a) < color(b).
struct ComplexSquare {
  int a = -1, b = -1, b_prime = -1, a_prime = -1;
  auto operator<=>(const ComplexSquare&) const = default;
};

// One 3-cell: the canonical ascending corner path and the six face squares
// in completion order (bottom, side at j=1, side at i=0, side at i=1,
// side at j=0, top).
struct ComplexCube {
  std::array<int, 3> corner{};
  std::array<int, 6> faces{};
};

// Construction recipe for one geometric edge, used by cover builders.
struct GeomSpec {
  int v0 = 0, v1 = 0, color = 0;
  std::string pos_label, neg_label;
  std::string pos_base, neg_base;
};

// A cube complex presented by its 2-skeleton: vertices, geometric edges with
// directed traversals, and squares. 3-cells are materialized on demand by
// enumerate_cubes; higher cells are never stored.
class CubeComplex {
public:
  static CubeComplex from_parts(int k, int num_vertices, const std::vector<GeomSpec>& geoms,
                                std::vector<ComplexSquare> squares);

  int k() const { return k_; }
  int num_vertices() const { return num_vertices_; }
  const std::vector<GeomEdge>& geom_edges() const { return geoms_; }
  const std::vector<DEdge>& dedges() const { return dedges_; }
  const std::vector<ComplexSquare>& squares() const { return squares_; }
  const std::vector<ComplexCube>& cubes() const { return cubes_; }

  static int reverse(int dedge) { return dedge ^ 1; }
  int color(int dedge) const { return dedges_[dedge].color; }
  const std::string& label(int dedge) const { return dedges_[dedge].label; }
  const std::string& base(int dedge) const { return dedges_[dedge].base; }

  // Directed-edge id by label; InputError when absent.
  int dedge_by_label(const std::string& label) const;

  // The four corner readings of a geometric square.
  std::array<ComplexSquare, 4> orbit(const ComplexSquare& s) const;
  ComplexSquare canonical(const ComplexSquare& s) const;

  // The unique (b', a') with x·y = b'·a'. InputError if the pair shares a
  // color or is not a 2-path; MathError on zero or multiple coverage.
  std::pair<int, int> phi(int x, int y) const;

  // Index of the square containing the given reading; -1 when absent.
  int find_square(const ComplexSquare& any_reading) const;

  // Connectivity of the 1-skeleton, orientation disregarded.
  bool connected() const;

  friend int enumerate_cubes(CubeComplex& c);

private:
  CubeComplex() = default;
  void index_squares();
  static long long pair_key(int x, int y) {
    return (static_cast<long long>(x) << 32) | static_cast<unsigned>(y);
  }

  int k_ = 0;
  int num_vertices_ = 0;
  std::vector<GeomEdge> geoms_;
  std::vector<DEdge> dedges_;
  std::vector<ComplexSquare> squares_;
  std::vector<ComplexCube> cubes_;
  std::unordered_map<std::string, int> by_label_;
  std::unordered_map<long long, std::pair<int, int>> exchange_;
  std::vector<long long> exchange_dups_;
};

// The quotient complex of a k-cube presentation: one vertex, one geometric
// loop per letter pair {x, x⁻¹}, one square per relation.
CubeComplex build_one_vertex_complex(const KCubeStructure& s);

// Completes every ascending tricolored corner path to a 3-cube via the two
// exchange chains, verifies they agree, and deduplicates cubes over their
// eight corners. Fills c's cube list and returns the count. Returns 0 for
// k=2. Throws MathError "completion inconsistency" when the two chains
// disagree, which certifies the complex is not a cube complex.
int enumerate_cubes(CubeComplex& c);

} // namespace kcube
