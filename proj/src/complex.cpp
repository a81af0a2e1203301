#include "kcube/complex.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace kcube {

namespace {

ComplexSquare lower_color_first(const CubeComplex& c, const ComplexSquare& s) {
  if (c.color(s.a) < c.color(s.b)) return s;
  return ComplexSquare{s.b_prime, s.a_prime, s.a, s.b};
}

} // namespace

CubeComplex CubeComplex::from_parts(int k, int num_vertices, const std::vector<GeomSpec>& geoms,
                                    std::vector<ComplexSquare> squares) {
  if (k < 2) throw InputError("a cube complex needs k >= 2 colors");
  if (num_vertices < 1) throw InputError("a cube complex needs at least one vertex");
  CubeComplex c;
  c.k_ = k;
  c.num_vertices_ = num_vertices;
  for (const auto& g : geoms) {
    if (g.v0 < 0 || g.v0 >= num_vertices || g.v1 < 0 || g.v1 >= num_vertices)
      throw InputError("geometric edge endpoint out of range");
    if (g.color < 1 || g.color > k) throw InputError("geometric edge color out of range");
    int id = static_cast<int>(c.geoms_.size());
    c.geoms_.push_back(GeomEdge{g.v0, g.v1, g.color, g.pos_label});
    c.dedges_.push_back(DEdge{g.v0, g.v1, g.color, id, true, g.pos_label, g.pos_base});
    c.dedges_.push_back(DEdge{g.v1, g.v0, g.color, id, false, g.neg_label, g.neg_base});
  }
  for (int e = 0; e < static_cast<int>(c.dedges_.size()); ++e) {
    if (c.dedges_[e].label.empty()) throw InputError("directed edge without label");
    if (!c.by_label_.emplace(c.dedges_[e].label, e).second)
      throw InputError("duplicate directed edge label: " + c.dedges_[e].label);
  }

  std::set<ComplexSquare> seen;
  for (auto& s : squares) {
    for (int e : {s.a, s.b, s.b_prime, s.a_prime})
      if (e < 0 || e >= static_cast<int>(c.dedges_.size()))
        throw InputError("square references an unknown directed edge");
    s = lower_color_first(c, s);
    if (c.color(s.a) != c.color(s.a_prime) || c.color(s.b) != c.color(s.b_prime) ||
        c.color(s.a) == c.color(s.b))
      throw InputError("square does not follow the color pattern (i,j,j,i)");
    const DEdge& A = c.dedges_[s.a];
    const DEdge& B = c.dedges_[s.b];
    const DEdge& Bp = c.dedges_[s.b_prime];
    const DEdge& Ap = c.dedges_[s.a_prime];
    if (B.origin != A.terminus || Bp.origin != A.origin || Ap.origin != Bp.terminus ||
        Ap.terminus != B.terminus)
      throw InputError("square boundary is not two parallel 2-paths: (" + A.label + ", " + B.label +
                       ", " + Bp.label + ", " + Ap.label + ")");
    ComplexSquare canon = c.canonical(s);
    if (!seen.insert(canon).second)
      throw InputError("duplicate square: (" + A.label + ", " + B.label + ", " + Bp.label + ", " +
                       Ap.label + ")");
    c.squares_.push_back(canon);
  }
  c.index_squares();
  return c;
}

int CubeComplex::dedge_by_label(const std::string& label) const {
  auto it = by_label_.find(label);
  if (it == by_label_.end()) throw InputError("unknown directed edge label: " + label);
  return it->second;
}

std::array<ComplexSquare, 4> CubeComplex::orbit(const ComplexSquare& s) const {
  const int a = s.a, b = s.b, bp = s.b_prime, ap = s.a_prime;
  return {ComplexSquare{a, b, bp, ap},
          ComplexSquare{reverse(a), bp, b, reverse(ap)},
          ComplexSquare{reverse(ap), reverse(bp), reverse(b), reverse(a)},
          ComplexSquare{ap, reverse(b), reverse(bp), a}};
}

ComplexSquare CubeComplex::canonical(const ComplexSquare& s) const {
  auto reps = orbit(s);
  return *std::min_element(reps.begin(), reps.end());
}

void CubeComplex::index_squares() {
  std::sort(squares_.begin(), squares_.end());
  exchange_.clear();
  exchange_dups_.clear();
  std::set<long long> dups;
  for (const auto& sq : squares_) {
    for (const auto& rep : orbit(sq)) {
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

std::pair<int, int> CubeComplex::phi(int x, int y) const {
  if (x < 0 || y < 0 || x >= static_cast<int>(dedges_.size()) || y >= static_cast<int>(dedges_.size()))
    throw InputError("directed edge id out of range");
  if (color(x) == color(y))
    throw InputError("pair (" + label(x) + ", " + label(y) + ") is not bicolored");
  if (dedges_[x].terminus != dedges_[y].origin)
    throw InputError("(" + label(x) + ", " + label(y) + ") is not a 2-path");
  long long key = pair_key(x, y);
  if (std::binary_search(exchange_dups_.begin(), exchange_dups_.end(), key))
    throw MathError("2-path (" + label(x) + ", " + label(y) + ") is contained in multiple squares");
  auto it = exchange_.find(key);
  if (it == exchange_.end())
    throw MathError("2-path (" + label(x) + ", " + label(y) + ") is contained in no square");
  return it->second;
}

int CubeComplex::find_square(const ComplexSquare& any_reading) const {
  ComplexSquare canon = canonical(lower_color_first(*this, any_reading));
  auto it = std::lower_bound(squares_.begin(), squares_.end(), canon);
  if (it == squares_.end() || *it != canon) return -1;
  return static_cast<int>(it - squares_.begin());
}

bool CubeComplex::connected() const {
  std::vector<int> root(num_vertices_);
  std::iota(root.begin(), root.end(), 0);
  auto find = [&](int v) {
    while (root[v] != v) v = root[v] = root[root[v]];
    return v;
  };
  for (const auto& g : geoms_) root[find(g.v0)] = find(g.v1);
  for (int v = 0; v < num_vertices_; ++v)
    if (find(v) != find(0)) return false;
  return true;
}

CubeComplex build_one_vertex_complex(const KCubeStructure& s) {
  std::vector<GeomSpec> geoms;
  std::vector<int> dedge_of(s.letter_count(), -1);
  for (int x = 0; x < s.letter_count(); ++x) {
    int xi = s.inverse(x);
    if (xi < x) continue; // geometric edge emitted at the smaller id
    int g = static_cast<int>(geoms.size());
    geoms.push_back(GeomSpec{0, 0, s.color(x), s.name(x), s.name(xi), s.name(x), s.name(xi)});
    dedge_of[x] = 2 * g;
    dedge_of[xi] = 2 * g + 1;
  }
  std::vector<ComplexSquare> squares;
  squares.reserve(s.squares().size());
  for (const auto& sq : s.squares())
    squares.push_back(
        ComplexSquare{dedge_of[sq.a], dedge_of[sq.b], dedge_of[sq.b_prime], dedge_of[sq.a_prime]});
  return CubeComplex::from_parts(s.k(), 1, geoms, std::move(squares));
}

int enumerate_cubes(CubeComplex& c) {
  c.cubes_.clear();
  if (c.k_ < 3) return 0;

  const int E = static_cast<int>(c.dedges_.size());
  std::vector<std::vector<int>> out(c.num_vertices_);
  for (int e = 0; e < E; ++e) out[c.dedges_[e].origin].push_back(e);

  for (int x = 0; x < E; ++x) {
    for (int y : out[c.dedges_[x].terminus]) {
      if (c.color(y) <= c.color(x)) continue;
      for (int z : out[c.dedges_[y].terminus]) {
        if (c.color(z) <= c.color(y)) continue;

        // Chain one: over the bottom face, then the far side face, then the
        // face opposite the base corner.
        auto [y1, x1] = c.phi(x, y);
        auto [z1, x2] = c.phi(x1, z);
        auto [z2, y2] = c.phi(y1, z1);
        // Chain two: near side, front, top.
        auto [w1, v1] = c.phi(y, z);
        auto [w2, u1] = c.phi(x, w1);
        auto [v2, u2] = c.phi(u1, v1);
        if (u2 != x2 || v2 != y2 || w2 != z2)
          throw MathError("completion inconsistency at corner (" + c.label(x) + ", " + c.label(y) +
                          ", " + c.label(z) + ")");

        // The eight ascending corner paths of the completed cube; the cube
        // is recorded only from its least corner path.
        const std::array<std::array<int, 3>, 8> corners = {{
            {x, y, z},
            {CubeComplex::reverse(x), y1, z1},
            {x1, CubeComplex::reverse(y), w1},
            {CubeComplex::reverse(x1), CubeComplex::reverse(y1), z2},
            {u1, v1, CubeComplex::reverse(z)},
            {CubeComplex::reverse(u1), y2, CubeComplex::reverse(z1)},
            {x2, CubeComplex::reverse(v1), CubeComplex::reverse(w1)},
            {CubeComplex::reverse(x2), CubeComplex::reverse(y2), CubeComplex::reverse(z2)},
        }};
        const std::array<int, 3> self = {x, y, z};
        if (*std::min_element(corners.begin(), corners.end()) != self) continue;

        ComplexCube cube;
        cube.corner = self;
        const std::array<ComplexSquare, 6> faces = {{
            {x, y, y1, x1},
            {x1, z, z1, x2},
            {y1, z1, z2, y2},
            {y, z, w1, v1},
            {x, w1, w2, u1},
            {u1, v1, v2, u2},
        }};
        for (int f = 0; f < 6; ++f) {
          int idx = c.find_square(faces[f]);
          if (idx < 0)
            throw MathError("cube face is not a square of the complex at corner (" + c.label(x) +
                            ", " + c.label(y) + ", " + c.label(z) + ")");
          cube.faces[f] = idx;
        }
        c.cubes_.push_back(cube);
      }
    }
  }
  std::sort(c.cubes_.begin(), c.cubes_.end(),
            [](const ComplexCube& l, const ComplexCube& r) { return l.corner < r.corner; });
  return static_cast<int>(c.cubes_.size());
}

} // namespace kcube
