#include "kcube/fixtures.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "kcube/io.hpp"

namespace kcube {

namespace {

// Group of order 24·23·… no: the arithmetic lattice with three alphabets of
// six letters, x ↦ x+12 mod 24 as inversion.
const char* const kGamma1Relators[] = {
    "a1 b2 a17 b22", "a1 b6 a9 b10",  "a1 b10 a9 b6",  "a1 b14 a21 b14", "a1 b18 a5 b18",
    "a1 b22 a17 b2", "a5 b2 a21 b6",  "a5 b6 a21 b2",  "a5 b22 a9 b22",  "a1 c3 a17 c3",
    "a1 c7 a13 c19", "a1 c11 a9 c11", "a1 c15 a1 c23", "a5 c3 a5 c19",   "a5 c7 a21 c7",
    "a5 c11 a17 c23", "a9 c3 a21 c15", "a9 c7 a9 c23", "b2 c3 b18 c23",  "b2 c7 b10 c11",
    "b2 c11 b10 c7", "b2 c15 b22 c15", "b2 c19 b6 c19", "b2 c23 b18 c3", "b6 c3 b22 c7",
    "b6 c7 b22 c3",  "b6 c23 b10 c23"};

// The (4,6,8)-valency lattice: alphabets a1..a4, b1..b6, c1..c8 with
// inversion x_r ↦ x_{r+size/2}.
const char* const kGamma2Relators[] = {
    "a1 b1 a4 b2", "a1 b2 a4 b4", "a1 b3 a2 b1", "a1 b4 a2 b3", "a1 b5 a1 b6", "a2 b2 a2 b6",
    "a1 c1 a2 c8", "a1 c2 a4 c4", "a1 c3 a2 c2", "a1 c4 a3 c3", "a1 c5 a1 c6", "a1 c7 a4 c1",
    "a2 c1 a4 c6", "a2 c4 a2 c7", "b1 c1 b5 c4", "b1 c2 b1 c5", "b1 c3 b6 c1", "b1 c4 b3 c6",
    "b1 c6 b2 c3", "b1 c7 b1 c8", "b2 c1 b3 c2", "b2 c2 b5 c5", "b2 c4 b5 c3", "b2 c7 b6 c4",
    "b3 c1 b6 c6", "b3 c4 b6 c3"};

// The (4,4)-group: two alphabets of four letters, a3 = a1⁻¹, a4 = a2⁻¹,
// four squares.
const char* const kVH44Squares[] = {"a1 b1 b4 a3", "a1 b3 b1 a4", "a1 b4 b2 a2", "a2 b1 b2 a4"};

// 25-vertex 6-regular graph, rows are 1-indexed neighbor lists.
const int kMatrix25Adj[25][6] = {
    {2, 3, 4, 5, 6, 7},     {1, 3, 7, 8, 9, 10},    {1, 2, 4, 9, 11, 12},   {1, 3, 5, 12, 13, 14},
    {1, 4, 6, 14, 15, 16},  {1, 5, 7, 16, 17, 18},  {1, 2, 6, 10, 18, 19},  {2, 9, 10, 15, 20, 21},
    {2, 3, 8, 11, 20, 22},  {2, 7, 8, 19, 21, 23},  {3, 9, 12, 17, 22, 24}, {3, 4, 11, 13, 23, 24},
    {4, 12, 14, 19, 23, 25}, {4, 5, 13, 15, 20, 25}, {5, 8, 14, 16, 20, 21}, {5, 6, 15, 17, 21, 24},
    {6, 11, 16, 18, 22, 24}, {6, 7, 17, 19, 22, 25}, {7, 10, 13, 18, 23, 25}, {8, 9, 14, 15, 22, 25},
    {8, 10, 15, 16, 23, 24}, {9, 11, 17, 18, 20, 25}, {10, 12, 13, 19, 21, 24}, {11, 12, 16, 17, 21, 23},
    {13, 14, 18, 19, 20, 22}};

std::array<std::string, 4> split4(const std::string& line) {
  std::istringstream in(line);
  std::array<std::string, 4> out;
  for (auto& tok : out) in >> tok;
  return out;
}

std::vector<std::array<std::string, 4>> split_all(const char* const* lines, size_t count) {
  std::vector<std::array<std::string, 4>> out;
  out.reserve(count);
  for (size_t i = 0; i < count; ++i) out.push_back(split4(lines[i]));
  return out;
}

// Alphabet of `size` letters named prefix+1 .. prefix+size with inversion
// r ↦ r + size/2 (indices 1-based).
AlphabetSpec half_shift_alphabet(int color, char prefix, int size) {
  AlphabetSpec spec;
  spec.color = color;
  for (int r = 1; r <= size; ++r) spec.letters.push_back(std::string(1, prefix) + std::to_string(r));
  for (int r = 1; r <= size / 2; ++r)
    spec.inverses.emplace_back(spec.letters[r - 1], spec.letters[size / 2 + r - 1]);
  return spec;
}

// Gamma1's letters carry their exponent in the name: a1,a5,..,a21 etc. with
// inversion exponent ↦ exponent+12 mod 24.
AlphabetSpec gamma1_alphabet(int color, char prefix, int first) {
  AlphabetSpec spec;
  spec.color = color;
  auto name_of = [&](int e) { return std::string(1, prefix) + std::to_string(e); };
  for (int e = first; e < 24; e += 4) spec.letters.push_back(name_of(e));
  for (int e = first; e < 12; e += 4) spec.inverses.emplace_back(name_of(e), name_of(e + 12));
  return spec;
}

KCubeStructure embedded_structure(const std::string& name) {
  if (name == "gamma1") {
    std::vector<AlphabetSpec> alphabets = {gamma1_alphabet(1, 'a', 1), gamma1_alphabet(2, 'b', 2),
                                           gamma1_alphabet(3, 'c', 3)};
    return KCubeStructure::from_relators(3, alphabets, split_all(kGamma1Relators, 27));
  }
  if (name == "gamma2") {
    std::vector<AlphabetSpec> alphabets = {half_shift_alphabet(1, 'a', 4), half_shift_alphabet(2, 'b', 6),
                                           half_shift_alphabet(3, 'c', 8)};
    return KCubeStructure::from_relators(3, alphabets, split_all(kGamma2Relators, 26));
  }
  if (name == "torus") return free_product_structure({1, 1});
  if (name == "vh44") {
    std::vector<AlphabetSpec> alphabets = {half_shift_alphabet(1, 'a', 4), half_shift_alphabet(2, 'b', 4)};
    return KCubeStructure::from_squares(2, alphabets, split_all(kVH44Squares, 4));
  }
  throw InputError("unknown preset: " + name);
}

// free_product(1,2) and free_product:1,2 both parse; empty and non-numeric
// parameter lists are rejected.
bool parse_free_product(const std::string& name, std::vector<int>& L) {
  std::string params;
  if (name.rfind("free_product(", 0) == 0 && name.back() == ')')
    params = name.substr(13, name.size() - 14);
  else if (name.rfind("free_product:", 0) == 0)
    params = name.substr(13);
  else
    return false;
  std::istringstream in(params);
  std::string tok;
  while (std::getline(in, tok, ',')) {
    try {
      size_t pos = 0;
      int v = std::stoi(tok, &pos);
      if (pos != tok.size()) throw std::invalid_argument(tok);
      L.push_back(v);
    } catch (const std::exception&) {
      throw InputError("bad free_product parameter: " + tok);
    }
  }
  if (L.empty()) throw InputError("free_product needs at least two ranks");
  return true;
}

// Returns the override file contents when KCUBE_FIXTURES points at a
// directory containing the file, empty otherwise.
std::string fixture_override(const std::string& filename) {
  const char* dir = std::getenv("KCUBE_FIXTURES");
  if (!dir || !*dir) return {};
  std::ifstream in(std::string(dir) + "/" + filename);
  if (!in) return {};
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

} // namespace

bool is_matrix_preset(const std::string& name) { return name == "matrix25"; }

KCubeStructure free_product_structure(const std::vector<int>& L) {
  int k = static_cast<int>(L.size());
  if (k < 2) throw InputError("free_product needs at least two ranks");
  if (k > 26) throw InputError("free_product supports at most 26 colors");
  std::vector<AlphabetSpec> alphabets;
  for (int c = 1; c <= k; ++c) {
    if (L[c - 1] < 1) throw InputError("free_product ranks must be positive");
    alphabets.push_back(half_shift_alphabet(c, static_cast<char>('a' + c - 1), 2 * L[c - 1]));
  }
  std::vector<std::array<std::string, 4>> squares;
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j)
      for (int r = 0; r < L[i]; ++r)
        for (int s = 0; s < L[j]; ++s) {
          const std::string& x = alphabets[i].letters[r];
          const std::string& y = alphabets[j].letters[s];
          squares.push_back({x, y, y, x});
        }
  return KCubeStructure::from_squares(k, alphabets, squares);
}

KCubeStructure preset_structure(const std::string& name) {
  std::vector<int> L;
  if (parse_free_product(name, L)) return free_product_structure(L);
  if (is_matrix_preset(name)) throw InputError("preset " + name + " is a matrix, not a structure");
  if (name == "gamma1" || name == "gamma2" || name == "torus" || name == "vh44") {
    std::string json = fixture_override(name + ".json");
    if (!json.empty()) return structure_from_json(json);
  }
  return embedded_structure(name);
}

IntMatrix preset_matrix25() {
  std::string text = fixture_override("matrix25.txt");
  if (!text.empty()) {
    auto ms = matrices_from_text(text);
    if (ms.empty()) throw InputError("matrix25 override file holds no matrix");
    return ms.front();
  }
  IntMatrix m(25);
  for (int i = 0; i < 25; ++i)
    for (int j : kMatrix25Adj[i]) m.at(i, j - 1) = 1;
  if (!m.is_symmetric()) throw MathError("matrix25 fixture is not symmetric");
  for (int i = 0; i < 25; ++i)
    if (m.row_sum(i) != 6) throw MathError("matrix25 fixture is not 6-regular");
  return m;
}

std::vector<std::string> preset_names() {
  return {"gamma1", "gamma2", "torus", "vh44", "free_product:L1,..,Lk", "matrix25"};
}

} // namespace kcube
