#include "kcube/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "kcube/errors.hpp"

namespace kcube {

using nlohmann::ordered_json;

namespace {

ordered_json parse_json(const std::string& text) {
  try {
    return ordered_json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("invalid JSON: ") + e.what());
  }
}

} // namespace

nlohmann::ordered_json structure_to_json(const KCubeStructure& s) {
  ordered_json j;
  j["k"] = s.k();
  ordered_json alphabets = ordered_json::array();
  for (int c = 1; c <= s.k(); ++c) {
    ordered_json a;
    a["color"] = c;
    ordered_json letters = ordered_json::array();
    ordered_json inverse = ordered_json::object();
    for (int x : s.alphabet(c)) letters.push_back(s.name(x));
    for (int x : s.alphabet(c)) inverse[s.name(x)] = s.name(s.inverse(x));
    a["letters"] = std::move(letters);
    a["inverse"] = std::move(inverse);
    alphabets.push_back(std::move(a));
  }
  j["alphabets"] = std::move(alphabets);
  ordered_json squares = ordered_json::array();
  for (const auto& names : s.canonical_square_names()) {
    squares.push_back(
        ordered_json::array({names[0], names[1], names[2], names[3]}));
  }
  j["squares"] = std::move(squares);
  return j;
}

KCubeStructure structure_from_json(const std::string& text) {
  ordered_json j = parse_json(text);
  try {
    int k = j.at("k").get<int>();
    std::vector<AlphabetSpec> alphabets;
    for (const auto& a : j.at("alphabets")) {
      AlphabetSpec spec;
      spec.color = a.at("color").get<int>();
      for (const auto& l : a.at("letters"))
        spec.letters.push_back(l.get<std::string>());
      if (a.contains("inverse"))
        for (const auto& [key, val] : a.at("inverse").items())
          spec.inverses.push_back({key, val.get<std::string>()});
      alphabets.push_back(std::move(spec));
    }
    bool has_squares = j.contains("squares");
    bool has_relators = j.contains("relators");
    if (has_squares == has_relators)
      throw InputError("provide exactly one of squares or relators");
    std::vector<std::array<std::string, 4>> cells;
    for (const auto& c : j.at(has_squares ? "squares" : "relators")) {
      if (c.size() != 4)
        throw InputError("squares and relators need exactly 4 letters");
      cells.push_back({c[0].get<std::string>(), c[1].get<std::string>(),
                       c[2].get<std::string>(), c[3].get<std::string>()});
    }
    return has_squares ? KCubeStructure::from_squares(k, alphabets, cells)
                       : KCubeStructure::from_relators(k, alphabets, cells);
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("malformed structure JSON: ") + e.what());
  }
}

nlohmann::ordered_json complex_to_json(const CubeComplex& c) {
  ordered_json j;
  j["k"] = c.k();
  j["num_vertices"] = c.num_vertices();
  ordered_json geoms = ordered_json::array();
  for (size_t g = 0; g < c.geom_edges().size(); ++g) {
    const GeomEdge& e = c.geom_edges()[g];
    ordered_json item;
    item["v0"] = e.v0;
    item["v1"] = e.v1;
    item["color"] = e.color;
    item["pos_label"] = c.label(2 * static_cast<int>(g));
    item["neg_label"] = c.label(2 * static_cast<int>(g) + 1);
    item["pos_base"] = c.base(2 * static_cast<int>(g));
    item["neg_base"] = c.base(2 * static_cast<int>(g) + 1);
    geoms.push_back(std::move(item));
  }
  j["geom_edges"] = std::move(geoms);
  ordered_json squares = ordered_json::array();
  for (const ComplexSquare& s : c.squares()) {
    squares.push_back(ordered_json::array({c.label(s.a), c.label(s.b),
                                           c.label(s.b_prime),
                                           c.label(s.a_prime)}));
  }
  j["squares"] = std::move(squares);
  ordered_json cubes = ordered_json::array();
  for (const ComplexCube& cube : c.cubes()) {
    ordered_json faces = ordered_json::array();
    for (int f : cube.faces) faces.push_back(f);
    cubes.push_back(std::move(faces));
  }
  j["cubes"] = std::move(cubes);
  return j;
}

nlohmann::ordered_json digraph_to_json(const ColoredDigraph& dg) {
  ordered_json j;
  j["k"] = dg.k();
  j["num_vertices"] = dg.num_vertices();
  ordered_json edges = ordered_json::array();
  for (size_t e = 0; e < dg.edges().size(); ++e) {
    const DigraphEdge& ed = dg.edges()[e];
    ordered_json item;
    item["id"] = static_cast<int>(e);
    item["origin"] = ed.origin;
    item["terminus"] = ed.terminus;
    item["color"] = ed.color;
    item["label"] = ed.label;
    edges.push_back(std::move(item));
  }
  j["edges"] = std::move(edges);
  ordered_json phi = ordered_json::array();
  for (const auto& ent : dg.phi_entries())
    phi.push_back(ordered_json::array({ent[0], ent[1], ent[2], ent[3]}));
  j["phi"] = std::move(phi);
  return j;
}

ColoredDigraph digraph_from_json(const std::string& text) {
  ordered_json j = parse_json(text);
  try {
    int k = j.at("k").get<int>();
    int nv = j.at("num_vertices").get<int>();
    std::vector<DigraphEdge> edges;
    int expect = 0;
    for (const auto& e : j.at("edges")) {
      if (e.at("id").get<int>() != expect)
        throw InputError("edge ids must run 0..E-1 in order");
      DigraphEdge ed;
      ed.origin = e.at("origin").get<int>();
      ed.terminus = e.at("terminus").get<int>();
      ed.color = e.at("color").get<int>();
      ed.label = e.contains("label") ? e.at("label").get<std::string>()
                                     : "e" + std::to_string(expect);
      edges.push_back(std::move(ed));
      ++expect;
    }
    std::vector<std::array<int, 4>> phi;
    for (const auto& ent : j.at("phi")) {
      if (ent.size() != 4)
        throw InputError("phi entries need exactly 4 edge ids");
      phi.push_back({ent[0].get<int>(), ent[1].get<int>(), ent[2].get<int>(),
                     ent[3].get<int>()});
    }
    return ColoredDigraph(k, nv, std::move(edges), std::move(phi));
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("malformed digraph JSON: ") + e.what());
  }
}

nlohmann::ordered_json assignment_to_json(const PermAssignment& q) {
  ordered_json j;
  j["N"] = q.N;
  ordered_json images = ordered_json::object();
  for (const auto& [name, img] : q.images) {
    ordered_json arr = ordered_json::array();
    for (int v : img) arr.push_back(v);
    images[name] = std::move(arr);
  }
  j["images"] = std::move(images);
  return j;
}

PermAssignment assignment_from_json(const std::string& text) {
  ordered_json j = parse_json(text);
  try {
    PermAssignment q;
    q.N = j.at("N").get<int>();
    for (const auto& [name, arr] : j.at("images").items()) {
      std::vector<int> img;
      for (const auto& v : arr) img.push_back(v.get<int>());
      q.images[name] = std::move(img);
    }
    return q;
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("malformed assignment JSON: ") + e.what());
  }
}

std::string matrices_to_text(const std::vector<IntMatrix>& ms) {
  if (ms.empty()) throw InputError("no matrices to write");
  const int n = ms[0].n;
  for (const IntMatrix& m : ms)
    if (m.n != n) throw InputError("matrices must share one size");
  std::ostringstream out;
  out << n << " " << ms.size() << "\n";
  for (const IntMatrix& m : ms) {
    for (int r = 0; r < n; ++r) {
      for (int c = 0; c < n; ++c) {
        if (c) out << " ";
        out << m.at(r, c);
      }
      out << "\n";
    }
  }
  return out.str();
}

std::vector<IntMatrix> matrices_from_text(const std::string& text) {
  std::istringstream in(text);
  long long n = 0, k = 0;
  if (!(in >> n >> k) || n < 1 || k < 1)
    throw InputError("matrix text must start with the line \"N k\"");
  std::vector<IntMatrix> ms;
  for (long long b = 0; b < k; ++b) {
    IntMatrix m(static_cast<int>(n));
    for (long long r = 0; r < n; ++r)
      for (long long c = 0; c < n; ++c)
        if (!(in >> m.at(static_cast<int>(r), static_cast<int>(c))))
          throw InputError("matrix text ends before all entries are read");
    ms.push_back(std::move(m));
  }
  long long extra;
  if (in >> extra) throw InputError("matrix text has trailing entries");
  return ms;
}

std::string spectrum_to_text(const std::vector<double>& eigenvalues) {
  std::string out;
  char buf[64];
  for (double v : eigenvalues) {
    if (v == 0.0) v = 0.0; // never print a negative zero
    std::snprintf(buf, sizeof(buf), "%.9f", v);
    out += buf;
    out += "\n";
  }
  return out;
}

nlohmann::ordered_json validation_to_json(const ValidationReport& r) {
  ordered_json j;
  j["all_pass"] = r.all_pass();
  ordered_json items = ordered_json::array();
  for (const CheckItem& item : r.items) {
    ordered_json one;
    one["condition"] = item.condition;
    one["pass"] = item.pass;
    one["witnesses"] = item.witnesses;
    items.push_back(std::move(one));
  }
  j["items"] = std::move(items);
  return j;
}

nlohmann::ordered_json rigidity_to_json(const RigidityReport& r) {
  ordered_json j;
  j["left"] = r.left;
  j["right"] = r.right;
  j["witnesses"] = r.witnesses;
  return j;
}

nlohmann::ordered_json spectral_to_json(const std::vector<ColorVerdict>& v) {
  ordered_json colors = ordered_json::array();
  bool all = true;
  for (const ColorVerdict& cv : v) {
    ordered_json one;
    one["color"] = cv.color;
    one["L"] = cv.L;
    one["eigenvalues"] = cv.eigenvalues;
    if (cv.has_lambda2)
      one["lambda2"] = cv.lambda2;
    else
      one["lambda2"] = nullptr;
    one["bound"] = cv.bound;
    one["ramanujan"] = cv.ramanujan;
    colors.push_back(std::move(one));
    all = all && cv.ramanujan;
  }
  ordered_json j;
  j["colors"] = std::move(colors);
  j["ramanujan"] = all;
  return j;
}

nlohmann::ordered_json lattice_to_json(const PeriodLattice& p) {
  ordered_json j;
  j["k"] = p.k;
  j["max_degree_sum"] = p.max_degree_sum;
  j["lower_approximation"] = p.lower_approximation;
  ordered_json basis = ordered_json::array();
  for (const auto& row : p.basis) basis.push_back(row);
  j["basis"] = std::move(basis);
  ordered_json gens = ordered_json::array();
  for (const auto& g : p.generators) {
    ordered_json one;
    one["diff"] = g.diff;
    one["cycle_a"] = g.cycle_a;
    one["cycle_b"] = g.cycle_b;
    gens.push_back(std::move(one));
  }
  j["generators"] = std::move(gens);
  return j;
}

nlohmann::ordered_json structure_report_to_json(const StructureReport& r) {
  ordered_json j;
  j["rigid"] = r.rigid;
  j["strongly_connected"] = r.strongly_connected;
  j["aperiodic"] = r.aperiodic;
  j["purely_infinite_eligible"] = r.purely_infinite_eligible;
  return j;
}

nlohmann::ordered_json abelian_to_json(
    const std::vector<AbelianSolution>& sols) {
  ordered_json arr = ordered_json::array();
  for (const AbelianSolution& s : sols) {
    ordered_json one;
    one["assignment"] = assignment_to_json(s.assignment);
    one["each_alphabet_generates"] = s.each_alphabet_generates;
    ordered_json vecs = ordered_json::object();
    for (const auto& [name, v] : s.vectors) vecs[name] = v;
    one["vectors"] = std::move(vecs);
    arr.push_back(std::move(one));
  }
  return arr;
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write file: " + path);
  out << content;
  if (!out) throw InputError("failed while writing file: " + path);
}

} // namespace kcube
