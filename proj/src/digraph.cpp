#include "kcube/digraph.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>

#include "kcube/errors.hpp"

namespace kcube {

ColoredDigraph::ColoredDigraph(int k, int num_vertices,
                               std::vector<DigraphEdge> edges,
                               std::vector<std::array<int, 4>> phi_entries)
    : k_(k), num_vertices_(num_vertices), edges_(std::move(edges)) {
  if (k_ < 1) throw InputError("digraph needs at least one color");
  if (num_vertices_ < 1) throw InputError("digraph needs at least one vertex");
  for (size_t e = 0; e < edges_.size(); ++e) {
    const DigraphEdge& ed = edges_[e];
    if (ed.origin < 0 || ed.origin >= num_vertices_ || ed.terminus < 0 ||
        ed.terminus >= num_vertices_)
      throw InputError("edge endpoint out of range: " + ed.label);
    if (ed.color < 1 || ed.color > k_)
      throw InputError("edge color out of range: " + ed.label);
    if (ed.label.empty()) throw InputError("edge with empty label");
    if (!by_label_.emplace(ed.label, static_cast<int>(e)).second)
      throw InputError("duplicate edge label: " + ed.label);
  }
  out_.resize(num_vertices_);
  in_.resize(num_vertices_);
  for (size_t e = 0; e < edges_.size(); ++e) {
    out_[edges_[e].origin].push_back(static_cast<int>(e));
    in_[edges_[e].terminus].push_back(static_cast<int>(e));
  }
  // Exact repeats collapse to one entry; entries that disagree on the same
  // 2-path are kept and flagged so validators can report them.
  std::set<std::array<int, 4>> seen;
  const int n = static_cast<int>(edges_.size());
  for (const auto& ent : phi_entries) {
    for (int id : ent)
      if (id < 0 || id >= n)
        throw InputError("phi entry references unknown edge id");
    if (!seen.insert(ent).second) continue;
    phi_entries_.push_back(ent);
    long long key = pair_key(ent[0], ent[1]);
    auto [it, fresh] = table_.emplace(key, std::make_pair(ent[2], ent[3]));
    if (!fresh) dups_.push_back(key);
  }
  std::sort(dups_.begin(), dups_.end());
  dups_.erase(std::unique(dups_.begin(), dups_.end()), dups_.end());
}

int ColoredDigraph::edge_by_label(const std::string& label) const {
  auto it = by_label_.find(label);
  if (it == by_label_.end()) throw InputError("unknown edge label: " + label);
  return it->second;
}

std::optional<std::pair<int, int>> ColoredDigraph::phi(int x, int y) const {
  long long key = pair_key(x, y);
  if (std::binary_search(dups_.begin(), dups_.end(), key))
    throw MathError("2-path (" + label(x) + ", " + label(y) +
                    ") has conflicting exchange entries");
  auto it = table_.find(key);
  if (it == table_.end()) return std::nullopt;
  return it->second;
}

ColoredDigraph digraph_from_complex(const CubeComplex& c) {
  std::vector<DigraphEdge> edges;
  const int n = static_cast<int>(c.dedges().size());
  edges.reserve(n);
  for (int e = 0; e < n; ++e) {
    const DEdge& d = c.dedges()[e];
    edges.push_back({d.origin, d.terminus, d.color, d.label});
  }
  std::vector<std::vector<int>> out(c.num_vertices());
  for (int e = 0; e < n; ++e) out[c.dedges()[e].origin].push_back(e);
  std::vector<std::array<int, 4>> entries;
  for (int x = 0; x < n; ++x) {
    for (int y : out[c.dedges()[x].terminus]) {
      if (c.color(y) == c.color(x)) continue;
      auto im = c.phi(x, y); // throws when the square is missing or doubled
      entries.push_back({x, y, im.first, im.second});
    }
  }
  return ColoredDigraph(c.k(), c.num_vertices(), std::move(edges),
                        std::move(entries));
}

namespace {

std::string path2(const ColoredDigraph& dg, int x, int y) {
  return "(" + dg.label(x) + ", " + dg.label(y) + ")";
}

} // namespace

ValidationReport validate_f1(const ColoredDigraph& dg) {
  ValidationReport report;
  CheckItem totality{"totality", true, {}};
  CheckItem colors{"colors", true, {}};
  CheckItem endpoints{"endpoints", true, {}};
  CheckItem involution{"involution", true, {}};

  const int n = static_cast<int>(dg.edges().size());
  // Expected domain: every composable bicolored 2-path, each exactly once.
  std::set<std::pair<int, int>> expected;
  for (int x = 0; x < n; ++x)
    for (int y : dg.out_edges(dg.edge(x).terminus))
      if (dg.color(y) != dg.color(x)) expected.insert({x, y});

  std::set<std::pair<int, int>> keys;
  for (const auto& ent : dg.phi_entries()) {
    auto [x, y, yp, xp] = ent;
    if (!keys.insert({x, y}).second) {
      totality.pass = false;
      totality.witnesses.push_back("2-path " + path2(dg, x, y) +
                                   " has two distinct images");
    }
    if (!expected.count({x, y})) {
      totality.pass = false;
      totality.witnesses.push_back("entry on " + path2(dg, x, y) +
                                   " which is not a bicolored 2-path");
      continue;
    }
    if (dg.color(yp) != dg.color(y) || dg.color(xp) != dg.color(x)) {
      colors.pass = false;
      colors.witnesses.push_back("image of " + path2(dg, x, y) +
                                 " does not swap colors");
    }
    if (dg.edge(yp).origin != dg.edge(x).origin ||
        dg.edge(xp).terminus != dg.edge(y).terminus ||
        dg.edge(yp).terminus != dg.edge(xp).origin) {
      endpoints.pass = false;
      endpoints.witnesses.push_back("image of " + path2(dg, x, y) +
                                    " breaks endpoint agreement");
    }
  }
  for (const auto& key : expected) {
    if (!keys.count(key)) {
      totality.pass = false;
      totality.witnesses.push_back("2-path " + path2(dg, key.first, key.second) +
                                   " has no exchange entry");
    }
  }
  // phi² = id: the image of every entry must itself map back.
  for (const auto& ent : dg.phi_entries()) {
    auto [x, y, yp, xp] = ent;
    try {
      auto im = dg.phi(yp, xp);
      if (!im || im->first != x || im->second != y) {
        involution.pass = false;
        involution.witnesses.push_back("phi(phi" + path2(dg, x, y) +
                                       ") != " + path2(dg, x, y));
      }
    } catch (const MathError&) {
      involution.pass = false;
      involution.witnesses.push_back("phi(phi" + path2(dg, x, y) +
                                     ") is ambiguous");
    }
  }
  report.items = {totality, colors, endpoints, involution};
  return report;
}

ValidationReport validate_f2(const ColoredDigraph& dg) {
  ValidationReport report;
  CheckItem item{"f2", true, {}};
  const int n = static_cast<int>(dg.edges().size());
  auto lookup = [&](int a, int b) -> std::optional<std::pair<int, int>> {
    return dg.phi(a, b);
  };
  for (int x = 0; x < n; ++x) {
    for (int y : dg.out_edges(dg.edge(x).terminus)) {
      if (dg.color(y) == dg.color(x)) continue;
      for (int z : dg.out_edges(dg.edge(y).terminus)) {
        if (dg.color(z) == dg.color(x) || dg.color(z) == dg.color(y)) continue;
        std::string tag = "(" + dg.label(x) + ", " + dg.label(y) + ", " +
                          dg.label(z) + ")";
        // Chain through the first pair: xy ~ y1x1, x1z ~ z1x2, y1z1 ~ z2y2.
        auto s1 = lookup(x, y);
        if (!s1) { item.pass = false; item.witnesses.push_back(tag + ": phi undefined on (x, y)"); continue; }
        auto [y1, x1] = *s1;
        auto s2 = lookup(x1, z);
        if (!s2) { item.pass = false; item.witnesses.push_back(tag + ": phi undefined on (x1, z)"); continue; }
        auto [z1, x2] = *s2;
        auto s3 = lookup(y1, z1);
        if (!s3) { item.pass = false; item.witnesses.push_back(tag + ": phi undefined on (y1, z1)"); continue; }
        auto [z2, y2] = *s3;
        // Chain through the last pair: yz ~ w1v1, x w1 ~ w2u1, u1v1 ~ v2u2.
        auto t1 = lookup(y, z);
        if (!t1) { item.pass = false; item.witnesses.push_back(tag + ": phi undefined on (y, z)"); continue; }
        auto [w1, v1] = *t1;
        auto t2 = lookup(x, w1);
        if (!t2) { item.pass = false; item.witnesses.push_back(tag + ": phi undefined on (x, w1)"); continue; }
        auto [w2, u1] = *t2;
        auto t3 = lookup(u1, v1);
        if (!t3) { item.pass = false; item.witnesses.push_back(tag + ": phi undefined on (u1, v1)"); continue; }
        auto [v2, u2] = *t3;
        if (u2 != x2 || v2 != y2 || w2 != z2) {
          item.pass = false;
          item.witnesses.push_back(tag + ": the two completion chains disagree");
        }
      }
    }
  }
  report.items = {item};
  return report;
}

RigidityReport check_rigidity(const ColoredDigraph& dg) {
  RigidityReport r;
  // Entry (x, y) -> (y', x') witnesses the relation x·y ~ y'·x'. Its two
  // first edges (x, y') share an origin and its two second edges (y, x')
  // share a terminus; the mirrored entry covers the reversed orderings.
  std::map<std::pair<int, int>, int> right_count, left_count;
  for (const auto& ent : dg.phi_entries()) {
    right_count[{ent[0], ent[2]}] += 1;
    left_count[{ent[1], ent[3]}] += 1;
  }
  const int n = static_cast<int>(dg.edges().size());
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      if (dg.color(a) == dg.color(b)) continue;
      if (dg.edge(a).origin == dg.edge(b).origin) {
        auto it = right_count.find({a, b});
        int cnt = it == right_count.end() ? 0 : it->second;
        if (cnt != 1) {
          r.right = false;
          r.witnesses.push_back("right: pair (" + dg.label(a) + ", " +
                                dg.label(b) + ") completed by " +
                                std::to_string(cnt) + " relations");
        }
      }
      if (dg.edge(a).terminus == dg.edge(b).terminus) {
        auto it = left_count.find({a, b});
        int cnt = it == left_count.end() ? 0 : it->second;
        if (cnt != 1) {
          r.left = false;
          r.witnesses.push_back("left: pair (" + dg.label(a) + ", " +
                                dg.label(b) + ") completed by " +
                                std::to_string(cnt) + " relations");
        }
      }
    }
  }
  return r;
}

bool strongly_connected(const ColoredDigraph& dg) {
  const int n = dg.num_vertices();
  auto sweep = [&](bool forward) {
    std::vector<char> seen(n, 0);
    std::queue<int> q;
    q.push(0);
    seen[0] = 1;
    int reached = 1;
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      const auto& nbrs = forward ? dg.out_edges(v) : dg.in_edges(v);
      for (int e : nbrs) {
        int w = forward ? dg.edge(e).terminus : dg.edge(e).origin;
        if (!seen[w]) {
          seen[w] = 1;
          ++reached;
          q.push(w);
        }
      }
    }
    return reached == n;
  };
  return sweep(true) && sweep(false);
}

} // namespace kcube
