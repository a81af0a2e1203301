#include "kcube/kgraph.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <string>

#include "kcube/errors.hpp"

namespace kcube {

void validate_path(const ColoredDigraph& dg, const PathWord& p) {
  if (p.origin < 0 || p.origin >= dg.num_vertices())
    throw InputError("path origin out of range");
  int at = p.origin;
  for (int e : p.edges) {
    if (e < 0 || e >= static_cast<int>(dg.edges().size()))
      throw InputError("path references unknown edge id");
    if (dg.edge(e).origin != at)
      throw InputError("edges do not compose into a path");
    at = dg.edge(e).terminus;
  }
}

int terminus(const ColoredDigraph& dg, const PathWord& p) {
  return p.edges.empty() ? p.origin : dg.edge(p.edges.back()).terminus;
}

std::vector<int> degree(const ColoredDigraph& dg, const PathWord& p) {
  std::vector<int> d(dg.k(), 0);
  for (int e : p.edges) d[dg.color(e) - 1] += 1;
  return d;
}

PathWord divert(const ColoredDigraph& dg, const PathWord& p, int s) {
  if (s < 1 || s + 1 > static_cast<int>(p.edges.size()))
    throw InputError("divert position out of range");
  int x = p.edges[s - 1], y = p.edges[s];
  if (dg.color(x) == dg.color(y))
    throw InputError("divert requires distinct colors at position " +
                     std::to_string(s));
  auto im = dg.phi(x, y);
  if (!im)
    throw MathError("no exchange entry for 2-path (" + dg.label(x) + ", " +
                    dg.label(y) + ")");
  PathWord q = p;
  q.edges[s - 1] = im->first;
  q.edges[s] = im->second;
  return q;
}

PathWord normalize(const ColoredDigraph& dg, const PathWord& p) {
  PathWord q = p;
  // Bubble toward non-increasing colors; every divert removes exactly one
  // adjacent ascent, so the loop terminates.
  bool changed = true;
  while (changed) {
    changed = false;
    for (size_t i = 0; i + 1 < q.edges.size(); ++i) {
      if (dg.color(q.edges[i]) < dg.color(q.edges[i + 1])) {
        q = divert(dg, q, static_cast<int>(i) + 1);
        changed = true;
        break;
      }
    }
  }
  return q;
}

std::pair<PathWord, PathWord> factorize(const ColoredDigraph& dg,
                                        const PathWord& p,
                                        const std::vector<int>& m) {
  std::vector<int> d = degree(dg, p);
  if (static_cast<int>(m.size()) != dg.k())
    throw InputError("split vector must have one entry per color");
  for (int i = 0; i < dg.k(); ++i)
    if (m[i] < 0 || m[i] > d[i])
      throw InputError("split exceeds the path degree in color " +
                       std::to_string(i + 1));
  // Target color word: the split part in non-increasing colors nearest the
  // origin, then the remainder in non-increasing colors.
  std::vector<int> target;
  target.reserve(p.edges.size());
  for (int c = dg.k(); c >= 1; --c)
    target.insert(target.end(), m[c - 1], c);
  for (int c = dg.k(); c >= 1; --c)
    target.insert(target.end(), d[c - 1] - m[c - 1], c);
  PathWord q = p;
  for (size_t i = 0; i < q.edges.size(); ++i) {
    if (dg.color(q.edges[i]) == target[i]) continue;
    // The nearest occurrence guarantees every intermediate pair is
    // bicolored, so each divert on the way left is valid.
    size_t j = i + 1;
    while (dg.color(q.edges[j]) != target[i]) ++j;
    for (size_t s = j; s > i; --s)
      q = divert(dg, q, static_cast<int>(s));
  }
  int cut = std::accumulate(m.begin(), m.end(), 0);
  PathWord c_part{q.origin,
                  std::vector<int>(q.edges.begin(), q.edges.begin() + cut)};
  PathWord b_part{terminus(dg, c_part),
                  std::vector<int>(q.edges.begin() + cut, q.edges.end())};
  return {normalize(dg, b_part), normalize(dg, c_part)};
}

namespace {

std::string path_text(const ColoredDigraph& dg, const PathWord& p) {
  if (p.edges.empty())
    return "(empty at vertex " + std::to_string(p.origin) + ")";
  std::string s;
  for (size_t i = 0; i < p.edges.size(); ++i) {
    if (i) s += " ";
    s += dg.label(p.edges[i]);
  }
  return s;
}

std::string vec_text(const std::vector<int>& v) {
  std::string s = "(";
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) s += ", ";
    s += std::to_string(v[i]);
  }
  return s + ")";
}

} // namespace

ValidationReport check_unique_factorization(const ColoredDigraph& dg,
                                            int max_degree_sum) {
  ValidationReport report;
  CheckItem item{"unique_factorization", true, {}};
  using Key = std::pair<int, std::vector<int>>;
  std::map<Key, int> class_of;
  std::vector<std::vector<Key>> classes;

  // All composable edge sequences up to the length bound, including the
  // empty path at every vertex.
  std::vector<Key> all;
  for (int v = 0; v < dg.num_vertices(); ++v) all.push_back({v, {}});
  size_t begin = 0;
  for (int len = 1; len <= max_degree_sum; ++len) {
    size_t end = all.size();
    for (size_t idx = begin; idx < end; ++idx) {
      Key base = all[idx];
      int at = base.second.empty() ? base.first
                                   : dg.edge(base.second.back()).terminus;
      for (int e : dg.out_edges(at)) {
        Key next = base;
        next.second.push_back(e);
        all.push_back(std::move(next));
      }
    }
    begin = end;
  }

  // Group into rewriting classes by closing over single diverts.
  for (const Key& start : all) {
    if (class_of.count(start)) continue;
    int id = static_cast<int>(classes.size());
    classes.push_back({});
    std::vector<Key> queue{start};
    class_of[start] = id;
    while (!queue.empty()) {
      Key cur = queue.back();
      queue.pop_back();
      classes[id].push_back(cur);
      for (size_t s = 0; s + 1 < cur.second.size(); ++s) {
        int x = cur.second[s], y = cur.second[s + 1];
        if (dg.color(x) == dg.color(y)) continue;
        auto im = dg.phi(x, y);
        if (!im) continue; // non-total tables surface as missing splits
        Key next = cur;
        next.second[s] = im->first;
        next.second[s + 1] = im->second;
        if (class_of.emplace(next, id).second) queue.push_back(next);
      }
    }
    std::sort(classes[id].begin(), classes[id].end());
  }

  for (const auto& members : classes) {
    const Key& rep = members.front();
    PathWord rep_path{rep.first, rep.second};
    std::vector<int> d = degree(dg, rep_path);
    // Iterate every componentwise split m <= d.
    std::vector<int> m(dg.k(), 0);
    while (true) {
      int cut = std::accumulate(m.begin(), m.end(), 0);
      std::set<std::pair<int, int>> pairs;
      for (const Key& q : members) {
        PathWord prefix{q.first, std::vector<int>(q.second.begin(),
                                                  q.second.begin() + cut)};
        if (degree(dg, prefix) != m) continue;
        PathWord suffix{terminus(dg, prefix),
                        std::vector<int>(q.second.begin() + cut,
                                         q.second.end())};
        pairs.insert({class_of.at({suffix.origin, suffix.edges}),
                      class_of.at({prefix.origin, prefix.edges})});
      }
      if (pairs.empty()) {
        item.pass = false;
        item.witnesses.push_back("no factorization of " +
                                 path_text(dg, rep_path) + " at split " +
                                 vec_text(m));
      } else if (pairs.size() > 1) {
        item.pass = false;
        item.witnesses.push_back(std::to_string(pairs.size()) +
                                 " distinct factorizations of " +
                                 path_text(dg, rep_path) + " at split " +
                                 vec_text(m));
      } else {
        try {
          auto [bp, cp] = factorize(dg, rep_path, m);
          std::pair<int, int> via_factorize{
              class_of.at({bp.origin, bp.edges}),
              class_of.at({cp.origin, cp.edges})};
          if (via_factorize != *pairs.begin()) {
            item.pass = false;
            item.witnesses.push_back("factorize disagrees with the rewriting "
                                     "classes for " +
                                     path_text(dg, rep_path) + " at split " +
                                     vec_text(m));
          }
        } catch (const Error& err) {
          item.pass = false;
          item.witnesses.push_back("factorize failed for " +
                                   path_text(dg, rep_path) + " at split " +
                                   vec_text(m) + ": " + err.what());
        }
      }
      int i = dg.k() - 1;
      while (i >= 0 && m[i] == d[i]) m[i--] = 0;
      if (i < 0) break;
      ++m[i];
    }
  }
  report.items = {item};
  return report;
}

std::vector<IntMatrix> coordinate_matrices(const ColoredDigraph& dg) {
  std::vector<IntMatrix> ms(dg.k(), IntMatrix(dg.num_vertices()));
  for (const DigraphEdge& e : dg.edges())
    ms[e.color - 1].at(e.terminus, e.origin) += 1;
  return ms;
}

StructureReport structure_report(const ColoredDigraph& dg) {
  StructureReport rep;
  RigidityReport rig = check_rigidity(dg);
  rep.rigid = rig.left && rig.right;
  rep.strongly_connected = strongly_connected(dg);
  rep.aperiodic = rep.rigid;
  bool thick = true;
  for (int v = 0; v < dg.num_vertices() && thick; ++v) {
    std::vector<int> out(dg.k(), 0);
    for (int e : dg.out_edges(v)) out[dg.color(e) - 1] += 1;
    for (int c = 0; c < dg.k(); ++c)
      if (out[c] < 4) { thick = false; break; }
  }
  rep.purely_infinite_eligible =
      rep.aperiodic && rep.strongly_connected && thick;
  return rep;
}

} // namespace kcube
