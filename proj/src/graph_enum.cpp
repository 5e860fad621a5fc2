#include "wedge/graph_enum.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <tuple>

namespace wedge {

namespace {

using Pair = std::pair<int, int>;

// Multisets of m pairs drawn from `pairs`, non-decreasing by index.
void multisets(const std::vector<Pair>& pairs, int m, std::vector<int>& pick,
               int from, const std::function<void(const std::vector<int>&)>& emit) {
  if (static_cast<int>(pick.size()) == m) {
    emit(pick);
    return;
  }
  for (int i = from; i < static_cast<int>(pairs.size()); ++i) {
    pick.push_back(i);
    multisets(pairs, m, pick, i, emit);
    pick.pop_back();
  }
}

bool connected_covering(int nv, const std::vector<Pair>& edges) {
  std::vector<int> parent(nv);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::vector<bool> touched(nv, false);
  for (const auto& [u, v] : edges) {
    touched[u] = touched[v] = true;
    parent[find(u)] = find(v);
  }
  for (int v = 0; v < nv; ++v)
    if (!touched[v]) return false;
  int root = find(0);
  for (int v = 1; v < nv; ++v)
    if (find(v) != root) return false;
  return true;
}

std::string encode_edges(int nv, const std::vector<Pair>& edges) {
  std::string s = std::to_string(nv) + ";";
  for (const auto& [u, v] : edges) s += std::to_string(u) + "-" + std::to_string(v) + ",";
  return s;
}

struct UnlabelledClass {
  int nv;
  std::vector<Pair> edges;                 // canonical numbering
  std::vector<std::vector<int>> auts;      // permutations fixing the encoding
};

std::map<std::string, UnlabelledClass> unlabelled_classes(int max_edges) {
  std::map<std::string, UnlabelledClass> classes;
  for (int m = 1; m <= max_edges; ++m) {
    for (int nv = 1; nv <= m + 1; ++nv) {
      std::vector<Pair> pairs;
      for (int i = 0; i < nv; ++i)
        for (int j = i; j < nv; ++j) pairs.emplace_back(i, j);
      std::vector<int> pick;
      multisets(pairs, m, pick, 0, [&](const std::vector<int>& idx) {
        std::vector<Pair> edges;
        for (int i : idx) edges.push_back(pairs[i]);
        if (!connected_covering(nv, edges)) return;
        // canonical form over all vertex permutations
        std::vector<int> perm(nv);
        std::iota(perm.begin(), perm.end(), 0);
        std::string best;
        std::vector<Pair> best_edges;
        do {
          std::vector<Pair> mapped;
          for (const auto& [u, v] : edges) {
            int a = perm[u], b = perm[v];
            mapped.emplace_back(std::min(a, b), std::max(a, b));
          }
          std::sort(mapped.begin(), mapped.end());
          std::string enc = encode_edges(nv, mapped);
          if (best.empty() || enc < best) {
            best = enc;
            best_edges = mapped;
          }
        } while (std::next_permutation(perm.begin(), perm.end()));
        if (classes.count(best)) return;
        UnlabelledClass cls{nv, best_edges, {}};
        std::iota(perm.begin(), perm.end(), 0);
        do {
          std::vector<Pair> mapped;
          for (const auto& [u, v] : best_edges) {
            int a = perm[u], b = perm[v];
            mapped.emplace_back(std::min(a, b), std::max(a, b));
          }
          std::sort(mapped.begin(), mapped.end());
          if (encode_edges(nv, mapped) == best) cls.auts.push_back(perm);
        } while (std::next_permutation(perm.begin(), perm.end()));
        classes.emplace(best, std::move(cls));
      });
    }
  }
  return classes;
}

}  // namespace

std::vector<LabelledGraph> enumerate_labelled_graphs(int max_edges, int max_labels) {
  if (max_edges < 1) throw InvalidArgument("max_edges must be positive");
  if (max_labels < 0) throw InvalidArgument("max_labels must be non-negative");
  auto classes = unlabelled_classes(max_edges);

  // (edge count, vertex count, edge encoding, label encoding) sort order
  std::vector<std::tuple<int, int, std::string, std::string>> order;
  std::map<std::string, LabelledGraph> out;
  for (const auto& [enc, cls] : classes) {
    // label orbits under the automorphism group
    std::vector<std::vector<int>> chosen;
    std::set<std::vector<int>> seen;
    int top = std::min(max_labels, cls.nv);
    for (int k = 0; k <= top; ++k) {
      std::vector<int> pick(k);
      std::function<void(int, int)> rec = [&](int from, int at) {
        if (at == k) {
          std::vector<int> orbit_min;
          for (const auto& aut : cls.auts) {
            std::vector<int> mapped;
            for (int v : pick) mapped.push_back(aut[v]);
            std::sort(mapped.begin(), mapped.end());
            if (orbit_min.empty() || mapped < orbit_min) orbit_min = mapped;
          }
          if (k == 0) orbit_min = {};
          if (seen.insert(orbit_min).second) chosen.push_back(orbit_min);
          return;
        }
        for (int v = from; v < cls.nv; ++v) {
          pick[at] = v;
          rec(v + 1, at + 1);
        }
      };
      if (k == 0) {
        if (seen.insert(std::vector<int>{}).second) chosen.push_back({});
      } else {
        rec(0, 0);
      }
    }
    for (const auto& labels : chosen) {
      std::vector<LabelledGraph::Edge> edges;
      for (const auto& [u, v] : cls.edges) edges.push_back({u, v});
      LabelledGraph g(cls.nv, edges, labels);
      std::string lab_enc;
      for (int l : labels) lab_enc += std::to_string(l) + ",";
      std::string key = enc + "|" + lab_enc;
      order.emplace_back(g.n_edges(), cls.nv, enc, lab_enc);
      out.emplace(key, std::move(g));
    }
  }
  std::sort(order.begin(), order.end());
  std::vector<LabelledGraph> result;
  result.reserve(order.size());
  for (const auto& [m, nv, enc, lab] : order)
    result.push_back(out.at(enc + "|" + lab));
  return result;
}

std::vector<LabelledGraph> enumerate_unlabelled_graphs(int max_edges) {
  return enumerate_labelled_graphs(max_edges, 0);
}

}  // namespace wedge
