#include "wedge/graph_posets.hpp"

#include <algorithm>

namespace wedge {

bool has_heavy_component(const Subgraph& s) {
  for (const auto& comp : connected_components(s)) {
    if (rank(comp) > 0) return true;
    int labs = 0;
    for (int v : comp.vertices)
      if (s.parent().is_labelled(v)) ++labs;
    if (labs >= 2) return true;
  }
  return false;
}

namespace {

GraphPoset from_subgraphs(std::vector<Subgraph> subs) {
  std::vector<std::string> keys;
  keys.reserve(subs.size());
  for (const auto& s : subs) keys.push_back(s.key());
  std::vector<std::pair<int, int>> pairs;
  for (size_t i = 0; i < subs.size(); ++i)
    for (size_t j = 0; j < subs.size(); ++j)
      if (i != j && subs[i].subset_of(subs[j]))
        pairs.emplace_back(static_cast<int>(i), static_cast<int>(j));
  return GraphPoset{FinPoset(std::move(keys), std::move(pairs)), std::move(subs)};
}

// Proper non-empty edge subsets passing the filter, in subset-mask order.
std::vector<Subgraph> proper_subgraphs(const LabelledGraph& g,
                                       bool (*filter)(const Subgraph&)) {
  const int m = g.n_edges();
  std::vector<Subgraph> out;
  for (unsigned mask = 1; mask + 1 < (1u << m); ++mask) {
    std::vector<int> ids;
    for (int e = 0; e < m; ++e)
      if (mask >> e & 1) ids.push_back(e);
    Subgraph s(g, std::move(ids));
    if (filter(s)) out.push_back(std::move(s));
  }
  return out;
}

bool core_filter(const Subgraph& s) {
  return has_heavy_component(s) && is_leafless(s);
}

}  // namespace

GraphPoset build_nontrees(const LabelledGraph& g) {
  if (g.n_edges() > 30) throw InvalidArgument("subgraph poset would be huge");
  return from_subgraphs(proper_subgraphs(g, &has_heavy_component));
}

GraphPoset build_core_poset(const LabelledGraph& g) {
  if (g.n_edges() > 30) throw InvalidArgument("subgraph poset would be huge");
  return from_subgraphs(proper_subgraphs(g, &core_filter));
}

PosetMap core_retraction_map(const LabelledGraph& g) {
  GraphPoset x = build_nontrees(g);
  std::vector<int> image;
  image.reserve(x.elements.size());
  for (const auto& s : x.elements) {
    Subgraph core = max_core(s);
    int idx = x.poset.index_of(core.key());
    if (idx < 0) throw Error("core of " + s.key() + " missing from poset");
    image.push_back(idx);
  }
  return PosetMap(x.poset, x.poset, std::move(image));
}

}  // namespace wedge
