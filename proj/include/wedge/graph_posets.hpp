#pragma once

#include <vector>

#include "wedge/labelled_graph.hpp"
#include "wedge/poset.hpp"

namespace wedge {

// Poset of subgraphs of a fixed graph, ordered by edge-set inclusion.
// Poset indices and the element list are aligned; keys are Subgraph::key().
struct GraphPoset {
  FinPoset poset;
  std::vector<Subgraph> elements;
};

// Is some component of s not a tree with at most one label?  Membership
// predicate for the connectivity poset.
bool has_heavy_component(const Subgraph& s);

// Proper non-empty subgraphs with a component carrying a cycle or two labels.
GraphPoset build_nontrees(const LabelledGraph& g);

// The subposet of core subgraphs (every valence-one vertex labelled).
GraphPoset build_core_poset(const LabelledGraph& g);

// The retraction H -> max_core(H) as an endomap of build_nontrees(g).
PosetMap core_retraction_map(const LabelledGraph& g);

}  // namespace wedge
