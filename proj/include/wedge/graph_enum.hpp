#pragma once

#include <vector>

#include "wedge/labelled_graph.hpp"

namespace wedge {

// All connected labelled graphs with 1..max_edges edges and at most
// max_labels labels, one representative per label-preserving isomorphism
// class, in a deterministic order (edge count, vertex count, canonical
// encoding).  Vertex counts never exceed max_edges + 1.
std::vector<LabelledGraph> enumerate_labelled_graphs(int max_edges, int max_labels);

// Unlabelled version (every returned graph has an empty label set).
std::vector<LabelledGraph> enumerate_unlabelled_graphs(int max_edges);

}  // namespace wedge
