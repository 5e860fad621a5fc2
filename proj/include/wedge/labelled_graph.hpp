#pragma once

#include <string>
#include <vector>

#include "wedge/errors.hpp"

namespace wedge {

// Finite multigraph with loops, a set of labelled vertices and stable edge
// ids.  Vertices are dense indices 0..n-1; edge ids are positions in the edge
// list, which is the order edges appear in a JSON file.  Isolated vertices are
// not representable: every vertex must meet an edge.
class LabelledGraph {
 public:
  struct Edge {
    int u, v;  // normalised so that u <= v; u == v is a loop
  };

  LabelledGraph(int n_vertices, std::vector<Edge> edges, std::vector<int> labels);
  LabelledGraph(int n_vertices, std::vector<Edge> edges, std::vector<int> labels,
                std::vector<std::string> vertex_names);

  static LabelledGraph from_json(const std::string& text);
  static LabelledGraph from_json_file(const std::string& path);
  std::string to_json() const;

  int n_vertices() const { return n_vertices_; }
  int n_edges() const { return static_cast<int>(edges_.size()); }
  const Edge& edge(int e) const { return edges_.at(e); }
  const std::vector<Edge>& edges() const { return edges_; }
  bool is_loop(int e) const { return edges_.at(e).u == edges_.at(e).v; }
  const std::vector<int>& labels() const { return labels_; }  // sorted
  bool is_labelled(int v) const;
  int n_labels() const { return static_cast<int>(labels_.size()); }
  const std::string& vertex_name(int v) const { return vertex_names_.at(v); }
  const std::vector<std::string>& vertex_names() const { return vertex_names_; }
  // valence of v; a loop at v contributes 2
  int valence(int v) const;

 private:
  int n_vertices_;
  std::vector<Edge> edges_;
  std::vector<int> labels_;
  std::vector<std::string> vertex_names_;
};

// Non-empty subset of the edges of a fixed parent graph.  Vertices and labels
// are the induced ones.  The parent must outlive the subgraph.
class Subgraph {
 public:
  Subgraph(const LabelledGraph& parent, std::vector<int> edge_ids);

  const LabelledGraph& parent() const { return *parent_; }
  const std::vector<int>& edge_ids() const { return edge_ids_; }  // sorted
  int n_edges() const { return static_cast<int>(edge_ids_.size()); }
  std::vector<int> vertices() const;  // induced, sorted
  std::vector<int> labels() const;    // induced, sorted
  bool has_edge(int e) const;
  bool subset_of(const Subgraph& other) const;
  // valence inside the subgraph; loops count twice
  int valence(int v) const;
  // canonical key "e0+e2+e5", used as poset payload key
  std::string key() const;

 private:
  const LabelledGraph* parent_;
  std::vector<int> edge_ids_;
};

// One connected component: sorted vertices plus the edge ids lying in it.
struct Component {
  std::vector<int> vertices;
  std::vector<int> edges;
};

// Components of the whole graph, ordered by smallest vertex.
std::vector<Component> connected_components(const LabelledGraph& g);
// Components of a subgraph (only induced vertices, only subgraph edges).
std::vector<Component> connected_components(const Subgraph& s);

bool is_connected(const LabelledGraph& g);

// First Betti number |E| - |V| + 1.  Throws DisconnectedGraph on disconnected
// input, naming the components in the message.
int rank(const LabelledGraph& g);
// Rank of one component given as (vertices, edges).
int rank(const Component& c);

// An edge separates if removing its interior (endpoints stay, possibly as
// isolated points) disconnects the graph.  Loops never separate; an edge with
// a valence-one endpoint always does.  Requires a connected graph.
bool is_separating_edge(const LabelledGraph& g, int e);

// Def: e separates, one component of the edge-removed graph carries every
// label, and the subgraph on the remaining edges still has a component with a
// cycle or with two labels.
bool is_l_separating_edge(const LabelledGraph& g, int e);

// Iteratively removes edges at unlabelled valence-one vertices.  Throws
// EmptyCore when nothing survives.
Subgraph max_core(const Subgraph& s);

// Whether s already equals its own maximal core (every valence-one vertex is
// labelled).
bool is_leafless(const Subgraph& s);

// G minus an edge; vertices left isolated are dropped, labels are induced.
// Throws LastEdge when e is the only edge.
LabelledGraph delete_edge(const LabelledGraph& g, int e);

// G with a non-loop edge collapsed; the merged vertex is labelled when either
// endpoint was, parallel copies of e become loops.  Throws InvalidArgument on
// a loop and DegenerateCollapse when e is the only edge.
LabelledGraph collapse_edge(const LabelledGraph& g, int e);

// Expected top dimension of the connectivity poset for a graph of the given
// rank with the given number of labels.
int expected_dimension(int rank, int n_labels);

// Canonical form of a labelled graph under label-preserving isomorphism,
// computed by brute force over vertex permutations (graphs here are small).
class GraphIsoClass {
 public:
  explicit GraphIsoClass(const LabelledGraph& g);
  const std::string& key() const { return key_; }
  friend bool operator==(const GraphIsoClass& a, const GraphIsoClass& b) {
    return a.key_ == b.key_;
  }
  friend bool operator<(const GraphIsoClass& a, const GraphIsoClass& b) {
    return a.key_ < b.key_;
  }

 private:
  std::string key_;
};

bool isomorphic(const LabelledGraph& a, const LabelledGraph& b);

}  // namespace wedge
