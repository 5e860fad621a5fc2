#include "wedge/labelled_graph.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <set>
#include <sstream>

#include "json.hpp"

namespace wedge {

namespace {

std::vector<std::string> default_names(int n) {
  std::vector<std::string> names;
  names.reserve(n);
  for (int i = 0; i < n; ++i) names.push_back("v" + std::to_string(i));
  return names;
}

}  // namespace

LabelledGraph::LabelledGraph(int n_vertices, std::vector<Edge> edges,
                             std::vector<int> labels)
    : LabelledGraph(n_vertices, std::move(edges), std::move(labels),
                    default_names(n_vertices)) {}

LabelledGraph::LabelledGraph(int n_vertices, std::vector<Edge> edges,
                             std::vector<int> labels,
                             std::vector<std::string> vertex_names)
    : n_vertices_(n_vertices),
      edges_(std::move(edges)),
      labels_(std::move(labels)),
      vertex_names_(std::move(vertex_names)) {
  if (n_vertices_ <= 0) throw InvalidArgument("graph needs at least one vertex");
  if (edges_.empty()) throw InvalidArgument("graph needs at least one edge");
  if (static_cast<int>(vertex_names_.size()) != n_vertices_)
    throw InvalidArgument("vertex name count does not match vertex count");
  std::vector<bool> touched(n_vertices_, false);
  for (auto& e : edges_) {
    if (e.u < 0 || e.u >= n_vertices_ || e.v < 0 || e.v >= n_vertices_)
      throw InvalidArgument("edge endpoint out of range");
    if (e.u > e.v) std::swap(e.u, e.v);
    touched[e.u] = touched[e.v] = true;
  }
  for (int v = 0; v < n_vertices_; ++v)
    if (!touched[v])
      throw InvalidArgument("isolated vertex " + vertex_names_[v] + " not allowed");
  std::sort(labels_.begin(), labels_.end());
  labels_.erase(std::unique(labels_.begin(), labels_.end()), labels_.end());
  for (int v : labels_)
    if (v < 0 || v >= n_vertices_) throw InvalidArgument("label out of range");
}

bool LabelledGraph::is_labelled(int v) const {
  return std::binary_search(labels_.begin(), labels_.end(), v);
}

int LabelledGraph::valence(int v) const {
  int d = 0;
  for (const auto& e : edges_) {
    if (e.u == v) ++d;
    if (e.v == v) ++d;
  }
  return d;
}

LabelledGraph LabelledGraph::from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("bad graph json: ") + e.what());
  }
  if (!j.is_object() || !j.contains("vertices") || !j.contains("edges"))
    throw ParseError("graph json needs \"vertices\" and \"edges\"");
  std::vector<std::string> names;
  std::map<std::string, int> index;
  for (const auto& v : j.at("vertices")) {
    if (!v.is_string()) throw ParseError("vertex names must be strings");
    std::string name = v.get<std::string>();
    if (index.count(name)) throw ParseError("duplicate vertex name " + name);
    index[name] = static_cast<int>(names.size());
    names.push_back(name);
  }
  std::vector<Edge> edges;
  for (const auto& e : j.at("edges")) {
    if (!e.is_array() || e.size() != 2) throw ParseError("edges must be pairs");
    std::string a = e.at(0).get<std::string>(), b = e.at(1).get<std::string>();
    if (!index.count(a) || !index.count(b))
      throw ParseError("edge uses undeclared vertex");
    edges.push_back({index[a], index[b]});
  }
  std::vector<int> labels;
  if (j.contains("labels"))
    for (const auto& l : j.at("labels")) {
      std::string name = l.get<std::string>();
      if (!index.count(name)) throw ParseError("label uses undeclared vertex");
      labels.push_back(index[name]);
    }
  // read the size before the move; argument evaluation order is unspecified
  int nv = static_cast<int>(names.size());
  return LabelledGraph(nv, std::move(edges), std::move(labels), std::move(names));
}

LabelledGraph LabelledGraph::from_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return from_json(ss.str());
}

std::string LabelledGraph::to_json() const {
  nlohmann::json j;
  j["vertices"] = vertex_names_;
  auto edges = nlohmann::json::array();
  for (const auto& e : edges_)
    edges.push_back({vertex_names_[e.u], vertex_names_[e.v]});
  j["edges"] = edges;
  auto labels = nlohmann::json::array();
  for (int v : labels_) labels.push_back(vertex_names_[v]);
  j["labels"] = labels;
  return j.dump();
}

Subgraph::Subgraph(const LabelledGraph& parent, std::vector<int> edge_ids)
    : parent_(&parent), edge_ids_(std::move(edge_ids)) {
  if (edge_ids_.empty()) throw InvalidArgument("subgraph needs at least one edge");
  std::sort(edge_ids_.begin(), edge_ids_.end());
  edge_ids_.erase(std::unique(edge_ids_.begin(), edge_ids_.end()), edge_ids_.end());
  for (int e : edge_ids_)
    if (e < 0 || e >= parent.n_edges())
      throw InvalidArgument("subgraph edge id out of range");
}

std::vector<int> Subgraph::vertices() const {
  std::set<int> vs;
  for (int e : edge_ids_) {
    vs.insert(parent_->edge(e).u);
    vs.insert(parent_->edge(e).v);
  }
  return {vs.begin(), vs.end()};
}

std::vector<int> Subgraph::labels() const {
  std::vector<int> out;
  for (int v : vertices())
    if (parent_->is_labelled(v)) out.push_back(v);
  return out;
}

bool Subgraph::has_edge(int e) const {
  return std::binary_search(edge_ids_.begin(), edge_ids_.end(), e);
}

bool Subgraph::subset_of(const Subgraph& other) const {
  return std::includes(other.edge_ids_.begin(), other.edge_ids_.end(),
                       edge_ids_.begin(), edge_ids_.end());
}

int Subgraph::valence(int v) const {
  int d = 0;
  for (int e : edge_ids_) {
    if (parent_->edge(e).u == v) ++d;
    if (parent_->edge(e).v == v) ++d;
  }
  return d;
}

std::string Subgraph::key() const {
  std::string out;
  for (int e : edge_ids_) {
    if (!out.empty()) out += '+';
    out += 'e';
    out += std::to_string(e);
  }
  return out;
}

namespace {

// Union-find components over an explicit vertex set.
struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

std::vector<Component> components_of(const LabelledGraph& g,
                                     const std::vector<int>& verts,
                                     const std::vector<int>& edge_ids) {
  UnionFind uf(g.n_vertices());
  for (int e : edge_ids) uf.unite(g.edge(e).u, g.edge(e).v);
  std::map<int, Component> by_root;
  for (int v : verts) by_root[uf.find(v)].vertices.push_back(v);
  for (int e : edge_ids) by_root[uf.find(g.edge(e).u)].edges.push_back(e);
  std::vector<Component> out;
  std::map<int, Component*> order;  // smallest vertex -> component
  for (auto& [root, comp] : by_root) {
    std::sort(comp.vertices.begin(), comp.vertices.end());
    std::sort(comp.edges.begin(), comp.edges.end());
    order[comp.vertices.front()] = &comp;
  }
  for (auto& [v, comp] : order) out.push_back(std::move(*comp));
  return out;
}

}  // namespace

std::vector<Component> connected_components(const LabelledGraph& g) {
  std::vector<int> verts(g.n_vertices());
  std::iota(verts.begin(), verts.end(), 0);
  std::vector<int> edges(g.n_edges());
  std::iota(edges.begin(), edges.end(), 0);
  return components_of(g, verts, edges);
}

std::vector<Component> connected_components(const Subgraph& s) {
  return components_of(s.parent(), s.vertices(), s.edge_ids());
}

bool is_connected(const LabelledGraph& g) {
  return connected_components(g).size() == 1;
}

int rank(const LabelledGraph& g) {
  auto comps = connected_components(g);
  if (comps.size() != 1) {
    std::string msg = "rank of disconnected graph; components:";
    for (const auto& c : comps) {
      msg += " {";
      for (size_t i = 0; i < c.vertices.size(); ++i) {
        if (i) msg += ',';
        msg += g.vertex_name(c.vertices[i]);
      }
      msg += '}';
    }
    throw DisconnectedGraph(msg);
  }
  return g.n_edges() - g.n_vertices() + 1;
}

int rank(const Component& c) {
  return static_cast<int>(c.edges.size()) - static_cast<int>(c.vertices.size()) + 1;
}

bool is_separating_edge(const LabelledGraph& g, int e) {
  if (g.is_loop(e)) return false;
  // all vertices stay; only the interior of e is removed
  std::vector<int> verts(g.n_vertices());
  std::iota(verts.begin(), verts.end(), 0);
  std::vector<int> rest;
  for (int i = 0; i < g.n_edges(); ++i)
    if (i != e) rest.push_back(i);
  return components_of(g, verts, rest).size() > 1;
}

bool is_l_separating_edge(const LabelledGraph& g, int e) {
  if (!is_separating_edge(g, e)) return false;
  std::vector<int> verts(g.n_vertices());
  std::iota(verts.begin(), verts.end(), 0);
  std::vector<int> rest;
  for (int i = 0; i < g.n_edges(); ++i)
    if (i != e) rest.push_back(i);
  // some component of the edge-removed graph must carry every label
  bool some_side_has_all = false;
  for (const auto& comp : components_of(g, verts, rest)) {
    bool all = true;
    for (int l : g.labels())
      if (!std::binary_search(comp.vertices.begin(), comp.vertices.end(), l)) {
        all = false;
        break;
      }
    if (all) {
      some_side_has_all = true;
      break;
    }
  }
  if (!some_side_has_all) return false;
  // the rest, as a subgraph with isolated vertices dropped, must still have a
  // component with a cycle or with two labels
  if (rest.empty()) return false;
  Subgraph remainder(g, rest);
  for (const auto& comp : connected_components(remainder)) {
    if (rank(comp) > 0) return true;
    int labs = 0;
    for (int v : comp.vertices)
      if (g.is_labelled(v)) ++labs;
    if (labs >= 2) return true;
  }
  return false;
}

Subgraph max_core(const Subgraph& s) {
  std::vector<int> cur = s.edge_ids();
  const LabelledGraph& g = s.parent();
  for (;;) {
    if (cur.empty()) throw EmptyCore("leaf removal exhausted subgraph " + s.key());
    Subgraph sub(g, cur);
    int drop = -1;
    for (int e : cur) {
      const auto& ed = g.edge(e);
      if (ed.u == ed.v) continue;
      if ((sub.valence(ed.u) == 1 && !g.is_labelled(ed.u)) ||
          (sub.valence(ed.v) == 1 && !g.is_labelled(ed.v))) {
        drop = e;
        break;
      }
    }
    if (drop < 0) return sub;
    cur.erase(std::find(cur.begin(), cur.end(), drop));
  }
}

bool is_leafless(const Subgraph& s) {
  const LabelledGraph& g = s.parent();
  for (int v : s.vertices())
    if (s.valence(v) == 1 && !g.is_labelled(v)) return false;
  return true;
}

namespace {

// Rebuilds a graph from surviving edges, dropping isolated vertices.  The
// result's edge ids enumerate the surviving edges in their original order.
LabelledGraph rebuild(const LabelledGraph& g, const std::vector<int>& edge_ids,
                      const std::vector<int>& vertex_of,  // old -> merged old id
                      const std::vector<std::string>& names_of) {
  std::set<int> used;
  for (int e : edge_ids) {
    used.insert(vertex_of[g.edge(e).u]);
    used.insert(vertex_of[g.edge(e).v]);
  }
  std::map<int, int> newid;
  std::vector<std::string> names;
  for (int v : used) {
    newid[v] = static_cast<int>(names.size());
    names.push_back(names_of[v]);
  }
  std::vector<LabelledGraph::Edge> edges;
  for (int e : edge_ids)
    edges.push_back({newid[vertex_of[g.edge(e).u]], newid[vertex_of[g.edge(e).v]]});
  std::vector<int> labels;
  for (int l : g.labels()) {
    int m = vertex_of[l];
    if (used.count(m)) labels.push_back(newid[m]);
  }
  // read the size before the move; argument evaluation order is unspecified
  int nv = static_cast<int>(names.size());
  return LabelledGraph(nv, std::move(edges), std::move(labels), std::move(names));
}

}  // namespace

LabelledGraph delete_edge(const LabelledGraph& g, int e) {
  if (e < 0 || e >= g.n_edges()) throw InvalidArgument("edge id out of range");
  if (g.n_edges() == 1) throw LastEdge("deleting the only edge of " + g.to_json());
  std::vector<int> keep;
  for (int i = 0; i < g.n_edges(); ++i)
    if (i != e) keep.push_back(i);
  std::vector<int> ident(g.n_vertices());
  std::iota(ident.begin(), ident.end(), 0);
  return rebuild(g, keep, ident, g.vertex_names());
}

LabelledGraph collapse_edge(const LabelledGraph& g, int e) {
  if (e < 0 || e >= g.n_edges()) throw InvalidArgument("edge id out of range");
  if (g.is_loop(e)) throw InvalidArgument("cannot collapse a loop");
  if (g.n_edges() == 1)
    throw DegenerateCollapse("collapsing the only edge leaves a bare vertex");
  const auto& ed = g.edge(e);
  std::vector<int> vertex_of(g.n_vertices());
  std::iota(vertex_of.begin(), vertex_of.end(), 0);
  vertex_of[ed.v] = ed.u;  // merge the larger endpoint into the smaller
  std::vector<std::string> names = g.vertex_names();
  names[ed.u] = g.vertex_name(ed.u) + "+" + g.vertex_name(ed.v);
  std::vector<int> keep;
  for (int i = 0; i < g.n_edges(); ++i)
    if (i != e) keep.push_back(i);
  return rebuild(g, keep, vertex_of, names);
}

int expected_dimension(int rank, int n_labels) {
  if (rank < 0 || n_labels < 0) throw InvalidArgument("negative rank or label count");
  return n_labels >= 1 ? rank + n_labels - 3 : rank - 2;
}

namespace {

std::string encode(int nv, const std::vector<std::pair<int, int>>& edges,
                   const std::vector<int>& labels) {
  std::string s = "n" + std::to_string(nv) + ";";
  for (const auto& [u, v] : edges) s += std::to_string(u) + "-" + std::to_string(v) + ",";
  s += ";";
  for (int l : labels) s += std::to_string(l) + ",";
  return s;
}

std::string canonical_key(const LabelledGraph& g) {
  int nv = g.n_vertices();
  std::vector<int> perm(nv);
  std::iota(perm.begin(), perm.end(), 0);
  std::string best;
  do {
    std::vector<std::pair<int, int>> edges;
    for (const auto& e : g.edges()) {
      int a = perm[e.u], b = perm[e.v];
      edges.emplace_back(std::min(a, b), std::max(a, b));
    }
    std::sort(edges.begin(), edges.end());
    std::vector<int> labels;
    for (int l : g.labels()) labels.push_back(perm[l]);
    std::sort(labels.begin(), labels.end());
    std::string enc = encode(nv, edges, labels);
    if (best.empty() || enc < best) best = enc;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

}  // namespace

GraphIsoClass::GraphIsoClass(const LabelledGraph& g) : key_(canonical_key(g)) {}

bool isomorphic(const LabelledGraph& a, const LabelledGraph& b) {
  if (a.n_vertices() != b.n_vertices() || a.n_edges() != b.n_edges() ||
      a.n_labels() != b.n_labels())
    return false;
  return GraphIsoClass(a) == GraphIsoClass(b);
}

}  // namespace wedge
