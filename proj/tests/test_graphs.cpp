#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>
#include <set>

#include "doctest.h"
#include "wedge/graph_enum.hpp"
#include "wedge/labelled_graph.hpp"

using namespace wedge;

namespace {

using E = LabelledGraph::Edge;

LabelledGraph rose(int loops) {
  std::vector<E> edges(loops, E{0, 0});
  return LabelledGraph(1, edges, {});
}

LabelledGraph theta() {
  return LabelledGraph(2, {E{0, 1}, E{0, 1}, E{0, 1}}, {});
}

}  // namespace

TEST_CASE("construction rejects degenerate graphs") {
  CHECK_THROWS_AS(LabelledGraph(0, {}, {}), InvalidArgument);
  CHECK_THROWS_AS(LabelledGraph(1, {}, {}), InvalidArgument);          // no edges
  CHECK_THROWS_AS(LabelledGraph(2, {E{0, 0}}, {}), InvalidArgument);   // isolated vertex
  CHECK_THROWS_AS(LabelledGraph(1, {E{0, 0}}, {1}), InvalidArgument);  // label range
  CHECK_THROWS_AS(LabelledGraph(1, {E{0, 1}}, {}), InvalidArgument);   // endpoint range
}

TEST_CASE("edges normalise and labels deduplicate") {
  LabelledGraph g(2, {E{1, 0}}, {0, 0});
  CHECK(g.edge(0).u == 0);
  CHECK(g.edge(0).v == 1);
  CHECK(g.labels() == std::vector<int>{0});
  CHECK(g.is_labelled(0));
  CHECK_FALSE(g.is_labelled(1));
}

TEST_CASE("valence counts loops twice") {
  LabelledGraph g(2, {E{0, 0}, E{0, 1}}, {});
  CHECK(g.valence(0) == 3);
  CHECK(g.valence(1) == 1);
}

TEST_CASE("json io round-trips") {
  LabelledGraph g = LabelledGraph::from_json_file(std::string(WEDGE_TEST_DATA) + "/theta.json");
  CHECK(g.n_vertices() == 2);
  CHECK(g.n_edges() == 3);
  CHECK(g.n_labels() == 0);
  LabelledGraph back = LabelledGraph::from_json(g.to_json());
  CHECK(back.n_edges() == 3);
  CHECK(back.vertex_name(0) == "u");

  CHECK_THROWS_AS(LabelledGraph::from_json("{"), ParseError);
  CHECK_THROWS_AS(LabelledGraph::from_json("{\"vertices\":[\"a\"]}"), ParseError);
  CHECK_THROWS_AS(
      LabelledGraph::from_json(
          "{\"vertices\":[\"a\"],\"edges\":[[\"a\",\"b\"]]}"),
      ParseError);
}

TEST_CASE("components and rank") {
  LabelledGraph g = theta();
  CHECK(is_connected(g));
  CHECK(rank(g) == 2);
  CHECK(rank(rose(3)) == 3);

  LabelledGraph two(4, {E{0, 1}, E{2, 3}}, {});
  CHECK_FALSE(is_connected(two));
  auto comps = connected_components(two);
  REQUIRE(comps.size() == 2);
  CHECK(comps[0].vertices == std::vector<int>{0, 1});
  CHECK(comps[1].vertices == std::vector<int>{2, 3});
  CHECK_THROWS_WITH_AS(rank(two),
                       "rank of disconnected graph; components: {v0,v1} {v2,v3}",
                       DisconnectedGraph);
}

TEST_CASE("subgraph basics") {
  LabelledGraph g = theta();
  Subgraph s(g, {2, 0});
  CHECK(s.edge_ids() == std::vector<int>{0, 2});
  CHECK(s.key() == "e0+e2");
  CHECK(s.vertices() == std::vector<int>{0, 1});
  CHECK(s.valence(0) == 2);
  CHECK(s.subset_of(Subgraph(g, {0, 1, 2})));
  CHECK_FALSE(Subgraph(g, {0, 1}).subset_of(s));
  CHECK_THROWS_AS(Subgraph(g, {}), InvalidArgument);
  CHECK_THROWS_AS(Subgraph(g, {3}), InvalidArgument);
}

TEST_CASE("separating edges") {
  // loops never separate
  LabelledGraph loop_leaf(2, {E{0, 0}, E{0, 1}}, {});
  CHECK_FALSE(is_separating_edge(loop_leaf, 0));
  CHECK(is_separating_edge(loop_leaf, 1));  // valence-one endpoint

  for (int e = 0; e < 3; ++e) CHECK_FALSE(is_separating_edge(theta(), e));

  // bridge between two triangles
  LabelledGraph barbell(
      6, {E{0, 1}, E{1, 2}, E{0, 2}, E{2, 3}, E{3, 4}, E{4, 5}, E{3, 5}}, {});
  CHECK(is_separating_edge(barbell, 3));
  CHECK_FALSE(is_separating_edge(barbell, 0));
}

TEST_CASE("l-separating edges need all labels on one side and a heavy remainder") {
  // unlabelled loop+leaf: the leaf edge is l-separating (everything vacuous,
  // the loop survives)
  LabelledGraph loop_leaf(2, {E{0, 0}, E{0, 1}}, {});
  CHECK(is_l_separating_edge(loop_leaf, 1));
  CHECK_FALSE(is_l_separating_edge(loop_leaf, 0));

  // labelling the leaf vertex splits the labels across the cut
  LabelledGraph labelled_leaf(2, {E{0, 0}, E{0, 1}}, {0, 1});
  CHECK_FALSE(is_l_separating_edge(labelled_leaf, 1));

  // single edge, both ends labelled: deletion leaves nothing in the poset
  LabelledGraph seg(2, {E{0, 1}}, {0, 1});
  CHECK_FALSE(is_l_separating_edge(seg, 0));
}

TEST_CASE("max_core strips unlabelled leaves") {
  LabelledGraph g(3, {E{0, 0}, E{0, 1}, E{1, 2}}, {});
  Subgraph whole(g, {0, 1, 2});
  CHECK_FALSE(is_leafless(whole));
  Subgraph core = max_core(whole);
  CHECK(core.edge_ids() == std::vector<int>{0});
  CHECK(is_leafless(core));

  // a labelled endpoint stops the stripping
  LabelledGraph h(3, {E{0, 0}, E{0, 1}, E{1, 2}}, {2});
  CHECK(max_core(Subgraph(h, {0, 1, 2})).edge_ids() == std::vector<int>{0, 1, 2});

  // an unlabelled tree has no core at all
  LabelledGraph path(3, {E{0, 1}, E{1, 2}}, {});
  CHECK_THROWS_AS(max_core(Subgraph(path, {0, 1})), EmptyCore);
}

TEST_CASE("delete_edge drops stranded vertices") {
  LabelledGraph g(3, {E{0, 0}, E{0, 1}, E{1, 2}}, {2});
  LabelledGraph d = delete_edge(g, 2);
  CHECK(d.n_vertices() == 2);
  CHECK(d.n_edges() == 2);
  CHECK(d.n_labels() == 0);  // the labelled vertex went with its edge

  CHECK_THROWS_AS(delete_edge(LabelledGraph(1, {E{0, 0}}, {}), 0), LastEdge);
}

TEST_CASE("collapse_edge merges endpoints and keeps parallel edges as loops") {
  LabelledGraph banana(2, {E{0, 1}, E{0, 1}}, {1});
  LabelledGraph c = collapse_edge(banana, 0);
  CHECK(c.n_vertices() == 1);
  CHECK(c.n_edges() == 1);
  CHECK(c.is_loop(0));
  CHECK(c.n_labels() == 1);  // label carried onto the merged vertex

  CHECK_THROWS_AS(collapse_edge(rose(2), 0), InvalidArgument);  // loops cannot collapse
  CHECK_THROWS_AS(collapse_edge(LabelledGraph(2, {E{0, 1}}, {}), 0),
                  DegenerateCollapse);
}

TEST_CASE("expected dimension") {
  CHECK(expected_dimension(0, 2) == -1);  // n + k - 3
  CHECK(expected_dimension(2, 0) == 0);   // n - 2
  CHECK(expected_dimension(2, 1) == 0);
  CHECK(expected_dimension(3, 0) == 1);
  CHECK(expected_dimension(1, 3) == 1);
  CHECK(expected_dimension(0, 0) == -2);
}

TEST_CASE("isomorphism respects labels") {
  LabelledGraph a(2, {E{0, 0}, E{0, 1}}, {0});
  LabelledGraph b(2, {E{1, 1}, E{0, 1}}, {1});  // same picture, renamed
  LabelledGraph c(2, {E{0, 0}, E{0, 1}}, {1});  // label moved to the leaf
  CHECK(isomorphic(a, b));
  CHECK_FALSE(isomorphic(a, c));
  CHECK(GraphIsoClass(a) == GraphIsoClass(b));
}

TEST_CASE("enumeration counts are stable") {
  CHECK(enumerate_labelled_graphs(1, 0).size() == 2);
  CHECK(enumerate_labelled_graphs(1, 1).size() == 4);
  CHECK(enumerate_labelled_graphs(2, 0).size() == 6);
  CHECK(enumerate_labelled_graphs(2, 1).size() == 14);
  CHECK(enumerate_labelled_graphs(2, 2).size() == 19);
  CHECK(enumerate_labelled_graphs(3, 2).size() == 69);
  CHECK(enumerate_labelled_graphs(3, 3).size() == 78);
  CHECK(enumerate_labelled_graphs(4, 3).size() == 321);

  CHECK(enumerate_unlabelled_graphs(3).size() == 17);
  CHECK(enumerate_unlabelled_graphs(4).size() == 47);
  CHECK(enumerate_unlabelled_graphs(5).size() == 142);
}

TEST_CASE("enumeration is connected, in bounds, and duplicate-free") {
  auto graphs = enumerate_labelled_graphs(3, 2);
  for (const auto& g : graphs) {
    CHECK(is_connected(g));
    CHECK(g.n_edges() <= 3);
    CHECK(g.n_labels() <= 2);
  }
  for (size_t i = 0; i < graphs.size(); ++i)
    for (size_t j = i + 1; j < graphs.size(); ++j)
      CHECK_FALSE(isomorphic(graphs[i], graphs[j]));
}

TEST_CASE("enumeration hits every small graph") {
  // independent generate-and-dedupe pass over two edges, one label
  auto reps = enumerate_labelled_graphs(2, 1);
  std::vector<LabelledGraph> raw;
  for (int nv = 1; nv <= 3; ++nv) {
    std::vector<std::pair<int, int>> slots;
    for (int u = 0; u < nv; ++u)
      for (int v = u; v < nv; ++v) slots.push_back({u, v});
    int ns = static_cast<int>(slots.size());
    for (int a = 0; a < ns; ++a)
      for (int b = a; b <= ns; ++b) {  // b == ns: single-edge graph
        std::vector<E> edges{E{slots[a].first, slots[a].second}};
        if (b < ns) edges.push_back(E{slots[b].first, slots[b].second});
        for (int lab = -1; lab < nv; ++lab) {
          std::vector<int> labels;
          if (lab >= 0) labels.push_back(lab);
          try {
            LabelledGraph g(nv, edges, labels);
            if (is_connected(g)) raw.push_back(g);
          } catch (const InvalidArgument&) {
          }
        }
      }
  }
  // every raw graph matches exactly one representative
  for (const auto& g : raw) {
    int hits = 0;
    for (const auto& r : reps)
      if (isomorphic(g, r)) ++hits;
    CHECK(hits == 1);
  }
  // and every representative is realised
  for (const auto& r : reps) {
    bool hit = false;
    for (const auto& g : raw) hit = hit || isomorphic(g, r);
    CHECK(hit);
  }
}
