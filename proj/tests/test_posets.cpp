#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>

#include "doctest.h"
#include "wedge/graph_posets.hpp"
#include "wedge/homology.hpp"
#include "wedge/poset.hpp"

using namespace wedge;

namespace {

using E = LabelledGraph::Edge;

FinPoset chain3() {
  // given with the redundant long relation on purpose
  return FinPoset({"a", "b", "c"}, {{0, 1}, {1, 2}, {0, 2}});
}

FinPoset antichain(int n) {
  std::vector<std::string> keys;
  for (int i = 0; i < n; ++i) keys.push_back("p" + std::to_string(i));
  return FinPoset(keys, {});
}

LabelledGraph theta() {
  return LabelledGraph(2, {E{0, 1}, E{0, 1}, E{0, 1}}, {});
}

}  // namespace

TEST_CASE("construction validates the order") {
  CHECK_THROWS_AS(FinPoset({"a", "a"}, {}), InvalidArgument);
  CHECK_THROWS_AS(FinPoset({"a", "b"}, {{0, 1}, {1, 0}}), InvalidArgument);
  CHECK_THROWS_AS(FinPoset({"a", "b", "c"}, {{0, 1}, {1, 2}, {2, 0}}),
                  InvalidArgument);
  CHECK_THROWS_AS(FinPoset({"a"}, {{0, 0}}), InvalidArgument);
  CHECK_THROWS_AS(FinPoset({"a"}, {{0, 1}}), InvalidArgument);
}

TEST_CASE("covers store the transitive reduction") {
  FinPoset p = chain3();
  CHECK(p.covers() == std::vector<std::pair<int, int>>{{0, 1}, {1, 2}});
  CHECK(p.less(0, 2));
  CHECK_FALSE(p.less(2, 0));
  CHECK(p.leq(1, 1));
  CHECK(p.minimal_elements() == std::vector<int>{0});
  CHECK(p.maximal_elements() == std::vector<int>{2});
  CHECK(p.index_of("b") == 1);
  CHECK(p.index_of("zz") == -1);
}

TEST_CASE("restrict induces the order") {
  FinPoset p = chain3();
  FinPoset q = p.restrict({0, 2});
  CHECK(q.size() == 2);
  CHECK(q.keys() == std::vector<std::string>{"a", "c"});
  CHECK(q.less(0, 1));
  CHECK(q.covers() == std::vector<std::pair<int, int>>{{0, 1}});
}

TEST_CASE("text round-trip") {
  FinPoset p = chain3();
  FinPoset q = FinPoset::from_text(p.to_text());
  CHECK(q.keys() == p.keys());
  CHECK(q.covers() == p.covers());
  CHECK_THROWS_AS(FinPoset::from_text(""), ParseError);
  CHECK_THROWS_AS(FinPoset::from_text("2 0\nonlyone\n"), ParseError);
  CHECK_THROWS_AS(FinPoset::from_text("1 1\nk\n"), ParseError);
}

TEST_CASE("intervals") {
  FinPoset p = chain3();
  CHECK(interval(p, 1, IntervalSide::Below).keys() == std::vector<std::string>{"a"});
  CHECK(interval(p, 1, IntervalSide::Above).keys() == std::vector<std::string>{"c"});
  CHECK(interval(p, 1, IntervalSide::Below, false).size() == 2);
  CHECK(interval(p, 0, IntervalSide::Below).size() == 0);
}

TEST_CASE("product minus bottom of a single factor is that factor") {
  FinPoset p = chain3();
  FinPoset q = product_minus_bottom({&p});
  CHECK(q.size() == p.size());
  CHECK(q.covers() == p.covers());
  CHECK(q.key(0) == "(a)");
}

TEST_CASE("product with an empty factor is the other factor padded") {
  FinPoset p = chain3();
  FinPoset none;
  FinPoset q = product_minus_bottom({&p, &none});
  CHECK(q.size() == p.size());
  CHECK(q.covers() == p.covers());
  CHECK(q.key(2) == "(c|_)");
}

TEST_CASE("order complex of a doubled point product is a circle") {
  // antichain pairs are zero-spheres; the shifted product realises the join
  FinPoset s0 = antichain(2);
  FinPoset prod = product_minus_bottom({&s0, &s0});
  CHECK(prod.size() == 8);
  HomologyProfile h = reduced_homology(order_complex(prod));
  CHECK(h.get(1) == HomologyGroup{1, {}});
  CHECK(h.groups().size() == 1);
}

TEST_CASE("poset maps validate monotonicity") {
  FinPoset p = chain3();
  CHECK_THROWS_AS(PosetMap(p, p, {0, 1}), InvalidArgument);
  CHECK_THROWS_AS(PosetMap(p, p, {0, 1, 5}), InvalidArgument);
  CHECK_THROWS_AS(PosetMap(p, p, {1, 0, 2}), InvalidArgument);  // reverses a < b
  PosetMap ok(p, p, {0, 0, 1});
  CHECK(ok.image[2] == 1);
}

TEST_CASE("fibres of the identity are closed lower intervals") {
  FinPoset p = chain3();
  PosetMap id(p, p, {0, 1, 2});
  for (int y = 0; y < p.size(); ++y) {
    FinPoset fib = fibre_below(id, y);
    FinPoset low = interval(p, y, IntervalSide::Below, false);
    CHECK(fib.keys() == low.keys());
    CHECK(fib.covers() == low.covers());
  }
}

TEST_CASE("monotone image check wants a uniform direction") {
  FinPoset p = chain3();
  CHECK(monotone_image_check(PosetMap(p, p, {0, 1, 2})));
  CHECK(monotone_image_check(PosetMap(p, p, {0, 0, 1})));  // decreasing
  CHECK(monotone_image_check(PosetMap(p, p, {1, 1, 2})));  // increasing
  CHECK_FALSE(monotone_image_check(PosetMap(p, p, {1, 1, 1})));  // mixed
  FinPoset renamed({"x", "y", "z"}, {{0, 1}, {1, 2}});
  CHECK_FALSE(monotone_image_check(PosetMap(p, renamed, {0, 1, 2})));
}

TEST_CASE("connectivity poset of the theta graph") {
  LabelledGraph g = theta();
  GraphPoset gp = build_nontrees(g);
  // single edges are trees without labels; only the three bananas survive
  REQUIRE(gp.poset.size() == 3);
  CHECK(gp.poset.covers().empty());
  std::vector<std::string> keys = gp.poset.keys();
  std::sort(keys.begin(), keys.end());
  CHECK(keys == std::vector<std::string>{"e0+e1", "e0+e2", "e1+e2"});
  for (const auto& s : gp.elements) CHECK(has_heavy_component(s));

  HomologyProfile h = reduced_homology(order_complex(gp.poset));
  CHECK(h.get(0) == HomologyGroup{2, {}});
  CHECK(h.groups().size() == 1);
}

TEST_CASE("membership predicate") {
  LabelledGraph g(3, {E{0, 1}, E{1, 2}}, {0, 2});
  // the whole path carries two labels
  CHECK(has_heavy_component(Subgraph(g, {0, 1})));
  // one edge holds only one label
  CHECK_FALSE(has_heavy_component(Subgraph(g, {0})));
  LabelledGraph r(1, {E{0, 0}}, {});
  CHECK(has_heavy_component(Subgraph(r, {0})));
}

TEST_CASE("core poset and retraction of the theta graph") {
  LabelledGraph g = theta();
  GraphPoset core = build_core_poset(g);
  CHECK(core.poset.size() == 3);  // the bananas are already cores
  PosetMap r = core_retraction_map(g);
  CHECK(monotone_image_check(r));
  for (int i = 0; i < r.source.size(); ++i)
    CHECK(r.source.leq(r.image[i], i));  // retraction only shrinks
}

TEST_CASE("core retraction on a graph with leaves") {
  // loop with a labelled tail: tail-bearing subgraphs retract onto the loop
  LabelledGraph g(3, {E{0, 0}, E{0, 1}, E{1, 2}}, {});
  GraphPoset gp = build_nontrees(g);
  GraphPoset core = build_core_poset(g);
  CHECK(core.poset.size() < gp.poset.size());
  for (const auto& s : core.elements) CHECK(is_leafless(s));
  PosetMap r = core_retraction_map(g);
  CHECK(monotone_image_check(r));
  // both posets have matching homology, the invariant the sweep relies on
  CHECK(reduced_homology(order_complex(gp.poset)) ==
        reduced_homology(order_complex(core.poset)));
}
