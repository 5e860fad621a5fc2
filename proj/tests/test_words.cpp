#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>

#include "doctest.h"
#include "wedge/basis_complex.hpp"
#include "wedge/whitehead.hpp"
#include "wedge/words.hpp"

using namespace wedge;

namespace {

CyclicWord w2(const std::string& s) { return CyclicWord::parse(2, s); }

}  // namespace

TEST_CASE("alphabet") {
  CHECK(generator_char(2, 0) == 'x');
  CHECK(generator_char(2, 1) == 'y');
  CHECK(generator_char(3, 2) == 'z');
  CHECK(generator_char(4, 3) == 'a');
  CHECK(generator_char(5, 4) == 'b');
  CHECK_THROWS_AS(generator_char(2, 2), InvalidArgument);
  CHECK(letter_string(2, 0) == "x");
  CHECK(letter_string(2, 1) == "X");
  CHECK(letter_string(2, 3) == "Y");
  CHECK(inverse_letter(4) == 5);
  CHECK(letter_generator(5) == 2);
}

TEST_CASE("parsing and canonical form") {
  CyclicWord comm = w2("xyXY");
  CHECK(comm.length() == 4);
  CHECK(comm.str() == "xyXY");
  CHECK(comm.letters() == std::vector<int>{0, 2, 1, 3});
  CHECK(w2("x y X\tY") == comm);  // whitespace is ignored

  CHECK(w2("yx").str() == "xy");         // least rotation
  CHECK(w2("Yxy").str() == "x");         // conjugation collapses
  CHECK(w2("xyYX xxY yX").length() == 1);  // free and cyclic reduction chain

  CHECK_THROWS_AS(w2("xX"), EmptyClass);
  CHECK_THROWS_AS(w2(""), EmptyClass);
  CHECK_THROWS_AS(w2("w"), ParseError);
  CHECK_THROWS_AS(CyclicWord::parse(0, "x"), InvalidArgument);
  CHECK_THROWS_AS(CyclicWord(2, {7}), InvalidArgument);
  CHECK(CyclicWord::parse(4, "xa").str() == "xa");
}

TEST_CASE("inverse and abelianization") {
  CHECK(w2("xy").inverse() == w2("XY"));
  CHECK(w2("x").inverse() == w2("X"));
  CHECK(w2("xyXY").inverse() == w2("yxYX"));
  CHECK(w2("xyXY").abelianization() == std::vector<long long>{0, 0});
  CHECK(w2("xxy").abelianization() == std::vector<long long>{2, 1});
  CHECK(w2("xY").abelianization() == std::vector<long long>{1, -1});
}

TEST_CASE("class order and enumeration") {
  auto classes = enumerate_classes(2, 1);
  REQUIRE(classes.size() == 4);
  CHECK(classes[0] == w2("x"));
  CHECK(classes[1] == w2("X"));
  CHECK(classes[2] == w2("y"));
  CHECK(classes[3] == w2("Y"));

  auto len2 = enumerate_classes(2, 2);
  CHECK(len2.size() == 12);
  for (size_t i = 0; i + 1 < len2.size(); ++i) CHECK(len2[i] < len2[i + 1]);
  CHECK_THROWS_AS(enumerate_classes(0, 1), InvalidArgument);
  CHECK_THROWS_AS(enumerate_classes(2, 0), InvalidArgument);
}

TEST_CASE("whitehead move tables") {
  CHECK(multiplier_autos(2).size() == 16);
  CHECK(permutation_autos(2).size() == 8);
  CHECK(multiplier_autos(3).size() == 96);
  for (const auto& f : multiplier_autos(2)) CHECK_NOTHROW(f.validate(2));
  for (const auto& f : permutation_autos(3)) CHECK_NOTHROW(f.validate(3));
}

TEST_CASE("whitehead autos validate") {
  CHECK_THROWS_AS(WhiteheadAuto::multiplier({false, false, true, false}, 0).validate(2),
                  InvalidArgument);  // a not in the set
  CHECK_THROWS_AS(WhiteheadAuto::multiplier({true, true, false, false}, 0).validate(2),
                  InvalidArgument);  // a^-1 in the set
  CHECK_THROWS_AS(WhiteheadAuto::multiplier({true, false}, 0).validate(2),
                  InvalidArgument);
  CHECK_THROWS_AS(WhiteheadAuto::permutation({0, 0}, {false, false}).validate(2),
                  InvalidArgument);
  CHECK_THROWS_AS(WhiteheadAuto::permutation({0}, {false}).validate(2),
                  InvalidArgument);
  // rank mismatch caught at application time
  WhiteheadAuto f = WhiteheadAuto::multiplier({true, false, false, false}, 0);
  CHECK_THROWS_AS(apply_whitehead(f, CyclicWord::parse(3, "z")), InvalidArgument);
}

TEST_CASE("multiplier moves act one letter at a time") {
  // a = x, A = {x, y}: y picks up the multiplier on the right
  WhiteheadAuto f = WhiteheadAuto::multiplier({true, false, true, false}, 0);
  CHECK(apply_whitehead(f, w2("y")) == w2("xy"));
  CHECK(apply_whitehead(f, w2("x")) == w2("x"));  // a is fixed
  CHECK(apply_whitehead(f, w2("Y")) == w2("XY"));

  // a = Y, A = {Y, x}: x |-> x Y, y fixed; sends xy to x
  WhiteheadAuto g = WhiteheadAuto::multiplier({true, false, false, true}, 3);
  CHECK(apply_whitehead(g, w2("xy")) == w2("x"));
}

TEST_CASE("permutation moves relabel") {
  WhiteheadAuto swap_xy = WhiteheadAuto::permutation({1, 0}, {false, false});
  CHECK(apply_whitehead(swap_xy, w2("xxy")) == w2("xyy"));
  WhiteheadAuto flip_x = WhiteheadAuto::permutation({0, 1}, {true, false});
  CHECK(apply_whitehead(flip_x, w2("xxy")) == w2("XXy"));
  CHECK(apply_whitehead(flip_x, apply_whitehead(flip_x, w2("xxy"))) == w2("xxy"));
}

TEST_CASE("the commutator is already minimal and not primitive") {
  MinimizeResult res = whitehead_minimize({w2("xyXY")});
  CHECK(res.total_length == 4);
  CHECK(res.applied.empty());
  CHECK(res.tuple[0] == w2("xyXY"));
  CHECK_FALSE(is_primitive_class(w2("xyXY")));
}

TEST_CASE("primitive classes") {
  CHECK(is_primitive_class(w2("x")));
  CHECK(is_primitive_class(w2("Y")));
  CHECK(is_primitive_class(w2("xxy")));
  CHECK(is_primitive_class(w2("xy")));
  CHECK_FALSE(is_primitive_class(w2("xxyy")));
  CHECK_FALSE(is_primitive_class(w2("xx")));
}

TEST_CASE("primitive class counts by length") {
  const std::vector<size_t> counts{4, 8, 16, 24, 40, 48, 72, 88};
  for (int len = 1; len <= 8; ++len) {
    auto prim = enumerate_primitive_classes(2, len);
    CHECK(prim.size() == counts[len - 1]);
  }
  auto prim2 = enumerate_primitive_classes(2, 2);
  std::vector<std::string> strs;
  for (const auto& w : prim2) strs.push_back(w.str());
  CHECK(strs == std::vector<std::string>{"x", "X", "y", "Y", "xy", "xY", "Xy", "XY"});
}

TEST_CASE("partial basis decisions") {
  CHECK(is_partial_basis_classes({w2("x"), w2("y")}));
  CHECK(is_partial_basis_classes({w2("xy")}));
  CHECK(is_partial_basis_classes({w2("xxy")}));
  CHECK(is_partial_basis_classes({w2("xy"), w2("y")}));
  CHECK_FALSE(is_partial_basis_classes({w2("x"), w2("X")}));
  CHECK_FALSE(is_partial_basis_classes({w2("xyXY")}));
  CHECK_FALSE(is_partial_basis_classes({w2("xxyy")}));
  CHECK_FALSE(is_partial_basis_classes({w2("xx")}));

  CHECK_THROWS_AS(is_partial_basis_classes({w2("x"), w2("x")}), InvalidArgument);
  CHECK_THROWS_AS(is_partial_basis_classes({w2("x"), w2("y"), w2("xy")}),
                  InvalidArgument);
  CHECK_THROWS_AS(is_partial_basis_classes({}), InvalidArgument);
  CHECK_THROWS_AS(is_partial_basis_classes({w2("x"), w2("X")}, 1),
                  SearchBudgetExceeded);
}

TEST_CASE("primitivity is an orbit property") {
  std::mt19937_64 rng(31);
  auto mults = multiplier_autos(2);
  auto perms = permutation_autos(2);
  auto pool = enumerate_classes(2, 4);
  for (int trial = 0; trial < 40; ++trial) {
    CyclicWord w = pool[rng() % pool.size()];
    CyclicWord moved = w;
    for (int step = 0; step < 3; ++step) {
      if (rng() % 2)
        moved = apply_whitehead(mults[rng() % mults.size()], moved);
      else
        moved = apply_whitehead(perms[rng() % perms.size()], moved);
    }
    CAPTURE(w.str());
    CAPTURE(moved.str());
    CHECK(is_primitive_class(w) == is_primitive_class(moved));
  }
}

TEST_CASE("farey edges") {
  CHECK(farey_edge({1, 0}, {0, 1}));
  CHECK(farey_edge({1, 0}, {2, 1}));
  CHECK(farey_edge({1, 2}, {1, 1}));
  CHECK_FALSE(farey_edge({1, 0}, {3, 2}));
  CHECK_FALSE(farey_edge({1, 0}, {1, 0}));
  CHECK_THROWS_AS(farey_edge({2, 0}, {0, 1}), InvalidArgument);
  CHECK_THROWS_AS(farey_edge({0, 0}, {0, 1}), InvalidArgument);

  CHECK(farey_edge(w2("x"), w2("y")));
  CHECK(farey_edge(w2("x"), w2("xxy")));
  CHECK_FALSE(farey_edge(w2("x"), w2("xyy")));
}
