#pragma once

#include <cstdint>
#include <vector>

#include "wedge/words.hpp"

namespace wedge {

// A Whitehead automorphism: either a signed permutation of the generators
// (type I, length preserving) or a multiplier move (type II) given by a
// letter a and a letter set A with a in A, a^-1 not in A, acting by
//   x |-> a^-[x^-1 in A] x a^[x in A]    (x not a^{+-1}),   a |-> a.
struct WhiteheadAuto {
  enum class Kind { Permutation, Multiplier };
  Kind kind = Kind::Multiplier;

  // Permutation data: generator g maps to generator perm[g], inverted when
  // flip[g] is set.
  std::vector<int> perm;
  std::vector<bool> flip;

  // Multiplier data: membership by letter, and the multiplier letter.
  std::vector<bool> in_set;
  int a = -1;

  static WhiteheadAuto permutation(std::vector<int> perm, std::vector<bool> flip);
  static WhiteheadAuto multiplier(std::vector<bool> in_set, int a);
  void validate(int rank) const;
};

CyclicWord apply_whitehead(const WhiteheadAuto& f, const CyclicWord& w);

// Ordered, possibly repeated classes.  Minimisation acts diagonally.
using ClassTuple = std::vector<CyclicWord>;
ClassTuple apply_whitehead(const WhiteheadAuto& f, const ClassTuple& t);

// All type II autos in (a, A) lexicographic order; includes the identity
// moves A = {a}.
std::vector<WhiteheadAuto> multiplier_autos(int rank);
// All type I autos, permutations in lexicographic order, sign patterns in
// binary order.
std::vector<WhiteheadAuto> permutation_autos(int rank);

struct MinimizeResult {
  ClassTuple tuple;
  std::vector<WhiteheadAuto> applied;  // in application order
  long long total_length = 0;
};

// Greedy strict descent: scan multiplier moves in their fixed order, apply
// the first that shrinks the total length, repeat.  The descent reaches the
// orbit minimum.
MinimizeResult whitehead_minimize(const ClassTuple& t);

// Minimal total length 1, i.e. the class of a basis element.
bool is_primitive_class(const CyclicWord& w);

// Can the tuple be carried to distinct basis classes by an automorphism?
// Decided by minimisation plus breadth-first search through length-preserving
// moves at the minimal level.  Throws SearchBudgetExceeded past the visited
// budget, and InvalidArgument on repeated classes or size outside [1, rank].
bool is_partial_basis_classes(const ClassTuple& t, long long budget = 1000000);

// All primitive classes of length <= max_len, sorted by (length, letters).
std::vector<CyclicWord> enumerate_primitive_classes(int rank, int max_len);

// All cyclically reduced classes of length <= max_len, sorted; enumeration
// backbone shared with the primitive variant.
std::vector<CyclicWord> enumerate_classes(int rank, int max_len);

}  // namespace wedge
