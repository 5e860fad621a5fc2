#pragma once

#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "wedge/errors.hpp"

namespace wedge {

// Finite poset over opaque elements identified by caller-supplied string
// keys.  The strict order is given to the constructor as an arbitrary set of
// pairs; the constructor validates acyclicity, stores the transitive
// reduction and caches the closure on first use.
class FinPoset {
 public:
  FinPoset();  // empty poset
  FinPoset(std::vector<std::string> keys, std::vector<std::pair<int, int>> less_pairs);

  int size() const { return static_cast<int>(keys_.size()); }
  const std::string& key(int i) const { return keys_.at(i); }
  const std::vector<std::string>& keys() const { return keys_; }
  int index_of(const std::string& key) const;  // -1 when absent

  bool less(int a, int b) const;  // strict
  bool leq(int a, int b) const { return a == b || less(a, b); }

  // cover relations (the stored transitive reduction), sorted
  const std::vector<std::pair<int, int>>& covers() const { return covers_; }

  std::vector<int> above(int a, bool strict) const;  // sorted
  std::vector<int> below(int a, bool strict) const;
  std::vector<int> minimal_elements() const;
  std::vector<int> maximal_elements() const;

  // Induced subposet on the given elements (keys are kept).
  FinPoset restrict(const std::vector<int>& elements) const;

  // "n m" header, n key lines, m cover pairs "i j".
  std::string to_text() const;
  static FinPoset from_text(const std::string& text);

 private:
  std::vector<std::string> keys_;
  std::vector<std::pair<int, int>> covers_;
  void ensure_closure() const;
  mutable std::vector<std::vector<bool>> closure_;  // built on demand
};

enum class IntervalSide { Below, Above };

// Open or closed principal interval as an induced subposet.
FinPoset interval(const FinPoset& p, int element, IntervalSide side, bool strict = true);

// Direct product of the factors with a fresh bottom adjoined to each, minus
// the all-bottom tuple.  Keys are "(k1|k2|...)" with "_" for bottom.
FinPoset product_minus_bottom(const std::vector<const FinPoset*>& factors);

// Order-preserving map between posets, stored by value.
struct PosetMap {
  FinPoset source;
  FinPoset target;
  std::vector<int> image;  // source index -> target index

  PosetMap(FinPoset src, FinPoset tgt, std::vector<int> img);
};

// Subposet of the source induced on {x : f(x) <= y}.
FinPoset fibre_below(const PosetMap& f, int y);

// For an endomap (source and target share keys): is f comparable to the
// identity pointwise, with the same direction everywhere?
bool monotone_image_check(const PosetMap& f);

}  // namespace wedge
