#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <map>
#include <string>
#include <vector>

#include "wedge/simplicial_complex.hpp"

namespace wedge {

using Integer = boost::multiprecision::cpp_int;

// Dense integer matrix, row major.
struct IntMatrix {
  int rows = 0, cols = 0;
  std::vector<Integer> a;

  IntMatrix() = default;
  IntMatrix(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c) {}
  Integer& at(int i, int j) { return a[static_cast<size_t>(i) * cols + j]; }
  const Integer& at(int i, int j) const { return a[static_cast<size_t>(i) * cols + j]; }
};

// Non-zero diagonal of the Smith normal form, as non-negative integers in a
// divisibility chain d1 | d2 | ...
std::vector<Integer> smith_diagonal(IntMatrix m);

struct HomologyGroup {
  long long betti = 0;
  std::vector<Integer> torsion;  // divisibility chain of entries > 1

  bool trivial() const { return betti == 0 && torsion.empty(); }
  friend bool operator==(const HomologyGroup&, const HomologyGroup&) = default;
};

// Reduced integral homology by degree.  Degree -1 follows the convention that
// the empty complex has one reduced class there; reduced_convention() records
// this choice for consumers of serialized profiles.
class HomologyProfile {
 public:
  void set(int degree, HomologyGroup g);  // dropped when trivial
  HomologyGroup get(int degree) const;    // zero group when absent
  const std::map<int, HomologyGroup>& groups() const { return groups_; }
  bool trivial() const { return groups_.empty(); }
  static constexpr bool reduced_convention() { return true; }

  // Every degree moved up by the given amount.
  HomologyProfile shifted(int by) const;

  friend bool operator==(const HomologyProfile&, const HomologyProfile&) = default;

  // {"<degree>": {"betti": r, "torsion": [t1, ...]}, ...}
  std::string to_json() const;
  static HomologyProfile from_json(const std::string& text);

 private:
  std::map<int, HomologyGroup> groups_;
};

// Reduced homology over the integers via Smith normal form.  When
// collapse_first is set, the face set is shrunk by elementary collapses
// (lexicographically smallest free face first) before any matrix work; the
// result must not depend on that flag.
HomologyProfile reduced_homology(const SimplicialComplex& k, bool collapse_first = false);

enum class WedgeKind {
  ContractibleLike,      // all reduced groups vanish
  WedgeOfSpheres,        // free, concentrated in one degree d >= 0
  EmptyAsNegativeWedge,  // empty complex standing for a wedge in degree < 0
  Inconsistent,
};

struct WedgeSignature {
  WedgeKind kind = WedgeKind::Inconsistent;
  int dim = 0;            // meaningful for WedgeOfSpheres
  long long count = 0;    // number of spheres, >= 1

  friend bool operator==(const WedgeSignature&, const WedgeSignature&) = default;
};

// Classifies a profile against an expected dimension.
WedgeSignature wedge_signature(const HomologyProfile& p, int expected_dim);

// Homology of the algebraic mapping cone of the reduced chain map of f.
// Vanishing through degree m certifies that f is homologically m-connected.
HomologyProfile mapping_cone_profile(const SimplicialMap& f);

}  // namespace wedge
