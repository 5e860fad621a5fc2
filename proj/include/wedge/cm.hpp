#pragma once

#include <optional>
#include <string>
#include <vector>

#include "wedge/homology.hpp"
#include "wedge/poset.hpp"
#include "wedge/simplicial_complex.hpp"

namespace wedge {

struct CmFailure {
  std::vector<std::string> face;  // vertex names; empty vector = empty face
  int expected_dim = 0;
  std::string reason;
};

// Result of the Cohen-Macaulay check.  The certificate is homological: links
// are tested for wedge-of-spheres homology in the complementary dimension,
// which also forces purity.
struct CmReport {
  bool is_cm = false;
  std::optional<int> dimension;
  std::vector<CmFailure> failures;
  std::string certification = "homological";
};

// Checks every face, the empty one included: the link of a d-face must look
// like a wedge of (dim K - d - 1)-spheres (a point and, below degree 0, the
// empty set count as degenerate wedges).  The empty complex passes vacuously.
CmReport cm_check(const SimplicialComplex& k);

struct QuillenFibre {
  std::string element;          // target key
  int first_nonzero_degree;     // of the fibre join; INT_MAX when acyclic
};

// Fibre criterion for a poset map at level m, with the mapping-cone
// cross-check on the induced order-complex map.
struct QuillenReport {
  int m = 0;
  bool fibres_ok = false;   // every join has trivial reduced homology <= m-1
  bool cone_ok = false;     // cone profile vanishes through degree m
  bool flagged = false;     // fibres_ok but not cone_ok
  std::vector<QuillenFibre> fibres;
  HomologyProfile cone;
};

// For each target element y: the join of |{x : f(x) <= y}| with the complex
// of the open upper interval above y, and its first non-vanishing degree.
QuillenReport quillen_check(const PosetMap& f, int m);

}  // namespace wedge
