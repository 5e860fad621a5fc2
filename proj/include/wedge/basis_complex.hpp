#pragma once

#include <array>
#include <string>
#include <vector>

#include "wedge/simplicial_complex.hpp"
#include "wedge/whitehead.hpp"

namespace wedge {

// Truncation of the complex of partial bases up to conjugacy: vertices are
// primitive classes of cyclic length <= max_len, simplices the subsets
// certified as partial bases.  Every face is certified directly, never
// inferred from a superset.
struct BasisTruncation {
  int rank = 0;
  int max_len = 0;
  SimplicialComplex complex;        // vertex tokens "w0", "w1", ...
  std::vector<CyclicWord> classes;  // token index -> class

  // {"rank": n, "max_len": L, "vertices": {"w0": "x", ...}}
  std::string sidecar_json() const;
};

// rank 2 caps max_len at 8, rank 3 at 4 (budget guards).  jobs > 1 certifies
// candidate simplices in an OpenMP pool; the result does not depend on jobs.
BasisTruncation build_B_truncation(int rank, int max_len, int jobs = 1);

// |det| of the pair of abelianization vectors equals 1.  Throws
// InvalidArgument when either vector is not primitive.
bool farey_edge(const std::array<long long, 2>& u, const std::array<long long, 2>& v);
// Convenience overload on rank-2 classes.
bool farey_edge(const CyclicWord& u, const CyclicWord& v);

}  // namespace wedge
