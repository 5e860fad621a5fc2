#pragma once

#include <cstdint>

#include "wedge/report.hpp"

namespace wedge {

struct SweepOptions {
  int max_edges = 5;
  int max_labels = 3;
  int jobs = 1;
};

// Wedge-of-spheres law for the connectivity poset over every enumerated
// instance, including the expected dimension and, on contractible instances
// of expected dimension >= 2, the bounded pi1 probe.
VerificationReport verify_con_x(const SweepOptions& opt);

// Core poset has the same homology; the core retraction is an order map
// under the identity.
VerificationReport verify_core_retract(const SweepOptions& opt);

// Deleting a loop shifts every reduced degree up by one on loop-carrying
// instances without separating structure.
VerificationReport verify_suspension(const SweepOptions& opt);

// Collapsing the chosen edge matches the poset minus one element, on
// loop-free instances; instances whose admissible edges all have two
// labelled endpoints are skipped and counted.
VerificationReport verify_quotient_step(const SweepOptions& opt);

// Random inflations preserve the Cohen-Macaulay verdict and the dimension.
VerificationReport verify_inflation_cm(int trials, std::uint64_t seed, int jobs = 1);

// Rank-2 truncation against the arithmetic of primitive vectors.
VerificationReport verify_farey(int max_len, int jobs = 1);

// Rank-3 truncation: octahedron at length 1; observational connectivity
// notes at length >= 2.
VerificationReport verify_b3_probe(int max_len, int jobs = 1);

}  // namespace wedge
