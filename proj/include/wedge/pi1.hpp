#pragma once

#include "wedge/simplicial_complex.hpp"

namespace wedge {

enum class Pi1Result { Trivial, Unknown };

// Bounded probe for simple connectivity: edge-path group presentation from a
// spanning tree of the 1-skeleton and the triangle relations, then a bounded
// number of Tietze simplification rounds.  Trivial is a certificate; Unknown
// is not a negative answer.
Pi1Result pi1_probe(const SimplicialComplex& k, int max_rounds = 64);

}  // namespace wedge
