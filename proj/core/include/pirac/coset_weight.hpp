#pragma once

#include <cstddef>
#include <vector>

#include "pirac/bitmatrix.hpp"
#include "pirac/bitvec.hpp"

namespace pirac {

// Minimum size of a column-index set T of H such that every given syndrome
// lies in the GF(2) span of the columns indexed by T. Computed by
// increasing-size subset enumeration with span-membership tests.
// The syndromes must be distinct and inside the full column span.
std::size_t coset_weight(const BitMatrix& H, const std::vector<BitVec>& syndromes);

// Maximum of coset_weight over all tau-element sets of distinct syndromes
// (zero included). Guarded: C(2^r, tau) * C(l, <=r) must stay within 1e9
// elementary span tests.
std::size_t max_tau_coset_weight(const BitMatrix& H, std::size_t tau);

}  // namespace pirac
