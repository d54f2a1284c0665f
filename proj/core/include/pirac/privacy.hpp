#pragma once

#include <cstddef>
#include <string>

namespace pirac {

// Exhaustive audit: enumerate every randomness value of the scheme, tally the
// query tuple each server sees per requested file, and return the largest
// total-variation distance between the per-file distributions at any server.
// A private scheme yields exactly 0. Throws feasibility_error when the
// randomness space exceeds 2^20, invalid_argument for unknown scheme names.
double privacy_audit(const std::string& scheme, std::size_t N, std::size_t M, std::size_t L);

}  // namespace pirac
