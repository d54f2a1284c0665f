#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "pirac/bitvec.hpp"

namespace pirac {

// Stored combinations of file substrings with a restricted pattern: each
// combination takes at most one of the s substrings of each file. Bit
// (m-1)*s + (j-1) of a pattern selects substring j of file m.
struct RestrictedDesign {
    std::size_t M = 0;  // files
    std::size_t s = 0;  // substrings per file
    std::size_t R = 0;  // target worst-case reads per query
    std::vector<BitVec> stored;

    void validate() const;
};

// Enumerates all (s+1)^M pattern queries (each file contributes one of its
// substrings or nothing) and finds, for each, the minimum number of stored
// combinations whose GF(2) sum equals the query, searching subset sizes
// 0..R exhaustively. ok iff every query is coverable within R; worst_access
// is the maximum minimum found among coverable queries.
std::pair<bool, std::size_t> verify_restricted_design(const RestrictedDesign& d);

// Greedy growth from the M*s singletons: repeatedly add the
// pattern-respecting combination that newly covers the most R-uncoverable
// queries. budget counts additions beyond the singletons; candidate scan
// order is a seeded shuffle so score ties break deterministically. A
// returned design always passes verify_restricted_design.
std::optional<RestrictedDesign> greedy_restricted_design(std::size_t M, std::size_t s,
                                                         std::size_t R, std::size_t budget,
                                                         std::uint64_t seed);

// The built-in 11-combination design for M = 3 files, s = 2 substrings,
// target R = 2: six singletons, three cross pairs, two triples.
RestrictedDesign builtin_design_3x2();

// Smallest subset of patterns (given as support masks over M*s positions)
// XOR-summing to target, trying sizes 0..kmax; nullopt if none exists.
std::optional<std::vector<std::size_t>> min_cover(const std::vector<std::uint64_t>& stored,
                                                  std::uint64_t target, std::size_t kmax);

}  // namespace pirac
