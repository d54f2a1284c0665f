#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "pirac/covering.hpp"
#include "pirac/restricted.hpp"
#include "pirac/schemes.hpp"

namespace pirac {

// backend strings: identity | sum-augmented | hamming:<m> | ext-hamming:<m>
//                  | restricted-example3 | <path to a code file>
struct Backend {
    std::optional<CoveringCode> code;
    std::optional<RestrictedDesign> design;
};

// r = syndrome length the scheme needs (used by the named families)
Backend parse_backend(const std::string& name, std::size_t r);

struct SimOptions {
    std::string scheme;  // two-server | replicated | mds32 | bep
    std::size_t N = 2;
    std::size_t M = 2;
    std::size_t L = 2;
    std::string backend;  // empty -> scheme default
    std::size_t trials = 1000;
    std::uint64_t seed = 0;
    std::uint64_t db_seed = 1;
    std::string db_path;  // raw database file; overrides db_seed when set
};

struct SimReport {
    std::size_t runs = 0;
    std::size_t correct = 0;
    bool exhaustive = false;
    double rate = 0.0;
    std::size_t worst_query_symbols = 0;
    double delta_sum_worst = 0.0;
    double delta_sum_mean = 0.0;
    double delta_union_worst = 0.0;
    double delta_union_mean = 0.0;
    double privacy_tv = -1.0;  // set only in exhaustive mode
    Transcript first;
};

SimReport run_simulation(const SimOptions& opt);

}  // namespace pirac
