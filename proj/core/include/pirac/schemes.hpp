#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "pirac/covering.hpp"
#include "pirac/database.hpp"
#include "pirac/restricted.hpp"

namespace pirac {

struct ServerTrace {
    std::vector<std::string> queries;                 // hex, as sent
    std::vector<BitVec> responses;                    // one per query
    std::vector<std::vector<std::size_t>> accessed;   // stored-symbol indices per query
    std::size_t stored_symbols = 0;
};

// One full PIR run.
struct Transcript {
    std::string scheme;
    std::size_t N = 0, M = 0, L = 0;
    std::size_t f = 0;  // 1-based desired file
    std::string randomness;
    std::size_t symbol_len = 0;  // bits per stored symbol
    std::vector<ServerTrace> servers;
    BitVec reconstructed;
    std::size_t download_bits = 0;

    double rate() const { return double(L) / double(download_bits); }
};

struct ServerAccess {
    std::size_t sum_symbols = 0;    // over all queries to this server
    std::size_t union_symbols = 0;  // distinct symbols touched
    double sum_ml = 0;              // bits accessed / (M*L)
    double union_ml = 0;
};

struct AccessSummary {
    std::vector<ServerAccess> servers;
    double delta_sum = 0;    // sum accounting, ML units
    double delta_union = 0;  // union accounting, ML units
    std::size_t worst_query_symbols = 0;
};

AccessSummary access_report(const Transcript& t);

// ---- scheme contexts: build storage once, run many draws -------------------

// Two replicated servers over M whole files; queries a and a+e_f. The storage
// backend is sum_augmented_identity(M) when augmented, identity otherwise.
struct TwoServerScheme {
    TwoServerScheme(const Database& db, bool augmented);
    Transcript run(std::size_t f, const BitVec& a) const;

    const Database& db;
    EncodedStorage storage;  // identical on both servers
};

// N replicated servers over (N-1)M file substrings; server N gets v, server
// n < N gets v + e_{(f-1)(N-1)+n}. backend must have r == (N-1)M symbols
// (identity when null).
struct ReplicatedScheme {
    ReplicatedScheme(std::size_t N, const Database& db, const CoveringCode* backend = nullptr);
    Transcript run(std::size_t f, const BitVec& v) const;

    std::size_t N;
    const Database& db;
    std::size_t t = 0;  // substring bits
    EncodedStorage storage;
};

// The hard-coded (3,2) two-query scheme: servers hold {x^m_1}, {x^m_2},
// {x^m_1 + x^m_2}; two coefficient-vector queries per server derived from a
// and b. backend must have r == M symbols (identity when null).
struct Mds32Scheme {
    Mds32Scheme(const Database& db, const CoveringCode* backend = nullptr);
    Transcript run(std::size_t f, const BitVec& a, const BitVec& b) const;

    const Database& db;
    std::size_t t = 0;
    std::vector<EncodedStorage> storages;  // servers I, II, III
};

// Z_N-shift scheme: z_1..z_M uniform in Z_N; server n receives b with
// b_f = z_f + n (mod N), b_m = z_m otherwise, and responds with
// sum_m x^m_{b_m} where the 0th substring is the zero vector. Exactly one
// server's file-f index is 0; its response is the common mask. Backend is
// identity, a covering code over r = (N-1)M, or a restricted design with
// M files and s = N-1.
struct BepScheme {
    BepScheme(std::size_t N, const Database& db, const CoveringCode* code = nullptr,
              const RestrictedDesign* design = nullptr);
    Transcript run(std::size_t f, const std::vector<unsigned>& z) const;

    std::size_t N;
    const Database& db;
    std::size_t t = 0;
    bool use_design = false;
    EncodedStorage storage;                  // when !use_design
    RestrictedDesign design;                 // when use_design
    std::vector<std::uint64_t> design_masks;
    std::vector<BitVec> design_values;       // stored combination values
};

// ---- one-shot wrappers ------------------------------------------------------

Transcript scheme_two_server(const Database& db, std::size_t f, const BitVec& a, bool augmented);
Transcript scheme_replicated(std::size_t N, const Database& db, std::size_t f, const BitVec& v,
                             const CoveringCode* backend = nullptr);
Transcript scheme_mds32(const Database& db, std::size_t f, const BitVec& a, const BitVec& b,
                        const CoveringCode* backend = nullptr);
Transcript scheme_bep(std::size_t N, const Database& db, std::size_t f,
                      const std::vector<unsigned>& z, const CoveringCode* backend = nullptr,
                      const RestrictedDesign* design = nullptr);

// the t x r matrix whose columns are the given unit strings
BitMatrix columns_matrix(const std::vector<BitVec>& units);

}  // namespace pirac
