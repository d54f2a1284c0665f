#include "pirac/privacy.hpp"

#include <cstdint>
#include <map>
#include <stdexcept>
#include <vector>

#include "pirac/database.hpp"
#include "pirac/errors.hpp"
#include "pirac/schemes.hpp"

namespace pirac {

namespace {

constexpr std::uint64_t SPACE_LIMIT = std::uint64_t(1) << 20;

// counts[f-1][server] maps a server's query tuple to how often it occurs
using Tally = std::vector<std::vector<std::map<std::string, std::uint64_t>>>;

std::string tuple_key(const ServerTrace& sv) {
    std::string key;
    for (const auto& q : sv.queries) {
        key += q;
        key += '|';
    }
    return key;
}

void record(Tally& tally, std::size_t f, const Transcript& t) {
    auto& per_server = tally[f - 1];
    if (per_server.empty()) per_server.resize(t.servers.size());
    for (std::size_t n = 0; n < t.servers.size(); ++n) ++per_server[n][tuple_key(t.servers[n])];
}

double max_tv(const Tally& tally, std::uint64_t total) {
    double worst = 0.0;
    const std::size_t M = tally.size();
    for (std::size_t i = 0; i < M; ++i)
        for (std::size_t j = i + 1; j < M; ++j)
            for (std::size_t n = 0; n < tally[i].size(); ++n) {
                std::uint64_t diff = 0;
                const auto& a = tally[i][n];
                const auto& b = tally[j][n];
                for (const auto& [key, c] : a) {
                    auto it = b.find(key);
                    std::uint64_t other = it == b.end() ? 0 : it->second;
                    diff += c > other ? c - other : other - c;
                }
                for (const auto& [key, c] : b)
                    if (!a.count(key)) diff += c;
                double tv = double(diff) / (2.0 * double(total));
                if (tv > worst) worst = tv;
            }
    return worst;
}

std::uint64_t pow_u64(std::uint64_t base, std::size_t exp) {
    std::uint64_t v = 1;
    while (exp--) {
        if (v > SPACE_LIMIT) return SPACE_LIMIT + 1;  // saturate, caller only compares
        v *= base;
    }
    return v;
}

void check_space(std::uint64_t space) {
    if (space > SPACE_LIMIT)
        throw feasibility_error("privacy_audit: randomness space exceeds 2^20 values");
}

}  // namespace

double privacy_audit(const std::string& scheme, std::size_t N, std::size_t M, std::size_t L) {
    Database db = Database::random(M, L, 1);
    Tally tally(M);
    if (scheme == "two-server") {
        if (N != 2) throw std::invalid_argument("privacy_audit: two-server requires N=2");
        if (M > 20) check_space(SPACE_LIMIT + 1);
        const std::uint64_t space = std::uint64_t(1) << M;
        check_space(space);
        TwoServerScheme ctx(db, false);
        for (std::size_t f = 1; f <= M; ++f)
            for (std::uint64_t a = 0; a < space; ++a)
                record(tally, f, ctx.run(f, BitVec::from_index(a, M)));
        return max_tv(tally, space);
    }
    if (scheme == "replicated") {
        const std::size_t r = (N - 1) * M;
        if (r > 20) check_space(SPACE_LIMIT + 1);
        const std::uint64_t space = std::uint64_t(1) << r;
        check_space(space);
        ReplicatedScheme ctx(N, db);
        for (std::size_t f = 1; f <= M; ++f)
            for (std::uint64_t v = 0; v < space; ++v)
                record(tally, f, ctx.run(f, BitVec::from_index(v, r)));
        return max_tv(tally, space);
    }
    if (scheme == "mds32") {
        if (N != 3) throw std::invalid_argument("privacy_audit: mds32 requires N=3");
        if (2 * M > 20) check_space(SPACE_LIMIT + 1);
        const std::uint64_t space = std::uint64_t(1) << (2 * M);
        check_space(space);
        Mds32Scheme ctx(db);
        for (std::size_t f = 1; f <= M; ++f)
            for (std::uint64_t c = 0; c < space; ++c) {
                BitVec a = BitVec::from_index(c & ((std::uint64_t(1) << M) - 1), M);
                BitVec b = BitVec::from_index(c >> M, M);
                record(tally, f, ctx.run(f, a, b));
            }
        return max_tv(tally, space);
    }
    if (scheme == "bep") {
        const std::uint64_t space = pow_u64(N, M);
        check_space(space);
        BepScheme ctx(N, db);
        std::vector<unsigned> z(M, 0);
        for (std::size_t f = 1; f <= M; ++f) {
            std::fill(z.begin(), z.end(), 0u);
            for (std::uint64_t c = 0; c < space; ++c) {
                record(tally, f, ctx.run(f, z));
                for (std::size_t m = 0; m < M; ++m) {
                    if (++z[m] < N) break;
                    z[m] = 0;
                }
            }
        }
        return max_tv(tally, space);
    }
    throw std::invalid_argument("privacy_audit: unknown scheme '" + scheme + "'");
}

}  // namespace pirac
