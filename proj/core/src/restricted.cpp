#include "pirac/restricted.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <string>

#include "pirac/errors.hpp"
#include "pirac/rng.hpp"

namespace pirac {

namespace {

std::uint64_t pattern_mask(const BitVec& v) { return v.index(); }

bool pattern_respects(std::uint64_t mask, std::size_t M, std::size_t s) {
    const std::uint64_t block_mask =
        s >= 64 ? ~std::uint64_t(0) : (std::uint64_t(1) << s) - 1;
    for (std::size_t m = 0; m < M; ++m) {
        std::uint64_t block = (mask >> (m * s)) & block_mask;
        if (std::popcount(block) > 1) return false;
    }
    return true;
}

// all (s+1)^M pattern queries as masks, in mixed-radix counter order
std::vector<std::uint64_t> all_queries(std::size_t M, std::size_t s) {
    std::vector<std::uint64_t> out;
    std::vector<std::size_t> digit(M, 0);  // 0 = nothing, j = substring j
    for (;;) {
        std::uint64_t mask = 0;
        for (std::size_t m = 0; m < M; ++m)
            if (digit[m] > 0) mask |= std::uint64_t(1) << (m * s + digit[m] - 1);
        out.push_back(mask);
        std::size_t m = 0;
        while (m < M && digit[m] == s) digit[m++] = 0;
        if (m == M) break;
        ++digit[m];
    }
    return out;
}

long double choose_sum(std::size_t n, std::size_t kmax) {
    long double total = 0, term = 1;
    for (std::size_t k = 0; k <= kmax && k <= n; ++k) {
        total += term;
        term *= (long double)(n - k) / (k + 1);
        if (total > 1e30L) break;
    }
    return total;
}

void check_verifier_budget(std::size_t M, std::size_t s, std::size_t nstored, std::size_t R) {
    long double queries = 1;
    for (std::size_t m = 0; m < M; ++m) {
        queries *= (s + 1);
        if (queries > 1e30L) break;
    }
    long double checks = queries * choose_sum(nstored, R);
    if (checks > 1e8L)
        throw feasibility_error("verify_restricted_design: " + std::to_string((double)checks) +
                                " subset checks exceed the 1e8 guard");
}

}  // namespace

void RestrictedDesign::validate() const {
    if (M < 1 || s < 1) throw std::invalid_argument("RestrictedDesign: need M >= 1 and s >= 1");
    if (M * s > 64)
        throw feasibility_error("RestrictedDesign: M*s exceeds the 64-position word form");
    for (const auto& c : stored) {
        if (c.len != M * s)
            throw std::invalid_argument("RestrictedDesign: combination length must be M*s");
        if (!pattern_respects(pattern_mask(c), M, s))
            throw std::invalid_argument(
                "RestrictedDesign: combination takes two substrings of one file");
    }
}

std::optional<std::vector<std::size_t>> min_cover(const std::vector<std::uint64_t>& stored,
                                                  std::uint64_t target, std::size_t kmax) {
    // sizes in increasing order; within a size, lexicographic index order
    std::vector<std::size_t> idx;
    for (std::size_t k = 0; k <= kmax && k <= stored.size(); ++k) {
        idx.assign(k, 0);
        for (std::size_t i = 0; i < k; ++i) idx[i] = i;
        for (;;) {
            std::uint64_t acc = 0;
            for (std::size_t i : idx) acc ^= stored[i];
            if (acc == target) return idx;
            std::size_t i = k;
            bool done = (k == 0);
            while (i > 0) {
                --i;
                if (idx[i] != i + stored.size() - k) break;
                if (i == 0) done = true;
            }
            if (done) break;
            ++idx[i];
            for (std::size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
        }
    }
    return std::nullopt;
}

std::pair<bool, std::size_t> verify_restricted_design(const RestrictedDesign& d) {
    d.validate();
    check_verifier_budget(d.M, d.s, d.stored.size(), d.R);
    std::vector<std::uint64_t> masks;
    masks.reserve(d.stored.size());
    for (const auto& c : d.stored) masks.push_back(pattern_mask(c));
    bool ok = true;
    std::size_t worst = 0;
    for (std::uint64_t q : all_queries(d.M, d.s)) {
        auto cover = min_cover(masks, q, d.R);
        if (!cover)
            ok = false;
        else
            worst = std::max(worst, cover->size());
    }
    return {ok, worst};
}

std::optional<RestrictedDesign> greedy_restricted_design(std::size_t M, std::size_t s,
                                                         std::size_t R, std::size_t budget,
                                                         std::uint64_t seed) {
    RestrictedDesign d;
    d.M = M;
    d.s = s;
    d.R = R;
    d.validate();
    for (std::size_t m = 0; m < M; ++m)
        for (std::size_t j = 0; j < s; ++j) d.stored.push_back(BitVec::unit(M * s, m * s + j));

    std::vector<std::uint64_t> queries = all_queries(M, s);
    check_verifier_budget(M, s, d.stored.size() + budget, R);

    // candidates: every nonzero pattern-respecting combination, in a
    // seed-shuffled order used for tie-breaking
    std::vector<std::uint64_t> candidates;
    for (std::uint64_t q : queries)
        if (q != 0) candidates.push_back(q);
    std::mt19937_64 g(seed);
    shuffle_vec(candidates, g);

    std::vector<std::uint64_t> masks;
    for (const auto& c : d.stored) masks.push_back(pattern_mask(c));

    auto uncovered = [&]() {
        std::vector<std::uint64_t> u;
        for (std::uint64_t q : queries)
            if (!min_cover(masks, q, R)) u.push_back(q);
        return u;
    };

    for (std::size_t added = 0;; ++added) {
        std::vector<std::uint64_t> u = uncovered();
        if (u.empty()) break;
        if (added == budget) return std::nullopt;
        std::size_t best_gain = 0;
        std::uint64_t best_mask = 0;
        for (std::uint64_t cand : candidates) {
            if (std::find(masks.begin(), masks.end(), cand) != masks.end()) continue;
            masks.push_back(cand);
            std::size_t gain = 0;
            for (std::uint64_t q : u)
                if (min_cover(masks, q, R)) ++gain;
            masks.pop_back();
            if (gain > best_gain) {
                best_gain = gain;
                best_mask = cand;
            }
        }
        if (best_gain == 0) return std::nullopt;  // stalled
        masks.push_back(best_mask);
        BitVec c(M * s);
        for (std::size_t i = 0; i < M * s; ++i)
            if ((best_mask >> i) & 1u) c.set(i, true);
        d.stored.push_back(std::move(c));
    }
    auto [ok, worst] = verify_restricted_design(d);
    if (!ok) throw std::logic_error("greedy_restricted_design: grown design failed verification");
    (void)worst;
    return d;
}

RestrictedDesign builtin_design_3x2() {
    RestrictedDesign d;
    d.M = 3;
    d.s = 2;
    d.R = 2;
    auto add = [&](std::initializer_list<std::size_t> bits) {
        BitVec v(6);
        for (std::size_t b : bits) v.set(b, true);
        d.stored.push_back(std::move(v));
    };
    // positions: file m substring j -> (m-1)*2 + (j-1)
    add({0});           // x1_1
    add({1});           // x1_2
    add({2});           // x2_1
    add({3});           // x2_2
    add({4});           // x3_1
    add({5});           // x3_2
    add({0, 3});        // x1_1 + x2_2
    add({2, 5});        // x2_1 + x3_2
    add({4, 1});        // x3_1 + x1_2
    add({0, 2, 4});     // x1_1 + x2_1 + x3_1
    add({1, 3, 5});     // x1_2 + x2_2 + x3_2
    return d;
}

}  // namespace pirac
