#include "pirac/coset_weight.hpp"

#include <optional>
#include <stdexcept>
#include <string>

#include "pirac/errors.hpp"
#include "pirac/gf2.hpp"

namespace pirac {

namespace {

// GF(2) basis keyed by lowest set bit
struct Basis {
    std::vector<BitVec> vecs;
    std::vector<std::size_t> lead;

    BitVec reduce(BitVec v) const {
        for (std::size_t i = 0; i < vecs.size(); ++i)
            if (v.get(lead[i])) v ^= vecs[i];
        return v;
    }

    void insert(const BitVec& v) {
        BitVec r = reduce(v);
        if (r.is_zero()) return;
        lead.push_back(r.support().front());
        vecs.push_back(std::move(r));
    }

    bool contains(const BitVec& v) const { return reduce(v).is_zero(); }
};

// lexicographic k-combinations of {0..n-1}; f returns true to stop early
template <class F>
bool for_each_combination(std::size_t n, std::size_t k, F&& f) {
    if (k > n) return false;
    std::vector<std::size_t> idx(k);
    if (k == 0) return f(idx);
    for (std::size_t i = 0; i < k; ++i) idx[i] = i;
    for (;;) {
        if (f(idx)) return true;
        // advance
        std::size_t i = k;
        while (i > 0) {
            --i;
            if (idx[i] != i + n - k) break;
            if (i == 0) return false;
        }
        if (idx[i] == i + n - k) return false;
        ++idx[i];
        for (std::size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
}

// smallest subset of cols (size <= kmax) whose span contains every target
std::optional<std::size_t> min_spanning_size(const std::vector<BitVec>& cols,
                                             const std::vector<BitVec>& targets,
                                             std::size_t kmax) {
    for (std::size_t k = 0; k <= kmax; ++k) {
        bool found = for_each_combination(cols.size(), k, [&](const std::vector<std::size_t>& idx) {
            Basis b;
            for (std::size_t j : idx) b.insert(cols[j]);
            for (const auto& t : targets)
                if (!b.contains(t)) return false;
            return true;
        });
        if (found) return k;
    }
    return std::nullopt;
}

long double choose_ld(long double n, std::size_t k) {
    long double v = 1;
    for (std::size_t i = 0; i < k; ++i) {
        v *= (n - i) / (i + 1);
        if (v > 1e30L) return 1e30L;
    }
    return v;
}

}  // namespace

std::size_t coset_weight(const BitMatrix& H, const std::vector<BitVec>& syndromes) {
    if (syndromes.empty()) throw std::invalid_argument("coset_weight: need at least one syndrome");
    for (const auto& s : syndromes)
        if (s.len != H.rows)
            throw std::invalid_argument("coset_weight: syndrome length must equal row count");
    for (std::size_t i = 0; i < syndromes.size(); ++i)
        for (std::size_t j = i + 1; j < syndromes.size(); ++j)
            if (syndromes[i] == syndromes[j])
                throw std::invalid_argument("coset_weight: syndromes must be distinct");
    for (const auto& s : syndromes)
        if (!solve_any(H, s))
            throw std::invalid_argument("coset_weight: syndrome outside the column span");

    std::vector<BitVec> cols = H.columns();
    // rank(H) independent columns always suffice
    auto k = min_spanning_size(cols, syndromes, rank(H));
    if (!k) throw std::logic_error("coset_weight: no spanning subset found");
    return *k;
}

std::size_t max_tau_coset_weight(const BitMatrix& H, std::size_t tau) {
    const std::size_t r = H.rows, l = H.cols;
    if (tau < 1) throw std::invalid_argument("max_tau_coset_weight: tau must be at least 1");
    if (rank(H) != r)
        throw std::invalid_argument("max_tau_coset_weight: matrix must have full row rank");
    if (r >= 30 || tau > (std::size_t(1) << r))
        throw std::invalid_argument("max_tau_coset_weight: tau exceeds the syndrome count");

    const std::uint64_t nsyn = std::uint64_t(1) << r;
    long double subsets = 0;
    for (std::size_t k = 0; k <= r && k <= l; ++k) subsets += choose_ld((long double)l, k);
    long double tests = choose_ld((long double)nsyn, tau) * subsets;
    if (tests > 1e9L)
        throw feasibility_error(
            "max_tau_coset_weight: C(2^r,tau) * C(l,<=r) = " + std::to_string((double)tests) +
            " span tests exceed the 1e9 guard");

    std::vector<BitVec> cols = H.columns();
    std::size_t best = 0;
    for_each_combination(nsyn, tau, [&](const std::vector<std::size_t>& idx) {
        std::vector<BitVec> targets;
        targets.reserve(tau);
        for (std::size_t v : idx) targets.push_back(BitVec::from_index(v, r));
        auto k = min_spanning_size(cols, targets, r);
        if (!k) throw std::logic_error("max_tau_coset_weight: tuple not spanned by full-rank H");
        if (*k > best) best = *k;
        return false;
    });
    return best;
}

}  // namespace pirac
