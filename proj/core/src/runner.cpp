#include "pirac/runner.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

#include "pirac/io.hpp"
#include "pirac/privacy.hpp"
#include "pirac/rng.hpp"

namespace pirac {

namespace {

constexpr std::uint64_t EXHAUSTIVE_LIMIT = std::uint64_t(1) << 16;

std::optional<std::size_t> parse_family_param(const std::string& name, const std::string& prefix) {
    if (name.rfind(prefix, 0) != 0) return std::nullopt;
    const std::string arg = name.substr(prefix.size());
    if (arg.empty() || arg.find_first_not_of("0123456789") != std::string::npos)
        throw std::invalid_argument("backend parameter must be a positive integer: " + name);
    return std::stoull(arg);
}

std::uint64_t randomness_space(const std::string& scheme, std::size_t N, std::size_t M) {
    auto pow2 = [](std::size_t e) {
        return e >= 63 ? ~std::uint64_t(0) : (std::uint64_t(1) << e);
    };
    if (scheme == "two-server") return pow2(M);
    if (scheme == "replicated") return pow2((N - 1) * M);
    if (scheme == "mds32") return pow2(2 * M);
    if (scheme == "bep") {
        std::uint64_t v = 1;
        for (std::size_t m = 0; m < M; ++m) {
            if (v > EXHAUSTIVE_LIMIT) return v;  // saturated past the switch point
            v *= N;
        }
        return v;
    }
    throw std::invalid_argument("unknown scheme '" + scheme + "'");
}

std::vector<unsigned> bep_digits(std::uint64_t c, std::size_t M, std::size_t N) {
    std::vector<unsigned> z(M);
    for (std::size_t m = 0; m < M; ++m) {
        z[m] = unsigned(c % N);
        c /= N;
    }
    return z;
}

}  // namespace

Backend parse_backend(const std::string& name, std::size_t r) {
    Backend b;
    if (name.empty() || name == "identity") {
        b.code = build_code(BitMatrix::identity(r));
        return b;
    }
    if (name == "sum-augmented") {
        b.code = build_code(sum_augmented_identity(r));
        return b;
    }
    if (auto m = parse_family_param(name, "hamming:")) {
        b.code = build_code(hamming_parity(*m));
        return b;
    }
    if (auto m = parse_family_param(name, "ext-hamming:")) {
        b.code = build_code(extended_hamming_parity(*m));
        return b;
    }
    if (name == "restricted-example3") {
        b.design = builtin_design_3x2();
        return b;
    }
    b.code = parse_code(read_file(name));
    return b;
}

SimReport run_simulation(const SimOptions& opt) {
    if (opt.M < 1 || opt.L < 1) throw std::invalid_argument("simulate: need M >= 1 and L >= 1");
    Database db = opt.db_path.empty() ? Database::random(opt.M, opt.L, opt.db_seed)
                                      : read_database_file(opt.db_path, opt.M, opt.L);

    // one context per scheme; run(f, randomness) is wrapped in a closure so the
    // exhaustive / sampled loops below stay scheme-agnostic
    std::function<Transcript(std::size_t, std::uint64_t)> run_indexed;
    std::function<Transcript(std::size_t, std::mt19937_64&)> run_sampled;
    std::optional<TwoServerScheme> two;
    std::optional<ReplicatedScheme> rep;
    std::optional<Mds32Scheme> mds;
    std::optional<BepScheme> bep;

    if (opt.scheme == "two-server") {
        if (opt.N != 2) throw std::invalid_argument("two-server: requires --n 2");
        bool augmented = false;
        if (opt.backend == "sum-augmented") augmented = true;
        else if (!opt.backend.empty() && opt.backend != "identity")
            throw std::invalid_argument("two-server: backend must be identity or sum-augmented");
        two.emplace(db, augmented);
        const std::size_t M = opt.M;
        run_indexed = [&, M](std::size_t f, std::uint64_t c) {
            return two->run(f, BitVec::from_index(c, M));
        };
        run_sampled = [&, M](std::size_t f, std::mt19937_64& g) {
            return two->run(f, BitVec::from_index(draw_bits(g, M), M));
        };
    } else if (opt.scheme == "replicated") {
        Backend be = parse_backend(opt.backend, (opt.N - 1) * opt.M);
        if (be.design) throw std::invalid_argument("replicated: backend must be a code");
        rep.emplace(opt.N, db, &*be.code);
        const std::size_t r = (opt.N - 1) * opt.M;
        run_indexed = [&, r](std::size_t f, std::uint64_t c) {
            return rep->run(f, BitVec::from_index(c, r));
        };
        run_sampled = [&, r](std::size_t f, std::mt19937_64& g) {
            return rep->run(f, BitVec::from_index(draw_bits(g, r), r));
        };
    } else if (opt.scheme == "mds32") {
        if (opt.N != 3) throw std::invalid_argument("mds32: requires --n 3");
        Backend be = parse_backend(opt.backend, opt.M);
        if (be.design) throw std::invalid_argument("mds32: backend must be a code");
        mds.emplace(db, &*be.code);
        const std::size_t M = opt.M;
        run_indexed = [&, M](std::size_t f, std::uint64_t c) {
            const std::uint64_t lo = c & ((std::uint64_t(1) << M) - 1);
            return mds->run(f, BitVec::from_index(lo, M), BitVec::from_index(c >> M, M));
        };
        run_sampled = [&, M](std::size_t f, std::mt19937_64& g) {
            BitVec a = BitVec::from_index(draw_bits(g, M), M);
            BitVec b = BitVec::from_index(draw_bits(g, M), M);
            return mds->run(f, a, b);
        };
    } else if (opt.scheme == "bep") {
        Backend be = parse_backend(opt.backend, (opt.N - 1) * opt.M);
        bep.emplace(opt.N, db, be.code ? &*be.code : nullptr,
                    be.design ? &*be.design : nullptr);
        const std::size_t M = opt.M, N = opt.N;
        run_indexed = [&, M, N](std::size_t f, std::uint64_t c) {
            return bep->run(f, bep_digits(c, M, N));
        };
        run_sampled = [&, M, N](std::size_t f, std::mt19937_64& g) {
            std::vector<unsigned> z(M);
            for (auto& zm : z) zm = unsigned(draw_below(g, N));
            return bep->run(f, z);
        };
    } else {
        throw std::invalid_argument("unknown scheme '" + opt.scheme + "'");
    }

    SimReport rep_out;
    double sum_ds = 0.0, sum_du = 0.0;
    auto absorb = [&](const Transcript& t) {
        AccessSummary sum = access_report(t);
        if (rep_out.runs == 0) {
            rep_out.first = t;
            rep_out.rate = t.rate();
        }
        ++rep_out.runs;
        if (t.reconstructed == db.files[t.f - 1]) ++rep_out.correct;
        rep_out.worst_query_symbols = std::max(rep_out.worst_query_symbols, sum.worst_query_symbols);
        rep_out.delta_sum_worst = std::max(rep_out.delta_sum_worst, sum.delta_sum);
        rep_out.delta_union_worst = std::max(rep_out.delta_union_worst, sum.delta_union);
        sum_ds += sum.delta_sum;
        sum_du += sum.delta_union;
    };

    const std::uint64_t space = randomness_space(opt.scheme, opt.N, opt.M);
    if (space <= EXHAUSTIVE_LIMIT) {
        rep_out.exhaustive = true;
        for (std::size_t f = 1; f <= opt.M; ++f)
            for (std::uint64_t c = 0; c < space; ++c) absorb(run_indexed(f, c));
        rep_out.privacy_tv = privacy_audit(opt.scheme, opt.N, opt.M, opt.L);
    } else {
        if (opt.trials < 1) throw std::invalid_argument("simulate: need at least one trial");
        std::mt19937_64 g(opt.seed);
        for (std::size_t i = 0; i < opt.trials; ++i) {
            std::size_t f = 1 + std::size_t(draw_below(g, opt.M));
            absorb(run_sampled(f, g));
        }
    }
    rep_out.delta_sum_mean = sum_ds / double(rep_out.runs);
    rep_out.delta_union_mean = sum_du / double(rep_out.runs);
    return rep_out;
}

}  // namespace pirac
