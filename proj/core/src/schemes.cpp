#include "pirac/schemes.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace pirac {

namespace {

std::string residues_hex(const std::vector<unsigned>& b) {
    static const char* digits = "0123456789abcdef";
    std::string s;
    s.reserve(2 * b.size());
    for (unsigned x : b) {
        s.push_back(digits[(x >> 4) & 0xf]);
        s.push_back(digits[x & 0xf]);
    }
    return s;
}

std::vector<BitVec> file_substrings(const Database& db, std::size_t parts) {
    // unit (m-1)*parts + (j-1) is substring j of file m
    std::vector<BitVec> units;
    units.reserve(db.M * parts);
    const std::size_t t = db.L / parts;
    for (std::size_t m = 0; m < db.M; ++m)
        for (std::size_t j = 0; j < parts; ++j) units.push_back(db.files[m].slice(j * t, t));
    return units;
}

void check_file_index(std::size_t f, std::size_t M) {
    if (f < 1 || f > M) throw std::invalid_argument("scheme: file index must be in 1..M");
}

ServerTrace one_query_trace(const EncodedStorage& st, const BitVec& s) {
    Answer a = answer_query(st, s);
    ServerTrace tr;
    tr.queries.push_back(s.hex());
    tr.responses.push_back(std::move(a.value));
    tr.accessed.push_back(std::move(a.accessed));
    tr.stored_symbols = st.symbols.size();
    return tr;
}

}  // namespace

BitMatrix columns_matrix(const std::vector<BitVec>& units) { return BitMatrix::from_columns(units); }

AccessSummary access_report(const Transcript& t) {
    AccessSummary sum;
    const double ml = double(t.M) * double(t.L);
    for (const auto& sv : t.servers) {
        ServerAccess sa;
        std::set<std::size_t> seen;
        for (const auto& idx : sv.accessed) {
            sa.sum_symbols += idx.size();
            seen.insert(idx.begin(), idx.end());
            sum.worst_query_symbols = std::max(sum.worst_query_symbols, idx.size());
        }
        sa.union_symbols = seen.size();
        sa.sum_ml = double(sa.sum_symbols) * double(t.symbol_len) / ml;
        sa.union_ml = double(sa.union_symbols) * double(t.symbol_len) / ml;
        sum.delta_sum += sa.sum_ml;
        sum.delta_union += sa.union_ml;
        sum.servers.push_back(sa);
    }
    return sum;
}

// ---- two-server -------------------------------------------------------------

TwoServerScheme::TwoServerScheme(const Database& database, bool augmented) : db(database) {
    db.validate();
    if (db.M < 1) throw std::invalid_argument("two-server: need at least one file");
    BitMatrix H =
        augmented ? sum_augmented_identity(db.M) : BitMatrix::identity(db.M);
    storage = encode_storage(columns_matrix(db.files), build_code(H));
}

Transcript TwoServerScheme::run(std::size_t f, const BitVec& a) const {
    check_file_index(f, db.M);
    if (a.len != db.M) throw std::invalid_argument("two-server: a must have length M");
    Transcript t;
    t.scheme = "two-server";
    t.N = 2;
    t.M = db.M;
    t.L = db.L;
    t.f = f;
    t.randomness = "a=" + a.hex();
    t.symbol_len = db.L;
    BitVec s2 = a ^ BitVec::unit(db.M, f - 1);
    t.servers.push_back(one_query_trace(storage, a));
    t.servers.push_back(one_query_trace(storage, s2));
    t.reconstructed = t.servers[0].responses[0] ^ t.servers[1].responses[0];
    t.download_bits = 2 * db.L;
    return t;
}

Transcript scheme_two_server(const Database& db, std::size_t f, const BitVec& a, bool augmented) {
    return TwoServerScheme(db, augmented).run(f, a);
}

// ---- replicated -------------------------------------------------------------

ReplicatedScheme::ReplicatedScheme(std::size_t servers, const Database& database,
                                   const CoveringCode* backend)
    : N(servers), db(database) {
    db.validate();
    if (N < 2) throw std::invalid_argument("replicated: need at least 2 servers");
    if (db.L % (N - 1) != 0)
        throw std::invalid_argument("replicated: L must be divisible by N-1");
    t = db.L / (N - 1);
    const std::size_t r = (N - 1) * db.M;
    std::vector<BitVec> units = file_substrings(db, N - 1);
    if (backend) {
        if (backend->r != r)
            throw std::invalid_argument("replicated: backend code must have r == (N-1)*M");
        storage = encode_storage(columns_matrix(units), *backend);
    } else {
        storage = encode_storage(columns_matrix(units), build_code(BitMatrix::identity(r)));
    }
}

Transcript ReplicatedScheme::run(std::size_t f, const BitVec& v) const {
    check_file_index(f, db.M);
    const std::size_t r = (N - 1) * db.M;
    if (v.len != r) throw std::invalid_argument("replicated: v must have length (N-1)*M");
    Transcript tr;
    tr.scheme = "replicated";
    tr.N = N;
    tr.M = db.M;
    tr.L = db.L;
    tr.f = f;
    tr.randomness = "v=" + v.hex();
    tr.symbol_len = t;
    for (std::size_t n = 1; n < N; ++n) {
        BitVec q = v ^ BitVec::unit(r, (f - 1) * (N - 1) + (n - 1));
        tr.servers.push_back(one_query_trace(storage, q));
    }
    tr.servers.push_back(one_query_trace(storage, v));
    std::vector<BitVec> parts;
    parts.reserve(N - 1);
    for (std::size_t n = 0; n + 1 < N; ++n)
        parts.push_back(tr.servers[n].responses[0] ^ tr.servers[N - 1].responses[0]);
    tr.reconstructed = concat(parts);
    tr.download_bits = N * t;
    return tr;
}

Transcript scheme_replicated(std::size_t N, const Database& db, std::size_t f, const BitVec& v,
                             const CoveringCode* backend) {
    return ReplicatedScheme(N, db, backend).run(f, v);
}

// ---- (3,2) two-query scheme ---------------------------------------------------

Mds32Scheme::Mds32Scheme(const Database& database, const CoveringCode* backend) : db(database) {
    db.validate();
    if (db.M < 1) throw std::invalid_argument("mds32: need at least one file");
    if (db.L % 2 != 0) throw std::invalid_argument("mds32: L must be even");
    t = db.L / 2;
    std::vector<BitVec> first, second, coded;
    for (std::size_t m = 0; m < db.M; ++m) {
        first.push_back(db.files[m].slice(0, t));
        second.push_back(db.files[m].slice(t, t));
        coded.push_back(first.back() ^ second.back());
    }
    CoveringCode code;
    if (backend) {
        if (backend->r != db.M)
            throw std::invalid_argument("mds32: backend code must have r == M");
        code = *backend;
    } else {
        code = build_code(BitMatrix::identity(db.M));
    }
    storages.push_back(encode_storage(columns_matrix(first), code));
    storages.push_back(encode_storage(columns_matrix(second), code));
    storages.push_back(encode_storage(columns_matrix(coded), std::move(code)));
}

Transcript Mds32Scheme::run(std::size_t f, const BitVec& a, const BitVec& b) const {
    check_file_index(f, db.M);
    if (a.len != db.M || b.len != db.M)
        throw std::invalid_argument("mds32: a and b must have length M");
    Transcript tr;
    tr.scheme = "mds32";
    tr.N = 3;
    tr.M = db.M;
    tr.L = db.L;
    tr.f = f;
    tr.randomness = "a=" + a.hex() + " b=" + b.hex();
    tr.symbol_len = t;
    const BitVec e = BitVec::unit(db.M, f - 1);
    const BitVec q[3][2] = {{a ^ e, b}, {a, b ^ e}, {a, b}};
    for (std::size_t n = 0; n < 3; ++n) {
        ServerTrace sv;
        sv.stored_symbols = storages[n].symbols.size();
        for (std::size_t row = 0; row < 2; ++row) {
            Answer ans = answer_query(storages[n], q[n][row]);
            sv.queries.push_back(q[n][row].hex());
            sv.responses.push_back(std::move(ans.value));
            sv.accessed.push_back(std::move(ans.accessed));
        }
        tr.servers.push_back(std::move(sv));
    }
    // row 1 cancels the a-terms across the three servers, row 2 the b-terms
    BitVec part1 =
        tr.servers[0].responses[0] ^ tr.servers[1].responses[0] ^ tr.servers[2].responses[0];
    BitVec part2 =
        tr.servers[0].responses[1] ^ tr.servers[1].responses[1] ^ tr.servers[2].responses[1];
    tr.reconstructed = concat({part1, part2});
    tr.download_bits = 6 * t;
    return tr;
}

Transcript scheme_mds32(const Database& db, std::size_t f, const BitVec& a, const BitVec& b,
                        const CoveringCode* backend) {
    return Mds32Scheme(db, backend).run(f, a, b);
}

// ---- Z_N-shift scheme ---------------------------------------------------------

BepScheme::BepScheme(std::size_t servers, const Database& database, const CoveringCode* code,
                     const RestrictedDesign* design_in)
    : N(servers), db(database) {
    db.validate();
    if (N < 2) throw std::invalid_argument("bep: need at least 2 servers");
    if (N > 256) throw std::invalid_argument("bep: queries are encoded as bytes; need N <= 256");
    if (db.L % (N - 1) != 0) throw std::invalid_argument("bep: L must be divisible by N-1");
    if (code && design_in) throw std::invalid_argument("bep: choose one backend, not both");
    t = db.L / (N - 1);
    const std::size_t r = (N - 1) * db.M;
    std::vector<BitVec> units = file_substrings(db, N - 1);
    if (design_in) {
        if (design_in->M != db.M || design_in->s != N - 1)
            throw std::invalid_argument("bep: design must have M files and s == N-1");
        auto [ok, worst] = verify_restricted_design(*design_in);
        (void)worst;
        if (!ok)
            throw std::invalid_argument("bep: design does not cover its queries within R");
        use_design = true;
        design = *design_in;
        for (const auto& c : design.stored) {
            design_masks.push_back(c.index());
            BitVec val(t);
            for (std::size_t u : c.support()) val ^= units[u];
            design_values.push_back(std::move(val));
        }
    } else if (code) {
        if (code->r != r)
            throw std::invalid_argument("bep: backend code must have r == (N-1)*M");
        storage = encode_storage(columns_matrix(units), *code);
    } else {
        storage = encode_storage(columns_matrix(units), build_code(BitMatrix::identity(r)));
    }
}

Transcript BepScheme::run(std::size_t f, const std::vector<unsigned>& z) const {
    check_file_index(f, db.M);
    if (z.size() != db.M) throw std::invalid_argument("bep: z must have M entries");
    for (unsigned zm : z)
        if (zm >= N) throw std::invalid_argument("bep: z entries must lie in 0..N-1");
    const std::size_t r = (N - 1) * db.M;
    Transcript tr;
    tr.scheme = "bep";
    tr.N = N;
    tr.M = db.M;
    tr.L = db.L;
    tr.f = f;
    tr.symbol_len = t;
    {
        std::string zs = "z=[";
        for (std::size_t m = 0; m < db.M; ++m) {
            if (m) zs += ",";
            zs += std::to_string(z[m]);
        }
        tr.randomness = zs + "]";
    }
    for (std::size_t n = 1; n <= N; ++n) {
        std::vector<unsigned> b(db.M);
        for (std::size_t m = 0; m < db.M; ++m)
            b[m] = (m + 1 == f) ? unsigned((z[m] + n) % N) : z[m];
        BitVec s(r);
        for (std::size_t m = 0; m < db.M; ++m)
            if (b[m] != 0) s.set(m * (N - 1) + (b[m] - 1), true);
        ServerTrace sv;
        sv.queries.push_back(residues_hex(b));
        if (use_design) {
            auto cover = min_cover(design_masks, s.index(), design.R);
            if (!cover) throw std::logic_error("bep: verified design failed to cover a query");
            BitVec val(t);
            for (std::size_t i : *cover) val ^= design_values[i];
            sv.responses.push_back(std::move(val));
            sv.accessed.push_back(std::move(*cover));
            sv.stored_symbols = design_masks.size();
        } else {
            Answer ans = answer_query(storage, s);
            sv.responses.push_back(std::move(ans.value));
            sv.accessed.push_back(std::move(ans.accessed));
            sv.stored_symbols = storage.symbols.size();
        }
        tr.servers.push_back(std::move(sv));
    }
    // the server whose file-f index wrapped to 0 holds the common mask
    std::size_t n0 = (N - z[f - 1]) % N;
    if (n0 == 0) n0 = N;
    const BitVec& mask = tr.servers[n0 - 1].responses[0];
    std::vector<BitVec> parts;
    parts.reserve(N - 1);
    for (std::size_t j = 1; j < N; ++j) {
        std::size_t n = (j + N - (z[f - 1] % N)) % N;
        if (n == 0) n = N;
        parts.push_back(tr.servers[n - 1].responses[0] ^ mask);
    }
    tr.reconstructed = concat(parts);
    tr.download_bits = N * t;
    return tr;
}

Transcript scheme_bep(std::size_t N, const Database& db, std::size_t f,
                      const std::vector<unsigned>& z, const CoveringCode* backend,
                      const RestrictedDesign* design) {
    return BepScheme(N, db, backend, design).run(f, z);
}

}  // namespace pirac
