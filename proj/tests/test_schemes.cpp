#include "doctest.h"

#include <set>

#include "pirac/schemes.hpp"

using namespace pirac;

TEST_CASE("two-server scheme reconstructs every file for every query vector") {
    for (std::uint64_t db_seed : {1, 2, 3}) {
        Database db = Database::random(3, 5, db_seed);
        for (bool augmented : {false, true}) {
            TwoServerScheme ctx(db, augmented);
            for (std::size_t f = 1; f <= 3; ++f)
                for (std::uint64_t a = 0; a < 8; ++a) {
                    Transcript t = ctx.run(f, BitVec::from_index(a, 3));
                    CHECK(t.reconstructed == db.files[f - 1]);
                    CHECK(t.download_bits == 10);
                    CHECK(t.servers.size() == 2);
                }
        }
    }
}

TEST_CASE("two-server identity access equals the query weight") {
    Database db = Database::random(4, 8, 11);
    TwoServerScheme ctx(db, false);
    for (std::uint64_t a = 0; a < 16; ++a) {
        Transcript t = ctx.run(2, BitVec::from_index(a, 4));
        BitVec q1 = BitVec::from_index(a, 4);
        BitVec q2 = q1 ^ BitVec::unit(4, 1);
        CHECK(t.servers[0].accessed[0].size() == q1.weight());
        CHECK(t.servers[1].accessed[0].size() == q2.weight());
        CHECK(t.servers[0].queries[0] == q1.hex());
        CHECK(t.servers[1].queries[0] == q2.hex());
    }
}

TEST_CASE("two-server sum-augmented storage reads at most two symbols per query") {
    Database db = Database::random(4, 8, 13);
    TwoServerScheme ctx(db, true);
    std::size_t worst = 0;
    for (std::size_t f = 1; f <= 4; ++f)
        for (std::uint64_t a = 0; a < 16; ++a) {
            Transcript t = ctx.run(f, BitVec::from_index(a, 4));
            CHECK(t.reconstructed == db.files[f - 1]);
            for (const auto& sv : t.servers) worst = std::max(worst, sv.accessed[0].size());
        }
    CHECK(worst == 2);
}

TEST_CASE("replicated scheme reconstructs for all v and f") {
    Database db = Database::random(2, 4, 5);
    ReplicatedScheme ctx(3, db);
    for (std::size_t f = 1; f <= 2; ++f)
        for (std::uint64_t v = 0; v < 16; ++v) {
            Transcript t = ctx.run(f, BitVec::from_index(v, 4));
            CHECK(t.reconstructed == db.files[f - 1]);
            CHECK(t.download_bits == 6);  // N * t = 3 * 2
            CHECK(t.rate() == doctest::Approx(2.0 / 3.0));
        }
}

TEST_CASE("replicated with N=2 sends the same query pair as the two-server scheme") {
    Database db = Database::random(3, 4, 7);
    for (std::size_t f = 1; f <= 3; ++f)
        for (std::uint64_t a = 0; a < 8; ++a) {
            BitVec av = BitVec::from_index(a, 3);
            Transcript rep = scheme_replicated(2, db, f, av);
            Transcript two = scheme_two_server(db, f, av, false);
            CHECK(rep.reconstructed == db.files[f - 1]);
            std::multiset<std::string> rq(rep.servers[0].queries.begin(),
                                          rep.servers[0].queries.end());
            rq.insert(rep.servers[1].queries[0]);
            std::multiset<std::string> tq{two.servers[0].queries[0], two.servers[1].queries[0]};
            CHECK(rq == tq);
        }
}

TEST_CASE("replicated accepts a covering-code backend and stays within its radius") {
    Database db = Database::random(2, 6, 9);  // r = (3-1)*2 = 4
    CoveringCode code = build_code(hamming_parity(4));
    REQUIRE(code.r == 4);
    ReplicatedScheme ctx(3, db, &code);
    for (std::size_t f = 1; f <= 2; ++f)
        for (std::uint64_t v = 0; v < 16; ++v) {
            Transcript t = ctx.run(f, BitVec::from_index(v, 4));
            CHECK(t.reconstructed == db.files[f - 1]);
            for (const auto& sv : t.servers)
                CHECK(sv.accessed[0].size() <= code.radius);
        }
}

TEST_CASE("mds32 scheme reconstructs over all (a, b) pairs") {
    Database db = Database::random(3, 2, 21);
    Mds32Scheme ctx(db);
    for (std::size_t f = 1; f <= 3; ++f)
        for (std::uint64_t c = 0; c < 64; ++c) {
            BitVec a = BitVec::from_index(c & 7, 3);
            BitVec b = BitVec::from_index(c >> 3, 3);
            Transcript t = ctx.run(f, a, b);
            CHECK(t.reconstructed == db.files[f - 1]);
            CHECK(t.download_bits == 3 * 2);  // 6t = 3L
            CHECK(t.rate() == doctest::Approx(1.0 / 3.0));
            CHECK(t.servers.size() == 3);
            for (const auto& sv : t.servers) CHECK(sv.queries.size() == 2);
        }
}

TEST_CASE("mds32 equal randomness a == b still reconstructs") {
    Database db = Database::random(4, 6, 23);
    Mds32Scheme ctx(db);
    for (std::size_t f = 1; f <= 4; ++f)
        for (std::uint64_t a = 0; a < 16; ++a) {
            Transcript t = ctx.run(f, BitVec::from_index(a, 4), BitVec::from_index(a, 4));
            CHECK(t.reconstructed == db.files[f - 1]);
        }
}

TEST_CASE("mds32 with the sum-augmented backend reads at most two symbols per query") {
    Database db = Database::random(4, 6, 25);
    CoveringCode code = build_code(sum_augmented_identity(4));
    Mds32Scheme ctx(db, &code);
    for (std::size_t f = 1; f <= 4; ++f)
        for (std::uint64_t c = 0; c < 256; ++c) {
            Transcript t = ctx.run(f, BitVec::from_index(c & 15, 4), BitVec::from_index(c >> 4, 4));
            CHECK(t.reconstructed == db.files[f - 1]);
            for (const auto& sv : t.servers)
                for (const auto& acc : sv.accessed) CHECK(acc.size() <= 2);
        }
}

TEST_CASE("bep scheme reconstructs for every z") {
    Database db = Database::random(2, 4, 31);
    BepScheme ctx(3, db);
    for (std::size_t f = 1; f <= 2; ++f)
        for (unsigned z1 = 0; z1 < 3; ++z1)
            for (unsigned z2 = 0; z2 < 3; ++z2) {
                Transcript t = ctx.run(f, {z1, z2});
                CHECK(t.reconstructed == db.files[f - 1]);
                CHECK(t.download_bits == 6);
                CHECK(t.servers.size() == 3);
            }
}

TEST_CASE("bep with the built-in restricted design keeps reads at two") {
    Database db = Database::random(3, 8, 33);
    RestrictedDesign design = builtin_design_3x2();
    BepScheme ctx(3, db, nullptr, &design);
    std::size_t worst = 0;
    for (std::size_t f = 1; f <= 3; ++f)
        for (unsigned c = 0; c < 27; ++c) {
            std::vector<unsigned> z = {c % 3, (c / 3) % 3, c / 9};
            Transcript t = ctx.run(f, z);
            CHECK(t.reconstructed == db.files[f - 1]);
            for (const auto& sv : t.servers) worst = std::max(worst, sv.accessed[0].size());
        }
    CHECK(worst <= 2);
    CHECK(worst >= 1);
}

TEST_CASE("bep with a covering-code backend over the substring units") {
    Database db = Database::random(2, 4, 35);  // r = 4
    CoveringCode code = build_code(sum_augmented_identity(4));
    BepScheme ctx(3, db, &code);
    for (std::size_t f = 1; f <= 2; ++f)
        for (unsigned c = 0; c < 9; ++c) {
            Transcript t = ctx.run(f, {c % 3, c / 3});
            CHECK(t.reconstructed == db.files[f - 1]);
            for (const auto& sv : t.servers) CHECK(sv.accessed[0].size() <= 2);
        }
}

TEST_CASE("transcripts carry the run metadata") {
    Database db = Database::random(3, 4, 41);
    Transcript t = scheme_two_server(db, 2, BitVec::from_index(5, 3), false);
    CHECK(t.scheme == "two-server");
    CHECK(t.N == 2);
    CHECK(t.M == 3);
    CHECK(t.L == 4);
    CHECK(t.f == 2);
    CHECK(t.randomness == "a=" + BitVec::from_index(5, 3).hex());
    CHECK(t.symbol_len == 4);

    Transcript tb = scheme_bep(3, db, 1, {2, 0, 1});
    CHECK(tb.randomness == "z=[2,0,1]");
    CHECK(tb.scheme == "bep");

    Transcript tm = scheme_mds32(db, 1, BitVec::from_index(1, 3), BitVec::from_index(2, 3));
    CHECK(tm.randomness == "a=" + BitVec::from_index(1, 3).hex() + " b=" +
                               BitVec::from_index(2, 3).hex());
}

TEST_CASE("access_report aggregates sum and union accounting") {
    Database db = Database::random(2, 4, 43);
    Transcript t = scheme_mds32(db, 1, BitVec::from_index(3, 2), BitVec::from_index(3, 2));
    AccessSummary sum = access_report(t);
    REQUIRE(sum.servers.size() == 3);
    double expect_sum = 0;
    for (const auto& sv : t.servers) {
        std::size_t total = 0;
        std::set<std::size_t> uniq;
        for (const auto& acc : sv.accessed) {
            total += acc.size();
            uniq.insert(acc.begin(), acc.end());
        }
        expect_sum += double(total) * double(t.symbol_len) / (double(t.M) * double(t.L));
        CHECK(uniq.size() <= total);
    }
    CHECK(sum.delta_sum == doctest::Approx(expect_sum).epsilon(1e-12));
    CHECK(sum.delta_union <= sum.delta_sum);
}

TEST_CASE("scheme parameter validation") {
    Database db = Database::random(3, 4, 51);
    TwoServerScheme two(db, false);
    CHECK_THROWS_AS(two.run(0, BitVec(3)), std::invalid_argument);
    CHECK_THROWS_AS(two.run(4, BitVec(3)), std::invalid_argument);
    CHECK_THROWS_AS(two.run(1, BitVec(4)), std::invalid_argument);

    CHECK_THROWS_AS(ReplicatedScheme(1, db), std::invalid_argument);
    Database odd = Database::random(2, 5, 52);
    CHECK_THROWS_AS(ReplicatedScheme(3, odd), std::invalid_argument);  // L % (N-1) != 0
    CHECK_THROWS_AS((Mds32Scheme(odd)), std::invalid_argument);        // L odd

    CoveringCode wrong = build_code(BitMatrix::identity(3));
    CHECK_THROWS_AS(ReplicatedScheme(3, db, &wrong), std::invalid_argument);  // needs r=6
    CHECK_THROWS_AS(Mds32Scheme(Database::random(2, 4, 53), &wrong), std::invalid_argument);

    BepScheme bep(3, Database::random(2, 4, 54));
    CHECK_THROWS_AS(bep.run(1, {0}), std::invalid_argument);      // z too short
    CHECK_THROWS_AS(bep.run(1, {3, 0}), std::invalid_argument);   // residue out of range

    RestrictedDesign design = builtin_design_3x2();
    Database db2 = Database::random(2, 4, 55);
    CHECK_THROWS_AS(BepScheme(3, db2, nullptr, &design), std::invalid_argument);  // M mismatch
    CoveringCode id4 = build_code(BitMatrix::identity(4));
    CHECK_THROWS_AS(BepScheme(3, db2, &id4, &design), std::invalid_argument);     // both backends
}
