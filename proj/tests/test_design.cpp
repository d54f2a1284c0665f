#include "doctest.h"

#include "pirac/errors.hpp"
#include "pirac/restricted.hpp"

using namespace pirac;

TEST_CASE("min_cover finds the smallest XOR subset in deterministic order") {
    std::vector<std::uint64_t> stored = {1, 2, 4};
    auto c = min_cover(stored, 7, 3);
    REQUIRE(c.has_value());
    CHECK(c->size() == 3);
    CHECK(min_cover(stored, 7, 2) == std::nullopt);
    auto zero = min_cover(stored, 0, 3);
    REQUIRE(zero.has_value());
    CHECK(zero->empty());
    // a stored element equal to the target beats any multi-element cover
    stored.push_back(7);
    auto direct = min_cover(stored, 7, 3);
    REQUIRE(direct.has_value());
    CHECK(*direct == std::vector<std::size_t>{3});
}

TEST_CASE("the built-in 3x2 design answers every pattern query in two reads") {
    RestrictedDesign d = builtin_design_3x2();
    REQUIRE(d.stored.size() == 11);
    d.validate();
    auto [ok, worst] = verify_restricted_design(d);
    CHECK(ok);
    CHECK(worst == 2);
}

TEST_CASE("removing a cross pair from the built-in design breaks coverage") {
    // the pair combinations are load-bearing: each serves the weight-3
    // queries that pair with the remaining singleton
    for (std::size_t victim : {6, 7, 8}) {
        RestrictedDesign d = builtin_design_3x2();
        d.stored.erase(d.stored.begin() + victim);
        auto [ok, worst] = verify_restricted_design(d);
        (void)worst;
        CHECK_FALSE(ok);
    }
}

TEST_CASE("design validation rejects malformed combinations") {
    RestrictedDesign d;
    d.M = 2;
    d.s = 2;
    d.R = 1;
    d.stored.push_back(BitVec::from_string("1100"));  // both substrings of file 1
    CHECK_THROWS_AS(d.validate(), std::invalid_argument);
    d.stored.clear();
    d.stored.push_back(BitVec(3));  // wrong length
    CHECK_THROWS_AS(d.validate(), std::invalid_argument);
    d.M = 0;
    CHECK_THROWS_AS(d.validate(), std::invalid_argument);
    RestrictedDesign wide;
    wide.M = 33;
    wide.s = 2;
    wide.R = 1;
    CHECK_THROWS_AS(wide.validate(), feasibility_error);  // 66 positions
}

TEST_CASE("verifier budget guard trips on huge query spaces") {
    RestrictedDesign d;
    d.M = 20;
    d.s = 2;
    d.R = 1;
    for (std::size_t i = 0; i < 40; ++i) d.stored.push_back(BitVec::unit(40, i));
    CHECK_THROWS_AS(verify_restricted_design(d), feasibility_error);  // 3^20 queries
}

TEST_CASE("greedy growth matches the known minimal cases") {
    // M=2, s=1, R=1: singletons alone cannot answer x1+x2; one addition fixes it
    auto d = greedy_restricted_design(2, 1, 1, 1, 0);
    REQUIRE(d.has_value());
    CHECK(d->stored.size() == 3);
    auto [ok, worst] = verify_restricted_design(*d);
    CHECK(ok);
    CHECK(worst == 1);
    // with no budget the same instance is infeasible
    CHECK(greedy_restricted_design(2, 1, 1, 0, 0) == std::nullopt);

    // M=1: the singletons already answer everything
    auto single = greedy_restricted_design(1, 2, 1, 0, 0);
    REQUIRE(single.has_value());
    CHECK(single->stored.size() == 2);
}

TEST_CASE("greedy reaches a verified design at the built-in parameters") {
    auto d = greedy_restricted_design(3, 2, 2, 11, 0);
    REQUIRE(d.has_value());
    auto [ok, worst] = verify_restricted_design(*d);
    CHECK(ok);
    CHECK(worst <= 2);
    CHECK(d->stored.size() <= 17);  // 6 singletons + at most the budget

    // same seed, same result; the pick order is deterministic
    auto again = greedy_restricted_design(3, 2, 2, 11, 0);
    REQUIRE(again.has_value());
    REQUIRE(again->stored.size() == d->stored.size());
    for (std::size_t i = 0; i < d->stored.size(); ++i) CHECK(again->stored[i] == d->stored[i]);
}
