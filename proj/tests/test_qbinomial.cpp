#include <catch2/catch_amalgamated.hpp>

#include "testutil.hpp"

using namespace rankzeta;

TEST_CASE("qbin counting regime") {
    CHECK(qbin(3, 1, 2) == Rat(7));
    CHECK(qbin(6, 3, 2) == Rat(1395));  // 63*31*15 / (7*3*1)
    CHECK(qbin(4, 2, 3) == Rat(130));
    for (long a = 0; a <= 9; ++a) CHECK(qbin(a, 0, 2) == Rat(1));
    for (long a = 0; a <= 9; ++a) CHECK(qbin(a, a, 3) == Rat(1));
}

TEST_CASE("qbin degenerate and negative cases") {
    CHECK(qbin(2, 5, 2) == Rat(0));
    CHECK(qbin(0, 1, 2) == Rat(0));
    CHECK(qbin(3, -1, 2) == Rat(0));
    CHECK(qbin(-1, 1, 2) == make_rat(-1, 2));  // (-1) * 2^{-1} * qbin(1,1)
    CHECK(qbin(-2, 1, 2) == make_rat(-3, 4));
    CHECK_THROWS_AS(qbin(3, 1, 1), std::invalid_argument);
}

TEST_CASE("qbin equals subspace count") {
    for (unsigned q : {2u, 3u, 4u}) {
        FieldPtr f = FieldSpec::make(q);
        for (long a = 0; a <= (q == 2 ? 5 : 4); ++a) {
            for (long b = 0; b <= a; ++b) {
                long count = 0;
                for_each_subspace(f, a, b, [&](const Subspace&) { ++count; });
                CHECK(qbin(a, b, Int(q)) == Rat(count));
            }
        }
    }
}

TEST_CASE("q-binomial identities across the integer test box") {
    for (unsigned q : {2u, 3u}) {
        for (long a = -5; a <= 8; ++a)
            for (long b = -5; b <= 8; ++b)
                for (long c = -5; c <= 8; ++c) {
                    INFO("a=" << a << " b=" << b << " c=" << c << " q=" << q);
                    CHECK(qbin_identities_check(a, b, c, Int(q)));
                }
    }
}

TEST_CASE("identity spot values") {
    // identity (1) at (5,3,2), q=2: both sides from the product formula
    CHECK(qbin(5, 3, 2) * qbin(3, 2, 2) == qbin(5, 2, 2) * qbin(3, 2, 2));
    // identity (3) at (2,2,2), q=2: qbin(4,2) = 35 both ways
    CHECK(qbin(4, 2, 2) == Rat(35));
    // identity (2) with c=0: both sides are the empty product
    CHECK(qbin_identities_check(7, -3, 0, 2));
}
