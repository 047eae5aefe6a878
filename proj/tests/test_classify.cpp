#include <catch2/catch_amalgamated.hpp>

#include "testutil.hpp"

using namespace rankzeta;
using rztest::fixture;
using rztest::random_code;

TEST_CASE("BMD predicate on printed cases") {
    RankMetricCode c1 = fixture("c1.json");
    CHECK_FALSE(is_ibmd(c1, 2));  // 3 - 1 - 2 = 0
    CHECK(is_ibmd(c1, 4));        // 3 - 1 - 3 = -1
    CHECK(minimal_bmd_index(c1) == std::optional<long>(4));
    RankMetricCode zero = fixture("zero_3x4.json");
    CHECK(is_ibmd(zero, 1));  // n - 1 - (n+1) = -2
    CHECK(minimal_bmd_index(zero) == std::optional<long>(1));
    RankMetricCode full = fixture("full_3x4.json");
    CHECK(minimal_bmd_index(full) == std::optional<long>(1));
}

TEST_CASE("MRD predicate on printed cases") {
    RankMetricCode c1 = fixture("c1.json");
    CHECK(is_imrd(c1, 2));
    CHECK_FALSE(is_imrd(c1, 3));
    CHECK_FALSE(is_imrd(c1, 1));
}

TEST_CASE("seven-region census") {
    auto r1 = classify(fixture("c1.json"));
    CHECK(r1.is_imrd[2]);
    CHECK_FALSE(r1.is_imrd[1]);
    CHECK_FALSE(r1.is_ibmd[3]);

    auto r2 = classify(fixture("c2.json"));
    CHECK(r2.minimal_bmd == std::optional<long>(2));
    CHECK(r2.is_imrd[2]);
    CHECK(r2.is_ibmd[3]);
    CHECK_FALSE(r2.is_imrd[1]);

    auto r3 = classify(fixture("c3.json"));
    CHECK(r3.is_ibmd[1]);

    auto r4 = classify(fixture("c4.json"));
    CHECK(r4.is_imrd[1]);
    CHECK(r4.is_imrd[2]);
    CHECK_FALSE(r4.is_ibmd[3]);

    auto r5 = classify(fixture("c5.json"));
    CHECK(r5.is_ibmd[3]);
    CHECK_FALSE(r5.is_imrd[1]);
    CHECK_FALSE(r5.is_imrd[2]);

    auto r6 = classify(fixture("c6.json"));
    CHECK(r6.is_imrd[1]);
    CHECK(r6.is_ibmd[3]);
    CHECK_FALSE(r6.is_imrd[2]);

    auto r7 = classify(fixture("c7.json"));
    CHECK(r7.is_imrd[1]);
    CHECK_FALSE(r7.is_imrd[2]);
    CHECK_FALSE(r7.is_ibmd[3]);
}

TEST_CASE("minimal BMD indices across the duality example") {
    CHECK(classify(fixture("c1.json")).minimal_bmd == std::optional<long>(4));
    CHECK(classify(fixture("c4.json")).minimal_bmd == std::optional<long>(4));
    CHECK(classify(fixture("c1.json").dual()).minimal_bmd == std::optional<long>(4));
    CHECK(classify(fixture("c4.json").dual()).minimal_bmd == std::optional<long>(2));
}

TEST_CASE("QMRD and DQMRD") {
    auto r6 = classify(fixture("c6.json"));
    // k = 5, m = 4: m does not divide k and d = 2 = n - ceil(k/m) + 1
    CHECK(r6.is_qmrd);
    CHECK_FALSE(r6.is_dqmrd);  // the dual misses the QMRD distance (d = 1)
    // c1 has the right residue but d = 1 < 2; the extreme codes have m | k
    CHECK_FALSE(classify(fixture("c1.json")).is_qmrd);
    CHECK_FALSE(classify(fixture("full_3x4.json")).is_qmrd);
    CHECK_FALSE(classify(fixture("zero_3x4.json")).is_qmrd);
    // c3 is dually quasi-MRD: d = d(dual) = 2 with k = k(dual) = 6
    auto r3 = classify(fixture("c3.json"));
    CHECK(r3.is_qmrd);
    CHECK(r3.is_dqmrd);
    // DQMRD <=> m does not divide k and i-MRD at every i
    for (const char* name : {"c3.json", "c6.json", "c7.json"}) {
        auto r = classify(fixture(name));
        bool all_imrd = true;
        for (long i = 1; i <= r.params.k; ++i) all_imrd = all_imrd && r.is_imrd[static_cast<size_t>(i)];
        CHECK(r.is_dqmrd == (r.params.k % r.params.m != 0 && all_imrd));
    }
    // DQMRD weight ladder: d_i = n - alpha for i <= rho, then steps of one
    // per block of m indices, ending at n
    auto d3 = generalized_weights(fixture("c3.json"));
    CHECK(d3 == std::vector<long>{0, 2, 2, 3, 3, 3, 3});
}

TEST_CASE("alpha-rho decomposition") {
    auto r = classify(fixture("c6.json"));
    CHECK(r.alpha == 1);
    CHECK(r.rho == 1);
    CHECK(r.alpha * r.params.m + r.rho == r.params.k);
}

TEST_CASE("wei duality reconstructs dual weights") {
    for (const char* name :
         {"c1.json", "c2.json", "c3.json", "c4.json", "c5.json", "c6.json", "c7.json"}) {
        RankMetricCode c = fixture(name);
        auto d = generalized_weights(c);
        auto dd_direct = generalized_weights(c.dual());
        CHECK(wei_dual_weights(d, c.n(), c.m()) == dd_direct);
        // involution
        CHECK(wei_dual_weights(dd_direct, c.n(), c.m()) == d);
    }
    CHECK_THROWS_AS(wei_dual_weights({0, 3, 1}, 3, 4), std::invalid_argument);
}

TEST_CASE("wei duality at the extreme codes") {
    auto dz = wei_dual_weights({0}, 3, 4);  // dual of the zero code is the full space
    for (long i = 1; i <= 12; ++i) CHECK(dz[static_cast<size_t>(i)] == ceil_div(i, 4));
    CHECK(wei_dual_weights(dz, 3, 4) == std::vector<long>{0});
}

TEST_CASE("classification implications on fixtures and random codes") {
    auto check_implications = [](const RankMetricCode& c) {
        auto r = classify(c);
        long top = static_cast<long>(r.is_ibmd.size()) - 1;
        for (long i = 1; i <= top; ++i) {
            INFO("k=" << r.params.k << " i=" << i);
            if (r.is_ibmd[static_cast<size_t>(i)]) CHECK(r.is_imrd[static_cast<size_t>(i)]);
            if (i + r.params.m <= top && r.is_imrd[static_cast<size_t>(i)])
                CHECK(r.is_imrd[static_cast<size_t>(i + r.params.m)]);
            if (i > 1 && r.is_ibmd[static_cast<size_t>(i)] && !r.is_ibmd[static_cast<size_t>(i - 1)])
                CHECK_FALSE(r.is_imrd[static_cast<size_t>(i - 1)]);
        }
        // monotone in i
        for (long i = 1; i < top; ++i)
            if (r.is_ibmd[static_cast<size_t>(i)]) CHECK(r.is_ibmd[static_cast<size_t>(i + 1)]);
        // k-BMD forces d_k = n
        if (r.params.k >= 1 && r.is_ibmd[static_cast<size_t>(r.params.k)])
            CHECK(r.weights[static_cast<size_t>(r.params.k)] == r.params.n);
    };
    for (const char* name : {"c1.json", "c2.json", "c3.json", "c4.json", "c5.json", "c6.json",
                             "c7.json", "zero_3x4.json", "full_3x4.json"})
        check_implications(fixture(name));
    int cases = 0;
    for (unsigned q : {2u, 3u})
        for (auto [n, m] : {std::pair<long, long>{2, 4}, {3, 4}, {2, 5}, {3, 3}, {2, 3}})
            for (int trial = 0; trial < 6; ++trial) {
                long k = 1 + static_cast<long>((trial * 11 + n + m + q) % (n * m - 1));
                check_implications(random_code(q, n, m, k, 7000 + cases));
                ++cases;
            }
    CHECK(cases >= 50);
}

TEST_CASE("wei duality on random codes") {
    for (unsigned q : {2u, 3u})
        for (int trial = 0; trial < 10; ++trial) {
            long n = 2 + trial % 2, m = n + 1;
            long k = 1 + static_cast<long>((trial + q) % (n * m - 1));
            RankMetricCode c = random_code(q, n, m, k, 8800 + 13 * trial + q);
            CHECK(wei_dual_weights(generalized_weights(c), c.n(), c.m()) ==
                  generalized_weights(c.dual()));
        }
}
