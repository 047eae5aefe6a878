#include <catch2/catch_amalgamated.hpp>

#include "testutil.hpp"

using namespace rankzeta;
namespace ham = rankzeta::hamming;
using rztest::random_block_code;

static ham::BlockCode make(unsigned q, long n, std::vector<std::vector<unsigned>> rows) {
    std::vector<std::vector<Fe>> g;
    for (auto& r : rows) g.emplace_back(r.begin(), r.end());
    return ham::BlockCode(FieldSpec::make(q), n, std::move(g));
}

TEST_CASE("generalized Hamming weights") {
    // [4,2] code over F_3 with d = 3: weights (3, 4)
    ham::BlockCode c = make(3, 4, {{1, 0, 1, 1}, {0, 1, 1, 2}});
    CHECK(ham::generalized_hamming_weights(c) == std::vector<long>{0, 3, 4});
    CHECK(ham::min_distance(c) == 3);

    // full space: d_i = i
    ham::BlockCode full = make(3, 3, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
    CHECK(ham::generalized_hamming_weights(full) == std::vector<long>{0, 1, 2, 3});

    // repetition code: d_1 = n
    ham::BlockCode rep = make(3, 5, {{1, 1, 1, 1, 1}});
    CHECK(ham::generalized_hamming_weights(rep) == std::vector<long>{0, 5});
}

TEST_CASE("weight hierarchy invariants on random codes") {
    int cases = 0;
    for (unsigned q : {3u, 4u}) {
        for (int trial = 0; trial < 20; ++trial) {
            long n = 4 + trial % 5;           // 4..8
            long k = 1 + trial % std::min(n, 5L);
            ham::BlockCode c = random_block_code(q, n, k, 600 + 17 * trial + q);
            auto d = ham::generalized_hamming_weights(c);
            for (long i = 1; i < c.k(); ++i)
                CHECK(d[static_cast<size_t>(i)] < d[static_cast<size_t>(i + 1)]);  // strict (Wei)
            for (long i = 1; i <= c.k(); ++i)
                CHECK(d[static_cast<size_t>(i)] <= c.n() - c.k() + i);  // generalized Singleton
            ++cases;
        }
    }
    CHECK(cases == 40);
}

TEST_CASE("BMD predicate on the MDS example") {
    // [4,2,3] over F_3 is MDS; its dual distance is 3, so n - d_dual - d_1 < 0
    ham::BlockCode c = make(3, 4, {{1, 0, 1, 1}, {0, 1, 1, 2}});
    CHECK(ham::is_ibmd(c, 1));
    CHECK(ham::is_ibmd(c, 2));
    CHECK(ham::minimal_ibmd_index(c) == std::optional<long>(1));

    // [4,2] non-MDS code (d = 2): not 1-BMD
    ham::BlockCode weak = make(3, 4, {{1, 0, 1, 0}, {0, 1, 0, 0}});
    CHECK_FALSE(ham::is_ibmd(weak, 1));
}

TEST_CASE("closed forms on a minimally 1-BMD code") {
    ham::BlockCode c = make(3, 4, {{1, 0, 1, 1}, {0, 1, 1, 2}});
    // b closed form: qbin(k-n+u+d_j, j)
    CHECK(ham::closed_form_b(c, 1, 1, 0) == qbin(2 - 4 + 0 + 3, 1, 3));
    CHECK(ham::closed_form_b(c, 1, 1, 0) == Rat(1));
    CHECK(ham::closed_form_b(c, 1, 2, -1) == Rat(0));
    // A closed form vanishes below d_j
    for (long j : {1L, 2L}) {
        auto d = ham::generalized_hamming_weights(c);
        for (long w = 0; w < d[static_cast<size_t>(j)]; ++w)
            CHECK(ham::closed_form_A(c, 1, j, w) == Rat(0));
    }
    // precondition violations throw
    ham::BlockCode weak = make(3, 4, {{1, 0, 1, 0}, {0, 1, 0, 0}});
    CHECK_THROWS_AS(ham::closed_form_b(weak, 1, 1, 0), std::invalid_argument);
    CHECK_THROWS_AS(ham::closed_form_b(c, 2, 1, 0), std::invalid_argument);
}

TEST_CASE("closed forms agree with subset-lattice brute force") {
    // search random codes for minimally i-BMD instances, then check the two
    // closed forms against the lattice moments and the subcode enumeration
    int found = 0;
    for (unsigned q : {3u, 4u}) {
        for (int trial = 0; trial < 30 && found < 8; ++trial) {
            long n = 4 + trial % 3, k = 1 + trial % 3;
            ham::BlockCode c = random_block_code(q, n, k, 2500 + 19 * trial + q);
            auto min_i = ham::minimal_ibmd_index(c);
            if (!min_i || *min_i > c.k()) continue;
            ++found;
            Int qq(q);
            auto d = ham::generalized_hamming_weights(c);
            for (long j = *min_i; j <= c.k(); ++j) {
                auto B = ham::binomial_moments(c, j);
                auto A = ham::weight_distribution(c, j);
                CHECK(ham::distribution_from_moments(c.n(), B) == A);
                long dj = d[static_cast<size_t>(j)];
                for (long u = 0; u + dj <= c.n(); ++u) {
                    INFO("q=" << q << " n=" << n << " k=" << k << " j=" << j << " u=" << u);
                    CHECK(B[static_cast<size_t>(u + dj)] ==
                          Rat(binom(c.n(), u + dj)) * ham::closed_form_b(c, *min_i, j, u));
                }
                for (long w = 0; w <= c.n(); ++w)
                    CHECK(A[static_cast<size_t>(w)] == ham::closed_form_A(c, *min_i, j, w));
            }
        }
    }
    CHECK(found >= 3);
}

TEST_CASE("iBMD iff iMDS as a certified property") {
    // the printed examples first
    ham::BlockCode mds = make(3, 4, {{1, 0, 1, 1}, {0, 1, 1, 2}});
    CHECK(ham::ibmd_iff_imds_check(mds, 1));
    ham::BlockCode weak = make(3, 4, {{1, 0, 1, 0}, {0, 1, 0, 0}});
    CHECK(ham::ibmd_iff_imds_check(weak, 1));
    CHECK(ham::generalized_hamming_weights(weak)[1] == 1);  // both sides false at i = 1
    CHECK_FALSE(ham::is_ibmd(weak, 1));
    // a d = 2 non-MDS variant: both sides still false
    ham::BlockCode weak2 = make(3, 4, {{1, 0, 1, 0}, {0, 1, 0, 1}});
    CHECK(ham::generalized_hamming_weights(weak2)[1] == 2);
    CHECK_FALSE(ham::is_ibmd(weak2, 1));
    CHECK(ham::ibmd_iff_imds_check(weak2, 1));

    int cases = 0;
    for (unsigned q : {3u, 4u}) {
        for (int trial = 0; trial < 100; ++trial) {
            long n = 4 + trial % 5, k = 1 + trial % 5;
            if (k > n) k = n;
            ham::BlockCode c = random_block_code(q, n, k, 7100 + trial * 3 + q);
            for (long i = 1; i <= c.k(); ++i) {
                INFO("q=" << q << " n=" << n << " k=" << k << " i=" << i);
                CHECK(ham::ibmd_iff_imds_check(c, i));
            }
            ++cases;
        }
    }
    CHECK(cases == 200);
}

TEST_CASE("regime flag") {
    CHECK_FALSE(ham::anticode_characterization_applies(2));
    CHECK(ham::anticode_characterization_applies(3));
    CHECK(ham::anticode_characterization_applies(4));
}
