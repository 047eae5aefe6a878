#include <catch2/catch_amalgamated.hpp>

#include "testutil.hpp"

using namespace rankzeta;
using rztest::fixture;
using rztest::random_code;

static MomentTable moment_table(const RankMetricCode& c, long top) {
    MomentTable t;
    for (long j = 0; j <= top; ++j) t.push_back(binomial_moments(c, j));
    return t;
}

TEST_CASE("printed MacWilliams instance") {
    RankMetricCode c1 = fixture("c1.json");
    MomentTable bdual = moment_table(c1.dual(), 2);
    CHECK(bdual[0][1] == Rat(7));
    CHECK(bdual[1][1] == Rat(1));
    CHECK(bdual[2][1] == Rat(0));
    CHECK(moment_of_dual_to_primal_at(bdual, c1.params(), 2, 2) == Rat(13));
}

TEST_CASE("MacWilliams identity on all fixtures and their duals") {
    for (const char* name : {"c1.json", "c2.json", "c3.json", "c4.json", "c5.json", "c6.json",
                             "c7.json", "zero_3x4.json", "full_3x4.json"}) {
        RankMetricCode c = fixture(name);
        RankMetricCode d = c.dual();
        MomentTable bd = moment_table(d, c.k());
        MomentTable bc = moment_table(c, d.k());
        for (long i = 0; i <= c.k(); ++i)
            CHECK(moments_of_dual_to_primal(bd, c.params(), i) == binomial_moments(c, i));
        for (long i = 0; i <= d.k(); ++i)
            CHECK(moments_of_dual_to_primal(bc, d.params(), i) == binomial_moments(d, i));
    }
}

TEST_CASE("i = 0 reduces to the subspace count symmetry") {
    RankMetricCode c4 = fixture("c4.json");
    MomentTable bdual = moment_table(c4.dual(), 0);
    auto B0 = moments_of_dual_to_primal(bdual, c4.params(), 0);
    for (long u = 0; u <= 3; ++u) {
        CHECK(B0[static_cast<size_t>(u)] == qbin(3, u, 2));
        CHECK(B0[static_cast<size_t>(u)] == bdual[0][static_cast<size_t>(3 - u)]);
    }
}

TEST_CASE("triangular solve inverts the forward transform") {
    for (const char* name : {"c1.json", "c5.json", "c6.json"}) {
        RankMetricCode c = fixture(name);
        RankMetricCode d = c.dual();
        long top = std::min<long>(c.k(), 4);
        MomentTable bc = moment_table(c, top);
        MomentTable solved = primal_to_dual_moments(bc, c.params(), top);
        for (long j = 0; j <= top; ++j) {
            INFO(name << " j=" << j);
            CHECK(solved[static_cast<size_t>(j)] == binomial_moments(d, j));
        }
        // involution: feeding the solved dual table forward returns the input
        for (long i = 0; i <= top; ++i)
            CHECK(moments_of_dual_to_primal(solved, c.params(), i) == bc[static_cast<size_t>(i)]);
    }
}

TEST_CASE("zero/full pair bookkeeping") {
    RankMetricCode zero = fixture("zero_3x4.json");
    RankMetricCode full = fixture("full_3x4.json");
    MomentTable bfull = moment_table(full, 0);
    auto B = moments_of_dual_to_primal(bfull, zero.params(), 0);
    for (long u = 0; u <= 3; ++u) CHECK(B[static_cast<size_t>(u)] == qbin(3, u, 2));
    MomentTable bzero = moment_table(zero, 0);
    auto Bf = moments_of_dual_to_primal(bzero, full.params(), 0);
    for (long u = 0; u <= 3; ++u) CHECK(Bf[static_cast<size_t>(u)] == qbin(3, u, 2));
}

TEST_CASE("dual normalized moments on the valid range") {
    RankMetricCode c1 = fixture("c1.json");
    RankMetricCode d = c1.dual();
    auto dw = generalized_weights(d);
    MomentTable b_dual;
    for (long j = 0; j <= 2; ++j) b_dual.push_back(invariant_profile(d, j).b);
    InvariantProfile p2 = invariant_profile(c1, 2);
    // n - d_2 - d = 3 - 2 - 1 = 0: only u = 0 is in range, value 13/7
    CHECK(dual_normalized_moment(b_dual, dw, c1.params(), 2, p2.d_i, 1, 0) == make_rat(13, 7));
    CHECK_THROWS_AS(dual_normalized_moment(b_dual, dw, c1.params(), 2, p2.d_i, 1, 1),
                    std::out_of_range);
    CHECK_THROWS_AS(dual_normalized_moment(b_dual, dw, c1.params(), 2, p2.d_i, 1, -1),
                    std::out_of_range);
}

TEST_CASE("dual normalized moments across fixtures") {
    for (const char* name : {"c1.json", "c3.json", "c6.json"}) {
        RankMetricCode c = fixture(name);
        RankMetricCode dcode = c.dual();
        auto dw = generalized_weights(dcode);
        long d = min_distance(c);
        for (long i = 0; i <= std::min(c.k(), 3L); ++i) {
            MomentTable b_dual;
            for (long j = 0; j <= i; ++j) b_dual.push_back(invariant_profile(dcode, j).b);
            InvariantProfile p = invariant_profile(c, i);
            for (long u = 0; u <= c.n() - p.d_i - d; ++u) {
                INFO(name << " i=" << i << " u=" << u);
                CHECK(dual_normalized_moment(b_dual, dw, c.params(), i, p.d_i, d, u) == p.b_at(u));
            }
        }
    }
}

TEST_CASE("dual zeta matches the direct series") {
    for (const char* name : {"c1.json", "c3.json", "c4.json", "c6.json"}) {
        RankMetricCode c = fixture(name);
        RankMetricCode dcode = c.dual();
        auto dw = generalized_weights(dcode);
        for (long i = 0; i <= std::min(c.k(), 3L); ++i) {
            MomentTable b_dual;
            for (long j = 0; j <= i; ++j) b_dual.push_back(invariant_profile(dcode, j).b);
            InvariantProfile p = invariant_profile(c, i);
            TruncatedSeries direct = zeta_series(p, 8);
            TruncatedSeries from_dual = dual_zeta(b_dual, dw, c.params(), i, p.d_i, 8);
            INFO(name << " i=" << i);
            CHECK(from_dual == direct);
        }
    }
}

TEST_CASE("dual rank distribution composition") {
    RankMetricCode c1 = fixture("c1.json");
    RankMetricCode d = c1.dual();
    MomentTable a_dual;
    for (long j = 0; j <= 2; ++j) a_dual.push_back(rank_distribution(d, j));
    auto A2 = dual_rank_distribution(a_dual, c1.params(), 2);
    CHECK(A2 == std::vector<Rat>{Rat(0), Rat(0), Rat(13), Rat(638)});
    MomentTable a0{rank_distribution(d, 0)};
    CHECK(dual_rank_distribution(a0, c1.params(), 0) ==
          std::vector<Rat>{Rat(1), Rat(0), Rat(0), Rat(0)});
    for (unsigned q : {2u, 3u})
        for (int trial = 0; trial < 5; ++trial) {
            RankMetricCode c = random_code(q, 2, 4, 3, 4242 + 3 * trial + q);
            RankMetricCode cd = c.dual();
            MomentTable ad{rank_distribution(cd, 0), rank_distribution(cd, 1)};
            CHECK(dual_rank_distribution(ad, c.params(), 1) == rank_distribution(c, 1));
        }
}

TEST_CASE("missing table rows are rejected") {
    RankMetricCode c1 = fixture("c1.json");
    MomentTable only_row0 = moment_table(c1.dual(), 0);
    CHECK_THROWS_AS(moments_of_dual_to_primal(only_row0, c1.params(), 2), std::invalid_argument);
    CHECK_THROWS_AS(dual_rank_distribution(only_row0, c1.params(), 1), std::invalid_argument);
}
