#include <catch2/catch_amalgamated.hpp>

#include "testutil.hpp"

using namespace rankzeta;
using rztest::fixture;
using rztest::random_code;

TEST_CASE("code construction") {
    auto f2 = FieldSpec::make(2);
    RankMetricCode c1 = fixture("c1.json");
    CHECK(c1.k() == 6);
    CHECK(c1.n() == 3);
    CHECK(c1.m() == 4);
    CHECK_FALSE(c1.was_transposed());

    CHECK(RankMetricCode::zero(f2, 3, 4).k() == 0);
    CHECK(RankMetricCode::full(f2, 3, 4).k() == 12);

    // dependent generators: rejected by default, reducible on request
    FqMatrix g(f2, 3, 4);
    g.set(0, 0, 1);
    CHECK_THROWS_AS(RankMetricCode(f2, 3, 4, {g, g}), std::invalid_argument);
    RankMetricCode reduced(f2, 3, 4, {g, g}, RankMetricCode::DependentGenerators::Reduce);
    CHECK(reduced.k() == 1);

    // n > m inputs are transposed into the normalized orientation
    FqMatrix tall(f2, 4, 3);
    tall.set(0, 0, 1);
    RankMetricCode t(f2, 4, 3, {tall});
    CHECK(t.was_transposed());
    CHECK(t.n() == 3);
    CHECK(t.m() == 4);
}

TEST_CASE("duality involution and dimensions") {
    for (const char* name : {"c1.json", "c4.json", "c6.json"}) {
        RankMetricCode c = fixture(name);
        RankMetricCode d = c.dual();
        CHECK(d.k() == 12 - c.k());
        CHECK(d.dual() == c);
        // duality: every pair of codewords is trace-orthogonal
        auto cb = c.basis_matrices();
        auto db = d.basis_matrices();
        for (const auto& a : cb)
            for (const auto& b : db) CHECK(trace_pairing(a, b) == 0);
    }
    for (unsigned q : {2u, 3u}) {
        for (int trial = 0; trial < 10; ++trial) {
            RankMetricCode c = random_code(q, 2, 4, 3, 100 * q + trial);
            CHECK(c.dual().dual() == c);
        }
    }
}

TEST_CASE("min distance and max rank") {
    RankMetricCode c1 = fixture("c1.json");
    CHECK(min_distance(c1) == 1);
    RankMetricCode zero = fixture("zero_3x4.json");
    CHECK(min_distance(zero) == 4);  // n+1 convention
    CHECK(max_rank(zero) == 0);
    RankMetricCode full = fixture("full_3x4.json");
    CHECK(max_rank(full) == 3);
    CHECK(min_distance(full) == 1);
    CHECK(min_distance(c1.dual()) == 1);
}

TEST_CASE("supported subcodes by linear solving") {
    RankMetricCode c1 = fixture("c1.json");
    auto f2 = c1.field();
    CHECK(supported_subcode_col(c1, Subspace::full(f2, 3)) == c1);
    CHECK(supported_subcode_col(c1, Subspace::zero(f2, 3)).k() == 0);
    // solve path equals the brute-force codeword filter, for every U
    for (long u = 0; u <= 3; ++u)
        for (const auto& s : all_subspaces(f2, 3, u)) {
            long fast = dim_supported_col(c1, s);
            CHECK(fast == rztest::dim_supported_col_bruteforce(c1, s));
            CHECK(supported_subcode_col(c1, s).k() == fast);
        }
}

TEST_CASE("supported subcode solve equals brute force on random codes") {
    for (unsigned q : {2u, 3u}) {
        for (int trial = 0; trial < 8; ++trial) {
            RankMetricCode c = random_code(q, 3, 3, 4, 7 * q + trial);
            for (long u = 0; u <= 3; ++u)
                for (const auto& s : all_subspaces(c.field(), 3, u))
                    CHECK(dim_supported_col(c, s) == rztest::dim_supported_col_bruteforce(c, s));
        }
    }
}

TEST_CASE("code supports") {
    auto f2 = FieldSpec::make(2);
    RankMetricCode zero = RankMetricCode::zero(f2, 3, 4);
    auto [zc, zr] = code_supports(zero);
    CHECK(zc.dim() == 0);
    CHECK(zr.dim() == 0);

    FqMatrix e11(f2, 3, 4);
    e11.set(0, 0, 1);
    auto [sc, sr] = code_supports(RankMetricCode(f2, 3, 4, {e11}));
    CHECK(sc.dim() == 1);
    CHECK(sr.dim() == 1);
    CHECK(sc.basis().at(0, 0) == 1);

    // generator-based supports equal the full codeword sweep
    for (unsigned q : {2u, 3u}) {
        for (int trial = 0; trial < 6; ++trial) {
            RankMetricCode c = random_code(q, 3, 4, 4, 40 * q + trial);
            auto fast = code_supports(c);
            auto slow = rztest::supports_by_codeword_sweep(c);
            CHECK(fast.first == slow.first);
            CHECK(fast.second == slow.second);
        }
    }
}

TEST_CASE("optimal anticode descriptors") {
    auto f2 = FieldSpec::make(2);
    CHECK(optimal_anticodes(f2, 3, 4, 1).size() == 7);
    CHECK(optimal_anticodes(f2, 3, 3, 0).size() == 1);
    CHECK(optimal_anticodes(f2, 3, 3, 3).size() == 1);
    auto both = optimal_anticodes(f2, 3, 3, 1);
    CHECK(both.size() == 14);
    // column and row descriptors are pairwise distinct objects
    long cols = 0, rows = 0;
    for (const auto& a : both) (a.type == AnticodeDescriptor::Type::Column ? cols : rows)++;
    CHECK(cols == 7);
    CHECK(rows == 7);
}

TEST_CASE("generalized weights of the fixtures") {
    CHECK(generalized_weights(fixture("c1.json")) == std::vector<long>{0, 1, 2, 2, 3, 3, 3});
    CHECK(generalized_weights(fixture("c1.json").dual()) == std::vector<long>{0, 1, 2, 2, 3, 3, 3});
    CHECK(generalized_weights(fixture("c4.json")) == std::vector<long>{0, 2, 2, 2, 3, 3, 3});
    CHECK(generalized_weights(fixture("c4.json").dual()) == std::vector<long>{0, 1, 2, 3, 3, 3, 3});
    CHECK(generalized_weights(fixture("c6.json")) == std::vector<long>{0, 2, 2, 3, 3, 3});
    // full space: d_i = ceil(i/m)
    auto dfull = generalized_weights(fixture("full_3x4.json"));
    for (long i = 1; i <= 12; ++i) CHECK(dfull[static_cast<size_t>(i)] == ceil_div(i, 4));
    CHECK(generalized_weights(fixture("zero_3x4.json")) == std::vector<long>{0});
}

TEST_CASE("weight tuple invariants on random codes") {
    for (unsigned q : {2u, 3u}) {
        for (int trial = 0; trial < 15; ++trial) {
            long n = 2 + trial % 2, m = 3;
            long k = 1 + static_cast<long>((trial * 7 + q) % (n * m - 1));
            RankMetricCode c = random_code(q, n, m, k, 1000 + 17 * trial + q);
            auto d = generalized_weights(c);
            INFO("q=" << q << " n=" << n << " m=" << m << " k=" << k);
            CHECK(weight_tuple_valid(d, c.n(), c.m()));
            CHECK(d[1] == min_distance(c));
        }
    }
}

TEST_CASE("intersection dimensions follow the cardinality identity") {
    // dim C(U) = dim Cdual(U-perp) + k - m(n-u), both anticode types
    for (const char* name : {"c1.json", "c2.json", "c6.json"}) {
        RankMetricCode c = fixture(name);
        RankMetricCode d = c.dual();
        for (long u = 0; u <= c.n(); ++u)
            for (const auto& s : all_subspaces(c.field(), c.n(), u)) {
                long lhs = dim_supported_col(c, s);
                long rhs = dim_supported_col(d, s.complement()) + c.k() - c.m() * (c.n() - u);
                CHECK(lhs == rhs);
            }
    }
}

TEST_CASE("intersection dimension regimes at the extremes") {
    for (const char* name : {"c1.json", "c3.json", "c5.json", "c7.json"}) {
        RankMetricCode c = fixture(name);
        long d = min_distance(c);
        long dd = min_distance(c.dual());
        for (long u = 0; u <= c.n(); ++u)
            for (const auto& s : all_subspaces(c.field(), c.n(), u)) {
                long dim = dim_supported_col(c, s);
                if (u < d) CHECK(dim == 0);
                if (u > c.n() - dd) CHECK(dim == c.k() - c.m() * (c.n() - u));
            }
    }
}

TEST_CASE("codeword enumeration budget") {
    RankMetricCode c1 = fixture("c1.json");
    CHECK_THROWS_AS(min_distance(c1, 8), budget_exceeded);
}
