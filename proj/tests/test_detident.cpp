#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "common.hpp"
#include "imf/detident.hpp"

using namespace imf;
using namespace imf::testing;

TEST_CASE("det_rank1_update") {
    Vec e1{Rat(1), Rat(0)};
    CHECK(det_rank1_update(Matrix::identity(2), e1, e1) == 2);

    // rank <= n-2 means adj = 0, so the update never changes the (zero) det.
    Matrix low = Matrix::zero(3);
    low(0, 0) = 1;
    Vec u{Rat(1), Rat(2), Rat(3)}, v{Rat(-1), Rat(0), Rat(5)};
    CHECK(det_rank1_update(low, u, v) == det(low + Matrix::outer(u, v)));
    CHECK(det(low + Matrix::outer(u, v)) == 0);

    // W = W0 + wt(W) * 1 1^T recovers det(W_S) from the weightless part.
    CHECK(det_rank1_update(w_zero(), vscale(frac(119, 16), all_ones(4)), all_ones(4)) ==
          frac(357, 8));

    CHECK_THROWS_AS(det_rank1_update(Matrix::identity(2), u, v), DimensionError);
}

TEST_CASE("rank-1 update identity on random matrices") {
    std::mt19937 rng(61);
    std::uniform_int_distribution<int> d(-5, 5);
    for (int t = 0; t < 30; ++t) {
        std::size_t n = 1 + t % 5;
        Matrix m = random_rational_matrix(rng, n);
        Vec u(n), v(n);
        for (std::size_t i = 0; i < n; ++i) {
            u[i] = d(rng);
            v[i] = frac(d(rng), 3);
        }
        CHECK(det_rank1_update(m, u, v) == det(m + Matrix::outer(u, v)));
    }
}

TEST_CASE("det_via_weight") {
    CHECK(det_via_weight(w_s()) == frac(357, 8));
    CHECK(det_via_weight(Matrix::ones(3)) == 0);
    for (long n = 2; n <= 4; ++n) {
        Matrix m = Rat(n) * Matrix::identity(n);
        CHECK(det_via_weight(m) == det(m));
    }
    CHECK_THROWS(det_via_weight(z_factor()));  // not constant-sum
}

TEST_CASE("det_via_weight matches det on random constant-sum matrices") {
    std::mt19937 rng(67);
    for (int t = 0; t < 25; ++t) {
        std::size_t n = 2 + t % 4;
        auto p = decompose(random_int_matrix(rng, n, -5, 5));
        Matrix s = s_part(p);
        CHECK(det_via_weight(s) == det(s));
    }
}

TEST_CASE("det_via_decomposition") {
    CHECK(det_via_decomposition(wilson()) == 1);
    for (std::size_t n = 1; n <= 5; ++n)
        CHECK(det_via_decomposition(Matrix::identity(n)) == 1);

    std::mt19937 rng(71);
    for (int t = 0; t < 50; ++t) {
        std::size_t n = 3 + t % 3;
        Matrix m = random_rational_matrix(rng, n);
        CHECK(det_via_decomposition(m) == det(m));
    }
}

TEST_CASE("adj_weightless_s") {
    CHECK(adj_weightless_s(w_zero()) == frac(3, 8));
    CHECK(adj_weightless_s(Matrix::zero(3)) == 0);
    CHECK_THROWS(adj_weightless_s(Matrix::identity(3)));  // weight 1/3, not 0
    CHECK_THROWS(adj_weightless_s(wilson()));

    std::mt19937 rng(73);
    for (int t = 0; t < 25; ++t) {
        std::size_t n = 2 + t % 4;
        Matrix m0 = decompose(random_int_matrix(rng, n, -5, 5)).m0;
        Rat w = adj_weightless_s(m0);
        CHECK(adjugate(m0) == w * Matrix::ones(n));
    }
}

TEST_CASE("adjugate characterisation verdicts") {
    auto v = adjugate_characterises_s(w_zero());
    CHECK(v.constant_adjugate);
    CHECK(v.w == frac(3, 8));
    CHECK(v.weightless_s);
    CHECK(v.rank == 3);
    CHECK(!v.counterexample);

    auto vi = adjugate_characterises_s(Matrix::identity(3));
    CHECK(!vi.constant_adjugate);
    CHECK(!vi.counterexample);

    // Weightless S of rank <= n-2 has adjugate 0 (the w = 0 branch).
    Vec a{Rat(1), Rat(-1), Rat(0), Rat(0)};
    Matrix low = Matrix::outer(a, a);  // rank 1, zero row/col sums
    auto vl = adjugate_characterises_s(low);
    CHECK(vl.constant_adjugate);
    CHECK(vl.w == 0);
    CHECK(vl.rank <= 2);
    CHECK(!vl.counterexample);
}

TEST_CASE("nonzero-constant adjugate forces weightless S of rank n-1") {
    std::mt19937 rng(79);
    int seen = 0;
    while (seen < 50) {
        std::size_t n = 2 + seen % 4;
        Matrix m0 = decompose(random_int_matrix(rng, n, -5, 5)).m0;
        if (rank(m0) != n - 1) continue;
        auto v = adjugate_characterises_s(m0);
        CHECK(v.constant_adjugate);
        CHECK(v.w != 0);
        CHECK(v.weightless_s);
        CHECK(v.rank == n - 1);
        CHECK(!v.counterexample);
        ++seen;
    }
}
