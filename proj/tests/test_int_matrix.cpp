#include <catch_amalgamated.hpp>

#include <random>

#include <boost/multiprecision/cpp_int.hpp>

#include "rdq/int_matrix.hpp"

using rdq::IntMatrix;

TEST_CASE("smith form of a small matrix") {
    const IntMatrix m{{2, 4}, {6, 8}};
    const auto snf = rdq::smith_normal_form(m);
    CHECK(snf.invariant_factors == std::vector<std::int64_t>{2, 4});
    CHECK(snf.rank == 2);
}

TEST_CASE("smith decomposition transforms reproduce the diagonal") {
    const IntMatrix m{{3, 1, 4}, {1, 5, 9}, {2, 6, 5}, {3, 5, 8}};
    const auto d = rdq::smith_decompose(m);
    CHECK(d.left * m * d.right == d.diagonal);
    CHECK(std::abs(rdq::determinant(d.left)) == 1);
    CHECK(std::abs(rdq::determinant(d.right)) == 1);
    const auto f = d.invariant_factors();
    for (std::size_t i = 1; i < f.size(); ++i) CHECK(f[i] % f[i - 1] == 0);
}

TEST_CASE("invariant factors are unchanged by unimodular transforms") {
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<int> pick(0, 3), coef(-3, 3);
    const IntMatrix base{{2, 0, 0}, {0, 6, 0}, {0, 0, 0}};
    for (int trial = 0; trial < 50; ++trial) {
        IntMatrix m = base;
        for (int step = 0; step < 12; ++step) {
            const std::size_t i = pick(rng) % 3, j = (i + 1 + pick(rng) % 2) % 3;
            if (step % 2) m.add_row(i, j, coef(rng));
            else m.add_col(i, j, coef(rng));
        }
        const auto snf = rdq::smith_normal_form(m);
        CHECK(snf.invariant_factors == std::vector<std::int64_t>{2, 6});
    }
}

TEST_CASE("smith form over arbitrary precision integers") {
    using Big = boost::multiprecision::cpp_int;
    rdq::BasicMatrix<Big> m{{Big(4), Big(0)}, {Big(0), Big(6)}};
    const auto snf = rdq::smith_normal_form(m);
    CHECK(snf.invariant_factors == std::vector<Big>{Big(2), Big(12)});
}

TEST_CASE("determinant and powers") {
    const IntMatrix s6{{0, -1}, {1, 1}};
    CHECK(rdq::determinant(s6) == 1);
    CHECK(rdq::matrix_power(s6, 6) == IntMatrix::identity(2));
    CHECK(rdq::matrix_power(s6, 3) == IntMatrix{{-1, 0}, {0, -1}});
    CHECK(rdq::determinant(IntMatrix{{1, 2, 3}, {4, 5, 6}, {7, 8, 10}}) == -3);
    CHECK(rdq::is_skew_symmetric(IntMatrix{{0, 1}, {-1, 0}}));
    CHECK_FALSE(rdq::is_skew_symmetric(IntMatrix{{0, 1}, {1, 0}}));
}
