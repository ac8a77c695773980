#include <catch_amalgamated.hpp>

#include <random>

#include "rdq/symmetry.hpp"

using namespace rdq;

namespace {

AlgebraElement random_element(std::mt19937_64& rng, int box = 3, int terms = 4) {
    std::uniform_int_distribution<std::int64_t> w(-box, box);
    std::uniform_real_distribution<double> c(-1.0, 1.0);
    AlgebraElement a(2);
    for (int t = 0; t < terms; ++t) a.add(Weight({w(rng), w(rng)}), {c(rng), c(rng)});
    return a;
}

CyclicAction swap_action() { return {2, IntMatrix{{0, 1}, {1, 0}}}; }

}  // namespace

TEST_CASE("builtin generators") {
    CHECK(builtin_generator(4).generator() == IntMatrix{{0, -1}, {1, 0}});
    CHECK(builtin_generator(6).generator() == IntMatrix{{0, -1}, {1, 1}});
    CHECK_THROWS_AS(builtin_generator(5), UnsupportedOrderError);
    CHECK_THROWS_AS(CyclicAction(3, IntMatrix{{0, -1}, {1, 0}}), ParameterError);
    CHECK_THROWS_AS(CyclicAction(2, IntMatrix{{2, 0}, {0, 1}}), ParameterError);
}

TEST_CASE("compatibility with the standard form") {
    const auto f = DeformationForm::standard(0.3);
    for (int i : {2, 3, 4, 6}) CHECK(check_compatibility(builtin_generator(i), f).pass());
    const auto r = check_compatibility(swap_action(), f);
    CHECK_FALSE(r.pass());
    CHECK_FALSE(r.det_ok);
    CHECK_FALSE(r.symplectic_ok);
    CHECK(r.order_ok);
    CHECK_FALSE(r.witnesses.empty());
}

TEST_CASE("weight action") {
    const auto s4 = builtin_generator(4);
    CHECK(weight_action(s4, s4.element(1), Weight({1, 0})) == Weight({0, 1}));
    const auto s2 = builtin_generator(2);
    CHECK(weight_action(s2, s2.element(1), Weight({3, -5})) == Weight({-3, 5}));
    for (int i : {2, 3, 4, 6}) {
        const auto a = builtin_generator(i);
        CHECK(weight_action(a, a.element(0), Weight({2, 7})) == Weight({2, 7}));
    }
}

TEST_CASE("algebra action") {
    const auto s2 = builtin_generator(2);
    AlgebraElement a(2);
    a.add(Weight({1, 0}), 1.0);
    a.add(Weight({0, 1}), 2.0);
    AlgebraElement expected(2);
    expected.add(Weight({-1, 0}), 1.0);
    expected.add(Weight({0, -1}), 2.0);
    CHECK(act(s2, s2.element(1), a) == expected);
    CHECK(act(s2, s2.element(1), AlgebraElement::unit(2)) == AlgebraElement::unit(2));

    const auto s4 = builtin_generator(4);
    std::mt19937_64 rng(3);
    for (int t = 0; t < 20; ++t) {
        const auto x = random_element(rng);
        auto y = x;
        for (int k = 0; k < 4; ++k) y = act(s4, s4.element(1), y);
        CHECK(y == x);
    }
}

TEST_CASE("equivariance of the deformed product") {
    const auto f = DeformationForm::standard(0.23);
    const auto s4 = builtin_generator(4);
    const auto e10 = AlgebraElement::basis(Weight({1, 0})), e01 = AlgebraElement::basis(Weight({0, 1}));
    const auto r = equivariance_residual(s4, s4.element(1), e10, e01, f);
    CHECK(r.residual == 0.0);
    CHECK(r.mismatches.empty());

    std::mt19937_64 rng(9);
    for (int i : {2, 3, 4, 6}) {
        const auto a = builtin_generator(i);
        for (int k = 1; k < i; ++k)
            for (int t = 0; t < 10; ++t) {
                const auto x = random_element(rng), y = random_element(rng);
                const auto res = equivariance_residual(a, a.element(k), x, y, f);
                CHECK(res.residual == 0.0);
                CHECK(equivariance_residual(a, a.element(k), x, AlgebraElement::unit(2), f).residual == 0.0);
            }
    }
}

TEST_CASE("det -1 matrix breaks equivariance") {
    const auto f = DeformationForm::standard(0.23);
    const auto sw = swap_action();
    const auto e10 = AlgebraElement::basis(Weight({1, 0})), e01 = AlgebraElement::basis(Weight({0, 1}));
    CHECK_THROWS_AS(equivariance_residual(sw, sw.element(1), e10, e01, f), PreconditionError);
    const auto r = equivariance_residual(sw, sw.element(1), e10, e01, f, true);
    REQUIRE(r.mismatches.size() == 1);
    CHECK(r.mismatches[0].after.value == -r.mismatches[0].before.value);
    CHECK(r.residual > 0.1);
}

TEST_CASE("torus fixed points") {
    using R = Rational;
    const auto s2 = builtin_generator(2);
    const std::vector<TorusPoint> half{{R(0), R(0)}, {R(0), R(1, 2)}, {R(1, 2), R(0)}, {R(1, 2), R(1, 2)}};
    CHECK(torus_fixed_points(s2, s2.element(1)) == half);
    const auto s4 = builtin_generator(4);
    CHECK(torus_fixed_points(s4, s4.element(1)) == std::vector<TorusPoint>{{R(0), R(0)}, {R(1, 2), R(1, 2)}});
    const auto s6 = builtin_generator(6);
    CHECK(torus_fixed_points(s6, s6.element(1)) == std::vector<TorusPoint>{{R(0), R(0)}});
    CHECK_THROWS_AS(torus_fixed_points(s6, s6.element(0)), InfiniteFixedSetError);

    // every point is fixed and the count is |det(rho^k - I)|
    for (int i : {2, 3, 4, 6})
        for (int k = 1; k < i; ++k) {
            const auto a = builtin_generator(i);
            const IntMatrix m = a.matrix(a.element(k));
            const auto pts = torus_fixed_points(a, a.element(k));
            CHECK(static_cast<std::int64_t>(pts.size()) == std::abs(determinant(m - IntMatrix::identity(2))));
            for (const auto& x : pts)
                for (std::size_t r = 0; r < 2; ++r) {
                    const R y = R(m(r, 0)) * x[0] + R(m(r, 1)) * x[1] - x[r];
                    CHECK(y.denominator() == 1);
                }
        }
}
