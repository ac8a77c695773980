#include <catch_amalgamated.hpp>

#include <numbers>
#include <random>

#include "rdq/crossed.hpp"

using namespace rdq;
using Catch::Matchers::WithinAbs;

namespace {

CrossedElement random_crossed(std::mt19937_64& rng, int order, int box = 2, int terms = 4) {
    std::uniform_int_distribution<std::int64_t> w(-box, box);
    std::uniform_int_distribution<int> g(0, order - 1);
    std::uniform_real_distribution<double> c(-1.0, 1.0);
    CrossedElement x(order, 2);
    for (int t = 0; t < terms; ++t) x.add({g(rng), order}, Weight({w(rng), w(rng)}), {c(rng), c(rng)});
    return x;
}

TranslationAction half_shift() { return TranslationAction::from_shift(2, {Rational(1, 2), Rational(1, 2)}); }

}  // namespace

TEST_CASE("crossed product example with sigma_2") {
    const double theta = 0.27;
    const auto f = DeformationForm::standard(theta);
    const auto s2 = builtin_generator(2);
    const GroupElement g(1, 2);
    const auto x = crossed_product(CrossedElement::basis(g, Weight({1, 0})), CrossedElement::basis(g, Weight({0, 1})),
                                   s2, f);
    REQUIRE(x.size() == 1);
    const Complex c = x.coefficient(GroupElement::identity(2), Weight({1, -1}));
    CHECK_THAT(std::abs(c - std::polar(1.0, 2 * std::numbers::pi * theta)), WithinAbs(0.0, 1e-15));
}

TEST_CASE("crossed product unit and identity embedding") {
    const auto f = DeformationForm::standard(0.31);
    const auto s3 = builtin_generator(3);
    const auto one = CrossedElement::basis(GroupElement::identity(3), Weight({0, 0}));
    std::mt19937_64 rng(1);
    for (int t = 0; t < 20; ++t) {
        const auto x = random_crossed(rng, 3);
        CHECK(crossed_product(one, x, s3, f) == x);
        CHECK(crossed_product(x, one, s3, f) == x);
    }
    const auto p = AlgebraElement::basis(Weight({2, -1})), q = AlgebraElement::basis(Weight({1, 3}));
    const auto e = GroupElement::identity(3);
    CHECK(crossed_product(CrossedElement::embed(p, e), CrossedElement::embed(q, e), s3, f) ==
          CrossedElement::embed(deformed_product(p, q, f), e));
}

TEST_CASE("crossed product is associative") {
    const auto f = DeformationForm::standard(0.19);
    std::mt19937_64 rng(2);
    for (int i : {2, 3, 4, 6}) {
        const auto a = builtin_generator(i);
        for (int t = 0; t < 10; ++t) {
            const auto x = random_crossed(rng, i), y = random_crossed(rng, i), z = random_crossed(rng, i);
            const auto lhs = crossed_product(crossed_product(x, y, a, f), z, a, f);
            const auto rhs = crossed_product(x, crossed_product(y, z, a, f), a, f);
            CHECK(l1_norm(lhs - rhs) < 1e-12);
        }
    }
    const auto tr = half_shift();
    for (int t = 0; t < 10; ++t) {
        const auto x = random_crossed(rng, 2), y = random_crossed(rng, 2), z = random_crossed(rng, 2);
        CHECK(l1_norm(crossed_product(crossed_product(x, y, tr, f), z, tr, f) -
                      crossed_product(x, crossed_product(y, z, tr, f), tr, f)) < 1e-12);
    }
}

TEST_CASE("crossed star") {
    const auto f = DeformationForm::standard(0.41);
    const auto s2 = builtin_generator(2);
    const GroupElement g(1, 2);
    CHECK(crossed_star(CrossedElement::basis(g, Weight({1, 0})), s2) == CrossedElement::basis(g, Weight({1, 0})));
    const auto one = CrossedElement::basis(GroupElement::identity(2), Weight({0, 0}));
    CHECK(crossed_star(one, s2) == one);

    std::mt19937_64 rng(4);
    for (int i : {2, 3, 4, 6}) {
        const auto a = builtin_generator(i);
        for (int t = 0; t < 10; ++t) {
            const auto x = random_crossed(rng, i), y = random_crossed(rng, i);
            CHECK(l1_norm(crossed_star(crossed_star(x, a), a) - x) < 1e-14);
            const auto lhs = crossed_star(crossed_product(x, y, a, f), a);
            const auto rhs = crossed_product(crossed_star(y, a), crossed_star(x, a), a, f);
            CHECK(l1_norm(lhs - rhs) < 1e-12);
        }
    }
    const auto tr = half_shift();
    for (int t = 0; t < 10; ++t) {
        const auto x = random_crossed(rng, 2), y = random_crossed(rng, 2);
        CHECK(l1_norm(crossed_star(crossed_product(x, y, tr, f), tr) -
                      crossed_product(crossed_star(y, tr), crossed_star(x, tr), tr, f)) < 1e-12);
    }
}

TEST_CASE("crossed trace") {
    const auto f = DeformationForm::standard(0.29);
    CHECK(crossed_trace(CrossedElement::basis(GroupElement::identity(2), Weight({0, 0}))) == Complex(1.0));
    CHECK(crossed_trace(CrossedElement::basis(GroupElement(1, 2), Weight({0, 0}))) == Complex(0.0));
    std::mt19937_64 rng(6);
    for (int i : {2, 3, 4, 6}) {
        const auto a = builtin_generator(i);
        for (int t = 0; t < 10; ++t) {
            const auto x = random_crossed(rng, i), y = random_crossed(rng, i);
            CHECK_THAT(std::abs(crossed_trace(crossed_product(x, y, a, f)) - crossed_trace(crossed_product(y, x, a, f))),
                       WithinAbs(0.0, 1e-12));
        }
    }
}

TEST_CASE("translation action validation") {
    CHECK_THROWS_AS(TranslationAction::from_shift(2, {Rational(1, 3), Rational(0)}), ParameterError);
    CHECK_THROWS_AS(TranslationAction::from_shift(2, {Rational(1), Rational(0)}), ParameterError);
    const auto t = TranslationAction::from_shift(4, {Rational(1, 4), Rational(1, 2)});
    CHECK(t.shift_numerators() == std::vector<std::int64_t>{1, 2});
    const auto img = transform(t, GroupElement(3, 4), Weight({1, 1}));
    CHECK(img.weight == Weight({1, 1}));
    CHECK(img.root == 1);  // 3 * (1 + 2) mod 4
}

TEST_CASE("commuting deformation comparison") {
    const auto tr = half_shift();
    for (double theta : {0.0, 0.1, 1.0 / 3.0}) {
        const auto r = commuting_deformation_compare(tr, 2, DeformationForm::standard(theta), 2);
        CHECK(r.max_abs_difference == 0.0);
        CHECK(r.exponent_mismatches == 0);
        CHECK(r.pairs_compared == 2500);
    }
    const TranslationAction zero(3, {0, 0});
    CHECK(commuting_deformation_compare(zero, 3, DeformationForm::standard(0.2), 1).max_abs_difference == 0.0);
    CHECK_THROWS_AS(commuting_deformation_compare(tr, 3, DeformationForm::standard(0.1), 1), DimensionError);
    CHECK_THROWS_AS(commuting_deformation_compare(tr, 2, DeformationForm::standard(0.1), 40), ResourceError);
}
