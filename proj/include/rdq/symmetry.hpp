#pragma once

// Finite cyclic actions on the weight algebra through integer matrices.
//
// The generator rho acts on torus points by x -> rho x. On functions
// (beta_g f)(x) = f(rho_g^{-1} x), so a character e_p goes to e_{(rho_g^{-1})^T p}.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include <boost/rational.hpp>

#include "rdq/errors.hpp"
#include "rdq/int_matrix.hpp"
#include "rdq/weight_algebra.hpp"

namespace rdq {

/// sigma^exponent inside a cyclic group; always reduced to [0, order).
class GroupElement {
public:
    GroupElement() = default;
    GroupElement(std::int64_t exponent, int order) : order_(order) {
        if (order <= 0) throw ParameterError("group order must be positive");
        exponent_ = static_cast<int>(((exponent % order) + order) % order);
    }

    static GroupElement identity(int order) { return {0, order}; }

    int exponent() const noexcept { return exponent_; }
    int order() const noexcept { return order_; }
    bool is_identity() const noexcept { return exponent_ == 0; }

    GroupElement operator*(const GroupElement& o) const {
        if (o.order_ != order_) throw DimensionError("group elements of different cyclic groups");
        return {exponent_ + o.exponent_, order_};
    }
    GroupElement inverse() const { return {-exponent_, order_}; }

    auto operator<=>(const GroupElement&) const = default;

private:
    int exponent_ = 0;
    int order_ = 1;
};

/// Cyclic group of the given order generated by an integer matrix with generator^order = I.
class CyclicAction {
public:
    CyclicAction(int order, IntMatrix generator) : order_(order), generator_(std::move(generator)) {
        if (order_ <= 0) throw ParameterError("group order must be positive");
        if (!generator_.is_square() || generator_.rows() == 0) throw DimensionError("generator must be square");
        const auto det = determinant(generator_);
        if (det != 1 && det != -1) throw ParameterError("generator must be invertible over the integers");
        if (!(matrix_power(generator_, static_cast<unsigned>(order_)) == IntMatrix::identity(rank())))
            throw ParameterError("generator^order is not the identity");
        powers_.reserve(static_cast<std::size_t>(order_));
        for (int k = 0; k < order_; ++k) powers_.push_back(matrix_power(generator_, static_cast<unsigned>(k)));
    }

    int order() const noexcept { return order_; }
    std::size_t rank() const noexcept { return generator_.rows(); }
    const IntMatrix& generator() const noexcept { return generator_; }

    GroupElement element(std::int64_t k) const { return {k, order_}; }

    /// rho(g) = generator^k
    const IntMatrix& matrix(const GroupElement& g) const {
        check(g);
        return powers_[static_cast<std::size_t>(g.exponent())];
    }

    void check(const GroupElement& g) const {
        if (g.order() != order_) throw DimensionError("group element from a group of different order");
    }

private:
    int order_;
    IntMatrix generator_;
    std::vector<IntMatrix> powers_;
};

/// The generators sigma_2, sigma_3, sigma_4, sigma_6 of the finite cyclic subgroups of SL_2(Z).
inline CyclicAction builtin_generator(int order) {
    switch (order) {
        case 2: return {2, IntMatrix{{-1, 0}, {0, -1}}};
        case 3: return {3, IntMatrix{{-1, -1}, {1, 0}}};
        case 4: return {4, IntMatrix{{0, -1}, {1, 0}}};
        case 6: return {6, IntMatrix{{0, -1}, {1, 1}}};
        default: throw UnsupportedOrderError("no builtin generator of order " + std::to_string(order));
    }
}

struct MatrixWitness {
    std::size_t row;
    std::size_t col;
    std::int64_t expected;
    std::int64_t actual;
};

struct CompatibilityReport {
    bool symplectic_ok = false;  // rho^T J0 rho == J0
    bool det_ok = false;         // det rho == +1
    bool order_ok = false;       // rho^order == I
    std::vector<MatrixWitness> witnesses;

    bool pass() const noexcept { return symplectic_ok && det_ok && order_ok; }
};

inline CompatibilityReport check_compatibility(const CyclicAction& action, const DeformationForm& form) {
    if (action.rank() != form.rank()) throw DimensionError("action and deformation form have different rank");
    const IntMatrix& rho = action.generator();
    const IntMatrix& j0 = form.skeleton();
    CompatibilityReport r;
    const IntMatrix pulled = rho.transpose() * j0 * rho;
    r.symplectic_ok = true;
    for (std::size_t i = 0; i < j0.rows(); ++i)
        for (std::size_t j = 0; j < j0.cols(); ++j)
            if (pulled(i, j) != j0(i, j)) {
                r.symplectic_ok = false;
                r.witnesses.push_back({i, j, j0(i, j), pulled(i, j)});
            }
    r.det_ok = determinant(rho) == 1;
    r.order_ok = matrix_power(rho, static_cast<unsigned>(action.order())) == IntMatrix::identity(rho.rows());
    return r;
}

/// (rho(g)^{-1})^T p. The inverse is rho(g^{-1}) since the group is finite.
inline Weight weight_action(const CyclicAction& action, const GroupElement& g, const Weight& p) {
    if (p.size() != action.rank()) throw DimensionError("weight rank does not match the action");
    const IntMatrix& inv = action.matrix(g.inverse());
    std::vector<std::int64_t> out(p.size(), 0);
    for (std::size_t i = 0; i < p.size(); ++i)
        for (std::size_t j = 0; j < p.size(); ++j) out[i] += inv(j, i) * p[j];
    return Weight(std::move(out));
}

inline AlgebraElement act(const CyclicAction& action, const GroupElement& g, const AlgebraElement& a) {
    if (a.rank() != action.rank()) throw DimensionError("element rank does not match the action");
    AlgebraElement out(a.rank());
    for (const auto& [p, c] : a.terms()) out.add(weight_action(action, g, p), c);
    return out;
}

struct ExponentMismatch {
    Weight p;
    Weight q;
    PhaseExponent before;  // m(p, q)
    PhaseExponent after;   // m(g.p, g.q)
};

struct EquivarianceResult {
    double residual = 0.0;  // l1 norm of beta_g(a x b) - beta_g(a) x beta_g(b)
    std::vector<ExponentMismatch> mismatches;
};

inline EquivarianceResult equivariance_residual(const CyclicAction& action, const GroupElement& g,
                                                const AlgebraElement& a, const AlgebraElement& b,
                                                const DeformationForm& form, bool allow_incompatible = false) {
    if (!allow_incompatible && !check_compatibility(action, form).pass())
        throw PreconditionError("action is not compatible with the deformation form");
    EquivarianceResult r;
    const AlgebraElement lhs = act(action, g, deformed_product(a, b, form));
    const AlgebraElement rhs = deformed_product(act(action, g, a), act(action, g, b), form);
    r.residual = l1_norm(lhs - rhs);
    for (const auto& [p, cp] : a.terms())
        for (const auto& [q, cq] : b.terms()) {
            const PhaseExponent before = phase_exponent(p, q, form);
            const PhaseExponent after =
                phase_exponent(weight_action(action, g, p), weight_action(action, g, q), form);
            if (before != after) r.mismatches.push_back({p, q, before, after});
        }
    return r;
}

using Rational = boost::rational<std::int64_t>;
using TorusPoint = std::vector<Rational>;

/// Solutions of (rho(g) - I) x in Z^n with x in [0,1)^n, via the Smith form of rho(g) - I.
inline std::vector<TorusPoint> torus_fixed_points(const CyclicAction& action, const GroupElement& g) {
    const std::size_t n = action.rank();
    const IntMatrix a = action.matrix(g) - IntMatrix::identity(n);
    if (determinant(a) == 0)
        throw InfiniteFixedSetError("rho(g) - I is singular; the fixed set is not finite");

    // left * a * right = diag(d); a x = z  <=>  x = right * diag(d)^{-1} * w, w integral
    const auto snf = smith_decompose(a);
    std::vector<std::int64_t> d(n);
    for (std::size_t i = 0; i < n; ++i) d[i] = snf.diagonal(i, i);

    auto reduce = [](Rational r) {
        const std::int64_t num = r.numerator(), den = r.denominator();
        return Rational(((num % den) + den) % den, den);
    };

    std::vector<TorusPoint> points;
    std::vector<std::int64_t> w(n, 0);
    for (;;) {
        TorusPoint x(n, Rational(0));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) x[i] += Rational(snf.right(i, j)) * Rational(w[j], d[j]);
        for (auto& xi : x) xi = reduce(xi);
        points.push_back(std::move(x));

        std::size_t k = 0;
        while (k < n && ++w[k] == d[k]) w[k++] = 0;
        if (k == n) break;
    }
    std::sort(points.begin(), points.end());
    points.erase(std::unique(points.begin(), points.end()), points.end());
    return points;
}

}  // namespace rdq
