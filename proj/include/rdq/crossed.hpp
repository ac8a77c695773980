#pragma once

// Crossed products A_J x| G for cyclic G, graded by (group element, weight).
//
// Basis elements e_p u_g multiply as
//     (e_p u_g)(e_q u_h) = (e_p x_J beta_g(e_q)) u_{gh}
// and the involution is (a u_g)* = beta_{g^-1}(a*) u_{g^-1}.

#include <cmath>
#include <complex>
#include <concepts>
#include <cstddef>
#include <cstdint>
#include <map>
#include <numbers>
#include <utility>
#include <vector>

#include "rdq/errors.hpp"
#include "rdq/symmetry.hpp"
#include "rdq/weight_algebra.hpp"

namespace rdq {

/// beta_g(e_p) = exp(2 pi i root / order) e_weight
struct ActionImage {
    Weight weight;
    std::int64_t root = 0;
};

/// Translation of T^n by t = shift / order, acting on e_p by exp(2 pi i p.t).
class TranslationAction {
public:
    TranslationAction(int order, std::vector<std::int64_t> shift_numerators)
        : order_(order), shift_(std::move(shift_numerators)) {
        if (order_ <= 0) throw ParameterError("group order must be positive");
        if (shift_.empty()) throw DimensionError("translation needs a non-empty shift");
        for (auto s : shift_)
            if (s < 0 || s >= order_) throw ParameterError("shift numerators must lie in [0, order)");
    }

    /// Accepts t in [0,1)^n with order * t integral.
    static TranslationAction from_shift(int order, const std::vector<Rational>& shift) {
        std::vector<std::int64_t> num;
        for (const auto& t : shift) {
            if (t < 0 || t >= 1) throw ParameterError("shift components must lie in [0,1)");
            const Rational scaled = t * Rational(order);
            if (scaled.denominator() != 1) throw ParameterError("order * shift must be integral");
            num.push_back(scaled.numerator());
        }
        return {order, std::move(num)};
    }

    int order() const noexcept { return order_; }
    std::size_t rank() const noexcept { return shift_.size(); }
    const std::vector<std::int64_t>& shift_numerators() const noexcept { return shift_; }
    std::vector<Rational> shift() const {
        std::vector<Rational> t;
        for (auto s : shift_) t.emplace_back(s, order_);
        return t;
    }

private:
    int order_;
    std::vector<std::int64_t> shift_;
};

inline ActionImage transform(const CyclicAction& action, const GroupElement& g, const Weight& p) {
    return {weight_action(action, g, p), 0};
}

inline ActionImage transform(const TranslationAction& action, const GroupElement& g, const Weight& p) {
    if (p.size() != action.rank()) throw DimensionError("weight rank does not match the translation");
    std::int64_t dot = 0;
    for (std::size_t i = 0; i < p.size(); ++i) dot += p[i] * action.shift_numerators()[i];
    const std::int64_t n = action.order();
    const std::int64_t root = ((static_cast<std::int64_t>(g.exponent()) * dot) % n + n) % n;
    return {p, root};
}

template <class A>
concept CrossedAction = requires(const A& a, const GroupElement& g, const Weight& p) {
    { a.order() } -> std::convertible_to<int>;
    { a.rank() } -> std::convertible_to<std::size_t>;
    { transform(a, g, p) } -> std::same_as<ActionImage>;
};

/// exp(2 pi i root / order)
inline Complex root_of_unity(std::int64_t root, int order) {
    if (root % order == 0) return {1.0, 0.0};
    return std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(root) / order);
}

/// A basis element with its exact scalar: exp(2 pi i root/order) exp(-2 pi i theta m) e_weight u_group.
struct CrossedMonomial {
    GroupElement group;
    Weight weight;
    PhaseExponent theta_exponent;
    std::int64_t root = 0;

    Complex scalar(double theta) const {
        return root_of_unity(root, group.order()) * phase_factor(theta_exponent, theta);
    }
    bool operator==(const CrossedMonomial&) const = default;
};

template <CrossedAction A>
CrossedMonomial multiply(const CrossedMonomial& x, const CrossedMonomial& y, const A& action,
                         const DeformationForm& form) {
    const ActionImage moved = transform(action, x.group, y.weight);
    const std::int64_t n = action.order();
    CrossedMonomial out;
    out.group = x.group * y.group;
    out.weight = x.weight + moved.weight;
    out.theta_exponent = {x.theta_exponent.value + y.theta_exponent.value +
                          phase_exponent(x.weight, moved.weight, form).value};
    out.root = ((x.root + y.root + moved.root) % n + n) % n;
    return out;
}

struct CrossedKey {
    int group;
    Weight weight;
    auto operator<=>(const CrossedKey&) const = default;
    bool operator==(const CrossedKey&) const = default;
};

/// Finite combination of e_p u_g, canonical form.
class CrossedElement {
public:
    using Terms = std::map<CrossedKey, Complex>;

    CrossedElement(int order, std::size_t rank) : order_(order), rank_(rank) {
        if (order <= 0) throw ParameterError("group order must be positive");
    }

    static CrossedElement basis(const GroupElement& g, const Weight& p, Complex c = 1.0) {
        CrossedElement x(g.order(), p.size());
        x.add(g, p, c);
        return x;
    }
    /// a u_g for an element a of the weight algebra.
    static CrossedElement embed(const AlgebraElement& a, const GroupElement& g) {
        CrossedElement x(g.order(), a.rank());
        for (const auto& [p, c] : a.terms()) x.add(g, p, c);
        return x;
    }

    int order() const noexcept { return order_; }
    std::size_t rank() const noexcept { return rank_; }
    const Terms& terms() const noexcept { return terms_; }
    std::size_t size() const noexcept { return terms_.size(); }

    Complex coefficient(const GroupElement& g, const Weight& p) const {
        auto it = terms_.find({g.exponent(), p});
        return it == terms_.end() ? Complex{} : it->second;
    }

    void add(const GroupElement& g, const Weight& p, Complex c) {
        if (g.order() != order_) throw DimensionError("group element order does not match");
        if (p.size() != rank_) throw DimensionError("weight rank does not match");
        auto [it, inserted] = terms_.try_emplace(CrossedKey{g.exponent(), p}, c);
        if (!inserted) it->second += c;
        if (std::abs(it->second) < kDropThreshold) terms_.erase(it);
    }

    /// The weight-algebra component at group element g.
    AlgebraElement component(const GroupElement& g) const {
        AlgebraElement a(rank_);
        for (const auto& [key, c] : terms_)
            if (key.group == g.exponent()) a.add(key.weight, c);
        return a;
    }

    CrossedElement& operator+=(const CrossedElement& o) {
        check(o);
        for (const auto& [k, c] : o.terms_) add({k.group, order_}, k.weight, c);
        return *this;
    }
    CrossedElement& operator-=(const CrossedElement& o) {
        check(o);
        for (const auto& [k, c] : o.terms_) add({k.group, order_}, k.weight, -c);
        return *this;
    }
    friend CrossedElement operator+(CrossedElement a, const CrossedElement& b) { return a += b; }
    friend CrossedElement operator-(CrossedElement a, const CrossedElement& b) { return a -= b; }

    bool operator==(const CrossedElement& o) const {
        return order_ == o.order_ && rank_ == o.rank_ && terms_ == o.terms_;
    }

private:
    void check(const CrossedElement& o) const {
        if (o.order_ != order_ || o.rank_ != rank_) throw DimensionError("crossed elements of different shape");
    }

    int order_;
    std::size_t rank_;
    Terms terms_;
};

inline double l1_norm(const CrossedElement& x) {
    double s = 0.0;
    for (const auto& [k, c] : x.terms()) s += std::abs(c);
    return s;
}

template <CrossedAction A>
CrossedElement crossed_product(const CrossedElement& x, const CrossedElement& y, const A& action,
                               const DeformationForm& form) {
    if (x.order() != action.order() || y.order() != action.order())
        throw DimensionError("crossed element order does not match the action");
    if (x.rank() != form.rank() || y.rank() != form.rank() || action.rank() != form.rank())
        throw DimensionError("crossed element rank does not match the deformation form");
    const int n = action.order();
    CrossedElement out(n, form.rank());
    for (const auto& [kx, cx] : x.terms())
        for (const auto& [ky, cy] : y.terms()) {
            const CrossedMonomial m = multiply(CrossedMonomial{{kx.group, n}, kx.weight, {}, 0},
                                               CrossedMonomial{{ky.group, n}, ky.weight, {}, 0}, action, form);
            out.add(m.group, m.weight, cx * cy * m.scalar(form.theta()));
        }
    return out;
}

template <CrossedAction A>
CrossedElement crossed_star(const CrossedElement& x, const A& action) {
    if (x.order() != action.order()) throw DimensionError("crossed element order does not match the action");
    const int n = action.order();
    CrossedElement out(n, x.rank());
    for (const auto& [k, c] : x.terms()) {
        const GroupElement inv = GroupElement(k.group, n).inverse();
        const ActionImage moved = transform(action, inv, -k.weight);
        out.add(inv, moved.weight, std::conj(c) * root_of_unity(moved.root, n));
    }
    return out;
}

/// Coefficient at (identity, weight 0); no 1/|G| normalization.
inline Complex crossed_trace(const CrossedElement& x) {
    return x.coefficient(GroupElement::identity(x.order()), Weight::zero(x.rank()));
}

struct CommutingComparison {
    double max_abs_difference = 0.0;
    std::size_t pairs_compared = 0;
    std::size_t exponent_mismatches = 0;
};

/// Compares structure constants of A_J x| G (translation action) with the
/// deformation of A x| G along the lifted action, on all basis pairs with |p_i| <= box.
inline CommutingComparison commuting_deformation_compare(const TranslationAction& translation, int order,
                                                         const DeformationForm& form, int box,
                                                         std::size_t max_pairs = 5'000'000) {
    if (order != translation.order()) throw DimensionError("translation order does not match the group order");
    if (translation.rank() != form.rank()) throw DimensionError("translation rank does not match the form");
    if (box < 0) throw ParameterError("box must be nonnegative");

    std::vector<Weight> weights;
    {
        const std::size_t n = form.rank();
        std::vector<std::int64_t> c(n, -box);
        for (;;) {
            weights.emplace_back(c);
            std::size_t k = 0;
            while (k < n && ++c[k] > box) c[k++] = -box;
            if (k == n) break;
        }
    }
    const double basis_size = static_cast<double>(weights.size()) * order;
    if (basis_size * basis_size > static_cast<double>(max_pairs))
        throw ResourceError("comparison box exceeds the configured pair budget");

    // Undeformed crossed product: commutative product of functions, then the group law.
    auto undeformed = [&](int g, const Weight& p, int h, const Weight& q) {
        const ActionImage moved = transform(translation, GroupElement(g, order), q);
        return CrossedMonomial{GroupElement(g, order) * GroupElement(h, order), p + moved.weight, {}, moved.root};
    };

    CommutingComparison report;
    for (int g = 0; g < order; ++g)
        for (const auto& p : weights)
            for (int h = 0; h < order; ++h)
                for (const auto& q : weights) {
                    // (i) deform first, then cross
                    const CrossedMonomial lhs =
                        multiply(CrossedMonomial{{g, order}, p, {}, 0}, CrossedMonomial{{h, order}, q, {}, 0},
                                 translation, form);
                    // (ii) cross first; the lifted action grades e_p u_g by p
                    CrossedMonomial rhs = undeformed(g, p, h, q);
                    rhs.theta_exponent = phase_exponent(p, q, form);

                    ++report.pairs_compared;
                    if (!(lhs == rhs)) ++report.exponent_mismatches;
                    const double diff = std::abs(lhs.scalar(form.theta()) - rhs.scalar(form.theta()));
                    if (lhs.group != rhs.group || lhs.weight != rhs.weight)
                        report.max_abs_difference = std::max(report.max_abs_difference, 2.0);
                    else
                        report.max_abs_difference = std::max(report.max_abs_difference, diff);
                }
    return report;
}

}  // namespace rdq
