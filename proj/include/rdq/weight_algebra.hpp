#pragma once

// Rieffel's deformed product on the weight-graded (Fourier) model of C(T^n).
//
// Characters e_p(x) = exp(2 pi i p.x) multiply as
//
//     e_p x_J e_q = exp(-2 pi i theta m(p, q)) e_{p+q},   m(p, q) = p^T J0 q,
//
// where J = theta * J0 and the translation action is (alpha_v f)(x) = f(x + v).
// Phases are carried as the exact integer m; only the final coefficient is a
// double-precision complex number.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <numbers>
#include <ostream>
#include <utility>
#include <vector>

#include "rdq/errors.hpp"
#include "rdq/int_matrix.hpp"

namespace rdq {

using Complex = std::complex<double>;

/// With J = theta [[0,1],[-1,0]], V x U = exp(2 pi i theta') U x V for theta' = 2 theta.
inline constexpr int kThetaPrimeFactor = 2;

/// Coefficients with modulus below this are dropped when canonicalizing.
inline constexpr double kDropThreshold = 1e-15;

/// A point of the dual lattice Z^n.
class Weight {
public:
    Weight() = default;
    explicit Weight(std::vector<std::int64_t> components) : c_(std::move(components)) {}
    Weight(std::initializer_list<std::int64_t> components) : c_(components) {}

    static Weight zero(std::size_t rank) { return Weight(std::vector<std::int64_t>(rank, 0)); }

    std::size_t size() const noexcept { return c_.size(); }
    std::int64_t operator[](std::size_t i) const { return c_[i]; }
    const std::vector<std::int64_t>& components() const noexcept { return c_; }
    bool is_zero() const {
        for (auto x : c_)
            if (x != 0) return false;
        return true;
    }

    Weight operator+(const Weight& o) const {
        check_same_rank(o);
        Weight r = *this;
        for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i] += o.c_[i];
        return r;
    }
    Weight operator-(const Weight& o) const { return *this + (-o); }
    Weight operator-() const {
        Weight r = *this;
        for (auto& x : r.c_) x = -x;
        return r;
    }

    auto operator<=>(const Weight&) const = default;
    bool operator==(const Weight&) const = default;

private:
    void check_same_rank(const Weight& o) const {
        if (o.size() != size()) throw DimensionError("weights of different rank");
    }

    std::vector<std::int64_t> c_;
};

inline std::ostream& operator<<(std::ostream& os, const Weight& w) {
    os << '(';
    for (std::size_t i = 0; i < w.size(); ++i) os << (i ? "," : "") << w[i];
    return os << ')';
}

/// J = theta * J0 with J0 an integral skew-symmetric matrix.
class DeformationForm {
public:
    DeformationForm(IntMatrix skeleton, double theta) : j0_(std::move(skeleton)), theta_(theta) {
        if (!j0_.is_square() || j0_.rows() == 0) throw DimensionError("J0 must be a non-empty square matrix");
        if (!is_skew_symmetric(j0_)) throw ParameterError("J0 must be skew-symmetric");
    }

    /// The standard form theta dx1 ^ dx2 on R^2.
    static DeformationForm standard(double theta) { return {IntMatrix{{0, 1}, {-1, 0}}, theta}; }

    std::size_t rank() const noexcept { return j0_.rows(); }
    const IntMatrix& skeleton() const noexcept { return j0_; }
    double theta() const noexcept { return theta_; }
    double entry(std::size_t i, std::size_t j) const { return theta_ * static_cast<double>(j0_(i, j)); }

    DeformationForm with_theta(double theta) const { return {j0_, theta}; }

private:
    IntMatrix j0_;
    double theta_;
};

/// Exponent m of the structure-constant phase exp(-2 pi i m theta).
struct PhaseExponent {
    std::int64_t value = 0;
    auto operator<=>(const PhaseExponent&) const = default;
};

inline PhaseExponent phase_exponent(const Weight& p, const Weight& q, const DeformationForm& form) {
    const std::size_t n = form.rank();
    if (p.size() != n || q.size() != n) throw DimensionError("weight rank does not match the deformation form");
    const IntMatrix& j0 = form.skeleton();
    std::int64_t m = 0;
    for (std::size_t i = 0; i < n; ++i) {
        if (p[i] == 0) continue;
        std::int64_t row = 0;
        for (std::size_t j = 0; j < n; ++j) row += j0(i, j) * q[j];
        m += p[i] * row;
    }
    return {m};
}

/// exp(-2 pi i theta m)
inline Complex phase_factor(PhaseExponent m, double theta) {
    if (m.value == 0) return {1.0, 0.0};
    return std::polar(1.0, -2.0 * std::numbers::pi * theta * static_cast<double>(m.value));
}

struct BasisProduct {
    Weight weight;
    PhaseExponent phase;
};

/// e_p x_J e_q as (p + q, m(p, q)).
inline BasisProduct basis_product(const Weight& p, const Weight& q, const DeformationForm& form) {
    return {p + q, phase_exponent(p, q, form)};
}

/// Finite linear combination of characters, kept in canonical form.
class AlgebraElement {
public:
    using Terms = std::map<Weight, Complex>;

    explicit AlgebraElement(std::size_t rank) : rank_(rank) {}

    static AlgebraElement basis(const Weight& p, Complex c = 1.0) {
        AlgebraElement a(p.size());
        a.add(p, c);
        return a;
    }
    static AlgebraElement unit(std::size_t rank) { return basis(Weight::zero(rank)); }

    std::size_t rank() const noexcept { return rank_; }
    const Terms& terms() const noexcept { return terms_; }
    std::size_t size() const noexcept { return terms_.size(); }
    bool empty() const noexcept { return terms_.empty(); }

    Complex coefficient(const Weight& p) const {
        auto it = terms_.find(p);
        return it == terms_.end() ? Complex{} : it->second;
    }

    /// Accumulates c at weight p; the term disappears if it cancels.
    void add(const Weight& p, Complex c) {
        if (p.size() != rank_) throw DimensionError("weight rank does not match element rank");
        auto [it, inserted] = terms_.try_emplace(p, c);
        if (!inserted) it->second += c;
        if (std::abs(it->second) < kDropThreshold) terms_.erase(it);
    }

    AlgebraElement& operator+=(const AlgebraElement& o) {
        check_rank(o);
        for (const auto& [p, c] : o.terms_) add(p, c);
        return *this;
    }
    AlgebraElement& operator-=(const AlgebraElement& o) {
        check_rank(o);
        for (const auto& [p, c] : o.terms_) add(p, -c);
        return *this;
    }
    AlgebraElement& operator*=(Complex s) {
        Terms scaled;
        for (const auto& [p, c] : terms_)
            if (std::abs(c * s) >= kDropThreshold) scaled.emplace(p, c * s);
        terms_ = std::move(scaled);
        return *this;
    }

    friend AlgebraElement operator+(AlgebraElement a, const AlgebraElement& b) { return a += b; }
    friend AlgebraElement operator-(AlgebraElement a, const AlgebraElement& b) { return a -= b; }
    friend AlgebraElement operator*(Complex s, AlgebraElement a) { return a *= s; }

    bool operator==(const AlgebraElement& o) const { return rank_ == o.rank_ && terms_ == o.terms_; }

private:
    void check_rank(const AlgebraElement& o) const {
        if (o.rank_ != rank_) throw DimensionError("elements of different rank");
    }

    std::size_t rank_;
    Terms terms_;
};

inline AlgebraElement deformed_product(const AlgebraElement& a, const AlgebraElement& b, const DeformationForm& form) {
    if (a.rank() != form.rank() || b.rank() != form.rank())
        throw DimensionError("element rank does not match the deformation form");
    AlgebraElement out(form.rank());
    for (const auto& [p, cp] : a.terms())
        for (const auto& [q, cq] : b.terms()) {
            const BasisProduct bp = basis_product(p, q, form);
            out.add(bp.weight, cp * cq * phase_factor(bp.phase, form.theta()));
        }
    return out;
}

/// (c e_p)* = conj(c) e_{-p}
inline AlgebraElement star(const AlgebraElement& a) {
    AlgebraElement out(a.rank());
    for (const auto& [p, c] : a.terms()) out.add(-p, std::conj(c));
    return out;
}

/// Canonical normalized trace: the weight-zero coefficient.
inline Complex trace(const AlgebraElement& a) { return a.coefficient(Weight::zero(a.rank())); }

inline double l1_norm(const AlgebraElement& a) {
    double s = 0.0;
    for (const auto& [p, c] : a.terms()) s += std::abs(c);
    return s;
}

// ---------------------------------------------------------------------------
// Regulated oscillatory integral on characters.
//
// On e_p, e_q the double integral reduces to e_{p+q} times
//
//     I(eps) = int int exp(2 pi i (J^T p).u) exp(2 pi i q.v) exp(2 pi i u.v)
//              exp(-eps (|u|^2 + |v|^2)) du dv
//
// a complex Gaussian over R^{2n}. Writing a = J^T p,
//
//     I(eps) = (pi^2/(eps^2+pi^2))^{n/2}
//              * exp(-pi^2/(eps^2+pi^2) * (eps (|a|^2+|q|^2) + 2 pi i a.q)).
//
// The eps -> 0 limit is taken by polynomial (Richardson) extrapolation of
// log I(eps): the damping exp(-s eps (|a|^2+|q|^2)) is then nearly linear in
// eps and is extrapolated almost exactly.

inline const std::vector<double>& default_regulator_schedule() {
    static const std::vector<double> schedule{0.1, 0.05, 0.025, 0.0125};
    return schedule;
}

/// Closed-form value of the Gaussian-regulated integral at width eps.
inline Complex regulated_character_integral(const Weight& p, const Weight& q, const DeformationForm& form,
                                            double eps) {
    const std::size_t n = form.rank();
    if (p.size() != n || q.size() != n) throw DimensionError("weight rank does not match the deformation form");
    if (!(eps > 0.0)) throw ParameterError("regulator width must be positive");
    const double pi = std::numbers::pi;
    double a_sq = 0.0, q_sq = 0.0, a_dot_q = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
        double a = 0.0;
        for (std::size_t i = 0; i < n; ++i) a += form.entry(i, j) * static_cast<double>(p[i]);
        const double qj = static_cast<double>(q[j]);
        a_sq += a * a;
        q_sq += qj * qj;
        a_dot_q += a * qj;
    }
    const double s = pi * pi / (eps * eps + pi * pi);
    const double prefactor = std::pow(s, 0.5 * static_cast<double>(n));
    const Complex exponent{-s * eps * (a_sq + q_sq), -s * 2.0 * pi * a_dot_q};
    return prefactor * std::exp(exponent);
}

/// Extrapolates the regulated integral to eps = 0 over a strictly decreasing schedule.
inline Complex oscillatory_check(const Weight& p, const Weight& q, const DeformationForm& form,
                                 const std::vector<double>& schedule = default_regulator_schedule()) {
    if (schedule.size() < 3) throw ParameterError("regulator schedule needs at least 3 widths");
    for (std::size_t k = 0; k < schedule.size(); ++k) {
        if (!(schedule[k] > 0.0)) throw ParameterError("regulator widths must be positive");
        if (k && !(schedule[k] < schedule[k - 1])) throw ParameterError("regulator schedule must be strictly decreasing");
    }

    // Neville tableau on log I evaluated at eps = 0; row k uses the first k+1 widths.
    std::vector<Complex> table;
    std::vector<Complex> estimates;
    for (std::size_t k = 0; k < schedule.size(); ++k) {
        Complex log_value = std::log(regulated_character_integral(p, q, form, schedule[k]));
        if (k) {
            // stay on the branch of the previous width
            const double turns = std::round((table.back().imag() - log_value.imag()) / (2.0 * std::numbers::pi));
            log_value += Complex(0.0, 2.0 * std::numbers::pi * turns);
        }
        table.push_back(log_value);
        for (std::size_t l = 1; l <= k; ++l) {
            const std::size_t i = k - l;
            const double xi = schedule[i], xk = schedule[k];
            table[i] = (-xk * table[i] + xi * table[i + 1]) / (xi - xk);
        }
        estimates.push_back(std::exp(table[0]));
    }

    constexpr double kNoiseFloor = 1e-10;
    // Divergence: a residual larger than every earlier one. Two comparable tiny
    // corrections after a large first one are normal for low-order rows.
    double max_step = -1.0;
    for (std::size_t k = 1; k < estimates.size(); ++k) {
        const double step = std::abs(estimates[k] - estimates[k - 1]);
        if (max_step >= 0.0 && step > max_step && step > kNoiseFloor) {
            std::vector<std::pair<double, double>> seq;
            for (const auto& e : estimates) seq.emplace_back(e.real(), e.imag());
            throw NumericalFailure("oscillatory extrapolation does not converge", std::move(seq));
        }
        max_step = std::max(max_step, step);
    }
    return estimates.back();
}

}  // namespace rdq
