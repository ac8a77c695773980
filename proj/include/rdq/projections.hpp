#pragma once

// Projections p = g(U)V + f(U) + (g(U)V)* in the quantum torus, checked in
// function space.
//
// Elements are written in the normal form sum_k c_k(U) V^k with c_k functions
// on R/Z (U = exp(2 pi i t)). The generator pair is U = e_(1,0), V = e_(0,-1);
// for that pair the deformed product gives V f(U) V* = f(U - theta') with
// theta' = 2 theta, so
//
//     (c_a(U) V^a)(c_b(U) V^b) = c_a(t) c_b(t - a theta') V^{a+b}.
//
// p x p = p then reduces to three pointwise conditions on f and g.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <map>
#include <string>

#include "rdq/errors.hpp"
#include "rdq/weight_algebra.hpp"

namespace rdq {

struct BumpSpec {
    double theta_prime = 0.0;
    double ramp_width = 0.0;
    std::size_t grid_size = 0;

    void validate() const {
        if (!(theta_prime > 0.0 && theta_prime < 0.5)) throw ParameterError("theta' must lie in (0, 1/2)");
        if (!(ramp_width > 0.0 && ramp_width < theta_prime)) throw ParameterError("ramp width must lie in (0, theta')");
        if (!(2.0 * theta_prime + ramp_width < 1.0)) throw ParameterError("need 2 theta' + ramp width < 1");
        if (grid_size == 0) throw ParameterError("grid size must be positive");
    }
};

/// f ramps 0 -> 1 on [0, eps], is 1 on [eps, theta'], ramps 1 -> 0 on
/// [theta', theta' + eps]; g = sqrt(f - f^2) on [theta', theta' + eps].
class BumpPair {
public:
    explicit BumpPair(const BumpSpec& spec) : theta_prime_(spec.theta_prime), eps_(spec.ramp_width) {
        spec.validate();
    }

    double theta_prime() const noexcept { return theta_prime_; }
    double ramp_width() const noexcept { return eps_; }

    double f(double t) const {
        t -= std::floor(t);
        if (t < eps_) return t / eps_;
        if (t <= theta_prime_) return 1.0;
        if (t < theta_prime_ + eps_) return (theta_prime_ + eps_ - t) / eps_;
        return 0.0;
    }

    double g(double t) const {
        t -= std::floor(t);
        if (t < theta_prime_ || t > theta_prime_ + eps_) return 0.0;
        const double v = f(t);
        return std::sqrt(std::max(0.0, v - v * v));
    }

    /// Integral of f over one period: two triangles of area eps/2 and a plateau of length theta' - eps.
    double integral_f() const { return eps_ / 2.0 + (theta_prime_ - eps_) + eps_ / 2.0; }

private:
    double theta_prime_;
    double eps_;
};

/// source(sign * t + steps * theta')
struct ShiftedFunction {
    enum class Source { kZero, kOne, kF, kG };
    Source source = Source::kZero;
    int sign = 1;
    int steps = 0;

    bool operator==(const ShiftedFunction&) const = default;

    double operator()(const BumpPair& bumps, double t) const {
        const double x = sign * t + steps * bumps.theta_prime();
        switch (source) {
            case Source::kZero: return 0.0;
            case Source::kOne: return 1.0;
            case Source::kF: return bumps.f(x);
            case Source::kG: return bumps.g(x);
        }
        return 0.0;
    }
};

/// sum_k c_k(U) V^k with real coefficient functions.
struct ProjectionElement {
    std::map<int, ShiftedFunction> components;

    bool operator==(const ProjectionElement&) const = default;
};

/// (c(U) V^k)* = c(U + k theta') V^{-k} for real c.
inline ProjectionElement star(const ProjectionElement& p) {
    ProjectionElement out;
    for (const auto& [k, c] : p.components) {
        ShiftedFunction s = c;
        s.steps += c.sign * k;
        out.components[-k] = s;
    }
    return out;
}

/// The flip U -> U*, V -> V*.
inline ProjectionElement flip(const ProjectionElement& p) {
    ProjectionElement out;
    for (const auto& [k, c] : p.components) {
        ShiftedFunction s = c;
        s.sign = -c.sign;
        out.components[-k] = s;
    }
    return out;
}

inline bool is_self_adjoint(const ProjectionElement& p) { return star(p) == p; }

/// g(U)V + f(U) + (g(U)V)* built from the given sources; zero sources are omitted.
inline ProjectionElement make_projection_element(ShiftedFunction::Source f_source, ShiftedFunction::Source g_source) {
    using S = ShiftedFunction::Source;
    ProjectionElement p;
    if (f_source != S::kZero) p.components[0] = {f_source, 1, 0};
    if (g_source != S::kZero) {
        ProjectionElement gv;
        gv.components[1] = {g_source, 1, 0};
        p.components[1] = gv.components[1];
        p.components[-1] = star(gv).components[-1];
    }
    return p;
}

inline ProjectionElement assemble_projection(const BumpSpec& spec) {
    spec.validate();
    using S = ShiftedFunction::Source;
    return make_projection_element(S::kF, S::kG);
}

/// Coefficient of V^power in p x p at t.
inline double square_component(const ProjectionElement& p, const BumpPair& bumps, int power, double t) {
    double s = 0.0;
    for (const auto& [a, ca] : p.components) {
        auto it = p.components.find(power - a);
        if (it == p.components.end()) continue;
        s += ca(bumps, t) * it->second(bumps, t - a * bumps.theta_prime());
    }
    return s;
}

struct ProjectionReport {
    double cond_orthogonality = 0.0;  // max |g(t) g(t - theta')|
    double cond_partition = 0.0;      // max |g(t) (f(t) + f(t - theta') - 1)|
    double cond_square = 0.0;         // max |f - f^2 - g^2 - g(t + theta')^2|
    double square_defect = 0.0;       // max over components of |(p x p - p)_k(t)|
    double trace = 0.0;               // closed form
    double trace_quadrature = 0.0;    // Riemann sum of f on the grid
};

inline constexpr std::size_t kMinProjectionGrid = 1000;

inline ProjectionReport projection_residuals(const BumpSpec& spec) {
    spec.validate();
    if (spec.grid_size < kMinProjectionGrid) throw ParameterError("grid too coarse: need at least 1000 points");
    const BumpPair b(spec);
    const ProjectionElement p = assemble_projection(spec);
    const double tp = spec.theta_prime;
    const auto n = static_cast<double>(spec.grid_size);

    ProjectionReport r;
    double sum_f = 0.0;
    for (std::size_t j = 0; j < spec.grid_size; ++j) {
        const double t = static_cast<double>(j) / n;
        const double f = b.f(t), g = b.g(t);
        r.cond_orthogonality = std::max(r.cond_orthogonality, std::abs(g * b.g(t - tp)));
        r.cond_partition = std::max(r.cond_partition, std::abs(g * (f + b.f(t - tp) - 1.0)));
        const double g_next = b.g(t + tp);
        r.cond_square = std::max(r.cond_square, std::abs(f - f * f - g * g - g_next * g_next));
        for (int k = -2; k <= 2; ++k) {
            auto it = p.components.find(k);
            const double own = it == p.components.end() ? 0.0 : it->second(b, t);
            r.square_defect = std::max(r.square_defect, std::abs(square_component(p, b, k, t) - own));
        }
        sum_f += f;
    }
    r.trace = b.integral_f();
    r.trace_quadrature = sum_f / n;
    return r;
}

}  // namespace rdq
