#pragma once

// The theta-deformed 4-sphere in the monomial basis z1, z1bar, z2, z2bar, x5
// with z1 = x1 + i x2, z2 = x3 + i x4. The T^2 rotation gives z1, z2 the weights
// (1,0), (0,1); homogeneous elements multiply with the weight-algebra phase law.
// The sphere relation is not quotiented out: the radius element has weight 0
// and is central, so relations are checked on representatives.

#include <array>
#include <cmath>
#include <complex>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "rdq/errors.hpp"
#include "rdq/symmetry.hpp"
#include "rdq/weight_algebra.hpp"

namespace rdq {

class SphereMonomial {
public:
    enum Generator : std::size_t { kZ1 = 0, kZ1Bar = 1, kZ2 = 2, kZ2Bar = 3, kX5 = 4 };
    using Exponents = std::array<std::uint32_t, 5>;

    SphereMonomial() = default;
    explicit SphereMonomial(Exponents e) : e_(e) {}

    static SphereMonomial generator(Generator g, std::uint32_t power = 1) {
        Exponents e{};
        e[g] = power;
        return SphereMonomial(e);
    }

    const Exponents& exponents() const noexcept { return e_; }
    std::uint32_t degree() const noexcept { return e_[0] + e_[1] + e_[2] + e_[3] + e_[4]; }

    Weight weight() const {
        return {static_cast<std::int64_t>(e_[kZ1]) - static_cast<std::int64_t>(e_[kZ1Bar]),
                static_cast<std::int64_t>(e_[kZ2]) - static_cast<std::int64_t>(e_[kZ2Bar])};
    }

    /// Commutative product of the underlying functions.
    SphereMonomial operator*(const SphereMonomial& o) const {
        Exponents e;
        for (std::size_t i = 0; i < e.size(); ++i) e[i] = e_[i] + o.e_[i];
        return SphereMonomial(e);
    }

    /// z1 <-> z1bar, z2 <-> z2bar
    SphereMonomial conjugate() const { return SphereMonomial({e_[1], e_[0], e_[3], e_[2], e_[4]}); }

    auto operator<=>(const SphereMonomial&) const = default;
    bool operator==(const SphereMonomial&) const = default;

private:
    Exponents e_{};
};

inline Weight monomial_weight(const SphereMonomial& m) { return m.weight(); }

class SphereElement {
public:
    using Terms = std::map<SphereMonomial, Complex>;

    SphereElement() = default;
    SphereElement(const SphereMonomial& m, Complex c = 1.0) { add(m, c); }  // NOLINT(implicit)

    static SphereElement generator(SphereMonomial::Generator g) { return SphereMonomial::generator(g); }

    const Terms& terms() const noexcept { return terms_; }
    std::size_t size() const noexcept { return terms_.size(); }
    bool empty() const noexcept { return terms_.empty(); }

    Complex coefficient(const SphereMonomial& m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? Complex{} : it->second;
    }

    void add(const SphereMonomial& m, Complex c) {
        auto [it, inserted] = terms_.try_emplace(m, c);
        if (!inserted) it->second += c;
        if (std::abs(it->second) < kDropThreshold) terms_.erase(it);
    }

    SphereElement& operator+=(const SphereElement& o) {
        for (const auto& [m, c] : o.terms_) add(m, c);
        return *this;
    }
    SphereElement& operator-=(const SphereElement& o) {
        for (const auto& [m, c] : o.terms_) add(m, -c);
        return *this;
    }
    friend SphereElement operator+(SphereElement a, const SphereElement& b) { return a += b; }
    friend SphereElement operator-(SphereElement a, const SphereElement& b) { return a -= b; }
    friend SphereElement operator*(Complex s, SphereElement a) {
        SphereElement out;
        for (const auto& [m, c] : a.terms_) out.add(m, s * c);
        return out;
    }

    bool operator==(const SphereElement&) const = default;

    /// The common weight of all terms, if there is one.
    std::optional<Weight> homogeneous_weight() const {
        std::optional<Weight> w;
        for (const auto& [m, c] : terms_) {
            if (!w) w = m.weight();
            else if (*w != m.weight()) return std::nullopt;
        }
        return w;
    }

private:
    Terms terms_;
};

inline double l1_norm(const SphereElement& u) {
    double s = 0.0;
    for (const auto& [m, c] : u.terms()) s += std::abs(c);
    return s;
}

/// z1 zbar1 + z2 zbar2 + x5^2 (equal to 1 on the sphere)
inline SphereElement radius_element() {
    using M = SphereMonomial;
    SphereElement r;
    r.add(M::generator(M::kZ1) * M::generator(M::kZ1Bar), 1.0);
    r.add(M::generator(M::kZ2) * M::generator(M::kZ2Bar), 1.0);
    r.add(M::generator(M::kX5, 2), 1.0);
    return r;
}

inline SphereElement sphere_product(const SphereElement& u, const SphereElement& v, const DeformationForm& form) {
    if (form.rank() != 2) throw DimensionError("the theta-sphere needs a rank-2 deformation form");
    SphereElement out;
    for (const auto& [a, ca] : u.terms())
        for (const auto& [b, cb] : v.terms())
            out.add(a * b, ca * cb * phase_factor(phase_exponent(a.weight(), b.weight(), form), form.theta()));
    return out;
}

/// Conjugates generators and coefficients; consistent with (c e_p)* = conj(c) e_{-p}.
inline SphereElement sphere_star(const SphereElement& u) {
    SphereElement out;
    for (const auto& [m, c] : u.terms()) out.add(m.conjugate(), std::conj(c));
    return out;
}

/// The reflection (x1, -x2, x3, -x4, x5): z1 -> z1bar, z2 -> z2bar, x5 fixed.
inline SphereElement sphere_action(const GroupElement& g, const SphereElement& u) {
    if (g.order() != 2) throw UnsupportedOrderError("the sphere carries only the Z_2 reflection");
    if (g.is_identity()) return u;
    SphereElement out;
    for (const auto& [m, c] : u.terms()) out.add(m.conjugate(), c);
    return out;
}

/// The matrix rho(sigma_2) = -I by which the reflection acts on the rotation parameters.
inline CyclicAction sphere_weight_action() { return builtin_generator(2); }

inline double sphere_equivariance_residual(const GroupElement& g, const SphereElement& u, const SphereElement& v,
                                           const DeformationForm& form) {
    const SphereElement lhs = sphere_action(g, sphere_product(u, v, form));
    const SphereElement rhs = sphere_product(sphere_action(g, u), sphere_action(g, v), form);
    return l1_norm(lhs - rhs);
}

struct RelationRow {
    std::string left;
    std::string right;
    /// left x right = exp(2 pi i theta * ratio_exponent) * (right x left)
    std::int64_t ratio_exponent = 0;
    /// l1 norm of left x right - ratio * right x left, evaluated numerically
    double deviation = 0.0;
};

struct RelationReport {
    double theta = 0.0;
    std::vector<RelationRow> rows;

    const RelationRow* find(const std::string& left, const std::string& right) const {
        for (const auto& r : rows)
            if (r.left == left && r.right == right) return &r;
        return nullptr;
    }
};

/// Commutation phases for every ordered pair of generators plus the radius element.
inline RelationReport relation_report(const DeformationForm& form) {
    using M = SphereMonomial;
    const std::vector<std::pair<std::string, SphereElement>> named{
        {"z1", SphereElement::generator(M::kZ1)},   {"z1bar", SphereElement::generator(M::kZ1Bar)},
        {"z2", SphereElement::generator(M::kZ2)},   {"z2bar", SphereElement::generator(M::kZ2Bar)},
        {"x5", SphereElement::generator(M::kX5)},   {"radius", radius_element()},
    };
    RelationReport report;
    report.theta = form.theta();
    for (const auto& [ln, l] : named)
        for (const auto& [rn, r] : named) {
            if (ln == rn) continue;
            const Weight wl = *l.homogeneous_weight();
            const Weight wr = *r.homogeneous_weight();
            RelationRow row{ln, rn, 0, 0.0};
            row.ratio_exponent = phase_exponent(wr, wl, form).value - phase_exponent(wl, wr, form).value;
            const Complex ratio = phase_factor({-row.ratio_exponent}, form.theta());
            row.deviation = l1_norm(sphere_product(l, r, form) - ratio * sphere_product(r, l, form));
            report.rows.push_back(std::move(row));
        }
    return report;
}

}  // namespace rdq
