#pragma once

// Triangulated spaces carrying the shipped group actions.
//
// Torus: vertices on (1/N)Z^2 / Z^2, acted on by x -> rho x.
//   * triangular: edges along e1, e2 and e2 - e1; invariant under sigma_2,
//     sigma_3 and sigma_6.
//   * crossed square: every grid square gets a center vertex joined to its
//     corners; invariant under sigma_4. Coordinates use scale 2N so centers are
//     the odd-odd points.
// Sphere: the boundary of the cross-polytope on +-e_1..+-e_d.

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "rdq/errors.hpp"
#include "rdq/simplicial.hpp"
#include "rdq/symmetry.hpp"

namespace rdq {

enum class TorusTriangulation { kTriangular, kCrossedSquare };

inline std::string to_string(TorusTriangulation t) {
    return t == TorusTriangulation::kTriangular ? "triangular" : "crossed_square";
}

/// A complex whose vertices carry integer coordinates (divided by `scale` for torus models).
struct GeometricModel {
    SimplicialComplex complex;
    SimplicialAction action;
    std::vector<std::vector<std::int64_t>> coordinates;
    std::int64_t scale = 1;
};

inline TorusTriangulation default_triangulation(int order) {
    return order == 4 ? TorusTriangulation::kCrossedSquare : TorusTriangulation::kTriangular;
}

inline GeometricModel torus_model(const CyclicAction& action, int n, TorusTriangulation kind) {
    if (action.rank() != 2) throw DimensionError("torus models are two-dimensional");
    if (n < 3) throw ParameterError("torus grid needs N >= 3");
    GeometricModel m;
    std::map<std::vector<std::int64_t>, int> index;
    auto add_vertex = [&](std::int64_t x, std::int64_t y) {
        index.emplace(std::vector<std::int64_t>{x, y}, static_cast<int>(m.coordinates.size()));
        m.coordinates.push_back({x, y});
    };
    auto at = [&](std::int64_t x, std::int64_t y) {
        const std::int64_t s = m.scale;
        return index.at({((x % s) + s) % s, ((y % s) + s) % s});
    };

    std::vector<Simplex> facets;
    if (kind == TorusTriangulation::kTriangular) {
        m.scale = n;
        for (std::int64_t a = 0; a < n; ++a)
            for (std::int64_t b = 0; b < n; ++b) add_vertex(a, b);
        for (std::int64_t a = 0; a < n; ++a)
            for (std::int64_t b = 0; b < n; ++b) {
                facets.push_back({at(a, b), at(a + 1, b), at(a, b + 1)});
                facets.push_back({at(a + 1, b), at(a, b + 1), at(a + 1, b + 1)});
            }
    } else {
        m.scale = 2 * static_cast<std::int64_t>(n);
        for (std::int64_t a = 0; a < n; ++a)
            for (std::int64_t b = 0; b < n; ++b) add_vertex(2 * a, 2 * b);
        for (std::int64_t a = 0; a < n; ++a)
            for (std::int64_t b = 0; b < n; ++b) add_vertex(2 * a + 1, 2 * b + 1);
        for (std::int64_t a = 0; a < n; ++a)
            for (std::int64_t b = 0; b < n; ++b) {
                const int c = at(2 * a + 1, 2 * b + 1);
                const int p00 = at(2 * a, 2 * b), p10 = at(2 * a + 2, 2 * b);
                const int p11 = at(2 * a + 2, 2 * b + 2), p01 = at(2 * a, 2 * b + 2);
                facets.push_back({c, p00, p10});
                facets.push_back({c, p10, p11});
                facets.push_back({c, p11, p01});
                facets.push_back({c, p01, p00});
            }
    }
    m.complex = SimplicialComplex::from_facets(m.coordinates.size(), facets);

    const IntMatrix& rho = action.generator();
    std::vector<int> perm(m.coordinates.size());
    for (std::size_t v = 0; v < m.coordinates.size(); ++v) {
        const auto& c = m.coordinates[v];
        perm[v] = at(rho(0, 0) * c[0] + rho(0, 1) * c[1], rho(1, 0) * c[0] + rho(1, 1) * c[1]);
    }
    m.action = SimplicialAction(action.order(), std::move(perm));
    m.action.validate(m.complex);
    return m;
}

/// Boundary of the cross-polytope in R^axes; vertex 2i is +e_i, vertex 2i+1 is -e_i.
/// The group Z_2 acts by negating the listed axes.
inline GeometricModel cross_polytope_sphere(int axes, const std::vector<int>& negated_axes) {
    if (axes < 1 || axes > 16) throw ParameterError("cross-polytope needs 1..16 axes");
    GeometricModel m;
    for (int i = 0; i < axes; ++i)
        for (int sign : {1, -1}) {
            std::vector<std::int64_t> c(static_cast<std::size_t>(axes), 0);
            c[static_cast<std::size_t>(i)] = sign;
            m.coordinates.push_back(std::move(c));
        }
    std::vector<Simplex> facets;
    for (std::uint32_t mask = 0; mask < (1u << axes); ++mask) {
        Simplex f;
        for (int i = 0; i < axes; ++i) f.push_back(2 * i + ((mask >> i) & 1u ? 1 : 0));
        facets.push_back(std::move(f));
    }
    m.complex = SimplicialComplex::from_facets(m.coordinates.size(), facets);
    std::vector<int> perm(m.coordinates.size());
    for (int v = 0; v < 2 * axes; ++v) perm[static_cast<std::size_t>(v)] = v;
    for (int axis : negated_axes) {
        if (axis < 0 || axis >= axes) throw ParameterError("reflection axis out of range");
        std::swap(perm[static_cast<std::size_t>(2 * axis)], perm[static_cast<std::size_t>(2 * axis + 1)]);
    }
    m.action = SimplicialAction(negated_axes.empty() ? 1 : 2, std::move(perm));
    m.action.validate(m.complex);
    return m;
}

/// S^4 with the reflection (x1, -x2, x3, -x4, x5).
inline GeometricModel theta_sphere_model() { return cross_polytope_sphere(5, {1, 3}); }

}  // namespace rdq
