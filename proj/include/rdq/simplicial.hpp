#pragma once

// Abstract simplicial complexes with a simplicial action of a finite cyclic
// group given by a vertex permutation.
//
// Simplices are sorted vertex lists; the global vertex order fixes their
// orientation. A G-complex is called regular here when no vertex shares a
// simplex with a distinct translate of itself. Under that condition every
// simplex stabilizer fixes the simplex pointwise, so fixed sets are full
// subcomplexes. Quotients additionally need distinct simplex orbits to have
// distinct vertex-orbit images; one barycentric subdivision of a regular
// complex guarantees it.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <numeric>
#include <optional>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

#include "rdq/errors.hpp"

namespace rdq {

using Simplex = std::vector<int>;

struct SimplexHash {
    std::size_t operator()(const Simplex& s) const noexcept {
        std::size_t h = s.size();
        for (int v : s) h ^= static_cast<std::size_t>(v) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        return h;
    }
};

class SimplicialComplex {
public:
    SimplicialComplex() = default;

    /// Closes the given simplices downward. Every vertex in [0, num_vertices) becomes a 0-simplex.
    static SimplicialComplex from_facets(std::size_t num_vertices, const std::vector<Simplex>& facets) {
        std::vector<std::unordered_set<Simplex, SimplexHash>> by_dim;
        auto insert = [&](Simplex s) {
            const std::size_t d = s.size() - 1;
            if (by_dim.size() <= d) by_dim.resize(d + 1);
            by_dim[d].insert(std::move(s));
        };
        for (std::size_t v = 0; v < num_vertices; ++v) insert({static_cast<int>(v)});
        for (Simplex f : facets) {
            if (f.empty()) continue;
            std::sort(f.begin(), f.end());
            if (std::adjacent_find(f.begin(), f.end()) != f.end())
                throw ParameterError("simplex with a repeated vertex");
            if (f.front() < 0 || static_cast<std::size_t>(f.back()) >= num_vertices)
                throw ParameterError("simplex vertex index out of range");
            if (f.size() > 20) throw ParameterError("simplex dimension too large");
            const std::uint32_t subsets = 1u << f.size();
            for (std::uint32_t mask = 1; mask < subsets; ++mask) {
                Simplex face;
                for (std::size_t i = 0; i < f.size(); ++i)
                    if (mask & (1u << i)) face.push_back(f[i]);
                insert(std::move(face));
            }
        }
        SimplicialComplex k;
        k.num_vertices_ = num_vertices;
        k.simplices_.resize(by_dim.size());
        k.index_.resize(by_dim.size());
        for (std::size_t d = 0; d < by_dim.size(); ++d) {
            k.simplices_[d].assign(by_dim[d].begin(), by_dim[d].end());
            std::sort(k.simplices_[d].begin(), k.simplices_[d].end());
            k.index_[d].reserve(k.simplices_[d].size());
            for (std::size_t i = 0; i < k.simplices_[d].size(); ++i) k.index_[d].emplace(k.simplices_[d][i], i);
        }
        return k;
    }

    std::size_t num_vertices() const noexcept { return num_vertices_; }
    /// -1 for the empty complex
    int dimension() const noexcept { return static_cast<int>(simplices_.size()) - 1; }

    const std::vector<Simplex>& simplices(int dim) const {
        static const std::vector<Simplex> none;
        if (dim < 0 || dim > dimension()) return none;
        return simplices_[static_cast<std::size_t>(dim)];
    }
    std::size_t count(int dim) const { return simplices(dim).size(); }
    std::size_t size() const {
        std::size_t n = 0;
        for (const auto& s : simplices_) n += s.size();
        return n;
    }

    /// Position of a sorted simplex within its dimension.
    std::optional<std::size_t> index_of(const Simplex& s) const {
        if (s.empty() || s.size() > simplices_.size()) return std::nullopt;
        const auto& idx = index_[s.size() - 1];
        auto it = idx.find(s);
        if (it == idx.end()) return std::nullopt;
        return it->second;
    }
    bool contains(const Simplex& s) const { return index_of(s).has_value(); }

    /// Simplices that are not a face of any other simplex.
    std::vector<Simplex> facets() const {
        std::vector<Simplex> out;
        for (int d = dimension(); d >= 0; --d) {
            std::vector<char> covered(count(d), 0);
            if (d < dimension())
                for (const auto& s : simplices(d + 1))
                    for (std::size_t i = 0; i < s.size(); ++i) {
                        Simplex face = s;
                        face.erase(face.begin() + static_cast<std::ptrdiff_t>(i));
                        covered[*index_of(face)] = 1;
                    }
            for (std::size_t i = 0; i < count(d); ++i)
                if (!covered[i]) out.push_back(simplices(d)[i]);
        }
        std::sort(out.begin(), out.end());
        return out;
    }

    std::int64_t euler_characteristic() const {
        std::int64_t chi = 0;
        for (int d = 0; d <= dimension(); ++d) chi += (d % 2 == 0 ? 1 : -1) * static_cast<std::int64_t>(count(d));
        return chi;
    }

    bool operator==(const SimplicialComplex& o) const {
        return num_vertices_ == o.num_vertices_ && simplices_ == o.simplices_;
    }

private:
    std::size_t num_vertices_ = 0;
    std::vector<std::vector<Simplex>> simplices_;
    std::vector<std::unordered_map<Simplex, std::size_t, SimplexHash>> index_;
};

/// A cyclic group acting through a vertex permutation (the image of the generator).
class SimplicialAction {
public:
    SimplicialAction() = default;
    SimplicialAction(int order, std::vector<int> generator) : order_(order) {
        if (order <= 0) throw ParameterError("group order must be positive");
        const std::size_t n = generator.size();
        std::vector<char> seen(n, 0);
        for (int v : generator) {
            if (v < 0 || static_cast<std::size_t>(v) >= n || seen[static_cast<std::size_t>(v)])
                throw ParameterError("generator is not a permutation of the vertices");
            seen[static_cast<std::size_t>(v)] = 1;
        }
        powers_.push_back(identity_permutation(n));
        for (int k = 1; k < order; ++k) {
            std::vector<int> next(n);
            for (std::size_t v = 0; v < n; ++v) next[v] = generator[static_cast<std::size_t>(powers_.back()[v])];
            powers_.push_back(std::move(next));
        }
        std::vector<int> last(n);
        for (std::size_t v = 0; v < n; ++v) last[v] = generator[static_cast<std::size_t>(powers_.back()[v])];
        if (last != powers_.front()) throw ParameterError("generator order does not divide the group order");
    }

    static SimplicialAction trivial(std::size_t num_vertices) { return {1, identity_permutation(num_vertices)}; }

    int order() const noexcept { return order_; }
    std::size_t num_vertices() const noexcept { return powers_.empty() ? 0 : powers_.front().size(); }
    const std::vector<int>& generator() const { return powers_.size() > 1 ? powers_[1] : powers_.front(); }

    int apply(int exponent, int v) const {
        const int k = ((exponent % order_) + order_) % order_;
        return powers_[static_cast<std::size_t>(k)][static_cast<std::size_t>(v)];
    }
    Simplex apply(int exponent, const Simplex& s) const {
        Simplex out;
        out.reserve(s.size());
        for (int v : s) out.push_back(apply(exponent, v));
        std::sort(out.begin(), out.end());
        return out;
    }

    /// True when some nontrivial power fixes every vertex.
    bool is_faithful() const {
        for (int k = 1; k < order_; ++k)
            if (powers_[static_cast<std::size_t>(k)] == powers_.front()) return false;
        return true;
    }

    /// Throws unless the generator maps simplices of the complex to simplices.
    void validate(const SimplicialComplex& k) const {
        if (num_vertices() != k.num_vertices()) throw DimensionError("action and complex have different vertex counts");
        for (const auto& f : k.facets())
            if (!k.contains(apply(1, f))) throw ParameterError("vertex permutation is not simplicial");
    }

private:
    static std::vector<int> identity_permutation(std::size_t n) {
        std::vector<int> p(n);
        std::iota(p.begin(), p.end(), 0);
        return p;
    }

    int order_ = 1;
    std::vector<std::vector<int>> powers_;
};

struct GComplex {
    SimplicialComplex complex;
    SimplicialAction action;
    int regularity_level = 0;

    GComplex(SimplicialComplex k, SimplicialAction a, int level = 0)
        : complex(std::move(k)), action(std::move(a)), regularity_level(level) {
        action.validate(complex);
    }
};

struct Subdivision {
    SimplicialComplex complex;
    /// simplex of the original complex whose barycenter each new vertex is
    std::vector<Simplex> carrier;
};

/// Barycenters of the original vertices come first, then higher simplices by (dimension, lexicographic).
inline Subdivision barycentric_subdivide(const SimplicialComplex& k) {
    Subdivision out;
    std::vector<std::size_t> offset(static_cast<std::size_t>(k.dimension() + 2), 0);
    for (int d = 0; d <= k.dimension(); ++d) {
        offset[static_cast<std::size_t>(d + 1)] = offset[static_cast<std::size_t>(d)] + k.count(d);
        for (const auto& s : k.simplices(d)) out.carrier.push_back(s);
    }
    auto barycenter = [&](const Simplex& s) {
        return static_cast<int>(offset[s.size() - 1] + *k.index_of(s));
    };

    std::vector<Simplex> facets;
    for (const auto& f : k.facets()) {
        Simplex order = f;
        do {
            Simplex chain;
            Simplex prefix;
            for (int v : order) {
                prefix.insert(std::upper_bound(prefix.begin(), prefix.end(), v), v);
                chain.push_back(barycenter(prefix));
            }
            facets.push_back(std::move(chain));
        } while (std::next_permutation(order.begin(), order.end()));
    }
    out.complex = SimplicialComplex::from_facets(out.carrier.size(), facets);
    return out;
}

/// Subdivides and carries the action to barycenters: b(s) -> b(g s).
inline GComplex barycentric_subdivide(const GComplex& g) {
    Subdivision sd = barycentric_subdivide(g.complex);
    std::unordered_map<Simplex, int, SimplexHash> vertex_of;
    for (std::size_t v = 0; v < sd.carrier.size(); ++v) vertex_of.emplace(sd.carrier[v], static_cast<int>(v));
    std::vector<int> perm(sd.carrier.size());
    for (std::size_t v = 0; v < sd.carrier.size(); ++v) perm[v] = vertex_of.at(g.action.apply(1, sd.carrier[v]));
    return {std::move(sd.complex), SimplicialAction(g.action.order(), std::move(perm)), g.regularity_level + 1};
}

struct RegularityWitness {
    int group_exponent;
    int vertex;
    Simplex simplex;  // contains both vertex and its translate
};

struct RegularityResult {
    bool regular = true;
    std::optional<RegularityWitness> witness;
};

inline RegularityResult regularity_check(const GComplex& g) {
    for (int k = 1; k < g.action.order(); ++k)
        for (std::size_t v = 0; v < g.complex.num_vertices(); ++v) {
            const int w = g.action.apply(k, static_cast<int>(v));
            if (w == static_cast<int>(v)) continue;
            Simplex edge{std::min(w, static_cast<int>(v)), std::max(w, static_cast<int>(v))};
            if (g.complex.contains(edge)) return {false, RegularityWitness{k, static_cast<int>(v), edge}};
        }
    return {};
}

inline GComplex make_regular(const GComplex& g, int max_subdiv = 2) {
    GComplex current = g;
    for (int i = 0;; ++i) {
        if (regularity_check(current).regular) return current;
        if (i == max_subdiv)
            throw RegularityError("action is not regular after " + std::to_string(max_subdiv) + " subdivisions");
        current = barycentric_subdivide(current);
    }
}

/// The fixed subcomplex of g^exponent together with the restricted action of the whole group.
inline GComplex fixed_gcomplex(const GComplex& g, int exponent) {
    if (!regularity_check(g).regular) throw PreconditionError("fixed subcomplex requires a regular action");
    const std::size_t n = g.complex.num_vertices();
    std::vector<int> new_index(n, -1);
    std::vector<int> kept;
    for (std::size_t v = 0; v < n; ++v)
        if (g.action.apply(exponent, static_cast<int>(v)) == static_cast<int>(v)) {
            new_index[v] = static_cast<int>(kept.size());
            kept.push_back(static_cast<int>(v));
        }
    std::vector<Simplex> simplices;
    for (int d = 1; d <= g.complex.dimension(); ++d)
        for (const auto& s : g.complex.simplices(d)) {
            Simplex t;
            for (int v : s) {
                if (new_index[static_cast<std::size_t>(v)] < 0) break;
                t.push_back(new_index[static_cast<std::size_t>(v)]);
            }
            if (t.size() == s.size()) simplices.push_back(std::move(t));
        }
    std::vector<int> perm(kept.size());
    for (std::size_t i = 0; i < kept.size(); ++i)
        perm[i] = new_index[static_cast<std::size_t>(g.action.apply(1, kept[i]))];
    return {SimplicialComplex::from_facets(kept.size(), simplices), SimplicialAction(g.action.order(), std::move(perm)),
            g.regularity_level};
}

inline SimplicialComplex fixed_subcomplex(const GComplex& g, int exponent) { return fixed_gcomplex(g, exponent).complex; }

namespace detail {

struct OrbitImage {
    std::vector<int> vertex_orbit;
    std::size_t num_orbits = 0;
    bool injective = true;  // distinct simplex orbits have distinct images
    std::vector<Simplex> images;
};

inline OrbitImage orbit_image(const GComplex& g) {
    OrbitImage r;
    const std::size_t n = g.complex.num_vertices();
    r.vertex_orbit.assign(n, -1);
    for (std::size_t v = 0; v < n; ++v) {
        if (r.vertex_orbit[v] >= 0) continue;
        for (int k = 0; k < g.action.order(); ++k)
            r.vertex_orbit[static_cast<std::size_t>(g.action.apply(k, static_cast<int>(v)))] =
                static_cast<int>(r.num_orbits);
        ++r.num_orbits;
    }
    for (int d = 0; d <= g.complex.dimension(); ++d) {
        std::unordered_map<Simplex, Simplex, SimplexHash> orbit_of_image;
        for (const auto& s : g.complex.simplices(d)) {
            Simplex canonical = s;
            for (int k = 1; k < g.action.order(); ++k) canonical = std::min(canonical, g.action.apply(k, s));
            Simplex image;
            for (int v : s) image.push_back(r.vertex_orbit[static_cast<std::size_t>(v)]);
            std::sort(image.begin(), image.end());
            auto [it, inserted] = orbit_of_image.emplace(image, canonical);
            if (inserted) r.images.push_back(std::move(image));
            else if (it->second != canonical) r.injective = false;
        }
    }
    return r;
}

}  // namespace detail

/// Simplicial model of the orbit space: vertices are vertex orbits, simplices are orbit images.
inline SimplicialComplex quotient_complex(const GComplex& g) {
    if (!regularity_check(g).regular) throw PreconditionError("quotient requires a regular action");
    detail::OrbitImage img = detail::orbit_image(g);
    if (!img.injective) {
        img = detail::orbit_image(barycentric_subdivide(g));
        if (!img.injective) throw IntegrityError("orbit images not injective after subdivision");
    }
    return SimplicialComplex::from_facets(img.num_orbits, img.images);
}

}  // namespace rdq
