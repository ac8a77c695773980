#pragma once

// Instance files: one JSON document per example system.
//
//   {
//     "schema": 1,
//     "name": "torus_z2",
//     "deformation": {"J0": [[0,1],[-1,0]], "theta": 0.2},
//     "action": {"order": 2, "generator": [[-1,0],[0,-1]]},
//     "complex": {"vertices": [[0,0], ...], "vertex_scale": 6,
//                 "simplices": [[0,1,6], ...], "generator_vertex_perm": [...],
//                 "model": "torus/triangular"},
//     "translation": {"shift": ["1/2", "1/2"]},
//     "metadata": {...}
//   }
//
// "simplices" lists maximal simplices; faces are implied. When "vertex_scale"
// is positive and vertex coordinates have the action's rank, vertex v stands
// for the torus point vertices[v] / vertex_scale and the permutation must be
// x -> generator * x on those points. "complex", "translation" and "metadata"
// are optional.

#include <cstddef>
#include <cstdint>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "rdq/crossed.hpp"
#include "rdq/errors.hpp"
#include "rdq/models.hpp"
#include "rdq/simplicial.hpp"
#include "rdq/symmetry.hpp"
#include "rdq/weight_algebra.hpp"

namespace rdq {

using json = nlohmann::json;

inline constexpr int kInstanceSchema = 1;

struct ComplexData {
    std::vector<std::vector<std::int64_t>> vertices;
    std::int64_t vertex_scale = 0;
    std::vector<Simplex> simplices;
    std::vector<int> generator_vertex_perm;
    std::string model;

    bool operator==(const ComplexData&) const = default;
};

struct Instance {
    std::string name;
    DeformationForm deformation;
    CyclicAction action;
    std::optional<ComplexData> complex;
    std::optional<TranslationAction> translation;
    json metadata = json::object();
};

inline bool operator==(const Instance& a, const Instance& b) {
    auto same_translation = [&] {
        if (a.translation.has_value() != b.translation.has_value()) return false;
        if (!a.translation) return true;
        return a.translation->order() == b.translation->order() &&
               a.translation->shift_numerators() == b.translation->shift_numerators();
    };
    return a.name == b.name && a.deformation.skeleton() == b.deformation.skeleton() &&
           a.deformation.theta() == b.deformation.theta() && a.action.order() == b.action.order() &&
           a.action.generator() == b.action.generator() && a.complex == b.complex && same_translation() &&
           a.metadata == b.metadata;
}

namespace detail {

inline IntMatrix matrix_from_json(const json& j, const std::string& path) {
    if (!j.is_array() || j.empty()) throw ValidationError(path, "expected a non-empty array of rows");
    const std::size_t cols = j[0].is_array() ? j[0].size() : 0;
    IntMatrix m(j.size(), cols);
    for (std::size_t i = 0; i < j.size(); ++i) {
        if (!j[i].is_array() || j[i].size() != cols) throw ValidationError(path, "rows must be arrays of equal length");
        for (std::size_t k = 0; k < cols; ++k) {
            if (!j[i][k].is_number_integer()) throw ValidationError(path, "entries must be integers");
            m(i, k) = j[i][k].get<std::int64_t>();
        }
    }
    return m;
}

inline json matrix_to_json(const IntMatrix& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t k = 0; k < m.cols(); ++k) row.push_back(m(i, k));
        rows.push_back(std::move(row));
    }
    return rows;
}

inline Rational parse_rational(const std::string& s, const std::string& path) {
    try {
        const auto slash = s.find('/');
        std::size_t used = 0;
        if (slash == std::string::npos) {
            const std::int64_t n = std::stoll(s, &used);
            if (used != s.size()) throw std::invalid_argument(s);
            return Rational(n);
        }
        const std::string num = s.substr(0, slash), den = s.substr(slash + 1);
        const std::int64_t n = std::stoll(num, &used);
        if (used != num.size()) throw std::invalid_argument(s);
        const std::int64_t d = std::stoll(den, &used);
        if (used != den.size() || d == 0) throw std::invalid_argument(s);
        return Rational(n, d);
    } catch (const std::exception&) {
        throw ValidationError(path, "expected a rational like \"1/2\", got \"" + s + "\"");
    }
}

inline std::string format_rational(const Rational& r) {
    if (r.denominator() == 1) return std::to_string(r.numerator());
    return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

template <class T>
T get_field(const json& obj, const char* key, const std::string& path) {
    if (!obj.contains(key)) throw ValidationError(path + "/" + key, "missing");
    try {
        return obj.at(key).get<T>();
    } catch (const json::exception& e) {
        throw ValidationError(path + "/" + key, e.what());
    }
}

}  // namespace detail

inline json to_json(const Instance& inst) {
    json j;
    j["schema"] = kInstanceSchema;
    j["name"] = inst.name;
    j["deformation"] = {{"J0", detail::matrix_to_json(inst.deformation.skeleton())},
                        {"theta", inst.deformation.theta()}};
    j["action"] = {{"order", inst.action.order()}, {"generator", detail::matrix_to_json(inst.action.generator())}};
    if (inst.complex) {
        const ComplexData& c = *inst.complex;
        j["complex"] = {{"vertices", c.vertices},
                        {"vertex_scale", c.vertex_scale},
                        {"simplices", c.simplices},
                        {"generator_vertex_perm", c.generator_vertex_perm},
                        {"model", c.model}};
    }
    if (inst.translation) {
        json shift = json::array();
        for (const auto& t : inst.translation->shift()) shift.push_back(detail::format_rational(t));
        j["translation"] = {{"shift", shift}};
    }
    j["metadata"] = inst.metadata;
    return j;
}

/// Parses and checks every structural and cross-field invariant; errors name the offending field.
inline Instance instance_from_json(const json& j) {
    if (!j.is_object()) throw ValidationError("", "instance must be a JSON object");
    if (j.contains("schema") && j["schema"] != kInstanceSchema)
        throw ValidationError("/schema", "unsupported schema version");
    const std::string name = detail::get_field<std::string>(j, "name", "");

    if (!j.contains("deformation")) throw ValidationError("/deformation", "missing");
    const json& jd = j["deformation"];
    const IntMatrix j0 = detail::matrix_from_json(jd.value("J0", json()), "/deformation/J0");
    if (!j0.is_square()) throw ValidationError("/deformation/J0", "must be square");
    if (!is_skew_symmetric(j0)) throw ValidationError("/deformation/J0", "must be skew-symmetric");
    const double theta = detail::get_field<double>(jd, "theta", "/deformation");
    DeformationForm form(j0, theta);

    if (!j.contains("action")) throw ValidationError("/action", "missing");
    const json& ja = j["action"];
    const int order = detail::get_field<int>(ja, "order", "/action");
    const IntMatrix gen = detail::matrix_from_json(ja.value("generator", json()), "/action/generator");
    if (gen.rows() != form.rank() || gen.cols() != form.rank())
        throw ValidationError("/action/generator", "dimension does not match J0");
    std::optional<CyclicAction> action;
    try {
        action.emplace(order, gen);
    } catch (const Error& e) {
        throw ValidationError("/action", e.what());
    }

    Instance inst{name, form, *action, std::nullopt, std::nullopt, json::object()};

    if (j.contains("complex")) {
        const json& jc = j["complex"];
        ComplexData c;
        c.vertices = detail::get_field<std::vector<std::vector<std::int64_t>>>(jc, "vertices", "/complex");
        c.vertex_scale = jc.value("vertex_scale", std::int64_t{0});
        c.simplices = detail::get_field<std::vector<Simplex>>(jc, "simplices", "/complex");
        c.generator_vertex_perm = detail::get_field<std::vector<int>>(jc, "generator_vertex_perm", "/complex");
        c.model = jc.value("model", std::string());
        if (c.generator_vertex_perm.size() != c.vertices.size())
            throw ValidationError("/complex/generator_vertex_perm", "length differs from the vertex count");
        try {
            const auto k = SimplicialComplex::from_facets(c.vertices.size(), c.simplices);
            GComplex(k, SimplicialAction(order, c.generator_vertex_perm));
        } catch (const ValidationError&) {
            throw;
        } catch (const Error& e) {
            throw ValidationError("/complex", e.what());
        }
        if (c.vertex_scale < 0) throw ValidationError("/complex/vertex_scale", "must be nonnegative");
        const bool torus = c.vertex_scale > 0 && !c.vertices.empty() && c.vertices[0].size() == form.rank();
        if (torus) {
            const std::int64_t s = c.vertex_scale;
            std::map<std::vector<std::int64_t>, int> by_coord;
            for (std::size_t v = 0; v < c.vertices.size(); ++v) {
                if (c.vertices[v].size() != form.rank())
                    throw ValidationError("/complex/vertices/" + std::to_string(v), "wrong coordinate count");
                by_coord.emplace(c.vertices[v], static_cast<int>(v));
            }
            for (std::size_t v = 0; v < c.vertices.size(); ++v) {
                std::vector<std::int64_t> image = gen * c.vertices[v];
                for (auto& x : image) x = ((x % s) + s) % s;
                auto it = by_coord.find(image);
                if (it == by_coord.end() || it->second != c.generator_vertex_perm[v])
                    throw ValidationError("/complex/generator_vertex_perm/" + std::to_string(v),
                                          "does not realize the action matrix on the vertex lattice");
            }
        }
        inst.complex = std::move(c);
    }

    if (j.contains("translation")) {
        const auto shift = detail::get_field<std::vector<std::string>>(j["translation"], "shift", "/translation");
        if (shift.size() != form.rank()) throw ValidationError("/translation/shift", "dimension does not match J0");
        std::vector<Rational> t;
        for (std::size_t i = 0; i < shift.size(); ++i)
            t.push_back(detail::parse_rational(shift[i], "/translation/shift/" + std::to_string(i)));
        try {
            inst.translation = TranslationAction::from_shift(order, t);
        } catch (const Error& e) {
            throw ValidationError("/translation/shift", e.what());
        }
    }
    if (j.contains("metadata")) {
        if (!j["metadata"].is_object()) throw ValidationError("/metadata", "must be an object");
        inst.metadata = j["metadata"];
    }
    return inst;
}

inline Instance load_instance(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ValidationError(path, "cannot open file");
    json j;
    try {
        in >> j;
    } catch (const json::parse_error& e) {
        throw ValidationError(path, std::string("parse error: ") + e.what());
    }
    return instance_from_json(j);
}

inline void save_instance(const Instance& inst, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw Error("cannot write " + path);
    out << to_json(inst).dump(1) << '\n';
}

/// The G-complex of an instance; instances without a complex cannot be used for K-theory.
inline GComplex instance_gcomplex(const Instance& inst) {
    if (!inst.complex)
        throw ValidationError("/complex",
                              "instance '" + inst.name + "' has no complex; generate one with `rdq gen torus|sphere`");
    const ComplexData& c = *inst.complex;
    return {SimplicialComplex::from_facets(c.vertices.size(), c.simplices),
            SimplicialAction(inst.action.order(), c.generator_vertex_perm)};
}

struct ValidationCheck {
    std::string name;
    bool ok = false;
    std::string detail;
};

struct ValidationReport {
    std::vector<ValidationCheck> checks;
    bool pass() const {
        for (const auto& c : checks)
            if (!c.ok) return false;
        return true;
    }
};

/// Semantic checks beyond parsing: compatibility with J and regularity of the complex.
inline ValidationReport validate(const Instance& inst) {
    ValidationReport r;
    r.checks.push_back({"J0 skew-symmetric", is_skew_symmetric(inst.deformation.skeleton()), ""});
    const auto compat = check_compatibility(inst.action, inst.deformation);
    r.checks.push_back({"rho^T J0 rho = J0", compat.symplectic_ok, ""});
    r.checks.push_back({"det rho = 1", compat.det_ok, ""});
    r.checks.push_back({"rho^order = I", compat.order_ok, ""});
    if (inst.complex) {
        const GComplex g = instance_gcomplex(inst);
        r.checks.push_back({"vertex action is simplicial", true, std::to_string(g.complex.size()) + " simplices"});
        try {
            const GComplex reg = make_regular(g);
            r.checks.push_back({"regular after subdivision", true, "level " + std::to_string(reg.regularity_level)});
        } catch (const RegularityError& e) {
            r.checks.push_back({"regular after subdivision", false, e.what()});
        }
    }
    return r;
}

inline Instance generate_torus_instance(int order, int n = 6, double theta = 0.2) {
    const CyclicAction action = builtin_generator(order);
    if ((order == 3 || order == 6) && n % 6 != 0)
        throw ParameterError("orders 3 and 6 need N divisible by 6");
    if ((order == 2 || order == 4) && n % 2 != 0) throw ParameterError("orders 2 and 4 need even N");
    if (n < 4) throw ParameterError("N must be at least 4");
    const TorusTriangulation kind = default_triangulation(order);
    GeometricModel m = torus_model(action, n, kind);

    ComplexData c;
    c.vertices = m.coordinates;
    c.vertex_scale = m.scale;
    c.simplices = m.complex.facets();
    c.generator_vertex_perm = m.action.generator();
    c.model = "torus/" + to_string(kind);

    Instance inst{"torus_z" + std::to_string(order), DeformationForm::standard(theta), action, std::move(c),
                  std::nullopt, json::object()};
    inst.metadata = {{"space", "T^2"}, {"group", "Z_" + std::to_string(order)}, {"grid", n}};
    return inst;
}

inline Instance generate_sphere_instance(double theta = 0.2) {
    GeometricModel m = theta_sphere_model();
    ComplexData c;
    c.vertices = m.coordinates;
    c.vertex_scale = 0;
    c.simplices = m.complex.facets();
    c.generator_vertex_perm = m.action.generator();
    c.model = "cross_polytope";
    Instance inst{"theta_sphere_z2", DeformationForm::standard(theta), sphere_weight_action(), std::move(c),
                  std::nullopt, json::object()};
    inst.metadata = {{"space", "S^4"}, {"group", "Z_2"}, {"reflection", "(x1,-x2,x3,-x4,x5)"}};
    return inst;
}

}  // namespace rdq
