// rdq: command-line front end for the workbench.
//
// Exit codes: 0 success, 1 a checked identity or expectation failed,
// 2 usage or validation error.

#include <cmath>
#include <complex>
#include <cstdint>
#include <cstdio>
#include <iomanip>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "rdq/rdq.hpp"

namespace {

using namespace rdq;

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kUsage = 2;

std::string fmt_complex(Complex z) {
    std::ostringstream os;
    os << std::setprecision(12) << z.real() << (z.imag() < 0 ? " - " : " + ") << std::abs(z.imag()) << "i";
    return os.str();
}

std::vector<Rational> parse_shift(const std::string& s) {
    std::vector<Rational> out;
    std::stringstream ss(s);
    std::string item;
    int i = 0;
    while (std::getline(ss, item, ','))
        out.push_back(detail::parse_rational(item, "--shift/" + std::to_string(i++)));
    return out;
}

int cmd_check_compat(const std::string& file) {
    const Instance inst = load_instance(file);
    const auto r = check_compatibility(inst.action, inst.deformation);
    std::cout << "instance        " << inst.name << "\n"
              << "rho^T J0 rho=J0 " << (r.symplectic_ok ? "yes" : "no") << "\n"
              << "det rho = 1     " << (r.det_ok ? "yes" : "no") << "\n"
              << "rho^i = I       " << (r.order_ok ? "yes" : "no") << "\n";
    for (const auto& w : r.witnesses)
        std::cout << "  mismatch at (" << w.row << "," << w.col << ")\n";
    return r.pass() ? kOk : kFailed;
}

int cmd_product(const std::vector<std::int64_t>& p, const std::vector<std::int64_t>& q, double theta) {
    if (p.size() != q.size() || p.empty() || p.size() % 2 != 0)
        throw ParameterError("--p and --q need the same even number of entries");
    IntMatrix j0(p.size(), p.size());
    for (std::size_t i = 0; i + 1 < p.size(); i += 2) {
        j0(i, i + 1) = 1;
        j0(i + 1, i) = -1;
    }
    const DeformationForm form(j0, theta);
    const BasisProduct bp = basis_product(Weight(p), Weight(q), form);
    const Complex law = phase_factor(bp.phase, theta);
    const Complex integral = oscillatory_check(Weight(p), Weight(q), form);
    const double diff = std::abs(law - integral);
    std::cout << "e_p x e_q      = exp(-2 pi i theta * " << bp.phase.value << ") e_" << bp.weight << "\n"
              << "phase law      " << fmt_complex(law) << "\n"
              << "oscillatory    " << fmt_complex(integral) << "\n"
              << "difference     " << std::scientific << diff << "\n";
    return diff <= 1e-3 ? kOk : kFailed;
}

AlgebraElement random_element(std::size_t rank, int box, int terms, std::mt19937_64& rng) {
    std::uniform_int_distribution<std::int64_t> coord(-box, box);
    std::uniform_real_distribution<double> coef(-1.0, 1.0);
    AlgebraElement a(rank);
    for (int t = 0; t < terms; ++t) {
        std::vector<std::int64_t> w(rank);
        for (auto& x : w) x = coord(rng);
        a.add(Weight(w), Complex(coef(rng), coef(rng)));
    }
    return a;
}

int cmd_equivariance(const std::string& file, int samples, std::uint64_t seed, int box) {
    const Instance inst = load_instance(file);
    std::mt19937_64 rng(seed);
    const std::size_t n = inst.deformation.rank();
    double worst = 0.0;
    std::size_t mismatches = 0;
    for (int s = 0; s < samples; ++s) {
        const AlgebraElement a = random_element(n, box, 4, rng);
        const AlgebraElement b = random_element(n, box, 4, rng);
        for (int k = 1; k < inst.action.order(); ++k) {
            const auto r = equivariance_residual(inst.action, inst.action.element(k), a, b, inst.deformation, true);
            worst = std::max(worst, r.residual);
            mismatches += r.mismatches.size();
        }
    }
    std::cout << "samples            " << samples << " (seed " << seed << ")\n"
              << "max residual       " << std::scientific << worst << "\n"
              << "exponent mismatches " << mismatches << "\n";
    return mismatches == 0 && worst == 0.0 ? kOk : kFailed;
}

int cmd_crossed_iso(const std::string& file, int box, std::optional<double> theta) {
    const Instance inst = load_instance(file);
    if (!inst.translation) throw ValidationError("/translation", "instance has no translation action");
    const DeformationForm form = theta ? inst.deformation.with_theta(*theta) : inst.deformation;
    const auto r = commuting_deformation_compare(*inst.translation, inst.translation->order(), form, box);
    std::cout << "theta               " << form.theta() << "\n"
              << "pairs compared      " << r.pairs_compared << "\n"
              << "exponent mismatches " << r.exponent_mismatches << "\n"
              << "max |difference|    " << r.max_abs_difference << "\n";
    return r.exponent_mismatches == 0 && r.max_abs_difference == 0.0 ? kOk : kFailed;
}

int cmd_ktheory(const std::string& file, const std::string& method_name, bool as_json,
                const std::vector<std::int64_t>& expect) {
    const Instance inst = load_instance(file);
    const RankMethod method = parse_rank_method(method_name);
    const StrataReport rep = equivariant_k_ranks(instance_gcomplex(inst), method);
    if (as_json) {
        json j;
        j["k0_rank"] = rep.k0_rank;
        j["k1_rank"] = rep.k1_rank;
        j["strata"] = json::array();
        for (const auto& s : rep.strata)
            j["strata"].push_back({{"g", s.group_exponent},
                                   {"fixed_size", s.fixed_size},
                                   {"betti", s.quotient_betti.values},
                                   {"even", s.even},
                                   {"odd", s.odd}});
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "instance " << inst.name << "  method " << to_string(method) << "  subdivision level "
                  << rep.regularity_level << "\n";
        std::cout << "  g   |X^g|  betti(X^g/G)      even  odd\n";
        for (const auto& s : rep.strata) {
            std::ostringstream b;
            for (std::size_t k = 0; k < s.quotient_betti.size(); ++k) b << (k ? "," : "") << s.quotient_betti[k];
            std::cout << "  " << std::setw(2) << s.group_exponent << std::setw(7) << s.fixed_size << "  "
                      << std::left << std::setw(16) << b.str() << std::right << std::setw(6) << s.even
                      << std::setw(5) << s.odd << "\n";
        }
        std::cout << "K^G_0 rank " << rep.k0_rank << "\nK^G_1 rank " << rep.k1_rank << "\n";
    }
    if (!expect.empty()) {
        if (expect.size() != 2) throw ParameterError("--expect takes k0,k1");
        if (rep.k0_rank != expect[0] || rep.k1_rank != expect[1]) {
            std::cerr << "expected (" << expect[0] << ", " << expect[1] << ")\n";
            return kFailed;
        }
    }
    return kOk;
}

int cmd_projection(double theta_prime, double eps, std::size_t grid) {
    const ProjectionReport r = projection_residuals({theta_prime, eps, grid});
    std::cout << std::scientific << std::setprecision(3) << "g(t) g(t-theta')               " << r.cond_orthogonality
              << "\n"
              << "g(t)(f(t)+f(t-theta')-1)       " << r.cond_partition << "\n"
              << "f - f^2 - g^2 - g(t+theta')^2  " << r.cond_square << "\n"
              << "max |p x p - p|                " << r.square_defect << "\n"
              << std::fixed << std::setprecision(12) << "trace (closed form)            " << r.trace << "\n"
              << "trace (quadrature)             " << r.trace_quadrature << "\n";
    const double worst = std::max({r.cond_orthogonality, r.cond_partition, r.cond_square, r.square_defect});
    return worst <= 1e-12 && std::abs(r.trace - theta_prime) <= 1e-12 ? kOk : kFailed;
}

int cmd_sphere_relations(double theta, bool as_json) {
    const DeformationForm form = DeformationForm::standard(theta);
    const RelationReport rep = relation_report(form);
    double worst = 0.0;
    for (const auto& row : rep.rows) worst = std::max(worst, row.deviation);
    const GroupElement g(1, 2);
    const std::vector<SphereElement> gens{
        SphereElement::generator(SphereMonomial::kZ1), SphereElement::generator(SphereMonomial::kZ1Bar),
        SphereElement::generator(SphereMonomial::kZ2), SphereElement::generator(SphereMonomial::kZ2Bar),
        SphereElement::generator(SphereMonomial::kX5)};
    double equiv = 0.0;
    for (const auto& u : gens)
        for (const auto& v : gens) equiv = std::max(equiv, sphere_equivariance_residual(g, u, v, form));
    if (as_json) {
        json j;
        j["theta"] = theta;
        j["relations"] = json::array();
        for (const auto& row : rep.rows)
            j["relations"].push_back({{"left", row.left},
                                      {"right", row.right},
                                      {"ratio_exponent", row.ratio_exponent},
                                      {"deviation", row.deviation}});
        j["equivariance_residual"] = equiv;
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "left x right = exp(2 pi i theta k) right x left, theta = " << theta << "\n";
        for (const auto& row : rep.rows)
            std::cout << "  " << std::left << std::setw(7) << row.left << std::setw(7) << row.right << std::right
                      << " k = " << std::setw(3) << row.ratio_exponent << "  deviation " << row.deviation << "\n";
        std::cout << "sphere_action equivariance residual " << equiv << "\n";
    }
    return worst <= 1e-12 && equiv == 0.0 ? kOk : kFailed;
}

int cmd_validate(const std::string& file) {
    const Instance inst = load_instance(file);
    const ValidationReport r = validate(inst);
    std::cout << "instance " << inst.name << "\n";
    for (const auto& c : r.checks)
        std::cout << "  [" << (c.ok ? "ok" : "FAIL") << "] " << c.name << (c.detail.empty() ? "" : "  " + c.detail)
                  << "\n";
    return r.pass() ? kOk : kFailed;
}

void write_instance(const Instance& inst, const std::string& out) {
    if (out.empty() || out == "-")
        std::cout << to_json(inst).dump(1) << "\n";
    else
        save_instance(inst, out);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Rieffel deformation workbench"};
    app.require_subcommand(1);

    std::string file;
    auto* compat = app.add_subcommand("check-compat", "check rho^T J0 rho = J0, det and order");
    compat->add_option("file", file, "instance file")->required();

    std::vector<std::int64_t> p, q;
    double theta = 0.25;
    auto* product = app.add_subcommand("product", "deformed product of two characters vs the oscillatory integral");
    product->add_option("--p", p, "weight p, comma separated")->required()->delimiter(',');
    product->add_option("--q", q, "weight q, comma separated")->required()->delimiter(',');
    product->add_option("--theta", theta, "deformation parameter");

    int samples = 20, box = 3;
    std::uint64_t seed = 20240917;
    auto* equiv = app.add_subcommand("equivariance", "beta_g(a x b) - beta_g(a) x beta_g(b) on random elements");
    equiv->add_option("file", file, "instance file")->required();
    equiv->add_option("--samples", samples, "number of random pairs");
    equiv->add_option("--seed", seed, "random seed");
    equiv->add_option("--box", box, "weight box for random elements");

    int iso_box = 2;
    std::optional<double> iso_theta;
    auto* iso = app.add_subcommand("crossed-iso", "compare deform-then-cross with cross-then-deform");
    iso->add_option("file", file, "instance file with a translation")->required();
    iso->add_option("--box", iso_box, "weight box");
    iso->add_option("--theta", iso_theta, "override theta");

    std::string method = "modular";
    bool as_json = false;
    std::vector<std::int64_t> expect;
    auto* kth = app.add_subcommand("ktheory", "equivariant K-theory ranks by the strata sum");
    kth->add_option("file", file, "instance file")->required();
    kth->add_option("--method", method, "exact|modular")->check(CLI::IsMember({"exact", "modular"}));
    kth->add_flag("--json", as_json, "machine-readable report");
    kth->add_option("--expect", expect, "expected k0,k1; exit 1 on mismatch")->delimiter(',');

    double theta_prime = 0.3, eps = 0.1;
    std::size_t grid = 100000;
    auto* proj = app.add_subcommand("projection", "residuals of the bump-function projection");
    proj->add_option("--theta-prime", theta_prime, "rotation angle in (0, 1/2)");
    proj->add_option("--eps", eps, "ramp width");
    proj->add_option("--grid", grid, "sample grid size");

    double sphere_theta = 0.2;
    auto* sphere = app.add_subcommand("sphere-relations", "commutation relations of the deformed 4-sphere");
    sphere->add_option("--theta", sphere_theta, "deformation parameter");
    sphere->add_flag("--json", as_json, "machine-readable report");

    auto* gen = app.add_subcommand("gen", "generate an instance file");
    gen->require_subcommand(1);
    int order = 2, grid_n = 6;
    double gen_theta = 0.2;
    std::string shift, out;
    auto* gen_torus = gen->add_subcommand("torus", "T^2 with a builtin Z_i action");
    gen_torus->add_option("--order", order, "2, 3, 4 or 6");
    gen_torus->add_option("--n", grid_n, "grid size N");
    gen_torus->add_option("--theta", gen_theta, "deformation parameter");
    gen_torus->add_option("--shift", shift, "translation shift, e.g. 1/2,1/2");
    gen_torus->add_option("-o,--output", out, "output file (default stdout)");
    auto* gen_sphere = gen->add_subcommand("sphere", "S^4 with the Z_2 reflection");
    gen_sphere->add_option("--theta", gen_theta, "deformation parameter");
    gen_sphere->add_option("-o,--output", out, "output file (default stdout)");

    auto* val = app.add_subcommand("validate", "parse and check an instance file");
    val->add_option("file", file, "instance file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (*compat) return cmd_check_compat(file);
        if (*product) return cmd_product(p, q, theta);
        if (*equiv) return cmd_equivariance(file, samples, seed, box);
        if (*iso) return cmd_crossed_iso(file, iso_box, iso_theta);
        if (*kth) return cmd_ktheory(file, method, as_json, expect);
        if (*proj) return cmd_projection(theta_prime, eps, grid);
        if (*sphere) return cmd_sphere_relations(sphere_theta, as_json);
        if (*val) return cmd_validate(file);
        if (*gen_torus) {
            Instance inst = generate_torus_instance(order, grid_n, gen_theta);
            if (!shift.empty()) {
                inst.translation = TranslationAction::from_shift(order, parse_shift(shift));
                inst.name += "_translation";
            }
            write_instance(inst, out);
            return kOk;
        }
        if (*gen_sphere) {
            write_instance(generate_sphere_instance(gen_theta), out);
            return kOk;
        }
    } catch (const ValidationError& e) {
        std::cerr << "invalid instance: " << e.what() << "\n";
        return kUsage;
    } catch (const ParameterError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const UnsupportedOrderError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const DimensionError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const NumericalFailure& e) {
        std::cerr << "numerical failure: " << e.what() << "\n";
        return kFailed;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kFailed;
    }
    return kUsage;
}
