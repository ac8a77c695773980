// Acceptance run: one PASS/FAIL line per criterion, each with a time budget.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <numbers>
#include <random>
#include <sstream>
#include <string>

#include "rdq/rdq.hpp"

using namespace rdq;

namespace {

const std::string kInstances = RDQ_INSTANCE_DIR;
const std::string kFixtures = RDQ_FIXTURE_DIR;

struct Outcome {
    bool ok = false;
    std::string detail;
};

int g_failures = 0;

void run(const char* id, double budget_s, const std::function<Outcome()>& body) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
        o = body();
    } catch (const std::exception& e) {
        o = {false, std::string("exception: ") + e.what()};
    }
    const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const bool in_time = s <= budget_s;
    const bool pass = o.ok && in_time;
    if (!pass) ++g_failures;
    std::printf("%s %s  %s  [%.2f s / %.0f s%s]\n", id, pass ? "PASS" : "FAIL", o.detail.c_str(), s, budget_s,
                in_time ? "" : " over budget");
    std::fflush(stdout);
}

std::string pair_str(std::int64_t a, std::int64_t b) {
    return "(" + std::to_string(a) + ", " + std::to_string(b) + ")";
}

Outcome ktheory_of(const std::string& file, RankMethod method, std::int64_t k0, std::int64_t k1) {
    const auto rep = equivariant_k_ranks(instance_gcomplex(load_instance(kInstances + "/" + file)), method);
    return {rep.k0_rank == k0 && rep.k1_rank == k1, file + " -> " + pair_str(rep.k0_rank, rep.k1_rank) +
                                                        ", expected " + pair_str(k0, k1)};
}

AlgebraElement random_element(std::mt19937_64& rng) {
    std::uniform_int_distribution<std::int64_t> w(-3, 3);
    std::uniform_real_distribution<double> c(-1.0, 1.0);
    AlgebraElement a(2);
    for (int t = 0; t < 5; ++t) a.add(Weight({w(rng), w(rng)}), {c(rng), c(rng)});
    return a;
}

std::vector<Weight> box(int b) {
    std::vector<Weight> out;
    for (int x = -b; x <= b; ++x)
        for (int y = -b; y <= b; ++y) out.push_back(Weight({x, y}));
    return out;
}

Outcome homology_integrity(const std::string& name, const SimplicialComplex& k, bool subdivide) {
    std::ostringstream os;
    const auto d = boundary_matrices(k);
    for (std::size_t i = 0; i + 1 < d.size(); ++i)
        if (multiply(d[i], d[i + 1]).nonzeros() != 0) return {false, name + ": dd != 0"};
    const auto exact = betti_numbers(k, RankMethod::kExact);
    const auto modular = betti_numbers(k, RankMethod::kModular);
    if (!(exact == modular)) return {false, name + ": exact and modular Betti differ"};
    std::int64_t chi = 0;
    for (std::size_t i = 0; i < exact.size(); ++i) chi += (i % 2 ? -1 : 1) * exact[i];
    if (chi != k.euler_characteristic()) return {false, name + ": Euler characteristic mismatch"};
    if (subdivide && !(betti_numbers(barycentric_subdivide(k).complex, RankMethod::kModular) == exact))
        return {false, name + ": subdivision changes Betti numbers"};
    os << name << " b=(";
    for (std::size_t i = 0; i < exact.size(); ++i) os << (i ? "," : "") << exact[i];
    os << ")";
    return {true, os.str()};
}

}  // namespace

int main() {
    run("AC1", 10, [] { return ktheory_of("torus_z2.json", RankMethod::kModular, 6, 0); });

    run("AC2", 60, [] { return ktheory_of("sphere_z2.json", RankMethod::kModular, 4, 0); });

    run("AC3", 30, [] {
        std::ifstream in(kFixtures + "/strata_oracle.json");
        const json ref = json::parse(in);
        std::ostringstream os;
        bool ok = true;
        for (int i : {3, 4, 6}) {
            const std::string name = "torus_z" + std::to_string(i);
            const auto rep = equivariant_k_ranks(instance_gcomplex(load_instance(kInstances + "/" + name + ".json")));
            const auto& r = ref.at(name);
            bool same = rep.k0_rank == r.at("k0_rank").get<std::int64_t>() &&
                        rep.k1_rank == r.at("k1_rank").get<std::int64_t>() &&
                        rep.strata.size() == r.at("strata").size();
            for (std::size_t k = 0; same && k < rep.strata.size(); ++k)
                same = rep.strata[k].even == r.at("strata")[k].at("even").get<std::int64_t>() &&
                       rep.strata[k].odd == r.at("strata")[k].at("odd").get<std::int64_t>();
            ok = ok && same;
            os << "Z_" << i << " " << pair_str(rep.k0_rank, rep.k1_rank) << (same ? "" : " (oracle disagrees)") << "  ";
        }
        return Outcome{ok, os.str()};
    });

    run("AC4", 60, [] {
        double worst = 0.0;
        std::size_t pairs = 0;
        for (double theta : {0.1, 0.25, 1.0 / 3.0}) {
            const auto f = DeformationForm::standard(theta);
            for (const auto& p : box(2))
                for (const auto& q : box(2)) {
                    const Complex law = phase_factor(phase_exponent(p, q, f), theta);
                    worst = std::max(worst, std::abs(oscillatory_check(p, q, f) - law));
                    ++pairs;
                }
        }
        std::ostringstream os;
        os << pairs << " pairs, max |integral - phase law| = " << worst;
        return Outcome{worst <= 1e-3, os.str()};
    });

    run("AC5", 30, [] {
        const auto f = DeformationForm::standard(0.3);
        std::size_t cocycle_fail = 0;
        const auto b5 = box(5);
        for (const auto& p : b5)
            for (const auto& q : b5) {
                const auto mpq = phase_exponent(p, q, f).value;
                for (const auto& r : b5)
                    cocycle_fail += mpq + phase_exponent(p + q, r, f).value !=
                                    phase_exponent(q, r, f).value + phase_exponent(p, q + r, f).value;
            }

        std::mt19937_64 rng(20240917);
        double star_worst = 0.0, trace_worst = 0.0;
        for (int t = 0; t < 200; ++t) {
            const auto a = random_element(rng), c = random_element(rng);
            star_worst = std::max(star_worst, l1_norm(star(deformed_product(a, c, f)) -
                                                      deformed_product(star(c), star(a), f)));
            trace_worst = std::max(trace_worst, std::abs(trace(deformed_product(a, c, f)) -
                                                         trace(deformed_product(c, a, f))));
        }

        double equiv_worst = 0.0;
        std::size_t mismatches = 0;
        const auto b3 = box(3);
        for (int i : {2, 3, 4, 6}) {
            const auto act = builtin_generator(i);
            for (int k = 1; k < i; ++k)
                for (const auto& p : b3)
                    for (const auto& q : b3) {
                        const auto r = equivariance_residual(act, act.element(k), AlgebraElement::basis(p),
                                                             AlgebraElement::basis(q), f);
                        equiv_worst = std::max(equiv_worst, r.residual);
                        mismatches += r.mismatches.size();
                    }
        }

        const CyclicAction swap(2, IntMatrix{{0, 1}, {1, 0}});
        const bool control_rejected = !check_compatibility(swap, f).pass();
        const auto neg = equivariance_residual(swap, swap.element(1), AlgebraElement::basis(Weight({1, 0})),
                                               AlgebraElement::basis(Weight({0, 1})), f, true);
        const bool control_fails = control_rejected && !neg.mismatches.empty() && neg.residual > 0.0;

        std::ostringstream os;
        os << "cocycle failures " << cocycle_fail << ", star " << star_worst << ", trace " << trace_worst
           << ", equivariance " << equiv_worst << " (" << mismatches << " mismatches), det -1 control "
           << (control_fails ? "fails as expected" : "did not fail");
        const bool ok = cocycle_fail == 0 && star_worst < 1e-12 && trace_worst < 1e-12 && equiv_worst == 0.0 &&
                        mismatches == 0 && control_fails;
        return Outcome{ok, os.str()};
    });

    run("AC6", 5, [] {
        const Instance inst = load_instance(kInstances + "/torus_z2_translation.json");
        if (!inst.translation) return Outcome{false, "instance has no translation"};
        std::ostringstream os;
        bool ok = inst.translation->shift() == std::vector<Rational>{Rational(1, 2), Rational(1, 2)};
        for (double theta : {0.0, 0.1, 1.0 / 3.0}) {
            const auto r =
                commuting_deformation_compare(*inst.translation, 2, inst.deformation.with_theta(theta), 2);
            ok = ok && r.max_abs_difference == 0.0 && r.exponent_mismatches == 0;
            os << "theta " << theta << ": diff " << r.max_abs_difference << "  ";
        }
        return Outcome{ok, os.str()};
    });

    run("AC7", 5, [] {
        std::ostringstream os;
        bool ok = true;
        for (auto [tp, eps] : {std::pair{0.3, 0.1}, std::pair{std::numbers::sqrt2 - 1.0, 0.05}}) {
            const auto r = projection_residuals({tp, eps, 100000});
            const double worst = std::max({r.cond_orthogonality, r.cond_partition, r.cond_square, r.square_defect});
            ok = ok && worst <= 1e-12 && std::abs(r.trace - tp) <= 1e-12;
            os << "theta' " << tp << ": residual " << worst << " trace " << r.trace << "  ";
        }
        return Outcome{ok, os.str()};
    });

    run("AC8", 5, [] {
        const auto f = DeformationForm::standard(0.2);
        const auto rep = relation_report(f);
        const auto* z12 = rep.find("z1", "z2");
        bool ok = z12 && z12->ratio_exponent == -2 && z12->deviation <= 1e-12;
        for (const char* g : {"z1", "z1bar", "z2", "z2bar", "x5"})
            for (const char* c : {"x5", "radius"}) {
                if (std::string(g) == c) continue;
                const auto* row = rep.find(g, c);
                ok = ok && row && row->ratio_exponent == 0 && row->deviation <= 1e-12;
            }
        using M = SphereMonomial;
        double equiv = 0.0;
        const GroupElement g(1, 2);
        for (auto a : {M::kZ1, M::kZ1Bar, M::kZ2, M::kZ2Bar, M::kX5})
            for (auto b : {M::kZ1, M::kZ1Bar, M::kZ2, M::kZ2Bar, M::kX5})
                equiv = std::max(equiv, sphere_equivariance_residual(g, SphereElement::generator(a),
                                                                     SphereElement::generator(b), f));
        ok = ok && equiv == 0.0;
        std::ostringstream os;
        os << "z1 x z2 = exp(2 pi i theta * " << (z12 ? z12->ratio_exponent : 0)
           << ") z2 x z1, x5 and radius central, reflection residual " << equiv;
        return Outcome{ok, os.str()};
    });

    run("AC9", 120, [] {
        const GComplex t = instance_gcomplex(load_instance(kInstances + "/torus_z2.json"));
        const GComplex s = instance_gcomplex(load_instance(kInstances + "/sphere_z2.json"));
        std::ostringstream os;
        bool ok = true;
        // S4/Z2 is already subdivided once by the quotient; its own subdivision is
        // replaced by the quotient of the subdivided sphere below.
        struct Case {
            std::string name;
            SimplicialComplex complex;
            bool subdivide;
        };
        const SimplicialComplex s_quotient = quotient_complex(s);
        for (const auto& c : {Case{"T2", t.complex, true}, Case{"T2/Z2", quotient_complex(t), true},
                              Case{"S4", s.complex, true}, Case{"S4/Z2", s_quotient, false}}) {
            const Outcome o = homology_integrity(c.name, c.complex, c.subdivide);
            ok = ok && o.ok;
            os << o.detail << "  ";
        }
        const bool quotient_stable = betti_numbers(quotient_complex(barycentric_subdivide(s))) == betti_numbers(s_quotient);
        ok = ok && quotient_stable;
        os << "sd(S4)/Z2 " << (quotient_stable ? "matches" : "differs");
        return Outcome{ok, os.str()};
    });

    std::printf("%s: %d criteria failed\n", g_failures ? "FAIL" : "PASS", g_failures);
    return g_failures ? 1 : 0;
}
