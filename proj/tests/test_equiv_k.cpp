#include <catch_amalgamated.hpp>

#include <fstream>

#include <json.hpp>

#include "rdq/equiv_k.hpp"
#include "rdq/models.hpp"

using namespace rdq;

namespace {

nlohmann::json oracle() {
    std::ifstream in(RDQ_FIXTURE_DIR "/strata_oracle.json");
    REQUIRE(in.good());
    return nlohmann::json::parse(in);
}

GComplex torus(int order, int n = 6) {
    const auto m = torus_model(builtin_generator(order), n, default_triangulation(order));
    return {m.complex, m.action};
}

}  // namespace

TEST_CASE("torus strata agree with the reference fixture") {
    const auto ref = oracle();
    for (int i : {2, 3, 4, 6}) {
        const auto& r = ref.at("torus_z" + std::to_string(i));
        for (auto method : {RankMethod::kModular, RankMethod::kExact}) {
            const auto rep = equivariant_k_ranks(torus(i), method);
            CHECK(rep.k0_rank == r.at("k0_rank").get<std::int64_t>());
            CHECK(rep.k1_rank == r.at("k1_rank").get<std::int64_t>());
            REQUIRE(rep.strata.size() == r.at("strata").size());
            for (std::size_t k = 0; k < rep.strata.size(); ++k) {
                const auto& s = r.at("strata")[k];
                CHECK(rep.strata[k].even == s.at("even").get<std::int64_t>());
                CHECK(rep.strata[k].odd == s.at("odd").get<std::int64_t>());
                if (!s.at("fixed_points").is_null())
                    CHECK(static_cast<std::int64_t>(rep.strata[k].fixed_vertices) ==
                          s.at("fixed_points").get<std::int64_t>());
            }
        }
    }
}

TEST_CASE("published totals") {
    const auto t2 = equivariant_k_ranks(torus(2));
    CHECK(t2.k0_rank == 6);
    CHECK(t2.k1_rank == 0);
    const auto m = theta_sphere_model();
    const auto s4 = equivariant_k_ranks(GComplex(m.complex, m.action));
    CHECK(s4.k0_rank == 4);
    CHECK(s4.k1_rank == 0);
    CHECK(s4.regularity_level == 0);
    CHECK(s4.strata[0].quotient_betti.values == std::vector<std::int64_t>{1, 0, 0, 0, 1});
    CHECK(s4.strata[1].quotient_betti.values == std::vector<std::int64_t>{1, 0, 1});
    const auto all = oracle();
    const auto& ref = all.at("sphere_z2");
    CHECK(s4.k0_rank == ref.at("k0_rank").get<std::int64_t>());
}

TEST_CASE("ranks do not depend on the grid") {
    for (int i : {2, 3, 4, 6}) {
        const auto a = equivariant_k_ranks(torus(i, 6));
        const auto b = equivariant_k_ranks(torus(i, 12));
        CHECK(a.k0_rank == b.k0_rank);
        CHECK(a.k1_rank == b.k1_rank);
    }
}

TEST_CASE("trivial action reduces to ordinary K-theory") {
    const auto m = torus_model(builtin_generator(2), 6, TorusTriangulation::kTriangular);
    const auto rep = equivariant_k_ranks(GComplex(m.complex, SimplicialAction::trivial(m.complex.num_vertices())));
    CHECK(rep.k0_rank == 2);
    CHECK(rep.k1_rank == 2);
}
