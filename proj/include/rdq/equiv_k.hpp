#pragma once

// Rational equivariant K-theory ranks of a finite cyclic G-complex by the
// fixed-point strata sum
//
//     rank K^G_*(X) = sum over g in G of rank K_*(X^g / G),
//
// each term computed from the Betti numbers of a simplicial model of X^g / G
// (even Betti sum -> K_0, odd -> K_1). For Z_2 this is, chart by chart,
// K(fixed set) + K(orbit space).

#include <cstddef>
#include <cstdint>
#include <vector>

#include "rdq/homology.hpp"
#include "rdq/simplicial.hpp"

namespace rdq {

struct StratumContribution {
    int group_exponent = 0;
    std::size_t fixed_size = 0;  // simplices in the fixed subcomplex
    std::size_t fixed_vertices = 0;
    BettiVector quotient_betti;
    std::int64_t even = 0;
    std::int64_t odd = 0;
};

struct StrataReport {
    int regularity_level = 0;
    std::vector<StratumContribution> strata;
    std::int64_t k0_rank = 0;
    std::int64_t k1_rank = 0;
};

inline StrataReport equivariant_k_ranks(const GComplex& g, RankMethod method = RankMethod::kModular,
                                        int max_subdiv = 2) {
    const GComplex regular = make_regular(g, max_subdiv);
    StrataReport report;
    report.regularity_level = regular.regularity_level;
    for (int k = 0; k < regular.action.order(); ++k) {
        const GComplex fixed = fixed_gcomplex(regular, k);
        StratumContribution s;
        s.group_exponent = k;
        s.fixed_size = fixed.complex.size();
        s.fixed_vertices = fixed.complex.num_vertices();
        s.quotient_betti = betti_numbers(quotient_complex(fixed), method);
        const KRanks kr = k_ranks(s.quotient_betti);
        s.even = kr.even;
        s.odd = kr.odd;
        report.k0_rank += s.even;
        report.k1_rank += s.odd;
        report.strata.push_back(std::move(s));
    }
    return report;
}

}  // namespace rdq
