#pragma once

#include "ncc/euler.hpp"

#include <functional>
#include <map>
#include <utility>
#include <vector>

namespace ncc {

struct GammaSet {
    std::vector<RVector> gammas;  // gamma_1 .. gamma_r
    std::size_t r() const { return gammas.size(); }
};

// Picks one of the maximal candidates (given in lexicographic order).
using TieBreak = std::function<std::size_t(const std::vector<RVector>&)>;

// gamma_1 = highest root, then repeatedly a maximal long root of Sigma_1
// strongly orthogonal to the previous ones. Default tie-break: lexicographically largest.
GammaSet gamma_hc(const RootSystem& rs, const EulerElement& h, const TieBreak& tie = {});

bool strongly_orthogonal(const RootSystem& rs, const RVector& a, const RVector& b);

// sum_j (alpha(gamma_j^vee)/2) gamma_j
RVector project_gamma(const GammaSet& g, const RVector& alpha);

struct HCPartition {
    GammaSet gamma;
    std::vector<RVector> C0;
    std::vector<std::vector<RVector>> Cj, Pj;                    // index j-1
    std::map<std::pair<int, int>, std::vector<RVector>> Cjk, Pjk;  // (j,k), 0-based, j<k
    std::vector<std::vector<RVector>> G;                         // Sigma_1 fibers over gamma_j
};

// Throws std::logic_error when a root misses every admissible fiber.
HCPartition hc_partition(const RootSystem& rs, const EulerElement& h, const GammaSet& g);

enum class ProjectedType { C, BC };
ProjectedType projected_type(const HCPartition& p);

// 1/2 sum gamma_j^vee
RVector h_s(const GammaSet& g);

// Four conditions that are equivalent for an Euler element: symmetry,
// h = h_s, empty P_j/C_j fibers, projected type C.
struct HsConditions {
    bool symmetric = false;
    bool equals_hs = false;
    bool fibers_empty = false;
    bool type_c = false;
    bool coincide() const
    {
        return symmetric == equals_hs && equals_hs == fibers_empty && fibers_empty == type_c;
    }
};
HsConditions check_hs_conditions(const RootSystem& rs, const EulerElement& h);

// h lies in the rational span of the coroots gamma_j^vee.
bool in_coroot_span(const GammaSet& g, const RVector& h);

}  // namespace ncc
