#pragma once

#include "ncc/rootsys.hpp"

#include <vector>

namespace ncc {

struct EulerElement {
    int index = 0;   // j, 1-based Bourbaki numbering
    RVector coweight;
};

struct Grading {
    std::vector<RVector> plus;   // Sigma_1
    std::vector<RVector> zero;   // Sigma_0
    std::vector<RVector> minus;  // Sigma_-1
};

// h_j with alpha_k(h_j) = delta_jk, inside the span of the roots.
// Throws std::invalid_argument for BC.
std::vector<RVector> fundamental_coweights(const RootSystem& rs);

// Coweights h_j whose mark n_j is 1.
std::vector<EulerElement> euler_elements(const RootSystem& rs);

// The coweight h_j; throws std::domain_error unless it is an Euler element.
EulerElement euler_element(const RootSystem& rs, int j);

Grading grading(const RootSystem& rs, const EulerElement& h);

// -h in W.h
bool is_symmetric(const RootSystem& rs, const EulerElement& h);

}  // namespace ncc
