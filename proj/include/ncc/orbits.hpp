#pragma once

#include "ncc/euler.hpp"

#include <vector>

namespace ncc {

struct OrbitClassification {
    std::size_t total_points = 0;          // |W.h|
    std::size_t class_count = 0;
    std::vector<RVector> representatives;  // lexicographically minimal per class, sorted
    std::vector<std::size_t> class_sizes;  // aligned with representatives
};

// W_0-orbits on W.h, W_0 generated by all reflections in Sigma_0.
OrbitClassification double_cosets(const RootSystem& rs, const EulerElement& h);

}  // namespace ncc
