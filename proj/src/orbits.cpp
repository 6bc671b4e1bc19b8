#include "ncc/orbits.hpp"

#include <set>

namespace ncc {

OrbitClassification double_cosets(const RootSystem& rs, const EulerElement& h)
{
    auto orbit = weyl_orbit(rs, h.coweight);
    auto zero = grading(rs, h).zero;

    OrbitClassification out;
    out.total_points = orbit.size();
    std::set<RVector> left(orbit.begin(), orbit.end());
    while (!left.empty()) {
        auto cls = reflection_closure(zero, {*left.begin()});
        for (const auto& x : cls) left.erase(x);
        out.representatives.push_back(cls.front());
        out.class_sizes.push_back(cls.size());
    }
    out.class_count = out.representatives.size();
    return out;
}

}  // namespace ncc
