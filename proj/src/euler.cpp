#include "ncc/euler.hpp"

#include <algorithm>
#include <stdexcept>

namespace ncc {

namespace {

std::vector<RVector> dual_basis(const RootSystem& rs)
{
    const std::size_t n = rs.simple.size();
    std::vector<RVector> hs;
    for (std::size_t j = 0; j < n; ++j) {
        RVector h(rs.ambient_dim);
        for (std::size_t k = 0; k < n; ++k) h += rs.gram_inv[j][k] * rs.simple[k];
        hs.push_back(h);
    }
    return hs;
}

}  // namespace

std::vector<RVector> fundamental_coweights(const RootSystem& rs)
{
    if (!is_reduced(rs.kind))
        throw std::invalid_argument("fundamental coweights: unsupported kind " + to_string(rs.kind));
    return dual_basis(rs);
}

namespace {

bool three_valued(const RootSystem& rs, const RVector& h)
{
    return std::all_of(rs.roots.begin(), rs.roots.end(), [&](const RVector& a) {
        Rational v = dot(a, h);
        return v == -1 || v == 0 || v == 1;
    });
}

}  // namespace

// BC is accepted here: it has no 3-grading, and both rules report that.
std::vector<EulerElement> euler_elements(const RootSystem& rs)
{
    auto hs = dual_basis(rs);
    std::vector<EulerElement> out;
    for (std::size_t j = 0; j < hs.size(); ++j) {
        bool by_mark = rs.highest_coeffs[j] == 1;
        if (by_mark != three_valued(rs, hs[j]))
            throw std::logic_error("mark rule and pairing rule disagree at h_" + std::to_string(j + 1));
        if (by_mark) out.push_back(EulerElement{static_cast<int>(j) + 1, hs[j]});
    }
    return out;
}

EulerElement euler_element(const RootSystem& rs, int j)
{
    if (j < 1 || j > rs.kind.rank)
        throw std::domain_error("index h_" + std::to_string(j) + " out of range for " + to_string(rs.kind));
    for (auto& e : euler_elements(rs))
        if (e.index == j) return e;
    throw std::domain_error("h_" + std::to_string(j) + " is not an Euler element of " + to_string(rs.kind));
}

Grading grading(const RootSystem& rs, const EulerElement& h)
{
    Grading g;
    for (const auto& a : rs.roots) {
        Rational v = dot(a, h.coweight);
        if (v == 1) g.plus.push_back(a);
        else if (v == 0) g.zero.push_back(a);
        else if (v == -1) g.minus.push_back(a);
        else throw std::domain_error("not an Euler element: alpha(h) = " + to_string(v));
    }
    return g;
}

bool is_symmetric(const RootSystem& rs, const EulerElement& h)
{
    auto orbit = weyl_orbit(rs, h.coweight);
    return std::binary_search(orbit.begin(), orbit.end(), -h.coweight);
}

}  // namespace ncc
