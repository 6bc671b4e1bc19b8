#pragma once

#include "ncc/strongorth.hpp"

#include <vector>

namespace ncc {

// {x : (nu, x) >= 0 for every normal nu}
struct HalfspaceCone {
    std::vector<RVector> normals;
};

// Closed nonnegative hull of the generators.
struct GeneratedCone {
    std::vector<RVector> generators;
};

HalfspaceCone cmax_a(const RootSystem& rs, const EulerElement& h);
GeneratedCone cmin_a(const RootSystem& rs, const EulerElement& h);

bool contains(const HalfspaceCone& c, const RVector& x);
// Inside but not in the relative interior; normals that vanish on the whole
// cone (implicit equalities) are not counted as facets.
bool on_boundary(const HalfspaceCone& c, const RVector& x);

// Exact: Fourier-Motzkin for ambient dimension <= 5, simplex above.
bool contains(const GeneratedCone& c, const RVector& x);
bool contains_fm(const GeneratedCone& c, const RVector& x);
bool contains_simplex(const GeneratedCone& c, const RVector& x);
// x = sum lambda_i g_i with every lambda_i > 0.
bool in_relative_interior(const GeneratedCone& c, const RVector& x);
bool on_boundary(const GeneratedCone& c, const RVector& x);

// h_0 = h - h_s
RVector central_component(const RootSystem& rs, const EulerElement& h, const GammaSet& g);

// Double description by exhaustive enumeration inside span(basis_of).
// Facet normals of a generated cone (each taken inside the span, direction-normalized).
std::vector<RVector> facet_normals(const GeneratedCone& c);
// Extreme rays of a pointed half-space cone intersected with span(within).
std::vector<RVector> extreme_rays(const HalfspaceCone& c, const std::vector<RVector>& within);

// The Euler-direction coefficients of e^{ad x} h in the sl2^s model:
// h_0 coefficient first when has_center, then cos(x_j) per factor.
std::vector<double> crown_components(const std::vector<double>& x, bool has_center);

// All factor components strictly positive (beyond 1e-12).
bool crown_membership(int s, const std::vector<double>& x, bool has_center);

inline constexpr double crown_tolerance = 1e-12;

}  // namespace ncc
