#include "ncc/cones.hpp"

#include "ncc/lp.hpp"
#include "ncc/models.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace ncc {

HalfspaceCone cmax_a(const RootSystem& rs, const EulerElement& h)
{
    return HalfspaceCone{grading(rs, h).plus};
}

GeneratedCone cmin_a(const RootSystem& rs, const EulerElement& h)
{
    GeneratedCone c;
    for (const auto& a : grading(rs, h).plus) c.generators.push_back(coroot(rs, a));
    return c;
}

bool contains(const HalfspaceCone& c, const RVector& x)
{
    return std::all_of(c.normals.begin(), c.normals.end(),
                       [&](const RVector& n) { return dot(n, x) >= 0; });
}

namespace {

// Normal vanishes identically on {x : N x >= 0}: max (nu, x) subject to
// N x >= 0, (nu, x) <= 1 is zero. Variables x = u - v, slacks s.
bool implicit_equality(const HalfspaceCone& c, const RVector& nu)
{
    const std::size_t d = nu.size(), m = c.normals.size();
    const std::size_t nv = 2 * d + m + 1;
    Matrix a;
    std::vector<Rational> b;
    for (std::size_t i = 0; i < m; ++i) {
        std::vector<Rational> row(nv, Rational(0));
        for (std::size_t k = 0; k < d; ++k) {
            row[k] = c.normals[i][k];
            row[d + k] = -c.normals[i][k];
        }
        row[2 * d + i] = -1;
        a.push_back(row);
        b.push_back(0);
    }
    std::vector<Rational> row(nv, Rational(0)), cost(nv, Rational(0));
    for (std::size_t k = 0; k < d; ++k) {
        row[k] = nu[k];
        row[d + k] = -nu[k];
        cost[k] = nu[k];
        cost[d + k] = -nu[k];
    }
    row[nv - 1] = 1;
    a.push_back(row);
    b.push_back(1);
    auto res = maximize(a, b, cost);
    return res.status == LpStatus::Optimal && res.value == 0;
}

}  // namespace

bool on_boundary(const HalfspaceCone& c, const RVector& x)
{
    if (!contains(c, x)) return false;
    for (const auto& n : c.normals)
        if (dot(n, x) == 0 && !implicit_equality(c, n)) return true;
    return false;
}

namespace {

Matrix generator_columns(const GeneratedCone& c, const RVector& x)
{
    Matrix a(x.size(), std::vector<Rational>(c.generators.size()));
    for (std::size_t j = 0; j < c.generators.size(); ++j) {
        if (c.generators[j].size() != x.size()) throw std::domain_error("cone: dimension mismatch");
        for (std::size_t i = 0; i < x.size(); ++i) a[i][j] = c.generators[j][i];
    }
    return a;
}

}  // namespace

bool contains_fm(const GeneratedCone& c, const RVector& x)
{
    return fm_feasible_nonneg(generator_columns(c, x), x.coords());
}

bool contains_simplex(const GeneratedCone& c, const RVector& x)
{
    return feasible_nonneg(generator_columns(c, x), x.coords());
}

bool contains(const GeneratedCone& c, const RVector& x)
{
    return x.size() <= 5 ? contains_fm(c, x) : contains_simplex(c, x);
}

bool in_relative_interior(const GeneratedCone& c, const RVector& x)
{
    // lambda = mu + t 1, mu >= 0, 0 <= t <= 1; maximize t.
    const std::size_t m = c.generators.size();
    Matrix g = generator_columns(c, x);
    Matrix a;
    std::vector<Rational> b = x.coords();
    for (std::size_t i = 0; i < x.size(); ++i) {
        std::vector<Rational> row(m + 2, Rational(0));
        Rational sum = 0;
        for (std::size_t j = 0; j < m; ++j) {
            row[j] = g[i][j];
            sum += g[i][j];
        }
        row[m] = sum;
        a.push_back(row);
    }
    std::vector<Rational> cap(m + 2, Rational(0));
    cap[m] = 1;
    cap[m + 1] = 1;
    a.push_back(cap);
    b.push_back(1);
    std::vector<Rational> cost(m + 2, Rational(0));
    cost[m] = 1;
    auto res = maximize(a, b, cost);
    return res.status == LpStatus::Optimal && res.value > 0;
}

bool on_boundary(const GeneratedCone& c, const RVector& x)
{
    return contains(c, x) && !in_relative_interior(c, x);
}

RVector central_component(const RootSystem& rs, const EulerElement& h, const GammaSet& g)
{
    (void)rs;
    return h.coweight - h_s(g);
}

namespace {

// All k-subsets of {0..n-1}, lexicographic.
template <class F>
void for_each_subset(std::size_t n, std::size_t k, F&& f)
{
    if (k > n) return;
    std::vector<std::size_t> idx(k);
    for (std::size_t i = 0; i < k; ++i) idx[i] = i;
    for (;;) {
        f(idx);
        std::size_t i = k;
        while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
        if (i == 0) return;
        ++idx[i - 1];
        for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
}

// Directions inside span(vs) orthogonal to the chosen vectors.
std::vector<RVector> orthogonal_complement_rows(const std::vector<RVector>& span, std::size_t n)
{
    return nullspace(span, n);
}

}  // namespace

std::vector<RVector> facet_normals(const GeneratedCone& c)
{
    if (c.generators.empty()) return {};
    const std::size_t n = c.generators[0].size();
    const std::size_t d = rank(c.generators);
    auto perp = orthogonal_complement_rows(c.generators, n);
    std::set<RVector> out;
    for_each_subset(c.generators.size(), d - 1, [&](const std::vector<std::size_t>& idx) {
        std::vector<RVector> rows = perp;
        std::vector<RVector> chosen;
        for (auto i : idx) chosen.push_back(c.generators[i]);
        if (rank(chosen) != d - 1) return;
        rows.insert(rows.end(), chosen.begin(), chosen.end());
        auto ker = nullspace(rows, n);
        if (ker.size() != 1) return;
        RVector nu = ker[0];
        bool pos = false, neg = false;
        for (const auto& g : c.generators) {
            Rational v = dot(nu, g);
            pos = pos || v > 0;
            neg = neg || v < 0;
        }
        if (pos && neg) return;
        if (neg) nu = -nu;
        out.insert(normalize_direction(nu));
    });
    return {out.begin(), out.end()};
}

std::vector<RVector> extreme_rays(const HalfspaceCone& c, const std::vector<RVector>& within)
{
    if (c.normals.empty() || within.empty()) return {};
    const std::size_t n = c.normals[0].size();
    const std::size_t d = rank(within);
    auto perp = orthogonal_complement_rows(within, n);
    std::set<RVector> out;
    for_each_subset(c.normals.size(), d - 1, [&](const std::vector<std::size_t>& idx) {
        std::vector<RVector> rows = perp;
        for (auto i : idx) rows.push_back(c.normals[i]);
        auto ker = nullspace(rows, n);
        if (ker.size() != 1) return;
        for (const RVector& ray : {ker[0], -ker[0]})
            if (contains(c, ray)) out.insert(normalize_direction(ray));
    });
    return {out.begin(), out.end()};
}

std::vector<double> crown_components(const std::vector<double>& x, bool has_center)
{
    std::vector<double> out;
    if (has_center) out.push_back(1.0);
    for (double xj : x) out.push_back(so2_euler_component(xj));
    return out;
}

bool crown_membership(int s, const std::vector<double>& x, bool has_center)
{
    if (s < 0 || static_cast<std::size_t>(s) != x.size())
        throw std::domain_error("crown: expected " + std::to_string(s) + " coordinates");
    auto comp = crown_components(x, has_center);
    return std::all_of(comp.begin(), comp.end(), [](double v) { return v > crown_tolerance; });
}

}  // namespace ncc
