#include "ncc/strongorth.hpp"

#include <algorithm>
#include <stdexcept>

namespace ncc {

bool strongly_orthogonal(const RootSystem& rs, const RVector& a, const RVector& b)
{
    return dot(a, b) == 0 && !rs.is_root(a + b) && !rs.is_root(a - b);
}

GammaSet gamma_hc(const RootSystem& rs, const EulerElement& h, const TieBreak& tie)
{
    std::vector<RVector> pool;
    for (const auto& a : grading(rs, h).plus)
        if (rs.is_long(a)) pool.push_back(a);

    GammaSet g;
    for (;;) {
        std::vector<RVector> cand;
        for (const auto& a : pool) {
            bool ok = std::all_of(g.gammas.begin(), g.gammas.end(),
                                  [&](const RVector& c) { return strongly_orthogonal(rs, a, c); });
            if (ok) cand.push_back(a);
        }
        if (cand.empty()) break;
        std::vector<RVector> maximal;
        for (const auto& a : cand) {
            bool dominated = std::any_of(cand.begin(), cand.end(), [&](const RVector& b) {
                return !(b == a) && rs.root_leq(a, b);
            });
            if (!dominated) maximal.push_back(a);
        }
        std::size_t pick = maximal.size() - 1;
        if (tie) {
            pick = tie(maximal);
            if (pick >= maximal.size()) throw std::out_of_range("tie-break index");
        }
        g.gammas.push_back(maximal[pick]);
    }
    if (g.gammas.empty() || !(g.gammas.front() == rs.highest))
        throw std::logic_error("gamma_1 is not the highest root");
    return g;
}

RVector project_gamma(const GammaSet& g, const RVector& alpha)
{
    RVector p(alpha.size());
    for (const auto& c : g.gammas) p += (dot(alpha, c) / dot(c, c)) * c;
    return p;
}

namespace {

// Coordinates of pr(alpha) in the gamma basis: alpha(gamma_j^vee)/2.
std::vector<Rational> gamma_coords(const GammaSet& g, const RVector& alpha)
{
    std::vector<Rational> c;
    for (const auto& gm : g.gammas) c.push_back(dot(alpha, gm) / dot(gm, gm));
    return c;
}

std::vector<std::size_t> support(const std::vector<Rational>& c)
{
    std::vector<std::size_t> s;
    for (std::size_t j = 0; j < c.size(); ++j)
        if (c[j] != 0) s.push_back(j);
    return s;
}

}  // namespace

HCPartition hc_partition(const RootSystem& rs, const EulerElement& h, const GammaSet& g)
{
    const std::size_t r = g.r();
    HCPartition p;
    p.gamma = g;
    p.Cj.assign(r, {});
    p.Pj.assign(r, {});
    p.G.assign(r, {});
    const Rational half(1, 2);
    auto gr = grading(rs, h);

    for (const auto& a : gr.plus) {
        auto c = gamma_coords(g, a);
        auto s = support(c);
        if (s.size() == 1 && c[s[0]] == 1 && a == g.gammas[s[0]]) p.G[s[0]].push_back(a);
        else if (s.size() == 1 && c[s[0]] == half) p.Pj[s[0]].push_back(a);
        else if (s.size() == 2 && c[s[0]] == half && c[s[1]] == half)
            p.Pjk[{static_cast<int>(s[0]), static_cast<int>(s[1])}].push_back(a);
        else
            throw std::logic_error("Sigma_1 root outside every fiber: " + to_string(a));
    }
    for (const auto& a : gr.zero) {
        if (!rs.is_positive(a)) continue;
        auto c = gamma_coords(g, a);
        auto s = support(c);
        if (s.empty()) p.C0.push_back(a);
        else if (s.size() == 1 && c[s[0]] == half) p.Cj[s[0]].push_back(a);
        else if (s.size() == 2 && c[s[0]] == half && c[s[1]] == -half)
            p.Cjk[{static_cast<int>(s[0]), static_cast<int>(s[1])}].push_back(a);
        else
            throw std::logic_error("Sigma_0^+ root outside every fiber: " + to_string(a));
    }
    return p;
}

ProjectedType projected_type(const HCPartition& p)
{
    for (std::size_t j = 0; j < p.gamma.r(); ++j)
        if (!p.Pj[j].empty() || !p.Cj[j].empty()) return ProjectedType::BC;
    return ProjectedType::C;
}

RVector h_s(const GammaSet& g)
{
    if (g.gammas.empty()) return {};
    RVector s(g.gammas[0].size());
    for (const auto& c : g.gammas) s += (Rational(1) / dot(c, c)) * c;
    return s;
}

HsConditions check_hs_conditions(const RootSystem& rs, const EulerElement& h)
{
    auto g = gamma_hc(rs, h);
    auto p = hc_partition(rs, h, g);
    HsConditions out;
    out.symmetric = is_symmetric(rs, h);
    out.equals_hs = h_s(g) == h.coweight;
    out.fibers_empty = true;
    for (std::size_t j = 0; j < g.r(); ++j)
        out.fibers_empty = out.fibers_empty && p.Pj[j].empty() && p.Cj[j].empty();
    out.type_c = projected_type(p) == ProjectedType::C;
    return out;
}

bool in_coroot_span(const GammaSet& g, const RVector& h)
{
    std::vector<RVector> cs;
    for (const auto& c : g.gammas) cs.push_back((Rational(2) / dot(c, c)) * c);
    return in_span(cs, h);
}

}  // namespace ncc
