// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include "oracles.hpp"

#include "ncc/catalog.hpp"
#include "ncc/cones.hpp"
#include "ncc/euler.hpp"
#include "ncc/models.hpp"
#include "ncc/orbits.hpp"
#include "ncc/strongorth.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <iostream>
#include <numbers>
#include <random>
#include <sstream>
#include <string>

using namespace ncc;

namespace {

constexpr double kRotationTol = 1e-12;
constexpr double kSpectralTol = 1e-10;

// Collects the first few failure notes of one criterion.
struct Check {
    bool ok = true;
    std::vector<std::string> notes;

    void require(bool cond, const std::string& what)
    {
        if (cond) return;
        ok = false;
        if (notes.size() < 5) notes.push_back(what);
    }
};

std::string where(const RootSystemKind& k, int j = 0)
{
    return to_string(k) + (j ? " h_" + std::to_string(j) : "");
}

std::vector<int> indices(const std::vector<EulerElement>& es)
{
    std::vector<int> v;
    for (const auto& e : es) v.push_back(e.index);
    return v;
}

void euler_sets(Check& c)
{
    for (const auto& k : oracle::reduced_grid()) {
        std::vector<int> want = oracle::euler_indices(k);
        c.require(indices(euler_elements(build(k))) == want, where(k));
    }
    for (const auto& k : oracle::bc_grid()) c.require(euler_elements(build(k)).empty(), where(k));
}

void symmetric_sets(Check& c)
{
    for (const auto& k : oracle::reduced_grid()) {
        auto rs = build(k);
        std::vector<int> got;
        for (const auto& e : euler_elements(rs))
            if (is_symmetric(rs, e)) got.push_back(e.index);
        c.require(got == oracle::symmetric_indices(k), where(k));
    }
}

void hc_partitions(Check& c)
{
    for (const auto& k : oracle::reduced_grid()) {
        auto rs = build(k);
        for (const auto& h : euler_elements(rs)) {
            try {
                auto g = gamma_hc(rs, h);
                auto p = hc_partition(rs, h, g);
                c.require(oracle::partition_is_cover(rs, h, g, p), where(k, h.index) + ": cover");
                auto t = projected_type(p);
                c.require(t == ProjectedType::C || t == ProjectedType::BC, where(k, h.index) + ": type");
                c.require(check_hs_conditions(rs, h).coincide(), where(k, h.index) + ": four conditions");
            } catch (const std::exception& ex) {
                c.require(false, where(k, h.index) + ": " + ex.what());
            }
        }
    }
}

void orbit_counts(Check& c)
{
    for (int n = 2; n <= 8; ++n)
        for (int p = 1; p <= n - p; ++p) {
            auto rs = build(make_kind(Family::A, n - 1));
            auto oc = double_cosets(rs, euler_element(rs, p));
            c.require(oc.class_count == static_cast<std::size_t>(p + 1),
                      "A" + std::to_string(n - 1) + " h_" + std::to_string(p));
        }
}

bool any_symmetric(const RootSystemKind& k, const std::vector<int>& idx)
{
    auto sym = oracle::symmetric_indices(k);
    return std::any_of(idx.begin(), idx.end(),
                       [&](int j) { return std::find(sym.begin(), sym.end(), j) != sym.end(); });
}

void catalog_integrity(Check& c)
{
    for (const auto& e : table3()) {
        try {
            c.require(r0(e) >= 0 && r1(e) >= 0, e.g_name + ": r0, r1");
            auto t = classify_type(e);
            bool rank_rule = (t == TypeClass::Complex || t == TypeClass::NonSplit) ? e.r == 2 * e.s : e.r == e.s;
            if (t == TypeClass::Cayley) rank_rule = rank_rule && e.restricted_kind.family == Family::C;
            c.require(t == e.type_class && rank_rule, e.g_name + ": type rules");
            bool tube = gc_tube_type(e), sym = causal_euler_symmetric(e), mod = is_modular(e);
            c.require(tube == sym && sym == mod, e.g_name + ": tube/symmetric/modular");
            c.require(sym == any_symmetric(e.restricted_kind, e.euler_indices), e.g_name + ": symmetric-element list");
        } catch (const std::exception& ex) {
            c.require(false, e.g_name + ": " + ex.what());
        }
    }
    auto t1 = table1(), t2 = table2();
    std::vector<std::string> want, got;
    for (const auto& e : t1) {
        if (e.tube_type) want.push_back(e.h_name);
        c.require(e.tube_type == any_symmetric(e.complexified_kind, e.euler_indices), e.h_name + ": symmetric-element list");
    }
    for (const auto& e : t2) got.push_back(e.h_name);
    c.require(got == want, "table 2 is not the tube-type filter of table 1");
}

void pi0_decisions(Check& c)
{
    for (const auto& e : table3()) {
        try {
            c.require(pi0(e).order == oracle::expected_pi0(e), e.g_name + " " + std::to_string(e.r));
        } catch (const std::exception& ex) {
            c.require(false, e.g_name + ": " + ex.what());
        }
    }
}

void cone_examples(Check& c)
{
    for (auto [p, q] : {std::pair{1, 2}, {2, 3}, {2, 4}, {3, 4}}) {
        auto rs = build(make_kind(Family::A, p + q - 1));
        auto h = euler_element(rs, p);
        auto z = oracle::su_center(p, q);
        const std::string tag = "su(" + std::to_string(p) + "," + std::to_string(q) + ")";
        c.require(contains(cmax_a(rs, h), z), tag + ": z0 in Cmax");
        c.require(!contains(cmin_a(rs, h), z), tag + ": z0 not in Cmin");
    }
    {
        auto rs = build(make_kind(Family::A, 2));
        auto h = euler_element(rs, 2);
        auto h0 = central_component(rs, h, gamma_hc(rs, h));
        c.require(on_boundary(cmax_a(rs, h), h0), "su(2,1): h0 on the boundary of Cmax");
        c.require(!contains(cmin_a(rs, h), h0), "su(2,1): h0 outside Cmin");
    }
    for (const auto& k : oracle::reduced_grid()) {
        if (k.rank > 6) continue;
        auto rs = build(k);
        for (const auto& h : euler_elements(rs)) {
            auto cmax = cmax_a(rs, h);
            c.require(contains(cmax, central_component(rs, h, gamma_hc(rs, h))), where(k, h.index) + ": h0 in Cmax");
            bool sub = true;
            for (const auto& g : cmin_a(rs, h).generators) sub = sub && contains(cmax, g);
            c.require(sub, where(k, h.index) + ": Cmin in Cmax");
        }
    }
}

void crown_grid(Check& c)
{
    const double hp = std::numbers::pi / 2;
    const std::vector<double> values{0, hp - 1e-6, -(hp - 1e-6), hp + 1e-6, -(hp + 1e-6), 1, -1, hp, -hp};
    for (int s = 1; s <= 3; ++s) {
        std::vector<std::size_t> idx(s, 0);
        for (;;) {
            std::vector<double> x;
            double rho = 0;
            for (auto i : idx) {
                x.push_back(values[i]);
                rho = std::max(rho, std::abs(values[i]));
            }
            for (bool center : {false, true}) {
                bool got = crown_membership(s, x, center);
                std::ostringstream tag;
                tag << "s=" << s << " x0=" << x[0];
                c.require(got == (rho < hp), tag.str());
            }
            std::size_t d = 0;
            while (d < idx.size() && ++idx[d] == values.size()) idx[d++] = 0;
            if (d == idx.size()) break;
        }
    }
}

void sl2_model(Check& c)
{
    auto b = sl2_basis();
    const Rational m1(-1), two(2), half(1, 2);
    for (auto [h, e, f] : {std::tuple{b.h0, b.e0, b.f0}, {b.h1, b.e1, b.f1}}) {
        c.require(bracket(h, e) == e, "[h,e] = e");
        c.require(bracket(h, f) == m1 * f, "[h,f] = -f");
        c.require(bracket(e, f) == two * h, "[e,f] = 2h");
        c.require(cartan_theta(e) == m1 * f, "theta(e) = -f");
    }
    c.require(b.h1 == half * (b.e0 + b.f0), "h1 = (e0 + f0)/2");
    c.require(sl2_tau(b.h0) == b.h0, "tau fixes h0");
    c.require(sl2_tau(b.h1) == m1 * b.h1 && sl2_tau(b.e0 - b.f0) == m1 * (b.e0 - b.f0), "tau negates q");
    c.require(sl2_tau(b.e0) == m1 * b.e0 && sl2_tau(b.f0) == m1 * b.f0, "tau on e0, f0");
    c.require(ad_g0(b.h1) == b.h0 && ad_g0(b.h0) == m1 * b.h1, "conjugation by g0");
    c.require(bracket(half * (b.e0 - b.f0), b.h0) == m1 * b.h1, "[(e0-f0)/2, h0] = -h1");
    c.require(bracket(half * (b.e0 - b.f0), b.h1) == b.h0, "[(e0-f0)/2, h1] = h0");
    for (int i = 0; i < 64; ++i) {
        double t = -2 * std::numbers::pi + 4 * std::numbers::pi * i / 63.0;
        auto [ch, sh] = rotate_h0(t);
        c.require(std::abs(ch - std::cos(t)) < kRotationTol && std::abs(sh + std::sin(t)) < kRotationTol,
                  "rotation at t = " + std::to_string(t));
    }
    std::mt19937 rng(17);
    std::uniform_real_distribution<double> d(-3, 3);
    for (int t = 0; t < 60; ++t) {
        std::vector<double> x(1 + t % 4);
        for (auto& v : x) v = d(rng);
        c.require(std::abs(sl2s_spectral_radius(x) - sl2s_spectral_radius_numeric(x)) < kSpectralTol,
                  "spectral radius sample " + std::to_string(t));
    }
}

void cahen_wallach(Check& c)
{
    std::mt19937 rng(31);
    std::uniform_int_distribution<int> dim(0, 3), num(1, 9), den(1, 4);
    for (int t = 0; t < 20; ++t) {
        int p = dim(rng), q = dim(rng);
        if (p + q == 0) q = 1;
        auto draw = [&](int n) {
            std::vector<Rational> v;
            for (int i = 0; i < n; ++i) {
                Rational x(num(rng), den(rng));
                x.canonicalize();
                v.push_back(x);
            }
            std::sort(v.begin(), v.end());
            return v;
        };
        auto g = cw_build(p, q, draw(q), draw(p));
        const std::string tag = "p=" + std::to_string(p) + " q=" + std::to_string(q);
        c.require(cw_jacobi(g), tag + ": Jacobi");
        c.require(cw_beta_invariant(g), tag + ": invariance");
        auto s = signature(g.beta);
        c.require(s.zero == 0, tag + ": degenerate");
        c.require(s.plus == static_cast<std::size_t>(p + 1 + 2 * q) && s.minus == static_cast<std::size_t>(p + 1),
                  tag + ": signature");
    }
    auto osc = cw_build(0, 1, {1}, {});
    auto s = signature(osc.beta);
    c.require(s.plus == 3 && s.minus == 1 && s.zero == 0, "oscillator signature");
}

}  // namespace

int main()
{
    struct Criterion {
        const char* name;
        std::function<void(Check&)> run;
    };
    const std::vector<Criterion> criteria{
        {"Euler enumeration", euler_sets},
        {"symmetric Euler elements", symmetric_sets},
        {"Harish-Chandra partition", hc_partitions},
        {"double-coset counts in type A", orbit_counts},
        {"catalog integrity", catalog_integrity},
        {"pi0 decision", pi0_decisions},
        {"cone examples", cone_examples},
        {"crown membership", crown_grid},
        {"sl2 model", sl2_model},
        {"Cahen-Wallach algebras", cahen_wallach},
    };
    bool all = true;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Check c;
        auto t0 = std::chrono::steady_clock::now();
        try {
            criteria[i].run(c);
        } catch (const std::exception& ex) {
            c.require(false, std::string("exception: ") + ex.what());
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        all = all && c.ok;
        std::cout << (c.ok ? "PASS" : "FAIL") << "  " << i + 1 << ". " << criteria[i].name << "  ("
                  << secs << " s)\n";
        for (const auto& n : c.notes) std::cout << "      " << n << "\n";
    }
    return all ? 0 : 1;
}
