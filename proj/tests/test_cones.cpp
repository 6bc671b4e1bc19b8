#include "oracles.hpp"

#include "ncc/cones.hpp"
#include "ncc/euler.hpp"
#include "ncc/linalg.hpp"
#include "ncc/strongorth.hpp"

#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

using namespace ncc;

namespace {

// x_j >= x_k for j <= p < k
bool su_cmax_oracle(const RVector& x, int p)
{
    for (int j = 0; j < p; ++j)
        for (std::size_t k = p; k < x.size(); ++k)
            if (x[j] < x[k]) return false;
    return true;
}

RVector random_sum_zero(std::mt19937& rng, std::size_t n)
{
    std::uniform_int_distribution<int> d(-4, 4);
    RVector x(n);
    Rational s = 0;
    for (std::size_t i = 0; i < n; ++i) {
        x[i] = d(rng);
        s += x[i];
    }
    for (std::size_t i = 0; i < n; ++i) x[i] -= s / static_cast<long>(n);
    return x;
}

std::vector<RVector> sorted_directions(std::vector<RVector> v)
{
    for (auto& x : v) x = normalize_direction(x);
    std::sort(v.begin(), v.end());
    return v;
}

}  // namespace

TEST_CASE("property: the maximal cone of su(p,q) is x_j >= x_k across the blocks")
{
    std::mt19937 rng(2718);
    for (int n = 3; n <= 6; ++n)
        for (int p = 1; 2 * p <= n; ++p) {
            auto rs = build(make_kind(Family::A, n - 1));
            auto c = cmax_a(rs, euler_element(rs, p));
            for (int t = 0; t < 40; ++t) {
                auto x = random_sum_zero(rng, n);
                CHECK(contains(c, x) == su_cmax_oracle(x, p));
            }
        }
}

TEST_CASE("the center of su(p,q) lies in Cmax but not in Cmin")
{
    for (auto [p, q] : {std::pair{1, 2}, {2, 3}, {2, 4}, {3, 4}}) {
        CAPTURE(p);
        CAPTURE(q);
        auto rs = build(make_kind(Family::A, p + q - 1));
        auto h = euler_element(rs, p);
        auto z = oracle::su_center(p, q);
        CHECK(contains(cmax_a(rs, h), z));
        CHECK_FALSE(contains(cmin_a(rs, h), z));
        for (const auto& a : grading(rs, h).plus) {
            auto v = dot(a, z);
            CHECK((v == 0 || v == Rational(1, 2)));
        }
    }
}

TEST_CASE("su(2,1): h_0 is on the boundary of Cmax and outside Cmin")
{
    auto rs = build(make_kind(Family::A, 2));
    for (int j : {1, 2}) {
        CAPTURE(j);
        auto h = euler_element(rs, j);
        auto h0 = central_component(rs, h, gamma_hc(rs, h));
        CHECK(h0 == (j == 2 ? RVector{Rational(-1, 6), Rational(1, 3), Rational(-1, 6)}
                            : RVector{Rational(1, 6), Rational(-1, 3), Rational(1, 6)}));
        CHECK(on_boundary(cmax_a(rs, h), h0));
        CHECK_FALSE(contains(cmin_a(rs, h), h0));
    }
    // the same point against h_1
    auto h1 = euler_element(rs, 1);
    CHECK_FALSE(contains(cmax_a(rs, h1), RVector{Rational(-1, 6), Rational(1, 3), Rational(-1, 6)}));
}

TEST_CASE("h_0 lies in Cmax and Cmin is inside Cmax")
{
    for (const auto& k : oracle::reduced_grid()) {
        if (k.rank > 6) continue;
        auto rs = build(k);
        for (const auto& h : euler_elements(rs)) {
            CAPTURE(to_string(k));
            CAPTURE(h.index);
            auto cmax = cmax_a(rs, h);
            CHECK(contains(cmax, central_component(rs, h, gamma_hc(rs, h))));
            for (const auto& g : cmin_a(rs, h).generators) CHECK(contains(cmax, g));
            CHECK(contains(cmax, h.coweight));
            CHECK_FALSE(on_boundary(cmax, h.coweight));
        }
    }
}

TEST_CASE("boundary and relative interior of generated cones")
{
    auto rs = build(make_kind(Family::A, 3));
    auto h = euler_element(rs, 2);
    auto cmin = cmin_a(rs, h);
    RVector sum(rs.ambient_dim);
    for (const auto& g : cmin.generators) sum += g;
    CHECK(in_relative_interior(cmin, sum));
    CHECK_FALSE(on_boundary(cmin, sum));
    CHECK(on_boundary(cmin, cmin.generators.front()));
    CHECK(on_boundary(cmin, RVector(rs.ambient_dim)));
    CHECK_FALSE(contains(cmin, -sum));
    CHECK_FALSE(on_boundary(cmin, -sum));
}

TEST_CASE("half-space boundary ignores implicit equalities")
{
    // x >= 0, y >= 0, -y >= 0: the line y = 0 with two faces
    HalfspaceCone c{{RVector{1, 0}, RVector{0, 1}, RVector{0, -1}}};
    CHECK_FALSE(on_boundary(c, RVector{1, 0}));
    CHECK(on_boundary(c, RVector{0, 0}));
    CHECK_FALSE(contains(c, RVector{1, 1}));
}

TEST_CASE("facets of Cmin are the extreme rays of Cmax")
{
    for (const auto& [k, j] : {std::pair{make_kind(Family::A, 3), 2}, {make_kind(Family::A, 3), 1},
                              {make_kind(Family::B, 3), 1}, {make_kind(Family::C, 3), 3},
                              {make_kind(Family::D, 4), 1}}) {
        CAPTURE(to_string(k));
        auto rs = build(k);
        auto h = euler_element(rs, j);
        auto cmin = cmin_a(rs, h);
        auto f = facet_normals(cmin);
        auto e = extreme_rays(cmax_a(rs, h), rs.simple);
        CHECK(sorted_directions(f) == sorted_directions(e));
        for (const auto& nu : f)
            for (const auto& g : cmin.generators) CHECK(dot(nu, g) >= 0);
    }
}

TEST_CASE("property: Fourier-Motzkin and simplex agree on cone membership")
{
    std::mt19937 rng(4242);
    std::uniform_int_distribution<int> coef(-3, 3);
    int inside = 0;
    for (int t = 0; t < 1500; ++t) {
        const std::size_t dim = 2 + t % 4;
        const std::size_t ngen = 2 + t % 6;
        GeneratedCone c;
        for (std::size_t i = 0; i < ngen; ++i) {
            RVector g(dim);
            for (std::size_t a = 0; a < dim; ++a) g[a] = coef(rng);
            c.generators.push_back(g);
        }
        RVector x(dim);
        if (t % 3 == 0) {
            // a known nonnegative combination
            for (const auto& g : c.generators) x += Rational(std::abs(coef(rng))) * g;
        } else {
            for (std::size_t a = 0; a < dim; ++a) x[a] = coef(rng);
        }
        bool fm = contains_fm(c, x);
        CHECK(fm == contains_simplex(c, x));
        if (t % 3 == 0) CHECK(fm);
        inside += fm;
    }
    CHECK(inside > 450);
}

TEST_CASE("crown components and membership")
{
    const double half_pi = std::numbers::pi / 2;
    auto c = crown_components({0.0, 1.0}, true);
    REQUIRE(c.size() == 3);
    CHECK(c[0] == 1.0);
    CHECK(std::abs(c[1] - 1.0) < 1e-12);
    CHECK(std::abs(c[2] - std::cos(1.0)) < 1e-12);
    CHECK(crown_membership(2, {0.5, -0.5}, false));
    CHECK_FALSE(crown_membership(2, {0.5, half_pi}, false));
    CHECK_FALSE(crown_membership(1, {half_pi + 1e-6}, true));
    CHECK(crown_membership(0, {}, true));
    CHECK_THROWS_AS(crown_membership(2, {0.1}, false), std::domain_error);
}

TEST_CASE("property: crown membership is invariant under signs and permutations")
{
    std::mt19937 rng(99);
    std::uniform_real_distribution<double> d(-2.5, 2.5);
    for (int t = 0; t < 200; ++t) {
        const int s = 1 + t % 3;
        std::vector<double> x(s);
        for (auto& v : x) v = d(rng);
        bool m = crown_membership(s, x, t % 2);
        auto y = x;
        std::shuffle(y.begin(), y.end(), rng);
        y[0] = -y[0];
        CHECK(crown_membership(s, y, t % 2) == m);
        double mx = 0;
        for (double v : x) mx = std::max(mx, std::abs(v));
        CHECK(m == (mx < std::numbers::pi / 2));
    }
}
