#include "ncc/models.hpp"

#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

using namespace ncc;

TEST_CASE("sl2 basis relations")
{
    auto b = sl2_basis();
    for (auto [h, e, f] : {std::tuple{b.h0, b.e0, b.f0}, {b.h1, b.e1, b.f1}}) {
        CHECK(bracket(h, e) == e);
        CHECK(bracket(h, f) == Rational(-1) * f);
        CHECK(bracket(e, f) == Rational(2) * h);
        CHECK(cartan_theta(e) == Rational(-1) * f);
        CHECK(trace(h) == 0);
    }
    CHECK(b.h1 == Rational(1, 2) * (b.e0 + b.f0));
    CHECK(bracket(Rational(1, 2) * (b.e0 - b.f0), b.h0) == Rational(-1) * b.h1);
    CHECK(bracket(Rational(1, 2) * (b.e0 - b.f0), b.h1) == b.h0);
}

TEST_CASE("tau and the conjugation by g0")
{
    auto b = sl2_basis();
    CHECK(sl2_tau(b.h0) == b.h0);
    CHECK(sl2_tau(b.h1) == Rational(-1) * b.h1);
    CHECK(sl2_tau(b.e0 - b.f0) == Rational(-1) * (b.e0 - b.f0));
    CHECK(ad_g0(b.h1) == b.h0);
    CHECK(ad_g0(b.h0) == Rational(-1) * b.h1);
    Mat2 x{3, -1, 2, -3};
    CHECK(det(ad_g0(x)) == det(x));
    CHECK(sl2_tau(sl2_tau(x)) == x);
    CHECK(bracket(sl2_tau(x), sl2_tau(b.e0)) == sl2_tau(bracket(x, b.e0)));
}

TEST_CASE("rotation of h0")
{
    for (int i = 0; i < 16; ++i) {
        double t = -4.0 + 0.5 * i;
        auto [c, s] = rotate_h0(t);
        CHECK(std::abs(c - std::cos(t)) < 1e-12);
        CHECK(std::abs(s + std::sin(t)) < 1e-12);
    }
    CHECK(std::abs(so2_euler_component(std::numbers::pi / 3) - 0.5) < 1e-12);
}

TEST_CASE("property: spectral radius formula matches eigenvalues")
{
    std::mt19937 rng(5);
    std::uniform_real_distribution<double> d(-3, 3);
    for (int t = 0; t < 50; ++t) {
        std::vector<double> x(1 + t % 4);
        for (auto& v : x) v = d(rng);
        CHECK(std::abs(sl2s_spectral_radius(x) - sl2s_spectral_radius_numeric(x)) < 1e-10);
    }
}

TEST_CASE("Cahen-Wallach example p = q = 1")
{
    auto g = cw_build(1, 1, {1}, {2});
    CHECK(g.dim == 6);
    CHECK(cw_jacobi(g));
    CHECK(cw_beta_invariant(g));
    CHECK(cw_d_skew(g));
    CHECK(cw_tau_automorphism(g));
    auto s = signature(g.beta);
    CHECK(s.plus == 4);
    CHECK(s.minus == 2);
    CHECK(s.zero == 0);
    CHECK(cw_minus_tau_dim(g) == 4);
    auto r = signature(restrict_form(g.beta, cw_minus_tau_basis(g)));
    CHECK(r.plus == 3);
    CHECK(r.minus == 1);
}

TEST_CASE("oscillator instance")
{
    auto g = cw_build(0, 1, {1}, {});
    CHECK(g.dim == 4);
    CHECK(cw_jacobi(g));
    auto s = signature(g.beta);
    CHECK(s.plus == 3);
    CHECK(s.minus == 1);
}

TEST_CASE("Cahen-Wallach parameter checks")
{
    CHECK_THROWS_AS(cw_build(1, 1, {0}, {2}), std::domain_error);
    CHECK_THROWS_AS(cw_build(0, 2, {2, 1}, {}), std::domain_error);
    CHECK_THROWS_AS(cw_build(1, 1, {1}, {}), std::domain_error);
    CHECK_THROWS_AS(cw_build(-1, 1, {1}, {}), std::domain_error);
    CHECK_NOTHROW(cw_build(0, 2, {1, 1}, {}));
}

TEST_CASE("property: random Cahen-Wallach algebras")
{
    std::mt19937 rng(1234);
    std::uniform_int_distribution<int> pq(0, 2), num(1, 7), den(1, 3);
    for (int t = 0; t < 10; ++t) {
        int p = pq(rng), q = 1 + pq(rng);
        auto draw = [&](int n) {
            std::vector<Rational> v;
            for (int i = 0; i < n; ++i) v.emplace_back(num(rng), den(rng));
            for (auto& x : v) x.canonicalize();
            std::sort(v.begin(), v.end());
            return v;
        };
        auto g = cw_build(p, q, draw(q), draw(p));
        CAPTURE(p);
        CAPTURE(q);
        CHECK(cw_jacobi(g));
        CHECK(cw_beta_invariant(g));
        CHECK(cw_d_skew(g));
        CHECK(cw_tau_automorphism(g));
        auto s = signature(g.beta);
        CHECK(s.plus == static_cast<std::size_t>(p + 1 + 2 * q));
        CHECK(s.minus == static_cast<std::size_t>(p + 1));
        auto r = signature(restrict_form(g.beta, cw_minus_tau_basis(g)));
        CHECK(r.plus == static_cast<std::size_t>(1 + q + p));
        CHECK(r.minus == 1);
    }
}

TEST_CASE("congruence signature")
{
    Matrix m{{0, 1}, {1, 0}};
    auto s = signature(m);
    CHECK(s.plus == 1);
    CHECK(s.minus == 1);
    Matrix z{{1, 1}, {1, 1}};
    s = signature(z);
    CHECK(s.plus == 1);
    CHECK(s.zero == 1);
}
