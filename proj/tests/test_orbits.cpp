#include "oracles.hpp"

#include "ncc/euler.hpp"
#include "ncc/orbits.hpp"

#include <doctest.h>

#include <algorithm>
#include <numeric>

using namespace ncc;

namespace {

std::size_t binom(int n, int k)
{
    std::size_t c = 1;
    for (int i = 1; i <= k; ++i) c = c * (n - k + i) / i;
    return c;
}

}  // namespace

TEST_CASE("A_{n-1} with h_p has p+1 double-coset classes")
{
    for (int n = 2; n <= 8; ++n)
        for (int p = 1; 2 * p <= n; ++p) {
            CAPTURE(n);
            CAPTURE(p);
            auto rs = build(make_kind(Family::A, n - 1));
            auto c = double_cosets(rs, euler_element(rs, p));
            CHECK(c.class_count == static_cast<std::size_t>(p + 1));
            CHECK(c.class_count == oracle::a_type_double_cosets(n, p));
            CHECK(c.total_points == binom(n, p));
            CHECK(std::accumulate(c.class_sizes.begin(), c.class_sizes.end(), std::size_t{0}) == c.total_points);
        }
}

TEST_CASE("C3 with h_3")
{
    auto rs = build(make_kind(Family::C, 3));
    auto c = double_cosets(rs, euler_element(rs, 3));
    CHECK(c.total_points == 8);
    CHECK(c.class_count == 4);
    CHECK(c.class_sizes.size() == 4);
}

TEST_CASE("representatives are the lexicographic minima of their classes")
{
    for (const auto& k : {make_kind(Family::D, 4), make_kind(Family::B, 3), make_kind(Family::E6, 6)}) {
        auto rs = build(k);
        for (const auto& h : euler_elements(rs)) {
            CAPTURE(to_string(k));
            auto c = double_cosets(rs, h);
            auto g = grading(rs, h);
            CHECK(std::is_sorted(c.representatives.begin(), c.representatives.end()));
            auto orbit = weyl_orbit(rs, h.coweight);
            CHECK(orbit.size() == c.total_points);
            for (std::size_t i = 0; i < c.representatives.size(); ++i) {
                auto cls = reflection_closure(g.zero, {c.representatives[i]});
                CHECK(cls.front() == c.representatives[i]);
                CHECK(cls.size() == c.class_sizes[i]);
                CHECK(std::binary_search(orbit.begin(), orbit.end(), c.representatives[i]));
            }
        }
    }
}
