#include "ncc/rootsys.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <set>
#include <stdexcept>

namespace ncc {

RootSystemKind make_kind(Family f, int rank)
{
    int fixed = 0;
    switch (f) {
    case Family::A: if (rank < 1) throw std::invalid_argument("A_n needs n >= 1"); break;
    case Family::B: if (rank < 2) throw std::invalid_argument("B_n needs n >= 2"); break;
    case Family::C: if (rank < 2) throw std::invalid_argument("C_n needs n >= 2"); break;
    case Family::D: if (rank < 3) throw std::invalid_argument("D_n needs n >= 3"); break;
    case Family::BC: if (rank < 1) throw std::invalid_argument("BC_n needs n >= 1"); break;
    case Family::E6: fixed = 6; break;
    case Family::E7: fixed = 7; break;
    case Family::E8: fixed = 8; break;
    case Family::F4: fixed = 4; break;
    case Family::G2: fixed = 2; break;
    }
    if (fixed && rank != fixed)
        throw std::invalid_argument(family_name(f) + " has rank " + std::to_string(fixed));
    return RootSystemKind{f, rank};
}

Family parse_family(const std::string& name)
{
    std::string u;
    for (char ch : name) u.push_back(static_cast<char>(std::toupper(static_cast<unsigned char>(ch))));
    static const std::pair<const char*, Family> names[] = {
        {"A", Family::A},   {"B", Family::B},   {"C", Family::C},   {"D", Family::D},
        {"E6", Family::E6}, {"E7", Family::E7}, {"E8", Family::E8}, {"F4", Family::F4},
        {"G2", Family::G2}, {"BC", Family::BC},
    };
    for (auto& [n, f] : names)
        if (u == n) return f;
    throw std::invalid_argument("unknown root system family: " + name);
}

std::string family_name(Family f)
{
    switch (f) {
    case Family::A: return "A";
    case Family::B: return "B";
    case Family::C: return "C";
    case Family::D: return "D";
    case Family::E6: return "E6";
    case Family::E7: return "E7";
    case Family::E8: return "E8";
    case Family::F4: return "F4";
    case Family::G2: return "G2";
    case Family::BC: return "BC";
    }
    return "?";
}

std::string to_string(const RootSystemKind& k)
{
    switch (k.family) {
    case Family::A: case Family::B: case Family::C: case Family::D: case Family::BC:
        return family_name(k.family) + std::to_string(k.rank);
    default:
        return family_name(k.family);
    }
}

bool is_reduced(const RootSystemKind& k) { return k.family != Family::BC; }

std::size_t classical_root_count(const RootSystemKind& k)
{
    const std::size_t n = static_cast<std::size_t>(k.rank);
    switch (k.family) {
    case Family::A: return n * (n + 1);
    case Family::B: case Family::C: return 2 * n * n;
    case Family::D: return 2 * n * (n - 1);
    case Family::BC: return 2 * n * n + 2 * n;
    case Family::E6: return 72;
    case Family::E7: return 126;
    case Family::E8: return 240;
    case Family::F4: return 48;
    case Family::G2: return 12;
    }
    return 0;
}

namespace {

RVector make(std::size_t dim, std::initializer_list<std::pair<std::size_t, Rational>> entries)
{
    RVector v(dim);
    for (auto& [i, x] : entries) v[i] = x;
    return v;
}

// e_i - e_j, 0-based.
RVector diff(std::size_t dim, std::size_t i, std::size_t j)
{
    return make(dim, {{i, 1}, {j, -1}});
}

struct Realization {
    std::size_t dim;
    std::vector<RVector> simple;
    std::vector<RVector> extra_seeds;
};

Realization realize(const RootSystemKind& k)
{
    const std::size_t n = static_cast<std::size_t>(k.rank);
    Realization r;
    const Rational half(1, 2);
    switch (k.family) {
    case Family::A:
        r.dim = n + 1;
        for (std::size_t i = 0; i < n; ++i) r.simple.push_back(diff(r.dim, i, i + 1));
        break;
    case Family::B: case Family::C: case Family::BC:
        r.dim = n;
        for (std::size_t i = 0; i + 1 < n; ++i) r.simple.push_back(diff(n, i, i + 1));
        r.simple.push_back(make(n, {{n - 1, k.family == Family::C ? 2 : 1}}));
        if (k.family == Family::BC) r.extra_seeds.push_back(make(n, {{n - 1, 2}}));
        break;
    case Family::D:
        r.dim = n;
        for (std::size_t i = 0; i + 1 < n; ++i) r.simple.push_back(diff(n, i, i + 1));
        r.simple.push_back(make(n, {{n - 2, 1}, {n - 1, 1}}));
        break;
    case Family::G2:
        r.dim = 3;
        r.simple.push_back(diff(3, 0, 1));
        r.simple.push_back(make(3, {{0, -2}, {1, 1}, {2, 1}}));
        break;
    case Family::F4:
        r.dim = 4;
        r.simple.push_back(diff(4, 1, 2));
        r.simple.push_back(diff(4, 2, 3));
        r.simple.push_back(make(4, {{3, 1}}));
        r.simple.push_back(make(4, {{0, half}, {1, -half}, {2, -half}, {3, -half}}));
        break;
    case Family::E6: case Family::E7: case Family::E8: {
        r.dim = 8;
        RVector a1(8);
        for (std::size_t i = 0; i < 8; ++i) a1[i] = (i == 0 || i == 7) ? half : -half;
        r.simple.push_back(a1);
        r.simple.push_back(make(8, {{0, 1}, {1, 1}}));
        for (std::size_t i = 1; i + 1 < n; ++i) r.simple.push_back(diff(8, i, i - 1));
        break;
    }
    }
    return r;
}

}  // namespace

std::vector<RVector> reflection_closure(const std::vector<RVector>& mirrors,
                                        const std::vector<RVector>& seeds)
{
    std::vector<std::pair<RVector, Rational>> m;  // (alpha, 2/(alpha,alpha))
    for (const auto& a : mirrors) m.emplace_back(a, Rational(2) / dot(a, a));
    std::set<RVector> seen(seeds.begin(), seeds.end());
    std::deque<RVector> queue(seen.begin(), seen.end());
    while (!queue.empty()) {
        RVector x = queue.front();
        queue.pop_front();
        for (const auto& [a, s] : m) {
            RVector y = x - (s * dot(a, x)) * a;
            if (seen.insert(y).second) queue.push_back(std::move(y));
        }
    }
    return {seen.begin(), seen.end()};
}

bool RootSystem::is_root(const RVector& x) const
{
    return std::binary_search(roots.begin(), roots.end(), x);
}

bool RootSystem::is_positive(const RVector& x) const
{
    return std::binary_search(positive.begin(), positive.end(), x);
}

std::vector<Rational> RootSystem::simple_coords(const RVector& x) const
{
    if (x.size() != ambient_dim) throw std::domain_error("simple_coords: dimension mismatch");
    const std::size_t n = simple.size();
    std::vector<Rational> pair(n), c(n, Rational(0));
    for (std::size_t k = 0; k < n; ++k) pair[k] = dot(simple[k], x);
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k) c[j] += gram_inv[j][k] * pair[k];
    return c;
}

bool RootSystem::root_leq(const RVector& beta, const RVector& alpha) const
{
    auto c = simple_coords(alpha - beta);
    return std::all_of(c.begin(), c.end(), [](const Rational& x) { return x >= 0 && x.get_den() == 1; });
}

RootSystem build(const RootSystemKind& kind)
{
    make_kind(kind.family, kind.rank);
    Realization real = realize(kind);
    RootSystem rs;
    rs.kind = kind;
    rs.ambient_dim = real.dim;
    rs.simple = real.simple;

    const std::size_t n = rs.simple.size();
    rs.gram.assign(n, std::vector<Rational>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k) rs.gram[i][k] = dot(rs.simple[i], rs.simple[k]);
    rs.gram_inv = inverse(rs.gram);

    auto seeds = real.simple;
    seeds.insert(seeds.end(), real.extra_seeds.begin(), real.extra_seeds.end());
    rs.roots = reflection_closure(rs.simple, seeds);

    rs.max_norm2 = 0;
    int best_height = -1;
    for (const auto& a : rs.roots) {
        rs.max_norm2 = std::max(rs.max_norm2, dot(a, a));
        auto c = rs.simple_coords(a);
        bool nonneg = std::all_of(c.begin(), c.end(), [](const Rational& x) { return x >= 0; });
        bool nonpos = std::all_of(c.begin(), c.end(), [](const Rational& x) { return x <= 0; });
        if (!(nonneg || nonpos)) throw std::logic_error("root neither positive nor negative");
        if (!nonneg) continue;
        rs.positive.push_back(a);
        Rational height = 0;
        for (const auto& x : c) height += x;
        if (height.get_den() != 1) throw std::logic_error("non-integral root coordinates");
        int h = static_cast<int>(height.get_num().get_si());
        if (h > best_height) {
            best_height = h;
            rs.highest = a;
        }
    }
    for (const auto& x : rs.simple_coords(rs.highest))
        rs.highest_coeffs.push_back(static_cast<int>(x.get_num().get_si()));
    return rs;
}

RVector coroot(const RootSystem& rs, const RVector& alpha)
{
    if (!rs.is_root(alpha)) throw std::domain_error("coroot: not a root " + to_string(alpha));
    return (Rational(2) / dot(alpha, alpha)) * alpha;
}

RVector reflect(const RootSystem& rs, const RVector& alpha, const RVector& x)
{
    if (x.size() != rs.ambient_dim || alpha.size() != rs.ambient_dim)
        throw std::domain_error("reflect: dimension mismatch");
    RVector av = coroot(rs, alpha);
    return x - dot(alpha, x) * av;
}

std::vector<RVector> weyl_orbit(const RootSystem& rs, const RVector& x)
{
    if (x.size() != rs.ambient_dim) throw std::domain_error("weyl_orbit: dimension mismatch");
    return reflection_closure(rs.simple, {x});
}

}  // namespace ncc
