#include "ncc/lp.hpp"

#include <map>
#include <stdexcept>

namespace ncc {

namespace {

void pivot(Matrix& t, std::size_t r, std::size_t c)
{
    Rational inv = 1 / t[r][c];
    for (auto& x : t[r]) x *= inv;
    for (std::size_t i = 0; i < t.size(); ++i) {
        if (i == r || t[i][c] == 0) continue;
        Rational f = t[i][c];
        for (std::size_t k = 0; k < t[i].size(); ++k) t[i][k] -= f * t[r][k];
    }
}

// Maximizes cost over the first `allowed` columns. False when unbounded.
bool optimize(Matrix& t, std::vector<std::size_t>& basis, const std::vector<Rational>& cost,
              std::size_t allowed)
{
    const std::size_t rhs = t.empty() ? 0 : t[0].size() - 1;
    for (;;) {
        std::size_t enter = allowed;
        for (std::size_t j = 0; j < allowed && enter == allowed; ++j) {
            Rational d = cost[j];
            for (std::size_t i = 0; i < t.size(); ++i) d -= cost[basis[i]] * t[i][j];
            if (d > 0) enter = j;
        }
        if (enter == allowed) return true;
        std::size_t leave = t.size();
        Rational best;
        for (std::size_t i = 0; i < t.size(); ++i) {
            if (t[i][enter] <= 0) continue;
            Rational ratio = t[i][rhs] / t[i][enter];
            if (leave == t.size() || ratio < best || (ratio == best && basis[i] < basis[leave])) {
                leave = i;
                best = ratio;
            }
        }
        if (leave == t.size()) return false;
        pivot(t, leave, enter);
        basis[leave] = enter;
    }
}

}  // namespace

LpResult maximize(const Matrix& a, const std::vector<Rational>& b, const std::vector<Rational>& c)
{
    const std::size_t m = a.size();
    const std::size_t n = c.size();
    if (b.size() != m) throw std::domain_error("lp: row count mismatch");
    for (const auto& row : a)
        if (row.size() != n) throw std::domain_error("lp: column count mismatch");

    // Columns: n structural, m artificial, rhs.
    Matrix t(m, std::vector<Rational>(n + m + 1, Rational(0)));
    std::vector<std::size_t> basis(m);
    for (std::size_t i = 0; i < m; ++i) {
        int sgn = b[i] < 0 ? -1 : 1;
        for (std::size_t j = 0; j < n; ++j) t[i][j] = sgn * a[i][j];
        t[i][n + i] = 1;
        t[i][n + m] = sgn * b[i];
        basis[i] = n + i;
    }
    std::vector<Rational> phase1(n + m, Rational(0));
    for (std::size_t i = 0; i < m; ++i) phase1[n + i] = -1;
    optimize(t, basis, phase1, n + m);

    LpResult res;
    Rational infeas = 0;
    for (std::size_t i = 0; i < m; ++i)
        if (basis[i] >= n) infeas += t[i][n + m];
    if (infeas != 0) return res;

    // Drive artificials out of the basis; drop redundant rows.
    for (std::size_t i = 0; i < t.size();) {
        if (basis[i] < n) { ++i; continue; }
        std::size_t j = 0;
        while (j < n && t[i][j] == 0) ++j;
        if (j == n) {
            t.erase(t.begin() + static_cast<long>(i));
            basis.erase(basis.begin() + static_cast<long>(i));
            continue;
        }
        pivot(t, i, j);
        basis[i] = j;
        ++i;
    }

    std::vector<Rational> phase2(n + m, Rational(0));
    for (std::size_t j = 0; j < n; ++j) phase2[j] = c[j];
    if (!optimize(t, basis, phase2, n)) {
        res.status = LpStatus::Unbounded;
        return res;
    }
    res.status = LpStatus::Optimal;
    res.x.assign(n, Rational(0));
    for (std::size_t i = 0; i < t.size(); ++i) res.x[basis[i]] = t[i][n + m];
    res.value = 0;
    for (std::size_t j = 0; j < n; ++j) res.value += c[j] * res.x[j];
    return res;
}

bool feasible_nonneg(const Matrix& a, const std::vector<Rational>& b)
{
    const std::size_t n = a.empty() ? 0 : a[0].size();
    return maximize(a, b, std::vector<Rational>(n, Rational(0))).status == LpStatus::Optimal;
}

namespace {

// a.y <= c
struct Ineq {
    std::vector<Rational> a;
    Rational c;
};

// Positive rescaling so equal constraints compare equal.
void normalize(Ineq& q)
{
    for (const auto& x : q.a) {
        if (x == 0) continue;
        Rational s = 1 / abs(x);
        for (auto& y : q.a) y *= s;
        q.c *= s;
        return;
    }
    if (q.c != 0) q.c = q.c > 0 ? 1 : -1;
}

}  // namespace

bool fm_feasible_nonneg(const Matrix& a, const std::vector<Rational>& b)
{
    const std::size_t n = a.empty() ? 0 : a[0].size();
    Matrix m = a;
    for (std::size_t i = 0; i < m.size(); ++i) m[i].push_back(b[i]);
    auto pivots = rref(m);
    if (!pivots.empty() && pivots.back() == n) return false;

    std::vector<bool> is_pivot(n, false);
    for (auto p : pivots) is_pivot[p] = true;
    std::vector<std::size_t> free_cols;
    for (std::size_t j = 0; j < n; ++j)
        if (!is_pivot[j]) free_cols.push_back(j);
    const std::size_t k = free_cols.size();

    // x_free >= 0 and x_pivot = rhs - sum m x_free >= 0, over the free variables.
    std::vector<Ineq> sys;
    for (std::size_t f = 0; f < k; ++f) {
        Ineq q{std::vector<Rational>(k, Rational(0)), 0};
        q.a[f] = -1;
        sys.push_back(q);
    }
    for (std::size_t i = 0; i < pivots.size(); ++i) {
        Ineq q{std::vector<Rational>(k), m[i][n]};
        for (std::size_t f = 0; f < k; ++f) q.a[f] = m[i][free_cols[f]];
        sys.push_back(q);
    }

    for (std::size_t v = 0; v < k; ++v) {
        std::vector<Ineq> pos, neg, next;
        for (auto& q : sys) {
            if (q.a[v] > 0) pos.push_back(q);
            else if (q.a[v] < 0) neg.push_back(q);
            else next.push_back(q);
        }
        for (const auto& p : pos) {
            for (const auto& q : neg) {
                Ineq r{std::vector<Rational>(k), 0};
                Rational wp = -q.a[v], wq = p.a[v];
                for (std::size_t f = 0; f < k; ++f) r.a[f] = wp * p.a[f] + wq * q.a[f];
                r.a[v] = 0;
                r.c = wp * p.c + wq * q.c;
                next.push_back(r);
            }
        }
        // Same direction: keep the tightest bound only.
        std::map<std::vector<Rational>, Ineq> dedup;
        for (auto& q : next) {
            normalize(q);
            bool trivial = true;
            for (const auto& x : q.a) trivial = trivial && x == 0;
            if (trivial) {
                if (q.c < 0) return false;
                continue;
            }
            auto it = dedup.find(q.a);
            if (it == dedup.end()) dedup.emplace(q.a, q);
            else if (q.c < it->second.c)
                it->second = q;
        }
        sys.clear();
        for (auto& [key, q] : dedup) sys.push_back(q);
    }
    for (const auto& q : sys)
        if (q.c < 0) return false;
    return true;
}

}  // namespace ncc
