#include "ncc/linalg.hpp"

#include <stdexcept>

namespace ncc {

Matrix rows_of(const std::vector<RVector>& vs)
{
    Matrix m;
    m.reserve(vs.size());
    for (const auto& v : vs) m.push_back(v.coords());
    return m;
}

std::vector<std::size_t> rref(Matrix& m)
{
    std::vector<std::size_t> pivots;
    if (m.empty()) return pivots;
    const std::size_t rows = m.size(), cols = m[0].size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && m[p][c] == 0) ++p;
        if (p == rows) continue;
        std::swap(m[p], m[r]);
        Rational inv = 1 / m[r][c];
        for (auto& x : m[r]) x *= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || m[i][c] == 0) continue;
            Rational f = m[i][c];
            for (std::size_t k = c; k < cols; ++k) m[i][k] -= f * m[r][k];
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

std::size_t rank(const std::vector<RVector>& vs)
{
    Matrix m = rows_of(vs);
    return rref(m).size();
}

std::vector<RVector> nullspace(const std::vector<RVector>& vs, std::size_t n)
{
    Matrix m = rows_of(vs);
    for (const auto& row : m)
        if (row.size() != n) throw std::domain_error("nullspace: dimension mismatch");
    auto pivots = rref(m);
    std::vector<bool> is_pivot(n, false);
    for (auto c : pivots) is_pivot[c] = true;
    std::vector<RVector> basis;
    for (std::size_t f = 0; f < n; ++f) {
        if (is_pivot[f]) continue;
        RVector v(n);
        v[f] = 1;
        for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -m[i][f];
        basis.push_back(v);
    }
    return basis;
}

std::optional<std::vector<Rational>> solve(const Matrix& a, const std::vector<Rational>& b)
{
    if (a.size() != b.size()) throw std::domain_error("solve: dimension mismatch");
    const std::size_t n = a.empty() ? 0 : a[0].size();
    Matrix m = a;
    for (std::size_t i = 0; i < m.size(); ++i) m[i].push_back(b[i]);
    auto pivots = rref(m);
    if (!pivots.empty() && pivots.back() == n) return std::nullopt;
    std::vector<Rational> x(n, Rational(0));
    for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = m[i][n];
    return x;
}

Matrix inverse(const Matrix& m)
{
    const std::size_t n = m.size();
    Matrix aug = m;
    for (std::size_t i = 0; i < n; ++i) {
        if (aug[i].size() != n) throw std::domain_error("inverse: not square");
        aug[i].resize(2 * n, Rational(0));
        aug[i][n + i] = 1;
    }
    auto pivots = rref(aug);
    if (pivots.size() != n || pivots.back() != n - 1) throw std::domain_error("inverse: singular matrix");
    Matrix inv(n);
    for (std::size_t i = 0; i < n; ++i) inv[i].assign(aug[i].begin() + static_cast<long>(n), aug[i].end());
    return inv;
}

bool in_span(const std::vector<RVector>& vs, const RVector& x)
{
    auto with = vs;
    with.push_back(x);
    return rank(with) == rank(vs);
}

}  // namespace ncc
