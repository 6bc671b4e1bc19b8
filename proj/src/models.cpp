#include "ncc/models.hpp"

#include <Eigen/Dense>
#include <unsupported/Eigen/MatrixFunctions>

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace ncc {

Mat2 operator+(const Mat2& x, const Mat2& y) { return {x.a + y.a, x.b + y.b, x.c + y.c, x.d + y.d}; }
Mat2 operator-(const Mat2& x, const Mat2& y) { return {x.a - y.a, x.b - y.b, x.c - y.c, x.d - y.d}; }

Mat2 operator*(const Mat2& x, const Mat2& y)
{
    return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d, x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d};
}

Mat2 operator*(const Rational& s, const Mat2& x) { return {s * x.a, s * x.b, s * x.c, s * x.d}; }
Mat2 bracket(const Mat2& x, const Mat2& y) { return x * y - y * x; }
Rational trace(const Mat2& x) { return x.a + x.d; }
Rational det(const Mat2& x) { return x.a * x.d - x.b * x.c; }
Mat2 transpose(const Mat2& x) { return {x.a, x.c, x.b, x.d}; }

Sl2Basis sl2_basis()
{
    const Rational h(1, 2);
    Sl2Basis s;
    s.h0 = {h, 0, 0, -h};
    s.e0 = {0, 1, 0, 0};
    s.f0 = {0, 0, 1, 0};
    s.h1 = {0, h, h, 0};
    s.e1 = {-h, h, -h, h};
    s.f1 = {-h, -h, h, h};
    return s;
}

Mat2 cartan_theta(const Mat2& x) { return Rational(-1) * transpose(x); }
Mat2 sl2_tau(const Mat2& x) { return {x.a, -x.b, -x.c, x.d}; }

Mat2 ad_g0(const Mat2& x)
{
    // The 1/sqrt(2) scalars cancel; g0' = [[1,1],[-1,1]], g0'^{-1} = (1/2)[[1,-1],[1,1]].
    const Mat2 g{1, 1, -1, 1};
    const Mat2 ginv = Rational(1, 2) * Mat2{1, -1, 1, 1};
    return g * x * ginv;
}

namespace {

// ad(x) on sl2 in the basis (h0, e0, f0): a h0 + b e0 + c f0 = [[a/2, b], [c, -a/2]].
Eigen::Matrix3d ad_matrix(double a, double b, double c)
{
    auto coords = [](double m00, double m01, double m10) {
        return Eigen::Vector3d(2 * m00, m01, m10);
    };
    auto mat = [](double x, double y, double z) {
        Eigen::Matrix2d m;
        m << x / 2, y, z, -x / 2;
        return m;
    };
    Eigen::Matrix2d X = mat(a, b, c);
    Eigen::Matrix3d ad;
    const Eigen::Matrix2d basis[3] = {mat(1, 0, 0), mat(0, 1, 0), mat(0, 0, 1)};
    for (int k = 0; k < 3; ++k) {
        Eigen::Matrix2d br = X * basis[k] - basis[k] * X;
        ad.col(k) = coords(br(0, 0), br(0, 1), br(1, 0));
    }
    return ad;
}

}  // namespace

std::pair<double, double> rotate_h0(double t)
{
    // (t/2)(e0 - f0)
    Eigen::Matrix3d ad = ad_matrix(0, t / 2, -t / 2);
    Eigen::Matrix3d ex = ad.exp();
    Eigen::Vector3d v = ex * Eigen::Vector3d(1, 0, 0);
    // a h0 + b h1 + c (e0 - f0) has e0-coefficient b/2 + c and f0-coefficient b/2 - c.
    return {v(0), v(1) + v(2)};
}

double so2_euler_component(double x)
{
    // x z = -(x/2)(e0 - f0)
    return rotate_h0(-x).first;
}

double sl2s_spectral_radius(const std::vector<double>& x)
{
    double m = 0;
    for (double v : x) m = std::max(m, std::abs(v));
    return m;
}

double sl2s_spectral_radius_numeric(const std::vector<double>& x)
{
    const int s = static_cast<int>(x.size());
    if (s == 0) return 0;
    Eigen::MatrixXd ad = Eigen::MatrixXd::Zero(3 * s, 3 * s);
    for (int j = 0; j < s; ++j) ad.block<3, 3>(3 * j, 3 * j) = ad_matrix(0, -x[j] / 2, x[j] / 2);
    Eigen::EigenSolver<Eigen::MatrixXd> es(ad, false);
    return es.eigenvalues().cwiseAbs().maxCoeff();
}

CWAlgebra cw_build(int p, int q, const std::vector<Rational>& lambdas, const std::vector<Rational>& mus)
{
    if (p < 0 || q < 0) throw std::domain_error("cw: p, q must be nonnegative");
    if (lambdas.size() != static_cast<std::size_t>(q)) throw std::domain_error("cw: need q lambdas");
    if (mus.size() != static_cast<std::size_t>(p)) throw std::domain_error("cw: need p mus");
    auto check = [](const std::vector<Rational>& v, const char* name) {
        for (std::size_t i = 0; i < v.size(); ++i) {
            if (v[i] <= 0) throw std::domain_error(std::string("cw: ") + name + " must be positive");
            if (i && v[i] < v[i - 1]) throw std::domain_error(std::string("cw: ") + name + " must be sorted");
        }
    };
    check(lambdas, "lambdas");
    check(mus, "mus");

    CWAlgebra g;
    g.p = p;
    g.q = q;
    g.lambdas = lambdas;
    g.mus = mus;
    const std::size_t na = static_cast<std::size_t>(2 * q + 2 * p);
    const std::size_t uq = static_cast<std::size_t>(q), up = static_cast<std::size_t>(p);
    g.dim = na + 2;

    g.kappa.assign(na, std::vector<Rational>(na, Rational(0)));
    for (std::size_t i = 0; i < na; ++i) g.kappa[i][i] = (i < 2 * uq + up) ? 1 : -1;

    g.d.assign(na, std::vector<Rational>(na, Rational(0)));
    for (std::size_t j = 0; j < uq; ++j) {
        g.d[j + uq][j] = lambdas[j];   // D e_j = lambda_j e_{j+q}
        g.d[j][j + uq] = -lambdas[j];  // D e_{j+q} = -lambda_j e_j
    }
    const std::size_t o = 2 * uq;
    for (std::size_t j = 0; j < up; ++j) {
        g.d[o + j + up][o + j] = mus[j];  // D e'_j = mu_j e'_{j+p}
        g.d[o + j][o + j + up] = mus[j];  // D e'_{j+p} = mu_j e'_j
    }

    const std::size_t n = g.dim, tz = 0, tt = n - 1;
    auto a_index = [](std::size_t i) { return i + 1; };
    g.bracket_table.assign(n, std::vector<RVector>(n, RVector(n)));
    for (std::size_t i = 0; i < na; ++i) {
        for (std::size_t k = 0; k < na; ++k) {
            // kappa(D a_i, a_k) z
            Rational v = 0;
            for (std::size_t m = 0; m < na; ++m) v += g.d[m][i] * g.kappa[m][k];
            g.bracket_table[a_index(i)][a_index(k)][tz] = v;
        }
        for (std::size_t m = 0; m < na; ++m) {
            g.bracket_table[tt][a_index(i)][a_index(m)] = g.d[m][i];
            g.bracket_table[a_index(i)][tt][a_index(m)] = -g.d[m][i];
        }
    }

    g.beta.assign(n, std::vector<Rational>(n, Rational(0)));
    g.beta[tz][tt] = g.beta[tt][tz] = 1;
    for (std::size_t i = 0; i < na; ++i)
        for (std::size_t k = 0; k < na; ++k) g.beta[a_index(i)][a_index(k)] = g.kappa[i][k];

    // tau(z, a, t) = (-z, tau_a a, -t); tau_a = -1 on e_1..e_q and e'_1..e'_p.
    g.tau.assign(n, std::vector<Rational>(n, Rational(0)));
    g.tau[tz][tz] = g.tau[tt][tt] = -1;
    for (std::size_t i = 0; i < na; ++i) {
        bool minus = i < uq || (i >= o && i < o + up);
        g.tau[a_index(i)][a_index(i)] = minus ? -1 : 1;
    }
    return g;
}

RVector cw_bracket(const CWAlgebra& g, const RVector& x, const RVector& y)
{
    RVector out(g.dim);
    for (std::size_t i = 0; i < g.dim; ++i) {
        if (x[i] == 0) continue;
        for (std::size_t k = 0; k < g.dim; ++k)
            if (y[k] != 0) out += (x[i] * y[k]) * g.bracket_table[i][k];
    }
    return out;
}

namespace {

RVector mat_apply(const Matrix& m, const RVector& x)
{
    RVector y(m.size());
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t k = 0; k < x.size(); ++k) y[i] += m[i][k] * x[k];
    return y;
}

Rational form(const Matrix& m, const RVector& x, const RVector& y)
{
    return dot(x, mat_apply(m, y));
}

}  // namespace

bool cw_jacobi(const CWAlgebra& g)
{
    const std::size_t n = g.dim;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (!(g.bracket_table[i][j] + g.bracket_table[j][i]).is_zero()) return false;
            for (std::size_t k = 0; k < n; ++k) {
                auto ei = unit(n, i), ej = unit(n, j), ek = unit(n, k);
                RVector s = cw_bracket(g, ei, g.bracket_table[j][k]) + cw_bracket(g, ej, g.bracket_table[k][i]) +
                            cw_bracket(g, ek, g.bracket_table[i][j]);
                if (!s.is_zero()) return false;
            }
        }
    return true;
}

bool cw_beta_invariant(const CWAlgebra& g)
{
    const std::size_t n = g.dim;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                Rational v = form(g.beta, g.bracket_table[i][j], unit(n, k)) +
                             form(g.beta, unit(n, j), g.bracket_table[i][k]);
                if (v != 0) return false;
            }
    return true;
}

bool cw_d_skew(const CWAlgebra& g)
{
    const std::size_t na = g.kappa.size();
    for (std::size_t i = 0; i < na; ++i)
        for (std::size_t k = 0; k < na; ++k) {
            auto ai = unit(na, i), ak = unit(na, k);
            if (form(g.kappa, mat_apply(g.d, ai), ak) + form(g.kappa, ai, mat_apply(g.d, ak)) != 0) return false;
        }
    return true;
}

bool cw_tau_automorphism(const CWAlgebra& g)
{
    const std::size_t n = g.dim;
    for (std::size_t i = 0; i < n; ++i) {
        if (mat_apply(g.tau, mat_apply(g.tau, unit(n, i))) != unit(n, i)) return false;
        for (std::size_t j = 0; j < n; ++j) {
            RVector lhs = mat_apply(g.tau, g.bracket_table[i][j]);
            RVector rhs = cw_bracket(g, mat_apply(g.tau, unit(n, i)), mat_apply(g.tau, unit(n, j)));
            if (lhs != rhs) return false;
        }
    }
    return true;
}

std::vector<RVector> cw_minus_tau_basis(const CWAlgebra& g)
{
    // kernel of tau + 1
    std::vector<RVector> rows;
    for (std::size_t i = 0; i < g.dim; ++i) {
        RVector r(g.tau[i]);
        r[i] += 1;
        rows.push_back(r);
    }
    return nullspace(rows, g.dim);
}

std::size_t cw_minus_tau_dim(const CWAlgebra& g)
{
    return cw_minus_tau_basis(g).size();
}

Signature signature(const Matrix& m0)
{
    Matrix m = m0;
    const std::size_t n = m.size();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k)
            if (m[i][k] != m[k][i]) throw std::domain_error("signature: matrix not symmetric");
    Signature s;
    std::size_t k = 0;
    while (k < n) {
        std::size_t piv = k;
        while (piv < n && m[piv][piv] == 0) ++piv;
        if (piv == n) {
            // No diagonal pivot: fold an off-diagonal entry onto the diagonal.
            std::size_t a = n, b = n;
            for (std::size_t i = k; i < n && a == n; ++i)
                for (std::size_t j = i + 1; j < n; ++j)
                    if (m[i][j] != 0) { a = i; b = j; break; }
            if (a == n) {  // remaining block is zero
                s.zero += n - k;
                break;
            }
            // row/col a += row/col b
            for (std::size_t j = 0; j < n; ++j) m[a][j] += m[b][j];
            for (std::size_t j = 0; j < n; ++j) m[j][a] += m[j][b];
            piv = a;
        }
        std::swap(m[k], m[piv]);
        for (auto& row : m) std::swap(row[k], row[piv]);
        const Rational p = m[k][k];
        for (std::size_t i = k + 1; i < n; ++i) {
            if (m[i][k] == 0) continue;
            Rational f = m[i][k] / p;
            for (std::size_t j = 0; j < n; ++j) m[i][j] -= f * m[k][j];
            for (std::size_t j = 0; j < n; ++j) m[j][i] -= f * m[j][k];
        }
        if (p > 0) ++s.plus;
        else ++s.minus;
        ++k;
    }
    return s;
}

Matrix restrict_form(const Matrix& f, const std::vector<RVector>& basis)
{
    Matrix r(basis.size(), std::vector<Rational>(basis.size()));
    for (std::size_t i = 0; i < basis.size(); ++i)
        for (std::size_t k = 0; k < basis.size(); ++k) r[i][k] = form(f, basis[i], basis[k]);
    return r;
}

}  // namespace ncc
