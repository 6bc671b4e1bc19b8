#pragma once

#include "ncc/linalg.hpp"
#include "ncc/rational.hpp"

#include <utility>
#include <vector>

namespace ncc {

struct Mat2 {
    Rational a, b, c, d;  // [[a, b], [c, d]]

    friend bool operator==(const Mat2&, const Mat2&) = default;
};

Mat2 operator+(const Mat2& x, const Mat2& y);
Mat2 operator-(const Mat2& x, const Mat2& y);
Mat2 operator*(const Mat2& x, const Mat2& y);
Mat2 operator*(const Rational& s, const Mat2& x);
Mat2 bracket(const Mat2& x, const Mat2& y);
Rational trace(const Mat2& x);
Rational det(const Mat2& x);
Mat2 transpose(const Mat2& x);

struct Sl2Basis {
    Mat2 h0, e0, f0, h1, e1, f1;
};
Sl2Basis sl2_basis();

Mat2 cartan_theta(const Mat2& x);  // -x^T
Mat2 sl2_tau(const Mat2& x);       // [[a,-b],[-c,d]]
Mat2 ad_g0(const Mat2& x);         // g0 x g0^{-1}, g0 = (1/sqrt 2)[[1,1],[-1,1]]

// Coefficients (h0, h1) of e^{(t/2) ad(e0 - f0)} h0, by matrix exponential.
std::pair<double, double> rotate_h0(double t);

// h0-coefficient of e^{x ad z} h0 for z = (1/2)[[0,-1],[1,0]].
double so2_euler_component(double x);

// max |x_j|
double sl2s_spectral_radius(const std::vector<double>& x);
// Largest |eigenvalue| of ad(sum x_j z^j) on the block-diagonal sl2^s.
double sl2s_spectral_radius_numeric(const std::vector<double>& x);

// Basis order: z, e_1..e_{2q}, e'_1..e'_{2p}, t.
struct CWAlgebra {
    int p = 0, q = 0;
    std::vector<Rational> lambdas, mus;
    std::size_t dim = 0;
    std::vector<std::vector<RVector>> bracket_table;  // [i][j] = [b_i, b_j]
    Matrix beta;
    Matrix tau;
    Matrix kappa;  // on a, 2q + 2p square
    Matrix d;      // D on a, column j = D(a_j)
};

// Throws std::domain_error for non-positive or unsorted parameters.
CWAlgebra cw_build(int p, int q, const std::vector<Rational>& lambdas, const std::vector<Rational>& mus);

RVector cw_bracket(const CWAlgebra& g, const RVector& x, const RVector& y);
bool cw_jacobi(const CWAlgebra& g);
bool cw_beta_invariant(const CWAlgebra& g);
bool cw_d_skew(const CWAlgebra& g);
bool cw_tau_automorphism(const CWAlgebra& g);
// Dimension of the (-1)-eigenspace of tau.
std::size_t cw_minus_tau_dim(const CWAlgebra& g);
// Basis of the (-1)-eigenspace of tau.
std::vector<RVector> cw_minus_tau_basis(const CWAlgebra& g);

struct Signature {
    std::size_t plus = 0, minus = 0, zero = 0;
};
// Exact congruence diagonalization of a symmetric matrix.
Signature signature(const Matrix& m);
// beta restricted to span(basis).
Matrix restrict_form(const Matrix& form, const std::vector<RVector>& basis);

}  // namespace ncc
