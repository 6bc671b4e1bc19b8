#pragma once

#include "ncc/rational.hpp"

#include <optional>
#include <vector>

namespace ncc {

// Dense row-major rational matrix.
using Matrix = std::vector<std::vector<Rational>>;

Matrix rows_of(const std::vector<RVector>& vs);

// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> rref(Matrix& m);

std::size_t rank(const std::vector<RVector>& vs);

// Basis of {x : (v, x) = 0 for all v in vs} in dimension n.
std::vector<RVector> nullspace(const std::vector<RVector>& vs, std::size_t n);

// Some solution of A x = b, or nullopt.
std::optional<std::vector<Rational>> solve(const Matrix& a, const std::vector<Rational>& b);

Matrix inverse(const Matrix& m);

bool in_span(const std::vector<RVector>& vs, const RVector& x);

}  // namespace ncc
