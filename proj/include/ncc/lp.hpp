#pragma once

#include "ncc/linalg.hpp"

#include <vector>

namespace ncc {

enum class LpStatus { Infeasible, Optimal, Unbounded };

struct LpResult {
    LpStatus status = LpStatus::Infeasible;
    Rational value;              // objective at x when Optimal
    std::vector<Rational> x;
};

// Exact two-phase simplex with Bland's rule:
// maximize c.x subject to A x = b, x >= 0.
LpResult maximize(const Matrix& a, const std::vector<Rational>& b, const std::vector<Rational>& c);

// Is {x : A x = b, x >= 0} nonempty?  Simplex phase one.
bool feasible_nonneg(const Matrix& a, const std::vector<Rational>& b);

// Same question decided by Fourier-Motzkin elimination over the free
// variables, with parallel constraints merged after each step.
// Intended for small systems: the constraint count can grow quickly.
bool fm_feasible_nonneg(const Matrix& a, const std::vector<Rational>& b);

}  // namespace ncc
