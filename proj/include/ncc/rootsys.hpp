#pragma once

#include "ncc/linalg.hpp"
#include "ncc/rational.hpp"

#include <string>
#include <vector>

namespace ncc {

enum class Family { A, B, C, D, E6, E7, E8, F4, G2, BC };

struct RootSystemKind {
    Family family = Family::A;
    int rank = 1;

    friend bool operator==(const RootSystemKind&, const RootSystemKind&) = default;
};

// Validates the rank for the family; throws std::invalid_argument.
RootSystemKind make_kind(Family f, int rank);

// "A", "B", ..., "E6", case-insensitive; throws std::invalid_argument.
Family parse_family(const std::string& name);
std::string family_name(Family f);
std::string to_string(const RootSystemKind& k);  // "A3", "E7", "BC2"

bool is_reduced(const RootSystemKind& k);

// Bourbaki plate realizations over the rationals.
class RootSystem {
public:
    RootSystemKind kind;
    std::size_t ambient_dim = 0;
    std::vector<RVector> roots;       // sorted
    std::vector<RVector> simple;      // alpha_1 .. alpha_n, Bourbaki numbering
    std::vector<RVector> positive;    // sorted
    RVector highest;
    std::vector<int> highest_coeffs;  // marks n_j
    Rational max_norm2;               // squared length of a long root

    bool is_root(const RVector& x) const;
    bool is_positive(const RVector& x) const;
    bool is_long(const RVector& alpha) const { return dot(alpha, alpha) == max_norm2; }

    // Coefficients of x in the simple roots (x must lie in their span).
    std::vector<Rational> simple_coords(const RVector& x) const;

    // beta <= alpha in the root order: alpha - beta is a nonnegative combination.
    bool root_leq(const RVector& beta, const RVector& alpha) const;

    // (alpha_i, alpha_k), and its inverse.
    Matrix gram;
    Matrix gram_inv;
};

RootSystem build(const RootSystemKind& kind);

RVector coroot(const RootSystem& rs, const RVector& alpha);
RVector reflect(const RootSystem& rs, const RVector& alpha, const RVector& x);

// W.x by breadth-first closure under simple reflections; sorted.
std::vector<RVector> weyl_orbit(const RootSystem& rs, const RVector& x);

// Closure of seeds under the reflections in the given roots; sorted.
std::vector<RVector> reflection_closure(const std::vector<RVector>& mirrors,
                                        const std::vector<RVector>& seeds);

// Classical |roots| for the kind.
std::size_t classical_root_count(const RootSystemKind& k);

}  // namespace ncc
