#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <string>
#include <vector>

namespace ncc {

using Rational = mpq_class;

// Parses "a", "-a", "a/b"; throws std::invalid_argument otherwise.
Rational parse_rational(const std::string& text);

// Reduced form, integers without a denominator ("1/2", "-3", "0").
std::string to_string(const Rational& q);

// Always "num/den" (den >= 1); the JSON wire form.
std::string to_fraction(const Rational& q);

// Exact vector in the ambient Euclidean space of a realization.
class RVector {
public:
    RVector() = default;
    explicit RVector(std::size_t n) : c_(n, Rational(0)) {}
    RVector(std::initializer_list<Rational> xs) : c_(xs) {}
    explicit RVector(std::vector<Rational> xs) : c_(std::move(xs)) {}

    std::size_t size() const { return c_.size(); }
    Rational& operator[](std::size_t i) { return c_[i]; }
    const Rational& operator[](std::size_t i) const { return c_[i]; }
    const std::vector<Rational>& coords() const { return c_; }

    bool is_zero() const;

    RVector& operator+=(const RVector& o);
    RVector& operator-=(const RVector& o);
    RVector& operator*=(const Rational& s);

    friend bool operator==(const RVector& a, const RVector& b) { return a.c_ == b.c_; }
    // Lexicographic on coordinates; the canonical order of root sets.
    friend bool operator<(const RVector& a, const RVector& b);

private:
    std::vector<Rational> c_;
};

RVector operator+(RVector a, const RVector& b);
RVector operator-(RVector a, const RVector& b);
RVector operator-(RVector a);
RVector operator*(const Rational& s, RVector a);

Rational dot(const RVector& a, const RVector& b);

// Unit vector e_i (0-based) in dimension n.
RVector unit(std::size_t n, std::size_t i);

// Scales v so that its first nonzero coordinate has absolute value 1.
RVector normalize_direction(const RVector& v);

std::string to_string(const RVector& v);
std::ostream& operator<<(std::ostream& os, const RVector& v);

// Comma separated rationals, e.g. "-1/6,2/6,-1/6".
RVector parse_rvector(const std::string& text);

}  // namespace ncc
