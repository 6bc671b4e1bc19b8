#include "ncc/rational.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace ncc {

Rational parse_rational(const std::string& text)
{
    std::string t;
    for (char ch : text)
        if (ch != ' ' && ch != '\t') t.push_back(ch);
    if (t.empty()) throw std::invalid_argument("empty rational");
    auto slash = t.find('/');
    auto is_int = [](const std::string& s) {
        std::size_t i = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
        if (i == s.size()) return false;
        return std::all_of(s.begin() + static_cast<long>(i), s.end(),
                           [](char ch) { return ch >= '0' && ch <= '9'; });
    };
    std::string num = t.substr(0, slash);
    std::string den = slash == std::string::npos ? "1" : t.substr(slash + 1);
    if (!is_int(num) || !is_int(den) || den[0] == '-' || den[0] == '+')
        throw std::invalid_argument("not a rational: " + text);
    if (num[0] == '+') num.erase(0, 1);
    mpz_class n(num), d(den);
    if (d == 0) throw std::invalid_argument("zero denominator: " + text);
    Rational q(n, d);
    q.canonicalize();
    return q;
}

// Both printers reduce first; a value built as mpq_class(4, 2) is not canonical.
std::string to_string(const Rational& q)
{
    Rational c = q;
    c.canonicalize();
    return c.get_str();
}

std::string to_fraction(const Rational& q)
{
    Rational c = q;
    c.canonicalize();
    return c.get_num().get_str() + "/" + c.get_den().get_str();
}

bool RVector::is_zero() const
{
    return std::all_of(c_.begin(), c_.end(), [](const Rational& x) { return x == 0; });
}

RVector& RVector::operator+=(const RVector& o)
{
    if (o.size() != size()) throw std::domain_error("vector dimension mismatch");
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
    return *this;
}

RVector& RVector::operator-=(const RVector& o)
{
    if (o.size() != size()) throw std::domain_error("vector dimension mismatch");
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
    return *this;
}

RVector& RVector::operator*=(const Rational& s)
{
    for (auto& x : c_) x *= s;
    return *this;
}

bool operator<(const RVector& a, const RVector& b)
{
    return std::lexicographical_compare(a.c_.begin(), a.c_.end(), b.c_.begin(), b.c_.end());
}

RVector operator+(RVector a, const RVector& b) { return a += b; }
RVector operator-(RVector a, const RVector& b) { return a -= b; }
RVector operator-(RVector a) { return a *= Rational(-1); }
RVector operator*(const Rational& s, RVector a) { return a *= s; }

Rational dot(const RVector& a, const RVector& b)
{
    if (a.size() != b.size()) throw std::domain_error("vector dimension mismatch");
    Rational s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

RVector unit(std::size_t n, std::size_t i)
{
    RVector v(n);
    v[i] = 1;
    return v;
}

RVector normalize_direction(const RVector& v)
{
    for (std::size_t i = 0; i < v.size(); ++i)
        if (v[i] != 0) return Rational(1) / abs(v[i]) * v;
    return v;
}

std::string to_string(const RVector& v)
{
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) os << ", ";
        os << to_string(v[i]);
    }
    os << ')';
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const RVector& v)
{
    return os << to_string(v);
}

RVector parse_rvector(const std::string& text)
{
    std::vector<Rational> xs;
    std::string item;
    std::istringstream in(text);
    while (std::getline(in, item, ',')) xs.push_back(parse_rational(item));
    if (xs.empty()) throw std::invalid_argument("empty vector");
    return RVector(std::move(xs));
}

}  // namespace ncc
