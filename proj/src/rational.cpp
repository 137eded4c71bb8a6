#include "qmf/rational.hpp"

#include <algorithm>
#include <limits>

namespace qmf {

namespace {

Int128 iabs(Int128 v) { return v < 0 ? -v : v; }

Int128 igcd(Int128 a, Int128 b) {
    a = iabs(a);
    b = iabs(b);
    while (b != 0) {
        Int128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

Int128 checked_mul(Int128 a, Int128 b) {
    Int128 r;
    if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("Rational: 128-bit overflow");
    return r;
}

Int128 checked_add(Int128 a, Int128 b) {
    Int128 r;
    if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("Rational: 128-bit overflow");
    return r;
}

}  // namespace

std::string to_string(Int128 v) {
    if (v == 0) return "0";
    bool neg = v < 0;
    // Work with negative values so the minimum is representable.
    std::string s;
    Int128 x = neg ? v : -v;
    while (x != 0) {
        s.push_back(static_cast<char>('0' - static_cast<int>(x % 10)));
        x /= 10;
    }
    if (neg) s.push_back('-');
    std::reverse(s.begin(), s.end());
    return s;
}

Int128 ipow(Int128 base, int exp) {
    if (exp < 0) throw std::invalid_argument("ipow: negative exponent");
    Int128 r = 1;
    for (int i = 0; i < exp; ++i) r = checked_mul(r, base);
    return r;
}

Rational::Rational(Int128 num, Int128 den) : num_(num), den_(den) {
    if (den_ == 0) throw std::domain_error("Rational: zero denominator");
    if (den_ < 0) {
        num_ = -num_;
        den_ = -den_;
    }
    Int128 g = igcd(num_, den_);
    if (g > 1) {
        num_ /= g;
        den_ /= g;
    }
}

double Rational::to_double() const {
    return static_cast<double>(static_cast<long double>(num_) / static_cast<long double>(den_));
}

std::string Rational::to_string() const { return qmf::to_string(num_) + "/" + qmf::to_string(den_); }

Int128 Rational::floor() const {
    Int128 q = num_ / den_;
    if (num_ % den_ != 0 && num_ < 0) --q;
    return q;
}

Rational operator+(const Rational& a, const Rational& b) {
    Int128 g = igcd(a.den_, b.den_);
    Int128 l = checked_mul(a.den_ / g, b.den_);
    return Rational(checked_add(checked_mul(a.num_, l / a.den_), checked_mul(b.num_, l / b.den_)), l);
}

Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }

Rational operator*(const Rational& a, const Rational& b) {
    Int128 g1 = igcd(a.num_, b.den_);
    Int128 g2 = igcd(b.num_, a.den_);
    if (g1 == 0) g1 = 1;
    if (g2 == 0) g2 = 1;
    return Rational(checked_mul(a.num_ / g1, b.num_ / g2), checked_mul(a.den_ / g2, b.den_ / g1));
}

Rational operator/(const Rational& a, const Rational& b) {
    if (b.num_ == 0) throw std::domain_error("Rational: division by zero");
    return a * Rational(b.den_, b.num_);
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    Rational d = a - b;
    if (d.num_ < 0) return std::strong_ordering::less;
    if (d.num_ > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

Rational parse_rational(const std::string& s) {
    auto parse_int = [](const std::string& t) -> Int128 {
        if (t.empty()) throw std::invalid_argument("parse_rational: empty integer");
        std::size_t i = 0;
        bool neg = false;
        if (t[0] == '-' || t[0] == '+') {
            neg = t[0] == '-';
            i = 1;
        }
        if (i == t.size()) throw std::invalid_argument("parse_rational: bad integer '" + t + "'");
        Int128 v = 0;
        for (; i < t.size(); ++i) {
            if (t[i] < '0' || t[i] > '9') throw std::invalid_argument("parse_rational: bad integer '" + t + "'");
            v = checked_add(checked_mul(v, 10), t[i] - '0');
        }
        return neg ? -v : v;
    };
    auto slash = s.find('/');
    if (slash == std::string::npos) return Rational(parse_int(s));
    return Rational(parse_int(s.substr(0, slash)), parse_int(s.substr(slash + 1)));
}

}  // namespace qmf
