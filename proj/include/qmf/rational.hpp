#pragma once

// Exact rationals over 128-bit integers.  Used for N-adic endpoints and
// step-function breakpoints, where every denominator is a power of N.

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace qmf {

using Int128 = __int128;

std::string to_string(Int128 v);

/// Throws std::overflow_error if base^exp does not fit.
Int128 ipow(Int128 base, int exp);

class Rational {
public:
    constexpr Rational() = default;
    Rational(Int128 num, Int128 den = 1);

    Int128 num() const { return num_; }
    Int128 den() const { return den_; }

    double to_double() const;
    std::string to_string() const;

    /// Largest integer <= value.
    Int128 floor() const;

    friend Rational operator+(const Rational& a, const Rational& b);
    friend Rational operator-(const Rational& a, const Rational& b);
    friend Rational operator*(const Rational& a, const Rational& b);
    friend Rational operator/(const Rational& a, const Rational& b);
    Rational operator-() const { return Rational(-num_, den_); }

    friend bool operator==(const Rational& a, const Rational& b) = default;
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

private:
    Int128 num_ = 0;
    Int128 den_ = 1;
};

/// Parses "p/q" or "p".
Rational parse_rational(const std::string& s);

}  // namespace qmf
