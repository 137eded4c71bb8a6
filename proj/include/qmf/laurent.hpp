#pragma once

/**
 * @file laurent.hpp
 * @brief Sparse Laurent polynomials on the unit circle.
 *
 * A LaurentPoly holds finitely many complex Fourier coefficients f^(k),
 * k in Z.  The same type stands for filters m_j, vectors in L^2(T) and
 * finitely supported signals in l^2(Z) (the Fourier-series isomorphism
 * is the identity on coefficients).
 */

#include <complex>
#include <cstdint>
#include <map>
#include <span>
#include <string>

namespace qmf {

using Complex = std::complex<double>;
using Degree = std::int64_t;

/// Coefficients with modulus below this are dropped after add/mul.
inline constexpr double kPruneThreshold = 1e-14;

/// Default comparison tolerance used across the library.
inline constexpr double kDefaultTolerance = 1e-9;

class LaurentPoly {
public:
    using Map = std::map<Degree, Complex>;

    LaurentPoly() = default;
    explicit LaurentPoly(Map coeffs);

    /// c * z^degree
    static LaurentPoly monomial(Degree degree, Complex c = 1.0);

    /// Dense coefficients starting at `first_degree`.
    static LaurentPoly from_dense(Degree first_degree, std::span<const Complex> values);

    Complex coeff(Degree k) const;
    const Map& coeffs() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }
    std::size_t support_size() const { return coeffs_.size(); }

    // Both require a nonzero polynomial.
    Degree min_degree() const;
    Degree max_degree() const;

    /// Sum of |f^(k)|^2.
    double norm2() const;
    double norm() const;

    LaurentPoly& operator+=(const LaurentPoly& g);
    LaurentPoly& operator-=(const LaurentPoly& g);
    LaurentPoly& operator*=(Complex c);

    friend LaurentPoly operator+(LaurentPoly f, const LaurentPoly& g) { return f += g; }
    friend LaurentPoly operator-(LaurentPoly f, const LaurentPoly& g) { return f -= g; }
    friend LaurentPoly operator*(LaurentPoly f, Complex c) { return f *= c; }
    friend LaurentPoly operator*(Complex c, LaurentPoly f) { return f *= c; }
    friend LaurentPoly operator*(const LaurentPoly& f, const LaurentPoly& g);
    LaurentPoly operator-() const { return *this * Complex(-1.0); }

    /// Exact coefficient equality (after pruning).
    friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

    std::string to_string() const;

private:
    void prune();

    Map coeffs_;
};

/// Fourier basis vector e_n(z) = z^n.
inline LaurentPoly basis(Degree n) { return LaurentPoly::monomial(n); }

LaurentPoly add(const LaurentPoly& f, const LaurentPoly& g);
LaurentPoly mul(const LaurentPoly& f, const LaurentPoly& g);

/// f-bar on |z| = 1: coefficient at k is conj(f^(-k)).
LaurentPoly conj_reflect(const LaurentPoly& f);

/// z -> z^N.  Throws std::invalid_argument for N < 2.
LaurentPoly dilate(const LaurentPoly& f, int N);

/// L^2(T) inner product, conjugate-linear in the first argument.
Complex inner(const LaurentPoly& f, const LaurentPoly& g);

/// sum_k f^(k) exp(i 2 pi k theta)
Complex eval(const LaurentPoly& f, double theta);

/// ||f - g|| in L^2(T).
double distance(const LaurentPoly& f, const LaurentPoly& g);

/// max_k |f^(k) - g^(k)|
double max_coeff_diff(const LaurentPoly& f, const LaurentPoly& g);

}  // namespace qmf
