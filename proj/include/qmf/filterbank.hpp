#pragma once

/**
 * @file filterbank.hpp
 * @brief Quadrature-mirror filter systems and their unitarity check.
 *
 * A FilterSystem is N Laurent polynomials m_0..m_{N-1}.  Coefficients
 * follow the normalization of the classical examples (Haar low-pass
 * (e_0 + e_1)/sqrt(2)), so the isometries S_j f = m_j(z) f(z^N) satisfy
 * the Cuntz relations with no extra factor of sqrt(N).
 */

#include <map>
#include <string>
#include <tuple>
#include <vector>

#include "qmf/laurent.hpp"

namespace qmf {

struct FilterSystem {
    int N = 2;
    std::vector<LaurentPoly> filters;

    const LaurentPoly& filter(int j) const;
};

struct ValidationReport {
    /// max |sum_k conj(m_i^(k)) m_j^(k+Nl) - delta_ij delta_l0|, also taken
    /// over the row form of the polyphase identity.
    double max_isometry_defect = 0.0;
    /// max defect of sum_j conj_reflect(A_jr) A_js = delta_rs e_0.
    double max_completeness_defect = 0.0;
    bool passed = false;
    /// (i, j, l) -> coefficient-form defect.
    std::map<std::tuple<int, int, Degree>, double> per_pair_defects;
};

/// Checks the QMF unitarity condition as exact Laurent identities.
/// Throws std::invalid_argument if tol <= 0 or filters.size() != N.
ValidationReport validate(const FilterSystem& fs, double tol = kDefaultTolerance);

/// Polyphase components: A[j][r] with m_j(z) = sum_r z^r A[j][r](z^N).
std::vector<std::vector<LaurentPoly>> polyphase(const FilterSystem& fs);

/// m_0 = (e_0 + e_1)/sqrt(2), m_1 = (e_0 - e_1)/sqrt(2).
FilterSystem haar();

/// m_j = e_j.  Throws for N < 2.
FilterSystem permutative_shift(int N);

/// m_0 = (e_0 + e_2)/sqrt(2), m_1 = e_1, m_2 = (e_0 - e_2)/sqrt(2).
FilterSystem cantor3();

/// m_1(z) = z conj(m_0(-z)), i.e. m_1^(1-k) = (-1)^k conj(m_0^(k)).
/// Throws std::invalid_argument if m0 fails the single-filter condition.
LaurentPoly high_pass_from_low(const LaurentPoly& m0, double tol = kDefaultTolerance);

/// Daubechies low-pass with `vanishing_moments` vanishing moments
/// (2*vanishing_moments taps at degrees 0..2p-1, classical minimum-phase
/// order), obtained by spectral factorization and paired with its
/// high-pass from high_pass_from_low.
FilterSystem daubechies(int vanishing_moments);

/// Four-tap Daubechies system.
FilterSystem daubechies4();

/// m_i^u = sum_j u_ij m_j for a constant N x N matrix u (row-major).
FilterSystem mix(const FilterSystem& fs, const std::vector<std::vector<Complex>>& u);

/// Names accepted by builtin(): haar, cantor3, daubechies4, permutativeN (N >= 2).
FilterSystem builtin(const std::string& name);

}  // namespace qmf
