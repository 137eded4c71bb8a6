#pragma once

/**
 * @file cuntz.hpp
 * @brief The representation S_j f(z) = m_j(z) f(z^N) of the Cuntz algebra
 *        O_N on L^2(T), its adjoints, words and projections.
 *
 * Everything is computed on Fourier coefficients.  The adjoint uses
 *     (S_j^* f)^(k) = sum_m conj(m_j^(m)) f^(m + N k),
 * which is exact index arithmetic, no root-of-unity averaging.
 */

#include <vector>

#include "qmf/filterbank.hpp"
#include "qmf/laurent.hpp"
#include "qmf/word.hpp"

namespace qmf {

/// scalar * S_left S_right^*.
struct Monomial {
    Word left;
    Word right;
    Complex scalar = 1.0;

    static Monomial identity(int N) { return {Word::empty(N), Word::empty(N), 1.0}; }
};

/// S_j f.  Throws std::invalid_argument if j is not a digit of fs.
LaurentPoly apply_S(const FilterSystem& fs, int j, const LaurentPoly& f);

/// S_j^* f.
LaurentPoly apply_S_star(const FilterSystem& fs, int j, const LaurentPoly& f);

/// S_a f = S_{a_1} ... S_{a_k} f.  The empty word is the identity.
LaurentPoly apply_word(const FilterSystem& fs, const Word& a, const LaurentPoly& f);

/// S_a^* f = S_{a_k}^* ... S_{a_1}^* f.
LaurentPoly apply_word_star(const FilterSystem& fs, const Word& a, const LaurentPoly& f);

/// P_k(a) f = S_a S_a^* f.
LaurentPoly projection(const FilterSystem& fs, const Word& a, const LaurentPoly& f);

/// m_a(z) = m_{a_1}(z) m_{a_2}(z^N) ... m_{a_k}(z^{N^{k-1}}) = S_a e_0.
LaurentPoly m_word(const FilterSystem& fs, const Word& a);

/// scalar * S_left (S_right^* f).
LaurentPoly monomial_apply(const FilterSystem& fs, const Monomial& m, const LaurentPoly& f);

/// alpha(T) = sum_i S_i T S_i^*, returned as the N monomials S_i T S_i^*.
std::vector<Monomial> alpha_on_monomial(const FilterSystem& fs, const Monomial& m);

/// Applies a sum of monomials.
LaurentPoly apply_monomials(const FilterSystem& fs, const std::vector<Monomial>& terms, const LaurentPoly& f);

/// Throws std::invalid_argument if the word's alphabet differs from fs.N.
void require_word_for(const FilterSystem& fs, const Word& a);

}  // namespace qmf
