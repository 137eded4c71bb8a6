#pragma once

/**
 * @file nadic.hpp
 * @brief N-adic intervals J_k(a), cylinders, and affine IFS branch maps.
 *
 * Endpoints are exact: J_k(a) has left endpoint numerator/N^k with the
 * numerator sum_i a_i N^(k-i), and width N^-k.  Levels are capped at 40
 * and bases at 8 so numerators stay inside 128 bits.
 */

#include <optional>
#include <string>
#include <vector>

#include "qmf/rational.hpp"
#include "qmf/word.hpp"

namespace qmf {

inline constexpr int kMaxNadicLevel = 40;
inline constexpr int kMaxNadicBase = 8;

class NadicInterval {
public:
    NadicInterval(int N, Word digits);

    int base() const { return N_; }
    int level() const { return static_cast<int>(digits_.length()); }
    const Word& digits() const { return digits_; }

    /// Unreduced numerator over denominator() = N^k.
    Int128 numerator() const { return numerator_; }
    Int128 denominator() const;

    Rational left() const { return Rational(numerator_, denominator()); }
    Rational right() const { return Rational(numerator_ + 1, denominator()); }
    Rational width() const { return Rational(1, denominator()); }

    bool contains(const Rational& x) const { return left() <= x && x < right(); }
    bool contains(const NadicInterval& other) const;

    /// "[p/q, r/q)" with the unreduced N^k denominator.
    std::string to_string() const;

    friend bool operator==(const NadicInterval& a, const NadicInterval& b) {
        return a.N_ == b.N_ && a.digits_ == b.digits_;
    }

private:
    int N_;
    Word digits_;
    Int128 numerator_ = 0;
};

/// {x in Gamma_N^infinity : x_1 = a_1, ..., x_k = a_k}
struct Cylinder {
    int N = 2;
    Word prefix;
};

/// Affine IFS on [0,1): branches sigma_i(x) = (x + t_i)/s and forward map
/// sigma(x) = s x mod 1, so sigma(sigma_i(x)) = x.
struct IfsSystem {
    int scale = 2;
    std::vector<int> translations;

    int branches() const { return static_cast<int>(translations.size()); }
};

NadicInterval interval(int N, const Word& digits);
NadicInterval interval(int N, const std::vector<int>& digits);

/// The N level-(k+1) subintervals of J, in order.
std::vector<NadicInterval> children(const NadicInterval& J);

/// All N^k level-k intervals, in order.
std::vector<NadicInterval> partition(int N, int k);

NadicInterval cylinder_to_interval(const Cylinder& c);

/// sigma_i(x) = (x + i)/N.
IfsSystem base_ifs(int N);

/// sigma_0(x) = x/3, sigma_1(x) = (x + 2)/3.
IfsSystem cantor_ifs();

/// sigma_{a_1} o ... o sigma_{a_k}(J), where J is an s-adic interval.
NadicInterval sigma_map(const IfsSystem& ifs, const Word& a, const NadicInterval& J);

/// sigma_a([0,1)).
NadicInterval sigma_map(const IfsSystem& ifs, const Word& a);

/// s x mod 1.  Throws std::domain_error unless 0 <= x < 1.
Rational sigma_forward(const IfsSystem& ifs, const Rational& x);

/// sigma_i(x) = (x + t_i)/s.
Rational sigma_branch(const IfsSystem& ifs, int i, const Rational& x);

/// sigma_i^{-1}(J) intersected with [0,1), when nonempty.  For an s-adic
/// cell this is either empty or a cell one level up.
std::optional<NadicInterval> branch_preimage(const IfsSystem& ifs, int i, const NadicInterval& J);

/// sigma^{-1}(J) = union_i sigma_i(J), as disjoint s-adic intervals.
std::vector<NadicInterval> sigma_preimage(const IfsSystem& ifs, const NadicInterval& J);

/// True if every digit lies in {0, 2} (base-3 cells meeting the Cantor set).
bool is_cantor_word(const Word& a);

}  // namespace qmf
