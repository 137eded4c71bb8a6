#pragma once

#include <cstdint>
#include <vector>

#include "qmf/laurent.hpp"
#include "qmf/rational.hpp"

namespace qmf {

/// Complex step function on a uniform N-adic grid.
///
/// Cell i (0 <= i < size) is the right-open interval
/// [(first + i) N^-e, (first + i + 1) N^-e); outside the cells the function
/// is zero.  The exponent e may be negative (cells wider than 1).
/// Breakpoints are exact; only the values are floating point.
class StepFunction {
public:
    StepFunction(int N, int exponent, std::int64_t first_cell, std::vector<Complex> values);

    /// chi_[0,1)
    static StepFunction unit_indicator(int N);

    int base() const { return N_; }
    int exponent() const { return exponent_; }
    std::int64_t first_cell() const { return first_; }
    std::size_t size() const { return values_.size(); }
    const std::vector<Complex>& values() const { return values_; }

    Rational cell_width() const;
    Rational cell_left(std::size_t i) const;
    Rational support_left() const { return cell_left(0); }
    Rational support_right() const { return cell_left(values_.size()); }

    /// Same function on the finer grid N^-exponent (exponent >= current).
    StepFunction refined(int exponent) const;

    Complex value_at(const Rational& x) const;
    Complex integral() const;

    /// x -> f(N^q x - shift)
    StepFunction scaled_translated(int q, std::int64_t shift) const;

    /// y -> f(x + y).  Throws std::invalid_argument if x is not N-adic.
    StepFunction shifted(const Rational& x) const;

    StepFunction operator*(Complex c) const;

private:
    int N_;
    int exponent_;
    std::int64_t first_;
    std::vector<Complex> values_;
};

/// Integral of conj(f) g over R.  Both must share a base.
Complex inner(const StepFunction& f, const StepFunction& g);

/// max_x |f(x) - g(x)|
double max_abs_diff(const StepFunction& f, const StepFunction& g);

/// Smallest j with den | N^j, or -1 if den is not a power-of-N divisor.
int nadic_exponent(const Rational& x, int N);

}  // namespace qmf
