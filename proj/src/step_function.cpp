#include "qmf/step_function.hpp"

#include <algorithm>
#include <stdexcept>

namespace qmf {

namespace {

Rational power_of(int N, int e) {
    return e >= 0 ? Rational(ipow(N, e)) : Rational(1, ipow(N, -e));
}

std::int64_t to_i64(Int128 v) {
    if (v > INT64_MAX || v < INT64_MIN) throw std::overflow_error("StepFunction: cell index overflow");
    return static_cast<std::int64_t>(v);
}

}  // namespace

StepFunction::StepFunction(int N, int exponent, std::int64_t first_cell, std::vector<Complex> values)
    : N_(N), exponent_(exponent), first_(first_cell), values_(std::move(values)) {
    if (N_ < 2) throw std::invalid_argument("StepFunction: base must be >= 2");
}

StepFunction StepFunction::unit_indicator(int N) { return StepFunction(N, 0, 0, {1.0}); }

Rational StepFunction::cell_width() const { return power_of(N_, -exponent_); }

Rational StepFunction::cell_left(std::size_t i) const {
    return Rational(first_ + static_cast<std::int64_t>(i)) * cell_width();
}

StepFunction StepFunction::refined(int exponent) const {
    if (exponent < exponent_) throw std::invalid_argument("StepFunction::refined: cannot coarsen");
    if (exponent == exponent_) return *this;
    const Int128 factor = ipow(N_, exponent - exponent_);
    const auto f = to_i64(factor);
    std::vector<Complex> v;
    v.reserve(values_.size() * static_cast<std::size_t>(f));
    for (Complex c : values_) v.insert(v.end(), static_cast<std::size_t>(f), c);
    return StepFunction(N_, exponent, to_i64(Int128(first_) * factor), std::move(v));
}

Complex StepFunction::value_at(const Rational& x) const {
    // cell index = floor(x N^e)
    Int128 cell = (x * power_of(N_, exponent_)).floor();
    Int128 offset = cell - first_;
    if (offset < 0 || offset >= static_cast<Int128>(values_.size())) return {};
    return values_[static_cast<std::size_t>(offset)];
}

Complex StepFunction::integral() const {
    Complex s{};
    for (Complex c : values_) s += c;
    return s * cell_width().to_double();
}

StepFunction StepFunction::scaled_translated(int q, std::int64_t shift) const {
    StepFunction base = exponent_ < 0 ? refined(0) : *this;
    const Int128 offset = Int128(shift) * ipow(N_, base.exponent_);
    return StepFunction(N_, base.exponent_ + q, to_i64(Int128(base.first_) + offset), base.values_);
}

int nadic_exponent(const Rational& x, int N) {
    Int128 den = x.den();
    int j = 0;
    while (den % N == 0) {
        den /= N;
        ++j;
    }
    return den == 1 ? j : -1;
}

StepFunction StepFunction::shifted(const Rational& x) const {
    const int j = nadic_exponent(x, N_);
    if (j < 0) throw std::invalid_argument("StepFunction::shifted: shift is not on an N-adic grid");
    StepFunction g = refined(std::max(exponent_, j));
    const Int128 cells = (x * power_of(N_, g.exponent_)).floor();
    g.first_ = to_i64(Int128(g.first_) - cells);
    return g;
}

StepFunction StepFunction::operator*(Complex c) const {
    StepFunction g = *this;
    for (auto& v : g.values_) v *= c;
    return g;
}

Complex inner(const StepFunction& f, const StepFunction& g) {
    if (f.base() != g.base()) throw std::invalid_argument("inner: step functions over different bases");
    const int e = std::max(f.exponent(), g.exponent());
    const StepFunction a = f.refined(e);
    const StepFunction b = g.refined(e);
    const std::int64_t lo = std::max(a.first_cell(), b.first_cell());
    const std::int64_t hi = std::min(a.first_cell() + static_cast<std::int64_t>(a.size()),
                                     b.first_cell() + static_cast<std::int64_t>(b.size()));
    Complex s{};
    for (std::int64_t c = lo; c < hi; ++c) {
        s += std::conj(a.values()[static_cast<std::size_t>(c - a.first_cell())]) *
             b.values()[static_cast<std::size_t>(c - b.first_cell())];
    }
    return s * a.cell_width().to_double();
}

double max_abs_diff(const StepFunction& f, const StepFunction& g) {
    if (f.base() != g.base()) throw std::invalid_argument("max_abs_diff: step functions over different bases");
    const int e = std::max(f.exponent(), g.exponent());
    const StepFunction a = f.refined(e);
    const StepFunction b = g.refined(e);
    const std::int64_t lo = std::min(a.first_cell(), b.first_cell());
    const std::int64_t hi = std::max(a.first_cell() + static_cast<std::int64_t>(a.size()),
                                     b.first_cell() + static_cast<std::int64_t>(b.size()));
    auto at = [](const StepFunction& s, std::int64_t c) -> Complex {
        std::int64_t off = c - s.first_cell();
        if (off < 0 || off >= static_cast<std::int64_t>(s.size())) return {};
        return s.values()[static_cast<std::size_t>(off)];
    };
    double m = 0.0;
    for (std::int64_t c = lo; c < hi; ++c) m = std::max(m, std::abs(at(a, c) - at(b, c)));
    return m;
}

}  // namespace qmf
