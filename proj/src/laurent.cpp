#include "qmf/laurent.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace qmf {

LaurentPoly::LaurentPoly(Map coeffs) : coeffs_(std::move(coeffs)) { prune(); }

LaurentPoly LaurentPoly::monomial(Degree degree, Complex c) {
    return LaurentPoly(Map{{degree, c}});
}

LaurentPoly LaurentPoly::from_dense(Degree first_degree, std::span<const Complex> values) {
    Map m;
    for (std::size_t i = 0; i < values.size(); ++i) {
        m.emplace(first_degree + static_cast<Degree>(i), values[i]);
    }
    return LaurentPoly(std::move(m));
}

void LaurentPoly::prune() {
    std::erase_if(coeffs_, [](const auto& kv) { return std::abs(kv.second) < kPruneThreshold; });
}

Complex LaurentPoly::coeff(Degree k) const {
    auto it = coeffs_.find(k);
    return it == coeffs_.end() ? Complex{} : it->second;
}

Degree LaurentPoly::min_degree() const {
    if (coeffs_.empty()) throw std::logic_error("min_degree of the zero polynomial");
    return coeffs_.begin()->first;
}

Degree LaurentPoly::max_degree() const {
    if (coeffs_.empty()) throw std::logic_error("max_degree of the zero polynomial");
    return coeffs_.rbegin()->first;
}

double LaurentPoly::norm2() const {
    double s = 0.0;
    for (const auto& [k, c] : coeffs_) s += std::norm(c);
    return s;
}

double LaurentPoly::norm() const { return std::sqrt(norm2()); }

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& g) {
    for (const auto& [k, c] : g.coeffs_) coeffs_[k] += c;
    prune();
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& g) {
    for (const auto& [k, c] : g.coeffs_) coeffs_[k] -= c;
    prune();
    return *this;
}

LaurentPoly& LaurentPoly::operator*=(Complex c) {
    for (auto& kv : coeffs_) kv.second *= c;
    prune();
    return *this;
}

LaurentPoly operator*(const LaurentPoly& f, const LaurentPoly& g) {
    LaurentPoly::Map out;
    for (const auto& [i, a] : f.coeffs_) {
        for (const auto& [j, b] : g.coeffs_) out[i + j] += a * b;
    }
    return LaurentPoly(std::move(out));
}

std::string LaurentPoly::to_string() const {
    if (coeffs_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, c] : coeffs_) {
        if (!first) os << " + ";
        first = false;
        os << "(" << c.real();
        if (c.imag() != 0.0) os << (c.imag() < 0 ? "-" : "+") << std::abs(c.imag()) << "i";
        os << ")e" << k;
    }
    return os.str();
}

LaurentPoly add(const LaurentPoly& f, const LaurentPoly& g) { return f + g; }

LaurentPoly mul(const LaurentPoly& f, const LaurentPoly& g) { return f * g; }

LaurentPoly conj_reflect(const LaurentPoly& f) {
    LaurentPoly::Map out;
    for (const auto& [k, c] : f.coeffs()) out.emplace(-k, std::conj(c));
    return LaurentPoly(std::move(out));
}

LaurentPoly dilate(const LaurentPoly& f, int N) {
    if (N < 2) throw std::invalid_argument("dilate: N must be >= 2");
    LaurentPoly::Map out;
    for (const auto& [k, c] : f.coeffs()) out.emplace(k * N, c);
    return LaurentPoly(std::move(out));
}

Complex inner(const LaurentPoly& f, const LaurentPoly& g) {
    const auto& small = f.support_size() <= g.support_size() ? f : g;
    const auto& large = &small == &f ? g : f;
    Complex s{};
    for (const auto& [k, c] : small.coeffs()) {
        auto it = large.coeffs().find(k);
        if (it == large.coeffs().end()) continue;
        s += (&small == &f) ? std::conj(c) * it->second : std::conj(it->second) * c;
    }
    return s;
}

Complex eval(const LaurentPoly& f, double theta) {
    Complex s{};
    for (const auto& [k, c] : f.coeffs()) {
        // Reduce k*theta mod 1 before the trig call to keep large degrees accurate.
        double phase = std::fmod(static_cast<double>(k) * theta, 1.0);
        s += c * std::polar(1.0, 2.0 * std::numbers::pi * phase);
    }
    return s;
}

double distance(const LaurentPoly& f, const LaurentPoly& g) {
    LaurentPoly::Map diff(f.coeffs());
    for (const auto& [k, c] : g.coeffs()) diff[k] -= c;
    double s = 0.0;
    for (const auto& [k, c] : diff) s += std::norm(c);
    return std::sqrt(s);
}

double max_coeff_diff(const LaurentPoly& f, const LaurentPoly& g) {
    LaurentPoly::Map diff(f.coeffs());
    for (const auto& [k, c] : g.coeffs()) diff[k] -= c;
    double m = 0.0;
    for (const auto& [k, c] : diff) m = std::max(m, std::abs(c));
    return m;
}

}  // namespace qmf
