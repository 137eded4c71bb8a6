#pragma once

// Reference computations that share no code paths with the library.
// They work from plain coefficient lists and point samples of the unit
// circle, so agreement with the library is evidence, not tautology.

#include <cmath>
#include <complex>
#include <cstdint>
#include <functional>
#include <map>
#include <numbers>
#include <random>
#include <vector>

#include "qmf/laurent.hpp"

namespace oracle {

using C = std::complex<double>;
using Coeffs = std::map<std::int64_t, C>;

inline Coeffs coeffs(const qmf::LaurentPoly& f) { return {f.coeffs().begin(), f.coeffs().end()}; }

/// f(z) at z = exp(i 2 pi theta), summed term by term.
inline C eval(const Coeffs& f, double theta) {
    C s{};
    for (const auto& [k, c] : f) s += c * std::polar(1.0, 2.0 * std::numbers::pi * theta * static_cast<double>(k));
    return s;
}

/// Plain double loop convolution.
inline Coeffs convolve(const Coeffs& f, const Coeffs& g) {
    Coeffs out;
    for (const auto& [a, x] : f) {
        for (const auto& [b, y] : g) out[a + b] += x * y;
    }
    return out;
}

/// m_{a_1}(z) m_{a_2}(z^N) ... m_{a_k}(z^{N^{k-1}}).
inline Coeffs word_filter(const std::vector<Coeffs>& m, int N, const std::vector<int>& a) {
    Coeffs out{{0, 1.0}};
    std::int64_t scale = 1;
    for (int d : a) {
        Coeffs dil;
        for (const auto& [k, c] : m[static_cast<std::size_t>(d)]) dil[k * scale] = c;
        out = convolve(out, dil);
        scale *= N;
    }
    return out;
}

/// (S_a^* f)(z) at z = exp(i 2 pi theta) by root averaging:
/// (S_j^* g)(z) = (1/N) sum_{w^N = z} conj(m_j(w)) g(w), applied a_1 first.
inline C adjoint_word_at(const std::vector<Coeffs>& m, int N, const std::vector<int>& a, const Coeffs& f,
                         double theta) {
    std::function<C(std::size_t, double)> rec = [&](std::size_t len, double t) -> C {
        if (len == 0) return eval(f, t);
        const int j = a[len - 1];
        C s{};
        for (int r = 0; r < N; ++r) {
            const double w = (t + r) / N;
            s += std::conj(eval(m[static_cast<std::size_t>(j)], w)) * rec(len - 1, w);
        }
        return s / static_cast<double>(N);
    };
    return rec(a.size(), theta);
}

/// ||S_a^* f||^2 as the mean of |S_a^* f|^2 over M circle samples; exact
/// when M exceeds the coefficient span of S_a^* f.
inline double mu_by_sampling(const std::vector<Coeffs>& m, int N, const std::vector<int>& a, const Coeffs& f,
                             int M = 64) {
    double s = 0.0;
    for (int i = 0; i < M; ++i) s += std::norm(adjoint_word_at(m, N, a, f, static_cast<double>(i) / M));
    return s / M;
}

/// Dense matrix entry <e_n, S_j e_k> = m_j^(n - N k).
inline C dense_S(const Coeffs& m, int N, std::int64_t n, std::int64_t k) {
    const auto it = m.find(n - N * k);
    return it == m.end() ? C{} : it->second;
}

/// Closed form of the Fourier transform of chi_[0,1) with exp(-i 2 pi xi x).
inline C haar_phi_hat(double xi) {
    if (xi == 0.0) return 1.0;
    const C i2pxi(0.0, 2.0 * std::numbers::pi * xi);
    return (1.0 - std::exp(-i2pxi)) / i2pxi;
}

/// Walsh packet w_n(x) by pointwise recursion with explicit digit count k:
/// w_{2n+i}(x) = w_n(2x) + (-1)^i w_n(2x - 1), w_0 = chi_[0,1).
inline double walsh(std::uint64_t n, int k, double x) {
    if (k == 0) return (x >= 0.0 && x < 1.0) ? 1.0 : 0.0;
    const double sign = (n & 1u) ? -1.0 : 1.0;
    return walsh(n >> 1, k - 1, 2 * x) + sign * walsh(n >> 1, k - 1, 2 * x - 1);
}

inline qmf::LaurentPoly random_poly(std::mt19937_64& rng, int support, int spread = 8) {
    std::normal_distribution<double> g;
    std::uniform_int_distribution<int> pos(-spread, spread);
    qmf::LaurentPoly::Map m;
    const int start = pos(rng);
    for (int i = 0; i < support; ++i) m.emplace(start + i, C(g(rng), g(rng)));
    return qmf::LaurentPoly(std::move(m));
}

inline qmf::LaurentPoly random_unit(std::mt19937_64& rng, int support, int spread = 8) {
    qmf::LaurentPoly f = random_poly(rng, support, spread);
    return f * C(1.0 / f.norm());
}

}  // namespace oracle
