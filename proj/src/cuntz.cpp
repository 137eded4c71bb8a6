#include "qmf/cuntz.hpp"

#include <stdexcept>

namespace qmf {

void require_word_for(const FilterSystem& fs, const Word& a) {
    if (a.base() != fs.N) {
        throw std::invalid_argument("word over N=" + std::to_string(a.base()) +
                                    " used with a filter system of N=" + std::to_string(fs.N));
    }
}

LaurentPoly apply_S(const FilterSystem& fs, int j, const LaurentPoly& f) {
    const LaurentPoly& m = fs.filter(j);
    if (f.is_zero()) return {};
    return m * dilate(f, fs.N);
}

LaurentPoly apply_S_star(const FilterSystem& fs, int j, const LaurentPoly& f) {
    const LaurentPoly& m = fs.filter(j);
    const Degree N = fs.N;
    LaurentPoly::Map out;
    for (const auto& [d, c] : m.coeffs()) {
        const Complex cc = std::conj(c);
        for (const auto& [n, v] : f.coeffs()) {
            Degree shifted = n - d;
            Degree r = shifted % N;
            if (r != 0) continue;
            out[shifted / N] += cc * v;
        }
    }
    return LaurentPoly(std::move(out));
}

LaurentPoly apply_word(const FilterSystem& fs, const Word& a, const LaurentPoly& f) {
    require_word_for(fs, a);
    LaurentPoly g = f;
    for (auto it = a.digits().rbegin(); it != a.digits().rend(); ++it) g = apply_S(fs, *it, g);
    return g;
}

LaurentPoly apply_word_star(const FilterSystem& fs, const Word& a, const LaurentPoly& f) {
    require_word_for(fs, a);
    LaurentPoly g = f;
    for (int d : a.digits()) {
        if (g.is_zero()) break;
        g = apply_S_star(fs, d, g);
    }
    return g;
}

LaurentPoly projection(const FilterSystem& fs, const Word& a, const LaurentPoly& f) {
    return apply_word(fs, a, apply_word_star(fs, a, f));
}

LaurentPoly m_word(const FilterSystem& fs, const Word& a) { return apply_word(fs, a, basis(0)); }

LaurentPoly monomial_apply(const FilterSystem& fs, const Monomial& m, const LaurentPoly& f) {
    require_same_base(m.left, m.right);
    return apply_word(fs, m.left, apply_word_star(fs, m.right, f)) * m.scalar;
}

std::vector<Monomial> alpha_on_monomial(const FilterSystem& fs, const Monomial& m) {
    require_word_for(fs, m.left);
    require_word_for(fs, m.right);
    std::vector<Monomial> out;
    out.reserve(static_cast<std::size_t>(fs.N));
    for (int i = 0; i < fs.N; ++i) out.push_back({m.left.prepend(i), m.right.prepend(i), m.scalar});
    return out;
}

LaurentPoly apply_monomials(const FilterSystem& fs, const std::vector<Monomial>& terms, const LaurentPoly& f) {
    LaurentPoly sum;
    for (const auto& t : terms) sum += monomial_apply(fs, t, f);
    return sum;
}

}  // namespace qmf
