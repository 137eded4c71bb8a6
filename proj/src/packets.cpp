#include "qmf/packets.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "qmf/cuntz.hpp"

namespace qmf {

PacketIndex PacketIndex::from_value(int N, std::uint64_t n, int k) {
    if (k < 0) throw std::invalid_argument("PacketIndex: negative digit count");
    std::vector<int> d;
    for (int i = 0; i < k; ++i) {
        d.push_back(static_cast<int>(n % static_cast<std::uint64_t>(N)));
        n /= static_cast<std::uint64_t>(N);
    }
    if (n != 0) throw std::invalid_argument("PacketIndex: value needs more than k digits");
    return PacketIndex{Word(N, std::move(d))};
}

std::uint64_t PacketIndex::value() const {
    // a_1 is least significant, so this is the word index of the reversal.
    return digits.reversed().index();
}

PacketIndex bit_reverse(const PacketIndex& n) { return PacketIndex{n.digits.reversed()}; }

bool is_haar(const FilterSystem& fs) {
    const FilterSystem h = haar();
    if (fs.N != 2 || fs.filters.size() != 2) return false;
    for (int i = 0; i < 2; ++i) {
        if (max_coeff_diff(fs.filters[static_cast<std::size_t>(i)], h.filters[static_cast<std::size_t>(i)]) > 1e-15) {
            return false;
        }
    }
    return true;
}

namespace {

void require_haar(const FilterSystem& fs) {
    if (!is_haar(fs)) throw std::invalid_argument("the exact packet pipeline requires the Haar system");
}

}  // namespace

StepFunction haar_packet(const PacketIndex& n) {
    if (n.base() != 2) throw std::invalid_argument("haar_packet: only N = 2 is supported");
    // sqrt(2) m_0^ = (1, 1) and sqrt(2) m_1^ = (1, -1): w(x) = w'(2x) +- w'(2x - 1),
    // where w' has the remaining digits.  Build from the innermost digit out.
    std::vector<Complex> v{1.0};
    const auto& d = n.digits.digits();
    for (auto it = d.rbegin(); it != d.rend(); ++it) {
        const double sign = *it == 0 ? 1.0 : -1.0;
        const std::size_t half = v.size();
        v.resize(2 * half);
        for (std::size_t i = 0; i < half; ++i) v[half + i] = sign * v[i];
    }
    return StepFunction(2, n.length(), 0, std::move(v));
}

Complex scaling_product_truncated(const FilterSystem& fs, int K, double xi) {
    const LaurentPoly& m0 = fs.filter(0);
    const double root = std::sqrt(static_cast<double>(fs.N));
    if (std::abs(eval(m0, 0.0) - root) > 1e-9) {
        throw std::invalid_argument("scaling_product_truncated: low-pass is not normalized to sqrt(N) at 1");
    }
    Complex prod = 1.0;
    double scale = 1.0;
    for (int k = 1; k <= K; ++k) {
        scale *= fs.N;
        prod *= eval(m0, -xi / scale) / root;
    }
    return prod;
}

Complex T_phi_k(const StepFunction& phi, const StepFunction& w, int k, const Rational& x) {
    if (phi.base() != w.base()) throw std::invalid_argument("T_phi_k: step functions on different bases");
    if (k < 0) throw std::invalid_argument("T_phi_k: negative level");
    return inner(phi.scaled_translated(k, 0), w.shifted(x));
}

PacketIdentity packet_coefficient_identity(const FilterSystem& fs, const Word& a, Degree p, std::int64_t j) {
    require_haar(fs);
    const int k = static_cast<int>(a.length());
    const auto period = static_cast<Degree>(checked_power(2, a.length()));
    PacketIdentity out;
    out.lhs = m_word(fs, a).coeff(p - j * period);
    const StepFunction w = haar_packet(bit_reverse(PacketIndex{a}));
    const Rational x = Rational(p, period) - Rational(j);
    out.rhs = std::pow(2.0, 0.5 * k) * T_phi_k(StepFunction::unit_indicator(2), w, k, x);
    out.defect = std::abs(out.lhs - out.rhs);
    return out;
}

double mu_p_via_packets(const FilterSystem& fs, Degree p, const Word& a) {
    require_haar(fs);
    require_word_for(fs, a);
    const int k = static_cast<int>(a.length());
    const auto period = static_cast<Degree>(checked_power(2, a.length()));
    const StepFunction phi = StepFunction::unit_indicator(2);
    const StepFunction w = haar_packet(bit_reverse(PacketIndex{a}));
    const StepFunction phi_k = phi.scaled_translated(k, 0);

    // T^k w (x) vanishes unless x lies in (w.left - phi_k.right, w.right - phi_k.left).
    const Rational xmin = w.support_left() - phi_k.support_right();
    const Rational xmax = w.support_right() - phi_k.support_left();
    const Rational shift(p, period);
    const auto j_lo = static_cast<std::int64_t>((shift - xmax).floor()) - 1;
    const auto j_hi = static_cast<std::int64_t>((shift - xmin).floor()) + 1;

    double s = 0.0;
    for (std::int64_t j = j_lo; j <= j_hi; ++j) s += std::norm(T_phi_k(phi, w, k, shift - Rational(j)));
    return static_cast<double>(period) * s;
}

MeasureTable packet_measure_table(const FilterSystem& fs, Degree p, int k) {
    require_haar(fs);
    MeasureTable t{2, k, {}, Engine::Packet, "e_" + std::to_string(p)};
    for (const auto& a : Word::all(2, k)) t.values.push_back(clip_measure(mu_p_via_packets(fs, p, a)));
    return t;
}

double packet_onb_check(const std::vector<std::pair<PacketIndex, int>>& E, int kmax) {
    if (E.empty()) throw std::invalid_argument("packet_onb_check: empty index set");
    if (kmax < 0) throw std::invalid_argument("packet_onb_check: negative translate range");

    struct Cell {
        Rational left, right;
    };
    std::vector<Cell> cells;
    for (const auto& [n, q] : E) {
        if (n.base() != 2) throw std::invalid_argument("packet_onb_check: only N = 2 is supported");
        const Rational scale = q >= 0 ? Rational(ipow(2, q)) : Rational(1, ipow(2, -q));
        const auto v = static_cast<Int128>(n.value());
        cells.push_back({scale * Rational(v), scale * Rational(v + 1)});
    }
    std::sort(cells.begin(), cells.end(), [](const Cell& a, const Cell& b) { return a.left < b.left; });
    if (cells.front().left != Rational(0)) {
        throw std::invalid_argument("packet_onb_check: intervals do not start at 0");
    }
    for (std::size_t i = 1; i < cells.size(); ++i) {
        if (cells[i].left < cells[i - 1].right) throw std::invalid_argument("packet_onb_check: intervals overlap");
        if (cells[i].left != cells[i - 1].right) throw std::invalid_argument("packet_onb_check: intervals leave a gap");
    }

    std::vector<StepFunction> fns;
    for (const auto& [n, q] : E) {
        const StepFunction w = haar_packet(n);
        for (int t = -kmax; t <= kmax; ++t) fns.push_back(w.scaled_translated(q, t) * std::pow(2.0, 0.5 * q));
    }
    double defect = 0.0;
    for (std::size_t i = 0; i < fns.size(); ++i) {
        for (std::size_t j = i; j < fns.size(); ++j) {
            const Complex expected = i == j ? 1.0 : 0.0;
            defect = std::max(defect, std::abs(inner(fns[i], fns[j]) - expected));
        }
    }
    return defect;
}

PacketSweep packet_sweep(int kmax, int jmax) {
    const FilterSystem h = haar();
    PacketSweep out;
    for (int k = 1; k <= kmax; ++k) {
        const auto period = static_cast<Degree>(checked_power(2, static_cast<std::size_t>(k)));
        for (const auto& a : Word::all(2, k)) {
            for (Degree p = 0; p < period; ++p) {
                for (std::int64_t j = -jmax; j <= jmax; ++j) {
                    out.max_identity_defect =
                        std::max(out.max_identity_defect, packet_coefficient_identity(h, a, p, j).defect);
                    ++out.cases;
                }
                out.max_measure_defect =
                    std::max(out.max_measure_defect, std::abs(mu_p_via_packets(h, p, a) - mu_basis(h, p, a)));
            }
        }
    }
    return out;
}

}  // namespace qmf
