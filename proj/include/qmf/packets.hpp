#pragma once

/**
 * @file packets.hpp
 * @brief Wavelet packets, bit reversal, and the packet formula for the
 *        basis-vector measures mu_p in the exact Haar case.
 *
 * Fourier conventions.  On R, f^(xi) = int exp(-i 2 pi xi x) f(x) dx.
 * The scaling function is phi^(xi) = prod_k m_0(xi/N^k)/sqrt(N) with
 * m_0(theta) := m_0(exp(-i 2 pi theta)), which for Haar gives
 * phi = chi_[0,1).  Packets obey the time-domain recursion
 *     w_{N n + i}(x) = sqrt(N) sum_k m_i^(k) w_n(N x - k),
 * so the least significant digit of the packet index is the outermost
 * filter.  With these conventions the filter coefficients of m_a are
 * recovered from the packet of the reversed index as
 *     m_a^(p - j N^k) = N^(k/2) (T^k w_{rev(n)})(p/N^k - j).
 */

#include <cstdint>
#include <utility>
#include <vector>

#include "qmf/filterbank.hpp"
#include "qmf/measures.hpp"
#include "qmf/step_function.hpp"
#include "qmf/word.hpp"

namespace qmf {

/// n = a_1 + a_2 N + ... + a_k N^(k-1) with the digit count k explicit.
struct PacketIndex {
    Word digits;

    static PacketIndex from_value(int N, std::uint64_t n, int k);

    int base() const { return digits.base(); }
    int length() const { return static_cast<int>(digits.length()); }
    std::uint64_t value() const;
};

/// Reverses the k digits: a_k + a_{k-1} N + ... + a_1 N^(k-1).
PacketIndex bit_reverse(const PacketIndex& n);

/// Haar (Walsh) packet w_n as a step function on the 2^-k grid of [0,1).
/// Throws std::invalid_argument unless N = 2.
StepFunction haar_packet(const PacketIndex& n);

/// prod_{k=1}^{K} m_0(xi/N^k)/sqrt(N).  Throws std::invalid_argument
/// unless m_0 at frequency zero equals sqrt(N) within 1e-9.
Complex scaling_product_truncated(const FilterSystem& fs, int K, double xi);

/// (T^k w)(x) = int w(x + y) conj(phi(N^k y)) dy, computed exactly on the
/// common grid.  Throws std::invalid_argument if x is not N-adic or the
/// bases differ.
Complex T_phi_k(const StepFunction& phi, const StepFunction& w, int k, const Rational& x);

struct PacketIdentity {
    Complex lhs;  // m_a^(p - j 2^k)
    Complex rhs;  // 2^(k/2) (T^k w_rev(n))(p/2^k - j)
    double defect = 0.0;
};

/// Checks one instance of the packet formula for the Haar system.
/// Throws std::invalid_argument unless fs is the Haar system.
PacketIdentity packet_coefficient_identity(const FilterSystem& fs, const Word& a, Degree p, std::int64_t j);

/// mu_p(J_k(a)) = 2^k sum_j |(T^k w_rev(n))(p/2^k - j)|^2 for Haar.
double mu_p_via_packets(const FilterSystem& fs, Degree p, const Word& a);

/// Level-k table of mu_p from the packet formula (engine Packet).
MeasureTable packet_measure_table(const FilterSystem& fs, Degree p, int k);

/// Gram defect max |G - I| of {2^(q/2) w_n(2^q x - t)} over (n, q) in E and
/// |t| <= kmax.  Throws std::invalid_argument if the frequency intervals
/// [2^q n, 2^q (n+1)) overlap or do not tile some [0, B).
double packet_onb_check(const std::vector<std::pair<PacketIndex, int>>& E, int kmax);

struct PacketSweep {
    double max_identity_defect = 0.0;
    double max_measure_defect = 0.0;  // mu_p_via_packets vs mu_basis
    std::size_t cases = 0;
};

/// All a in Gamma_2^k for 1 <= k <= kmax, 0 <= p < 2^k, |j| <= jmax.
PacketSweep packet_sweep(int kmax, int jmax);

/// True if fs equals haar() up to 1e-15 per coefficient.
bool is_haar(const FilterSystem& fs);

}  // namespace qmf
