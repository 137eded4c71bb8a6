#include "qmf/filterbank.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <stdexcept>

namespace qmf {

namespace {

Degree floor_div(Degree a, Degree b) {
    Degree q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

Degree floor_mod(Degree a, Degree b) { return a - b * floor_div(a, b); }

double max_defect_against(const LaurentPoly& p, Complex target_at_zero) {
    return max_coeff_diff(p, LaurentPoly::monomial(0, target_at_zero));
}

double binomial(int n, int k) {
    double r = 1.0;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

}  // namespace

const LaurentPoly& FilterSystem::filter(int j) const {
    if (j < 0 || j >= N || static_cast<std::size_t>(j) >= filters.size()) {
        throw std::invalid_argument("filter index " + std::to_string(j) + " outside [0," +
                                    std::to_string(N) + ")");
    }
    return filters[static_cast<std::size_t>(j)];
}

std::vector<std::vector<LaurentPoly>> polyphase(const FilterSystem& fs) {
    std::vector<std::vector<LaurentPoly::Map>> maps(fs.filters.size(),
                                                    std::vector<LaurentPoly::Map>(static_cast<std::size_t>(fs.N)));
    for (std::size_t j = 0; j < fs.filters.size(); ++j) {
        for (const auto& [k, c] : fs.filters[j].coeffs()) {
            maps[j][static_cast<std::size_t>(floor_mod(k, fs.N))][floor_div(k, fs.N)] = c;
        }
    }
    std::vector<std::vector<LaurentPoly>> A(fs.filters.size());
    for (std::size_t j = 0; j < maps.size(); ++j) {
        for (auto& m : maps[j]) A[j].emplace_back(std::move(m));
    }
    return A;
}

ValidationReport validate(const FilterSystem& fs, double tol) {
    if (!(tol > 0.0)) throw std::invalid_argument("validate: tolerance must be positive");
    if (fs.N < 2) throw std::invalid_argument("validate: N must be >= 2");
    if (fs.filters.size() != static_cast<std::size_t>(fs.N)) {
        throw std::invalid_argument("validate: expected " + std::to_string(fs.N) + " filters, got " +
                                    std::to_string(fs.filters.size()));
    }
    ValidationReport rep;
    const int N = fs.N;

    // Coefficient form: the correlation conj_reflect(m_i) * m_j sampled on N Z.
    for (int i = 0; i < N; ++i) {
        for (int j = 0; j < N; ++j) {
            LaurentPoly corr = conj_reflect(fs.filters[i]) * fs.filters[j];
            Degree lo = 0, hi = 0;
            if (!corr.is_zero()) {
                lo = std::min<Degree>(0, floor_div(corr.min_degree(), N));
                hi = std::max<Degree>(0, floor_div(corr.max_degree(), N) + 1);
            }
            for (Degree l = lo; l <= hi; ++l) {
                Complex expected = (i == j && l == 0) ? Complex(1.0) : Complex(0.0);
                double d = std::abs(corr.coeff(l * N) - expected);
                rep.per_pair_defects[{i, j, l}] = d;
                rep.max_isometry_defect = std::max(rep.max_isometry_defect, d);
            }
        }
    }

    auto A = polyphase(fs);
    // Row form of the polyphase identity restates the isometry conditions.
    for (int i = 0; i < N; ++i) {
        for (int j = 0; j < N; ++j) {
            LaurentPoly s;
            for (int r = 0; r < N; ++r) s += A[i][r] * conj_reflect(A[j][r]);
            rep.max_isometry_defect =
                std::max(rep.max_isometry_defect, max_defect_against(s, i == j ? 1.0 : 0.0));
        }
    }
    // Column form: A^* A = I, i.e. sum_j S_j S_j^* = 1.
    for (int r = 0; r < N; ++r) {
        for (int s = 0; s < N; ++s) {
            LaurentPoly sum;
            for (int j = 0; j < N; ++j) sum += conj_reflect(A[j][r]) * A[j][s];
            rep.max_completeness_defect =
                std::max(rep.max_completeness_defect, max_defect_against(sum, r == s ? 1.0 : 0.0));
        }
    }
    rep.passed = rep.max_isometry_defect <= tol && rep.max_completeness_defect <= tol;
    return rep;
}

FilterSystem haar() {
    const double h = 1.0 / std::sqrt(2.0);
    return FilterSystem{2, {LaurentPoly({{0, h}, {1, h}}), LaurentPoly({{0, h}, {1, -h}})}};
}

FilterSystem permutative_shift(int N) {
    if (N < 2) throw std::invalid_argument("permutative_shift: N must be >= 2");
    FilterSystem fs{N, {}};
    for (int j = 0; j < N; ++j) fs.filters.push_back(basis(j));
    return fs;
}

FilterSystem cantor3() {
    const double h = 1.0 / std::sqrt(2.0);
    return FilterSystem{3,
                        {LaurentPoly({{0, h}, {2, h}}), basis(1), LaurentPoly({{0, h}, {2, -h}})}};
}

LaurentPoly high_pass_from_low(const LaurentPoly& m0, double tol) {
    LaurentPoly corr = conj_reflect(m0) * m0;
    double defect = 0.0;
    if (corr.is_zero()) {
        defect = 1.0;
    } else {
        for (Degree l = floor_div(corr.min_degree(), 2) - 1; l <= floor_div(corr.max_degree(), 2) + 1; ++l) {
            Complex expected = l == 0 ? Complex(1.0) : Complex(0.0);
            defect = std::max(defect, std::abs(corr.coeff(2 * l) - expected));
        }
    }
    if (defect > tol) {
        throw std::invalid_argument("high_pass_from_low: low-pass fails the quadrature condition (defect " +
                                    std::to_string(defect) + ")");
    }
    LaurentPoly::Map out;
    for (const auto& [k, c] : m0.coeffs()) {
        out.emplace(1 - k, (k % 2 == 0 ? 1.0 : -1.0) * std::conj(c));
    }
    return LaurentPoly(std::move(out));
}

FilterSystem daubechies(int vanishing_moments) {
    const int p = vanishing_moments;
    if (p < 1) throw std::invalid_argument("daubechies: need at least one vanishing moment");

    // P(y) = sum_{k<p} C(p-1+k, k) y^k with y = sin^2(w/2) = (2 - z - 1/z)/4.
    const LaurentPoly y({{-1, -0.25}, {0, 0.5}, {1, -0.25}});
    LaurentPoly P;
    LaurentPoly ypow = basis(0);
    for (int k = 0; k < p; ++k) {
        P += ypow * Complex(binomial(p - 1 + k, k));
        ypow = ypow * y;
    }

    // z^(p-1) P(z) is an ordinary polynomial of degree 2p-2; its roots pair
    // as r, 1/conj(r).  Keep the ones inside the unit circle.
    std::vector<Complex> inside;
    const int deg = 2 * (p - 1);
    if (deg > 0) {
        std::vector<Complex> c(static_cast<std::size_t>(deg + 1));
        for (int d = 0; d <= deg; ++d) c[static_cast<std::size_t>(d)] = P.coeff(d - (p - 1));
        Eigen::MatrixXcd companion = Eigen::MatrixXcd::Zero(deg, deg);
        for (int r = 1; r < deg; ++r) companion(r, r - 1) = 1.0;
        for (int r = 0; r < deg; ++r) companion(r, deg - 1) = -c[static_cast<std::size_t>(r)] / c.back();
        Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(companion, false);
        for (Eigen::Index r = 0; r < deg; ++r) {
            Complex root = solver.eigenvalues()[r];
            if (std::abs(root) < 1.0) inside.push_back(root);
        }
        if (static_cast<int>(inside.size()) != p - 1) {
            throw std::runtime_error("daubechies: spectral factorization found unexpected root layout");
        }
    }

    // Q(z) = prod (1 - r z) / prod (1 - r), so Q(1) = 1 and |Q|^2 = P on |z| = 1.
    // Zeros of Q sit outside the disk: the classical coefficient order with
    // the largest taps first.
    LaurentPoly Q = basis(0);
    Complex at_one = 1.0;
    for (Complex r : inside) {
        Q = Q * LaurentPoly({{0, 1.0}, {1, -r}});
        at_one *= (1.0 - r);
    }
    Q *= 1.0 / at_one;

    LaurentPoly m0 = LaurentPoly::monomial(0, std::sqrt(2.0));
    const LaurentPoly half_sum({{0, 0.5}, {1, 0.5}});
    for (int k = 0; k < p; ++k) m0 = m0 * half_sum;
    m0 = m0 * Q;

    // Conjugate root pairs make the coefficients real up to rounding.
    LaurentPoly::Map real;
    for (const auto& [k, c] : m0.coeffs()) real.emplace(k, Complex(c.real(), 0.0));
    m0 = LaurentPoly(std::move(real));

    return FilterSystem{2, {m0, high_pass_from_low(m0, 1e-10)}};
}

FilterSystem daubechies4() { return daubechies(2); }

FilterSystem mix(const FilterSystem& fs, const std::vector<std::vector<Complex>>& u) {
    if (u.size() != static_cast<std::size_t>(fs.N)) throw std::invalid_argument("mix: matrix has wrong size");
    FilterSystem out{fs.N, {}};
    for (const auto& row : u) {
        if (row.size() != static_cast<std::size_t>(fs.N)) throw std::invalid_argument("mix: matrix has wrong size");
        LaurentPoly m;
        for (int j = 0; j < fs.N; ++j) m += fs.filter(j) * row[static_cast<std::size_t>(j)];
        out.filters.push_back(std::move(m));
    }
    return out;
}

FilterSystem builtin(const std::string& name) {
    if (name == "haar") return haar();
    if (name == "cantor3") return cantor3();
    if (name == "daubechies4" || name == "db4") return daubechies4();
    const std::string prefix = "permutative";
    if (name.rfind(prefix, 0) == 0) {
        std::string rest = name.substr(prefix.size());
        if (rest.empty()) return permutative_shift(2);
        std::size_t used = 0;
        int N = 0;
        try {
            N = std::stoi(rest, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used == rest.size() && N >= 2) return permutative_shift(N);
    }
    throw std::invalid_argument("unknown builtin filter system '" + name + "'");
}

}  // namespace qmf
