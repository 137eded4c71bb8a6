#pragma once

/**
 * @file measures.hpp
 * @brief Scalar measures mu_f(J_k(a)) = ||S_a S_a^* f||^2 induced by a
 *        filter-system representation, and the identities they satisfy.
 *
 * Two engines compute the same numbers by unrelated routes:
 *
 *  - operator: ||S_a^* f||^2, composing coefficient-space adjoints;
 *  - spectral: sum_n |(f conj(m_a))^(n N^k)|^2, from the product filter m_a.
 *
 * The operator engine costs about N^k |f| work per table.  The spectral
 * engine materializes every m_a, whose support grows like N^k, so a full
 * table costs on the order of N^(2k) taps; it is the cross-check, not the
 * workhorse, beyond k of about 12.
 *
 * Their agreement is the main consistency check of the library.  For
 * non-unit f the library reports the raw quadratic form; normalizing is
 * left to the caller.
 */

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "qmf/cuntz.hpp"
#include "qmf/filterbank.hpp"
#include "qmf/laurent.hpp"
#include "qmf/nadic.hpp"
#include "qmf/word.hpp"

namespace qmf {

enum class Engine { Operator, Spectral, Product, Packet };

std::string to_string(Engine e);
Engine parse_engine(const std::string& name);

/// Largest table computed by measure_table: N^k <= 2^24.
inline constexpr std::uint64_t kMaxTableCells = std::uint64_t{1} << 24;

/// Values in [-kNegativeClip, 0) are rounding noise and clip to zero.
inline constexpr double kNegativeClip = 1e-12;

struct MeasureTable {
    int N = 2;
    int level = 0;
    /// values[a.index()] = mu(J_k(a)); index order is interval order.
    std::vector<double> values;
    Engine engine = Engine::Operator;
    std::string f_description;

    double at(const Word& a) const;
    double total() const;
};

/// Clips rounding noise below zero; throws std::runtime_error for values
/// below -kNegativeClip.
double clip_measure(double v);

double mu_operator(const FilterSystem& fs, const LaurentPoly& f, const Word& a);
double mu_spectral(const FilterSystem& fs, const LaurentPoly& f, const Word& a);

/// mu_{e_p}(J_k(a)) = sum_n |m_a^(p - n N^k)|^2.
double mu_basis(const FilterSystem& fs, Degree p, const Word& a);

/// All N^k cell values by the operator or spectral engine.  Throws
/// std::invalid_argument when N^k exceeds kMaxTableCells.
MeasureTable measure_table(const FilterSystem& fs, const LaurentPoly& f, int k, Engine engine,
                           std::string description = {});

/// Sums groups of N children into the level k-1 table.
MeasureTable coarsen(const MeasureTable& t);

/// Max |parent - sum of children| between t and its level k-1 coarsening
/// computed independently as `parent`.
double refinement_defect(const MeasureTable& child, const MeasureTable& parent);

struct EigenData {
    std::vector<Complex> lambdas;
    std::vector<double> residuals;
    bool is_eigen = false;
};

/// lambda_i = <f, S_i^* f>, residual_i = ||S_i^* f - lambda_i f||.
/// Throws std::invalid_argument for the zero vector or when ||f|| != 1
/// beyond 1e-9.
EigenData eigen_detect(const FilterSystem& fs, const LaurentPoly& f, double tol = kDefaultTolerance);

/// Digit probabilities of a product measure on Gamma_N^infinity.
class ProductSpec {
public:
    /// Throws std::invalid_argument unless p_i >= 0 and |sum p - 1| <= 1e-12.
    explicit ProductSpec(std::vector<double> p);

    const std::vector<double>& probabilities() const { return p_; }
    int base() const { return static_cast<int>(p_.size()); }

private:
    std::vector<double> p_;
};

/// p_{a_1} ... p_{a_k}
double product_measure(const ProductSpec& spec, const Word& a);
MeasureTable product_table(const ProductSpec& spec, int k);

struct ProductCheck {
    bool is_product = false;
    EigenData eigen;
    std::vector<double> probabilities;
    double max_defect = 0.0;
};

/// Normalizes f, tests for a joint S_i^* eigenvector and, if found,
/// compares the level-k operator table with the product measure built
/// from p_i = |lambda_i|^2.
ProductCheck product_check(const FilterSystem& fs, const LaurentPoly& f, int k, double tol = kDefaultTolerance);
bool check_product(const FilterSystem& fs, const LaurentPoly& f, int k, double tol = kDefaultTolerance);

/// (1/2) sum_a |t1(a) - t2(a)|.  Throws on shape mismatch.
double tv_distance(const MeasureTable& t1, const MeasureTable& t2);

struct CovarianceCheck {
    // <S_a^* f, E(J_l(b)) S_a^* f>  vs  mu_f(sigma_a J_l(b))
    double push_lhs = 0.0;
    double push_rhs = 0.0;
    // sum_i <S_i^* f, E(J_l(b)) S_i^* f>  vs  mu_f(sigma^{-1} J_l(b))
    double pull_lhs = 0.0;
    double pull_rhs = 0.0;
    double defect = 0.0;
    bool passed = false;
};

/// Weak form of S_a E(B) S_a^* = E(sigma_a B) and
/// sum_i S_i E(B) S_i^* = E(sigma^{-1} B) on B = J_l(b), with the
/// right-hand intervals produced by the base-N IFS maps.
CovarianceCheck covariance_check(const FilterSystem& fs, const Word& a, const Word& b, const LaurentPoly& f,
                                 double tol = 1e-10);
bool check_covariance(const FilterSystem& fs, const Word& a, const Word& b, const LaurentPoly& f,
                      double tol = 1e-10);

struct StateInvariance {
    Complex lhs;  // omega_f(alpha(T))
    Complex rhs;  // omega_f(T)
    bool passed = false;
};

StateInvariance state_invariance(const FilterSystem& fs, const LaurentPoly& f, const Monomial& m,
                                 double tol = kDefaultTolerance);
bool check_state_invariance(const FilterSystem& fs, const LaurentPoly& f, const Monomial& m,
                            double tol = kDefaultTolerance);

/// V(sum_a c_a chi_{J_k(a)}) = sum_a c_a S_a S_a^* f.  Words must share one
/// length and be distinct; throws std::invalid_argument otherwise.
LaurentPoly build_isometry_apply(const FilterSystem& fs, const LaurentPoly& f,
                                 const std::vector<std::pair<Word, Complex>>& step);

/// Numerical rank (singular values > 1e-8) of {S_a S_a^* f : a in Gamma_N^k}.
/// Lower levels are sums of level-k vectors, so they add nothing to the span.
/// Throws std::invalid_argument when N^k > 2^12.
int cyclic_span_dim(const FilterSystem& fs, const LaurentPoly& f, int k);

struct CyclicSummand {
    LaurentPoly vector;
    MeasureTable table;
};

/// Finite-level orthogonal splitting into cyclic pieces.  Each seed is
/// orthogonalized against the level-k spans {S_a S_a^* f_j} of earlier
/// accepted vectors; seeds with vanishing residual are dropped.  This is a
/// level-k heuristic, not the transfinite construction.
std::vector<CyclicSummand> greedy_decompose(const FilterSystem& fs, const std::vector<LaurentPoly>& seeds, int k);

/// max over level-k cells J of |mu(J) - sum_i w_i mu(sigma_i^{-1} J)|, with
/// `fine` at level k and `coarse` at level k-1 over base ifs.scale.
double self_similarity_defect(const MeasureTable& fine, const MeasureTable& coarse, const IfsSystem& ifs,
                              const std::vector<double>& weights);

/// Descriptive statistics for absolute-continuity questions.
struct DensityStats {
    double max_density = 0.0;  // max cell mass * N^k
    double min_density = 0.0;
    std::vector<double> bin_edges;
    std::vector<std::size_t> histogram;
};

DensityStats density_stats(const MeasureTable& t, int bins = 10);

}  // namespace qmf
