#include "qmf/measures.hpp"

#include <Eigen/SVD>
#include <algorithm>
#include <cmath>
#include <future>
#include <map>
#include <set>
#include <stdexcept>

#include "qmf/nadic.hpp"

namespace qmf {

std::string to_string(Engine e) {
    switch (e) {
        case Engine::Operator: return "operator";
        case Engine::Spectral: return "spectral";
        case Engine::Product: return "product";
        case Engine::Packet: return "packet";
    }
    return "unknown";
}

Engine parse_engine(const std::string& name) {
    if (name == "operator") return Engine::Operator;
    if (name == "spectral") return Engine::Spectral;
    if (name == "product") return Engine::Product;
    if (name == "packet") return Engine::Packet;
    throw std::invalid_argument("unknown engine '" + name + "'");
}

double MeasureTable::at(const Word& a) const {
    if (a.base() != N || static_cast<int>(a.length()) != level) {
        throw std::invalid_argument("MeasureTable::at: word does not match table shape");
    }
    return values.at(a.index());
}

double MeasureTable::total() const {
    double s = 0.0;
    for (double v : values) s += v;
    return s;
}

double clip_measure(double v) {
    if (v >= 0.0) return v;
    if (v >= -kNegativeClip) return 0.0;
    throw std::runtime_error("negative measure value " + std::to_string(v));
}

double mu_operator(const FilterSystem& fs, const LaurentPoly& f, const Word& a) {
    return apply_word_star(fs, a, f).norm2();
}

namespace {

// Contiguous coefficients c[i] = m^(lo + i); the spectral engine builds
// products of dilated filters whose support fills an interval.
struct DenseFilter {
    Degree lo = 0;
    std::vector<Complex> c;
};

DenseFilter to_dense(const LaurentPoly& m) {
    if (m.is_zero()) return {};
    DenseFilter out{m.min_degree(), std::vector<Complex>(static_cast<std::size_t>(m.max_degree() - m.min_degree() + 1))};
    for (const auto& [d, v] : m.coeffs()) out.c[static_cast<std::size_t>(d - out.lo)] = v;
    return out;
}

// m(z) * g(z^scale)
DenseFilter times_dilated(const DenseFilter& m, const LaurentPoly& g, Degree scale) {
    if (m.c.empty() || g.is_zero()) return {};
    const Degree glo = g.min_degree();
    const Degree span = (g.max_degree() - glo) * scale;
    DenseFilter out{m.lo + glo * scale, std::vector<Complex>(m.c.size() + static_cast<std::size_t>(span))};
    for (const auto& [d, gc] : g.coeffs()) {
        Complex* dst = out.c.data() + (d - glo) * scale;
        for (std::size_t i = 0; i < m.c.size(); ++i) dst[i] += gc * m.c[i];
    }
    return out;
}

// sum_n |(f conj(m))^(n M)|^2 without forming the full product: for each
// f^(d) only the m^(e) with e = d mod M contribute, to the bucket (d - e)/M.
double spectral_sum(const LaurentPoly& f, const DenseFilter& m, std::uint64_t M) {
    if (m.c.empty()) return 0.0;
    const auto period = static_cast<Degree>(M);
    const Degree hi = m.lo + static_cast<Degree>(m.c.size());
    std::map<Degree, Complex> buckets;
    for (const auto& [d, fc] : f.coeffs()) {
        const Degree r = ((d - m.lo) % period + period) % period;
        for (Degree e = m.lo + r; e < hi; e += period) {
            buckets[(d - e) / period] += fc * std::conj(m.c[static_cast<std::size_t>(e - m.lo)]);
        }
    }
    double s = 0.0;
    for (const auto& [n, c] : buckets) s += std::norm(c);
    return s;
}

void check_table_size(int N, int k) {
    if (k < 0) throw std::invalid_argument("measure table: negative level");
    std::uint64_t cells = 0;
    try {
        cells = checked_power(N, static_cast<std::size_t>(k));
    } catch (const std::overflow_error&) {
        cells = kMaxTableCells + 1;
    }
    if (cells > kMaxTableCells) {
        throw std::invalid_argument("measure table: N^k = " + std::to_string(N) + "^" + std::to_string(k) +
                                    " exceeds the 2^24 cell cap");
    }
}

// Depth-first over the word tree; `v` is S_a^* f for the current prefix a
// and `base` its index scaled to the full level.
void fill_operator(const FilterSystem& fs, const LaurentPoly& v, int remaining, std::uint64_t base,
                   std::uint64_t stride, std::vector<double>& out) {
    if (remaining == 0) {
        out[base] = v.norm2();
        return;
    }
    if (v.is_zero()) return;  // slots are zero-initialized
    const std::uint64_t child_stride = stride / static_cast<std::uint64_t>(fs.N);
    for (int i = 0; i < fs.N; ++i) {
        fill_operator(fs, apply_S_star(fs, i, v), remaining - 1, base + static_cast<std::uint64_t>(i) * child_stride,
                      child_stride, out);
    }
}

// `m` is m_a for the current prefix a of length `depth`; the next factor is
// m_i(z^{N^depth}).
void fill_spectral(const FilterSystem& fs, const LaurentPoly& f, const DenseFilter& m, int depth, int k,
                   std::uint64_t base, std::uint64_t stride, std::vector<double>& out) {
    if (depth == k) {
        out[base] = spectral_sum(f, m, checked_power(fs.N, static_cast<std::size_t>(k)));
        return;
    }
    const std::uint64_t child_stride = stride / static_cast<std::uint64_t>(fs.N);
    const auto scale = static_cast<Degree>(checked_power(fs.N, static_cast<std::size_t>(depth)));
    for (int i = 0; i < fs.N; ++i) {
        fill_spectral(fs, f, times_dilated(m, fs.filter(i), scale), depth + 1, k,
                      base + static_cast<std::uint64_t>(i) * child_stride, child_stride, out);
    }
}

constexpr std::uint64_t kParallelThreshold = 4096;

}  // namespace

double mu_spectral(const FilterSystem& fs, const LaurentPoly& f, const Word& a) {
    require_word_for(fs, a);
    return spectral_sum(f, to_dense(m_word(fs, a)), checked_power(fs.N, a.length()));
}

double mu_basis(const FilterSystem& fs, Degree p, const Word& a) {
    require_word_for(fs, a);
    const auto period = static_cast<Degree>(checked_power(fs.N, a.length()));
    const LaurentPoly m = m_word(fs, a);
    double s = 0.0;
    for (const auto& [d, c] : m.coeffs()) {
        if ((p - d) % period == 0) s += std::norm(c);
    }
    return s;
}

MeasureTable measure_table(const FilterSystem& fs, const LaurentPoly& f, int k, Engine engine,
                           std::string description) {
    check_table_size(fs.N, k);
    if (engine != Engine::Operator && engine != Engine::Spectral) {
        throw std::invalid_argument("measure_table: engine must be operator or spectral");
    }
    const std::uint64_t cells = checked_power(fs.N, static_cast<std::size_t>(k));
    MeasureTable t{fs.N, k, std::vector<double>(cells, 0.0), engine, std::move(description)};

    if (k == 0) {
        t.values[0] = f.norm2();
        return t;
    }

    // Top-level subtrees write disjoint slot ranges, so the result does not
    // depend on scheduling.
    const std::uint64_t child_stride = cells / static_cast<std::uint64_t>(fs.N);
    auto run_branch = [&](int i) {
        const std::uint64_t base = static_cast<std::uint64_t>(i) * child_stride;
        if (engine == Engine::Operator) {
            fill_operator(fs, apply_S_star(fs, i, f), k - 1, base, child_stride, t.values);
        } else {
            fill_spectral(fs, f, to_dense(fs.filter(i)), 1, k, base, child_stride, t.values);
        }
    };
    if (cells >= kParallelThreshold) {
        std::vector<std::future<void>> tasks;
        for (int i = 0; i < fs.N; ++i) tasks.push_back(std::async(std::launch::async, run_branch, i));
        for (auto& task : tasks) task.get();
    } else {
        for (int i = 0; i < fs.N; ++i) run_branch(i);
    }
    for (double& v : t.values) v = clip_measure(v);
    return t;
}

MeasureTable coarsen(const MeasureTable& t) {
    if (t.level == 0) throw std::invalid_argument("coarsen: level-0 table");
    MeasureTable out{t.N, t.level - 1, std::vector<double>(t.values.size() / static_cast<std::size_t>(t.N), 0.0),
                     t.engine, t.f_description};
    for (std::size_t i = 0; i < t.values.size(); ++i) out.values[i / static_cast<std::size_t>(t.N)] += t.values[i];
    return out;
}

double refinement_defect(const MeasureTable& child, const MeasureTable& parent) {
    if (child.N != parent.N || child.level != parent.level + 1) {
        throw std::invalid_argument("refinement_defect: tables are not consecutive levels");
    }
    MeasureTable summed = coarsen(child);
    double m = 0.0;
    for (std::size_t i = 0; i < summed.values.size(); ++i) {
        m = std::max(m, std::abs(summed.values[i] - parent.values[i]));
    }
    return m;
}

EigenData eigen_detect(const FilterSystem& fs, const LaurentPoly& f, double tol) {
    if (f.is_zero()) throw std::invalid_argument("eigen_detect: zero vector");
    if (std::abs(f.norm() - 1.0) > 1e-9) throw std::invalid_argument("eigen_detect: vector is not unit length");
    EigenData out;
    out.is_eigen = true;
    for (int i = 0; i < fs.N; ++i) {
        LaurentPoly g = apply_S_star(fs, i, f);
        Complex lambda = inner(f, g);
        double residual = distance(g, f * lambda);
        out.lambdas.push_back(lambda);
        out.residuals.push_back(residual);
        if (residual > tol) out.is_eigen = false;
    }
    return out;
}

ProductSpec::ProductSpec(std::vector<double> p) : p_(std::move(p)) {
    if (p_.size() < 2) throw std::invalid_argument("ProductSpec: need at least two digits");
    double s = 0.0;
    for (double v : p_) {
        if (!(v >= 0.0)) throw std::invalid_argument("ProductSpec: negative probability");
        s += v;
    }
    if (std::abs(s - 1.0) > 1e-12) throw std::invalid_argument("ProductSpec: probabilities do not sum to 1");
}

double product_measure(const ProductSpec& spec, const Word& a) {
    if (a.base() != spec.base()) throw std::invalid_argument("product_measure: word alphabet differs from spec");
    double v = 1.0;
    for (int d : a.digits()) v *= spec.probabilities()[static_cast<std::size_t>(d)];
    return v;
}

MeasureTable product_table(const ProductSpec& spec, int k) {
    const int N = spec.base();
    check_table_size(N, k);
    // Level-by-level Kronecker expansion in index order.
    std::vector<double> values{1.0};
    for (int level = 0; level < k; ++level) {
        std::vector<double> next;
        next.reserve(values.size() * static_cast<std::size_t>(N));
        for (double v : values) {
            for (double p : spec.probabilities()) next.push_back(v * p);
        }
        values = std::move(next);
    }
    return MeasureTable{N, k, std::move(values), Engine::Product, "product"};
}

ProductCheck product_check(const FilterSystem& fs, const LaurentPoly& f, int k, double tol) {
    ProductCheck out;
    if (f.is_zero()) return out;
    const LaurentPoly unit = f * Complex(1.0 / f.norm());
    out.eigen = eigen_detect(fs, unit, tol);
    if (!out.eigen.is_eigen) return out;
    double total = 0.0;
    for (Complex l : out.eigen.lambdas) {
        out.probabilities.push_back(std::norm(l));
        total += std::norm(l);
    }
    if (std::abs(total - 1.0) > tol) return out;
    for (double& p : out.probabilities) p /= total;
    MeasureTable observed = measure_table(fs, unit, k, Engine::Operator);
    MeasureTable expected = product_table(ProductSpec(out.probabilities), k);
    for (std::size_t i = 0; i < observed.values.size(); ++i) {
        out.max_defect = std::max(out.max_defect, std::abs(observed.values[i] - expected.values[i]));
    }
    out.is_product = out.max_defect <= tol;
    return out;
}

bool check_product(const FilterSystem& fs, const LaurentPoly& f, int k, double tol) {
    return product_check(fs, f, k, tol).is_product;
}

double tv_distance(const MeasureTable& t1, const MeasureTable& t2) {
    if (t1.N != t2.N || t1.level != t2.level || t1.values.size() != t2.values.size()) {
        throw std::invalid_argument("tv_distance: tables differ in shape");
    }
    double s = 0.0;
    for (std::size_t i = 0; i < t1.values.size(); ++i) s += std::abs(t1.values[i] - t2.values[i]);
    return 0.5 * s;
}

namespace {

// <f, E(J) f> for an N-adic cell J.
double cell_mass(const FilterSystem& fs, const LaurentPoly& f, const NadicInterval& J) {
    return inner(f, projection(fs, J.digits(), f)).real();
}

}  // namespace

CovarianceCheck covariance_check(const FilterSystem& fs, const Word& a, const Word& b, const LaurentPoly& f,
                                 double tol) {
    require_word_for(fs, a);
    require_word_for(fs, b);
    const IfsSystem ifs = base_ifs(fs.N);
    const NadicInterval B = interval(fs.N, b);
    CovarianceCheck out;

    const LaurentPoly pulled = apply_word_star(fs, a, f);
    out.push_lhs = inner(pulled, projection(fs, b, pulled)).real();
    out.push_rhs = cell_mass(fs, f, sigma_map(ifs, a, B));

    for (int i = 0; i < fs.N; ++i) {
        const LaurentPoly g = apply_S_star(fs, i, f);
        out.pull_lhs += inner(g, projection(fs, b, g)).real();
    }
    for (const auto& J : sigma_preimage(ifs, B)) out.pull_rhs += cell_mass(fs, f, J);

    out.defect = std::max(std::abs(out.push_lhs - out.push_rhs), std::abs(out.pull_lhs - out.pull_rhs));
    out.passed = out.defect <= tol;
    return out;
}

bool check_covariance(const FilterSystem& fs, const Word& a, const Word& b, const LaurentPoly& f, double tol) {
    return covariance_check(fs, a, b, f, tol).passed;
}

StateInvariance state_invariance(const FilterSystem& fs, const LaurentPoly& f, const Monomial& m, double tol) {
    StateInvariance out;
    out.lhs = inner(f, apply_monomials(fs, alpha_on_monomial(fs, m), f));
    out.rhs = inner(f, monomial_apply(fs, m, f));
    out.passed = std::abs(out.lhs - out.rhs) <= tol;
    return out;
}

bool check_state_invariance(const FilterSystem& fs, const LaurentPoly& f, const Monomial& m, double tol) {
    return state_invariance(fs, f, m, tol).passed;
}

LaurentPoly build_isometry_apply(const FilterSystem& fs, const LaurentPoly& f,
                                 const std::vector<std::pair<Word, Complex>>& step) {
    std::set<Word> seen;
    LaurentPoly out;
    for (const auto& [a, c] : step) {
        require_word_for(fs, a);
        if (a.length() != step.front().first.length()) {
            throw std::invalid_argument("build_isometry_apply: words of different lengths");
        }
        if (!seen.insert(a).second) throw std::invalid_argument("build_isometry_apply: duplicate word " + a.to_string());
        out += projection(fs, a, f) * c;
    }
    return out;
}

int cyclic_span_dim(const FilterSystem& fs, const LaurentPoly& f, int k) {
    if (k < 0) throw std::invalid_argument("cyclic_span_dim: negative level");
    std::uint64_t cells = 0;
    try {
        cells = checked_power(fs.N, static_cast<std::size_t>(k));
    } catch (const std::overflow_error&) {
        cells = (1u << 12) + 1;
    }
    if (cells > (1u << 12)) throw std::invalid_argument("cyclic_span_dim: N^k exceeds 2^12");

    std::vector<LaurentPoly> rows;
    std::map<Degree, Eigen::Index> columns;
    for (std::uint64_t i = 0; i < cells; ++i) {
        LaurentPoly v = projection(fs, Word::from_index(fs.N, k, i), f);
        if (v.norm() < kPruneThreshold) continue;
        for (const auto& [d, c] : v.coeffs()) columns.emplace(d, 0);
        rows.push_back(std::move(v));
    }
    if (rows.empty()) return 0;
    Eigen::Index col = 0;
    for (auto& [d, idx] : columns) idx = col++;

    Eigen::MatrixXcd M = Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(rows.size()), col);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        for (const auto& [d, c] : rows[r].coeffs()) M(static_cast<Eigen::Index>(r), columns[d]) = c;
    }
    Eigen::BDCSVD<Eigen::MatrixXcd> svd(M);
    int rank = 0;
    for (Eigen::Index i = 0; i < svd.singularValues().size(); ++i) {
        if (svd.singularValues()[i] > 1e-8) ++rank;
    }
    return rank;
}

namespace {

LaurentPoly orthogonalize(const LaurentPoly& v, const std::vector<LaurentPoly>& onb) {
    LaurentPoly r = v;
    // Two Gram-Schmidt passes.
    for (int pass = 0; pass < 2; ++pass) {
        for (const auto& q : onb) r -= q * inner(q, r);
    }
    return r;
}

}  // namespace

std::vector<CyclicSummand> greedy_decompose(const FilterSystem& fs, const std::vector<LaurentPoly>& seeds, int k) {
    std::vector<CyclicSummand> out;
    std::vector<LaurentPoly> onb;
    const auto words = Word::all(fs.N, k);
    for (const auto& seed : seeds) {
        if (seed.is_zero()) throw std::invalid_argument("greedy_decompose: zero seed");
        LaurentPoly r = orthogonalize(seed, onb);
        if (r.norm() <= 1e-9 * std::max(1.0, seed.norm())) continue;
        r *= 1.0 / r.norm();
        for (const auto& a : words) {
            LaurentPoly v = orthogonalize(projection(fs, a, r), onb);
            double n = v.norm();
            if (n > 1e-12) onb.push_back(v * Complex(1.0 / n));
        }
        MeasureTable t = measure_table(fs, r, k, Engine::Operator, "summand " + std::to_string(out.size()));
        out.push_back({std::move(r), std::move(t)});
    }
    return out;
}

double self_similarity_defect(const MeasureTable& fine, const MeasureTable& coarse, const IfsSystem& ifs,
                              const std::vector<double>& weights) {
    if (fine.N != ifs.scale || coarse.N != ifs.scale) {
        throw std::invalid_argument("self_similarity_defect: table base differs from IFS scale");
    }
    if (fine.level != coarse.level + 1) throw std::invalid_argument("self_similarity_defect: levels must be k and k-1");
    if (weights.size() != static_cast<std::size_t>(ifs.branches())) {
        throw std::invalid_argument("self_similarity_defect: one weight per branch");
    }
    double defect = 0.0;
    for (const auto& a : Word::all(fine.N, fine.level)) {
        const NadicInterval J(fine.N, a);
        double rhs = 0.0;
        for (int i = 0; i < ifs.branches(); ++i) {
            if (const auto pre = branch_preimage(ifs, i, J)) rhs += weights[static_cast<std::size_t>(i)] * coarse.at(pre->digits());
        }
        defect = std::max(defect, std::abs(fine.at(a) - rhs));
    }
    return defect;
}

DensityStats density_stats(const MeasureTable& t, int bins) {
    if (bins < 1) throw std::invalid_argument("density_stats: need at least one bin");
    DensityStats s;
    const double scale = static_cast<double>(t.values.size());
    s.min_density = t.values.empty() ? 0.0 : t.values.front() * scale;
    for (double v : t.values) {
        s.max_density = std::max(s.max_density, v * scale);
        s.min_density = std::min(s.min_density, v * scale);
    }
    s.histogram.assign(static_cast<std::size_t>(bins), 0);
    const double hi = s.max_density > 0.0 ? s.max_density : 1.0;
    for (int i = 0; i <= bins; ++i) s.bin_edges.push_back(hi * i / bins);
    for (double v : t.values) {
        auto b = static_cast<std::size_t>(std::min<double>(bins - 1, std::floor(v * scale / hi * bins)));
        ++s.histogram[b];
    }
    return s;
}

}  // namespace qmf
