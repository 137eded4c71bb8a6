#include "qmf/pyramid.hpp"

#include <cmath>
#include <future>
#include <stdexcept>

#include "qmf/cuntz.hpp"
#include "qmf/packets.hpp"

namespace qmf {

Signal upsample(const Signal& xi, int N) { return dilate(xi, N); }

Signal downsample(const Signal& xi, int N) {
    if (N < 2) throw std::invalid_argument("downsample: N must be >= 2");
    LaurentPoly::Map out;
    for (const auto& [n, c] : xi.coeffs()) {
        if (n % N == 0) out.emplace(n / N, c);
    }
    return LaurentPoly(std::move(out));
}

Signal s0_time(const FilterSystem& fs, const Signal& xi) {
    if (fs.N != 2) throw std::invalid_argument("s0_time: N must be 2");
    LaurentPoly::Map out;
    for (const auto& [k, x] : xi.coeffs()) {
        for (const auto& [d, a] : fs.filter(0).coeffs()) out[d + 2 * k] += a * x;
    }
    return LaurentPoly(std::move(out));
}

std::vector<Signal> analyze(const FilterSystem& fs, const Signal& xi) {
    std::vector<Signal> bands;
    bands.reserve(fs.filters.size());
    for (int i = 0; i < fs.N; ++i) bands.push_back(apply_S_star(fs, i, xi));
    return bands;
}

Signal synthesize(const FilterSystem& fs, const std::vector<Signal>& bands) {
    if (bands.size() != static_cast<std::size_t>(fs.N)) {
        throw std::invalid_argument("synthesize: expected " + std::to_string(fs.N) + " bands, got " +
                                    std::to_string(bands.size()));
    }
    Signal out;
    for (int i = 0; i < fs.N; ++i) out += apply_S(fs, i, bands[static_cast<std::size_t>(i)]);
    return out;
}

SubbandTree analyze_tree(const FilterSystem& fs, const Signal& xi, int depth) {
    if (depth < 0) throw std::invalid_argument("analyze_tree: negative depth");
    checked_power(fs.N, static_cast<std::size_t>(depth));
    SubbandTree tree{fs.N, depth, {{xi}}};
    for (int d = 0; d < depth; ++d) {
        const auto& parents = tree.levels.back();
        std::vector<std::future<std::vector<Signal>>> jobs;
        jobs.reserve(parents.size());
        const auto policy = parents.size() >= 64 ? std::launch::async : std::launch::deferred;
        for (const auto& p : parents) jobs.push_back(std::async(policy, [&fs, &p] { return analyze(fs, p); }));
        std::vector<Signal> next;
        next.reserve(parents.size() * static_cast<std::size_t>(fs.N));
        for (auto& j : jobs) {
            for (auto& band : j.get()) next.push_back(std::move(band));
        }
        tree.levels.push_back(std::move(next));
    }
    return tree;
}

Signal synthesize_tree(const FilterSystem& fs, const SubbandTree& tree) {
    if (tree.N != fs.N) throw std::invalid_argument("synthesize_tree: tree base differs from filter system");
    std::vector<Signal> nodes = tree.leaves();
    const auto N = static_cast<std::size_t>(fs.N);
    while (nodes.size() > 1) {
        std::vector<Signal> up;
        up.reserve(nodes.size() / N);
        for (std::size_t i = 0; i < nodes.size(); i += N) {
            up.push_back(synthesize(fs, std::vector<Signal>(nodes.begin() + static_cast<std::ptrdiff_t>(i),
                                                            nodes.begin() + static_cast<std::ptrdiff_t>(i + N))));
        }
        nodes = std::move(up);
    }
    return nodes.front();
}

double reconstruction_defect(const FilterSystem& fs, const Signal& xi, int depth) {
    return max_coeff_diff(synthesize_tree(fs, analyze_tree(fs, xi, depth)), xi);
}

double row_contraction_defect(const std::vector<LaurentPoly>& filters, const Signal& f) {
    if (filters.size() < 2) throw std::invalid_argument("row_contraction_defect: need at least two filters");
    // Built directly: the filters need not form a validated system.
    const FilterSystem fs{static_cast<int>(filters.size()), filters};
    double s = 0.0;
    for (int i = 0; i < fs.N; ++i) s += apply_S_star(fs, i, f).norm2();
    return s - f.norm2();
}

StepFunction w_phi_haar(const Signal& xi) {
    if (xi.is_zero()) return StepFunction(2, 0, 0, {});
    const Degree lo = xi.min_degree();
    const Degree hi = xi.max_degree();
    std::vector<Complex> v(static_cast<std::size_t>(hi - lo + 1));
    for (const auto& [k, c] : xi.coeffs()) v[static_cast<std::size_t>(k - lo)] = c;
    return StepFunction(2, 0, lo, std::move(v));
}

StepFunction unitary_scaling(const StepFunction& g) {
    if (g.base() != 2) throw std::invalid_argument("unitary_scaling: N must be 2");
    return g.scaled_translated(-1, 0) * (1.0 / std::sqrt(2.0));
}

double intertwining_defect(const FilterSystem& fs, const Signal& xi) {
    if (!is_haar(fs)) throw std::invalid_argument("intertwining_defect: requires the Haar system");
    return max_abs_diff(w_phi_haar(s0_time(fs, xi)), unitary_scaling(w_phi_haar(xi)));
}

bool check_intertwining(const FilterSystem& fs, const Signal& xi, double tol) {
    return intertwining_defect(fs, xi) <= tol;
}

}  // namespace qmf
