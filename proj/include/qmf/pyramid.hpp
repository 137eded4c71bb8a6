#pragma once

// Time-domain view of the filter bank: sampling, subband analysis and
// synthesis, the Haar scaling identity, and the row-contraction check.
// A Signal is a finitely supported sequence on Z; it shares the
// LaurentPoly representation (sample n is the coefficient of z^n).

#include <vector>

#include "qmf/filterbank.hpp"
#include "qmf/step_function.hpp"

namespace qmf {

using Signal = LaurentPoly;

/// Index k -> N k.
Signal upsample(const Signal& xi, int N);

/// Index N k -> k; other samples are dropped.
Signal downsample(const Signal& xi, int N);

/// (S_0 xi)_n = sum_k a_{n - 2k} xi_k by direct convolution.  N = 2 only.
Signal s0_time(const FilterSystem& fs, const Signal& xi);

/// (S_i^* xi) for i = 0..N-1.
std::vector<Signal> analyze(const FilterSystem& fs, const Signal& xi);

/// sum_i S_i band_i.  Throws std::invalid_argument unless there are N bands.
Signal synthesize(const FilterSystem& fs, const std::vector<Signal>& bands);

/// Full N-ary analysis tree.  Leaves are S_a^* xi for |a| = depth, in word
/// index order; level 0 holds xi itself.
struct SubbandTree {
    int N = 2;
    int depth = 0;
    std::vector<std::vector<Signal>> levels;  // levels[d] has N^d nodes

    const std::vector<Signal>& leaves() const { return levels.back(); }
};

SubbandTree analyze_tree(const FilterSystem& fs, const Signal& xi, int depth);

/// Rebuilds the root from the leaves only.
Signal synthesize_tree(const FilterSystem& fs, const SubbandTree& tree);

/// max coefficient error of synthesize_tree(analyze_tree(xi)) against xi.
double reconstruction_defect(const FilterSystem& fs, const Signal& xi, int depth);

/// sum_i ||S_i^* f||^2 - ||f||^2 with S_i built from the given filters and
/// N = filters.size().  Zero for a validated system.
double row_contraction_defect(const std::vector<LaurentPoly>& filters, const Signal& f);

/// (W xi)(x) = sum_k xi_k chi_[0,1)(x - k).
StepFunction w_phi_haar(const Signal& xi);

/// (U g)(x) = g(x/2)/sqrt(2).  N = 2 only.
StepFunction unitary_scaling(const StepFunction& g);

/// sup |W S_0 xi - U W xi| for the Haar system.
double intertwining_defect(const FilterSystem& fs, const Signal& xi);

bool check_intertwining(const FilterSystem& fs, const Signal& xi, double tol = 1e-12);

}  // namespace qmf
