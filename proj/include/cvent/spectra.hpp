#pragma once

#include <Eigen/Dense>
#include <optional>
#include <vector>

#include "cvent/reduction.hpp"

namespace cvent {

/// Hard cap on the Nystrom matrix side, overridable per call.
inline constexpr int kDefaultMaxSide = 4001;

/// Rectangle-rule discretization of a density kernel: matrix side 2n+1,
/// entries(p,q) = delta * rho(x_p, x_q) with x_p = center + p*delta.
/// Hermitian by construction.
struct DiscretizedKernel {
    int half_count = 0;
    double delta = 0.0;
    double half_width = 0.0;  // n * delta
    double center = 0.0;
    std::optional<double> trace_target;
    Eigen::MatrixXcd entries;
};

/// Normalized-descending eigenvalue list of a discretized kernel.
/// Negative eigenvalues are tolerated only within -1e-10 * raw_sum
/// (discretization noise); anything below that throws at construction.
struct Spectrum {
    std::vector<double> eigenvalues;  // descending
    double raw_sum = 0.0;
    std::optional<double> trace_target;
    std::optional<double> trace_rel_err;
};

/// Entropy of entanglement plus the diagnostics that justify it.
struct EntanglementResult {
    double entropy_bits = 0.0;
    Spectrum spectrum;
    int half_count = 0;
    double delta = 0.0;
    double half_width = 0.0;
    bool converged = false;
};

/// OpenMP-parallel assembly; throws std::length_error when 2n+1 exceeds
/// max_side. The grid is centered on the kernel window's center.
DiscretizedKernel discretize(const DensityKernel& k, int half_count, double delta,
                             int max_side = kDefaultMaxSide);
/// Serial reference assembly kept for testing; produces identical entries.
DiscretizedKernel discretize_ref(const DensityKernel& k, int half_count, double delta,
                                 int max_side = kDefaultMaxSide);

/// Dense Hermitian eigensolve (real-symmetric fast path when the matrix is
/// purely real). Solver failure surfaces as std::runtime_error, never NaN.
Spectrum eig_hermitian(const DiscretizedKernel& m);

/// E = -sum_r p_r log2 p_r with p_r = lambda_r / sum lambda, zero (and
/// clipped) eigenvalues contributing zero. Domain error if raw_sum <= 0.
double entropy(const Spectrum& s);

/// Sum of lambda^power over the spectrum (raw eigenvalues).
double spectrum_moment(const Spectrum& s, int power);

/// Grow the grid (n doubling, half-width growing by sqrt(2)) until the
/// eigenvalue sum matches the trace target to 10^-tol_sigfigs relative at
/// two consecutive grids and the entropy moves by less than
/// 10^-tol_sigfigs * max(1,|E|) across the last refinement. The target is
/// the kernel's analytic trace unless overridden. Exceeding max_side is
/// reported via converged=false with the best estimate, never an exception.
EntanglementResult converge(const DensityKernel& k, int tol_sigfigs = 5,
                            int n0 = 100, std::optional<double> trace_target = {},
                            int max_side = kDefaultMaxSide);

}  // namespace cvent
