#pragma once

#include <vector>

#include "cvent/states.hpp"

namespace cvent {

/// Measured positions of the two projected particles and the Gaussian
/// width of the measurement; mu = 0 is the sharp-measurement limit.
struct SwapOutcome {
    double a = 0.0;
    double b = 0.0;
    double mu = 0.0;
};

struct PurificationReport {
    double e_initial = 0.0;
    double e_swapped = 0.0;
    double gain = 0.0;  // e_swapped - e_initial
    SwapOutcome outcome;
    bool converged = false;
};

/// Post-measurement state of the unmeasured pair after swapping two
/// entangled Gaussian pairs of widths (alpha, alpha) and (beta, beta),
/// with sharp position outcomes (a, b). Quadratic coefficients are
/// g(alpha,beta)/(sigma^2(alpha^2+beta^2)) and g(beta,alpha)/(...), cross
/// coefficient 1/(sigma^2(alpha^2+beta^2)); the packet position c drops
/// out. Requires outcome.mu == 0; domain error otherwise and on
/// non-positive widths.
GaussianBipartiteState swap_bell(double alpha, double beta, double c,
                                 const SwapOutcome& outcome, double sigma = 1.0);

/// Post-measurement state of the unmeasured pair after swapping two cat
/// states through finite-resolution measurements of width mu. Term (j,k),
/// centers ((-1)^j d, -(-1)^k d), has coefficient
///
///   A_j A_k exp( d b h (e_j + (1+mu^2) e_k) - d^2 h e_j e_k )
///           exp( i a d h ((1+mu^2) e_j - e_k) ),
///
/// e_j = (-1)^j, h = 2/(2 + 2 mu^2 + mu^4). At mu = 0 this reduces to the
/// sharp-limit coefficients (A0^2 e^{-2d^2+2db}, A0 A1 e^{2iad},
/// A1 A0 e^{-2iad}, A1^2 e^{-2d^2-2db}) exactly.
GaussianMixtureState swap_cat(cdouble a0, cdouble a1, double d,
                              const SwapOutcome& outcome);

/// Swap the cat (a0, sqrt(1-|a0|^2), d) over every outcome (a, b) of the
/// given grids at measurement width mu, reporting the entanglement gain of
/// each cell against the pre-swap cat. Cells run in parallel; results are
/// in row-major order (a outer, b inner) regardless of completion order.
/// Per-cell convergence failures are recorded, not thrown.
std::vector<PurificationReport> purification_scan(cdouble a0, double d, double mu,
                                                  const std::vector<double>& a_grid,
                                                  const std::vector<double>& b_grid,
                                                  int tol_sigfigs = 5, int jobs = 0);

}  // namespace cvent
