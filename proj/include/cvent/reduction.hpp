#pragma once

#include <functional>
#include <optional>

#include "cvent/grid.hpp"
#include "cvent/states.hpp"

namespace cvent {

/// Integration window for kernels that decay at infinity: the kernel is
/// treated as negligible outside [center - half_width, center + half_width].
struct KernelWindow {
    double center = 0.0;
    double std_estimate = 1.0;
    double half_width = 10.0;  // default 10 standard deviations
};

/// Hermitian two-point function rho(x, x') of one subsystem, with an
/// optional closed-form trace used as the convergence target downstream.
/// All kernels produced here satisfy rho(x',x) = conj(rho(x,x')).
struct DensityKernel {
    std::function<cdouble(double, double)> evaluate;
    std::optional<double> trace_analytic;
    KernelWindow window;
};

/// Reduced one-particle kernel of a Gaussian bipartite state, by
/// integrating out the other variable (completing the square). The kernel
/// is returned in the unit-prefactor convention
///
///   rho(x,x') = exp( -A (x^2 + x'^2) + B x x' + D x + conj(D) x' ),
///
/// constant real factors being dropped; trace_analytic refers to this
/// convention. `which` selects the kept subsystem (1 or 2).
DensityKernel reduce_gaussian(const GaussianBipartiteState& s, int which);

/// Reduced kernel of a Gaussian mixture state. Pairwise terms
///   w_ij exp( -(x-cx_i)^2 - (x'-cx_j)^2 ),
/// w_ij = coeff_i conj(coeff_j) exp(-(cy_i-cy_j)^2/2) * scale,
/// where the overall scale exp(2 max cy^2) replaces sqrt(pi/2) so that the
/// 2-term cat kernel carries the exp(2 d^2 delta_jk) factor verbatim and its
/// analytic trace is sqrt(pi/2) (e^{2d^2} + 2 Re(a0 conj(a1)) e^{-2d^2}).
DensityKernel reduce_mixture(const GaussianMixtureState& s, int which);

/// Brute-force quadrature oracle: rho(x,x') = int psi(x,y) conj(psi(x',y)) dy
/// by the rectangle rule on the wavefunction's own lattice. Evaluation off
/// the lattice interpolates bilinearly. Throws boundary_error if the
/// wavefunction is not negligible at the grid edge.
DensityKernel reduce_numeric(const GridWavefunction& psi, int which);
DensityKernel reduce_numeric_ref(const GridWavefunction& psi, int which);
/// Same oracle for a callable psi(x,y), integrated over the given window
/// split into 2*half_count+1 rectangles.
DensityKernel reduce_numeric(const std::function<cdouble(double, double)>& psi,
                             int which, const KernelWindow& window, int half_count);

/// Canonical entangled-pair kernel
///   K(x,x') = exp( -(1+2 alpha^2 beta^2)(x^2+x'^2) + 2 x x' )
/// with analytic trace sqrt(pi)/(2 alpha beta).
DensityKernel canonical_bell_kernel(double alpha, double beta);

/// sqrt(pi)/(2 alpha beta); domain error on non-positive input.
double trace_analytic_bell(double alpha, double beta);

/// Rectangle-rule estimate of int rho(x,x) dx over the kernel's window
/// split into 2*half_count+1 rectangles.
double kernel_trace_quadrature(const DensityKernel& k, int half_count);

/// Rectangle-rule estimate of Tr(rho^power), power = 1..3, on a grid of
/// 2*half_count+1 points over the kernel's window. OpenMP-parallel;
/// the _ref variant is the serial reference kept for testing.
double trace_moment(const DensityKernel& k, int power, int half_count);
double trace_moment_ref(const DensityKernel& k, int power, int half_count);

}  // namespace cvent
