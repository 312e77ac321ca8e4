#pragma once

#include <functional>
#include <stdexcept>
#include <vector>

#include "cvent/states.hpp"

namespace cvent {

/// Raised when a grid operation would push non-negligible amplitude
/// through the grid boundary.
struct boundary_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class GateDirection { Forward, Inverse };

/// Complex amplitudes tabulated on the square lattice
/// (x_p, y_q) = (p*delta, q*delta), p,q = -n..n.
struct GridWavefunction {
    int half_count = 0;  // n; side = 2n+1
    double delta = 0.0;
    std::vector<cdouble> values;  // row-major, index (p+n)*(2n+1)+(q+n)

    GridWavefunction() = default;
    GridWavefunction(int n, double dx);

    int side() const { return 2 * half_count + 1; }
    cdouble& at(int p, int q);
    cdouble at(int p, int q) const;
    double max_abs() const;
};

/// Largest |value| on the outermost ring divided by the global maximum.
double boundary_fraction(const GridWavefunction& w);

/// Sample psi(x,y) = f(x,y) on the lattice.
GridWavefunction sample_grid(int n, double delta,
                             const std::function<cdouble(double, double)>& f);
GridWavefunction sample_state(const GaussianBipartiteState& s, int n, double delta);
GridWavefunction sample_mixture(const GaussianMixtureState& s, int n, double delta);
/// Product of two Gaussian packets of widths alpha*sigma, beta*sigma at x1, x2.
GridWavefunction sample_gaussian_product(double alpha, double beta, double x1,
                                         double x2, double sigma, int n, double delta);

/// Fourier gate on one subsystem by direct quadrature of the kernel
/// exp(+-2 i x y / sigma^2) / (sqrt(pi) sigma). Requires the wavefunction
/// to be negligible (< 1e-10 of max) on the boundary; throws
/// boundary_error otherwise. `subsystem` is 1 (x axis) or 2 (y axis).
GridWavefunction apply_fourier_grid(const GridWavefunction& w, int subsystem,
                                    double sigma,
                                    GateDirection dir = GateDirection::Forward);
/// Serial reference implementation, kept for testing the parallel kernel.
GridWavefunction apply_fourier_grid_ref(const GridWavefunction& w, int subsystem,
                                        double sigma,
                                        GateDirection dir = GateDirection::Forward);

/// Shear gate: forward maps the value at (x, y) to the value at (x, y - x)
/// of the input; inverse uses (x, y + x). Exact on the lattice. Amplitude
/// sheared past the boundary must be negligible or boundary_error is thrown.
GridWavefunction apply_cnot_grid(const GridWavefunction& w, GateDirection dir);

/// Entangler: Fourier on subsystem 1 followed by the shear gate.
/// The inverse applies the inverse shear first, then the inverse Fourier.
GridWavefunction apply_entangler_grid(const GridWavefunction& w, double sigma,
                                      GateDirection dir = GateDirection::Forward);

}  // namespace cvent
