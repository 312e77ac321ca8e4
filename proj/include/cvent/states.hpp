#pragma once

#include <complex>
#include <vector>

namespace cvent {

using cdouble = std::complex<double>;

/// Two-variable Gaussian wavepacket, stored unnormalized as the exponent
///
///   psi(x,y) = exp( -qxx x^2 - qyy y^2 + 2 qxy x y + lx x + ly y )
///
/// Quadratic coefficients carry units 1/length^2 and absorb the scale
/// length; `sigma` records the scale the state was built with.
/// Square integrability requires qxx > 0, qyy > 0 and qxx*qyy > qxy^2.
struct GaussianBipartiteState {
    double qxx = 1.0;
    double qyy = 1.0;
    double qxy = 0.0;
    cdouble lx{0.0, 0.0};
    cdouble ly{0.0, 0.0};
    double sigma = 1.0;

    bool square_integrable() const {
        return qxx > 0.0 && qyy > 0.0 && qxx * qyy > qxy * qxy;
    }
};

/// Weighted sum of unit-width displaced Gaussian product terms:
///
///   psi(x,y) = sum_i coeff_i exp( -(x - cx_i)^2 - (y - cy_i)^2 )
///
/// Covers the two-mode cat states (2 terms) and the post-swap cat
/// states (4 terms). Unnormalized.
struct GaussianMixtureState {
    struct Term {
        cdouble coeff;
        double cx;
        double cy;
    };
    std::vector<Term> terms;
};

/// Entangled pair built by the shear gate acting after a Fourier gate on
/// two Gaussian wavepackets of widths alpha*sigma and beta*sigma centered
/// at x1 and x2. The internal integration variable is eliminated in
/// closed form. Throws std::domain_error on non-positive alpha/beta/sigma.
GaussianBipartiteState make_bell(double alpha, double beta, double x1, double x2,
                                 double sigma = 1.0);

/// Two-mode squeezed vacuum with squeezing parameter r >= 0:
/// qxx = qyy = cosh(2r)/2, qxy = -sinh(2r)/2.
GaussianBipartiteState make_squeezed(double r);

/// Two-mode cat state: terms (a0, +d, -d) and (a1, -d, +d).
/// Requires |a0|^2 + |a1|^2 = 1 within 1e-12 and d >= 0.
GaussianMixtureState make_cat(cdouble a0, cdouble a1, double d);

}  // namespace cvent
