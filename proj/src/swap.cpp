#include "cvent/swap.hpp"

#include <cmath>
#include <stdexcept>

#include "cvent/analytic.hpp"
#include "cvent/reduction.hpp"
#include "cvent/spectra.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace cvent {

GaussianBipartiteState swap_bell(double alpha, double beta, double /*c*/,
                                 const SwapOutcome& outcome, double sigma) {
    if (alpha <= 0.0 || beta <= 0.0 || sigma <= 0.0)
        throw std::domain_error("swap_bell: alpha, beta and sigma must be positive");
    if (outcome.mu != 0.0)
        throw std::domain_error("swap_bell: only sharp measurements (mu = 0) here");

    // the packet position c cancels out of the post-measurement state
    const double s = 1.0 / (sigma * sigma * (alpha * alpha + beta * beta));
    GaussianBipartiteState st;
    st.qxx = g_factor(alpha, beta) * s;
    st.qyy = g_factor(beta, alpha) * s;
    st.qxy = s;
    st.lx = s * cdouble(-2.0 * outcome.b, -2.0 * outcome.a * beta * beta);
    st.ly = s * cdouble(2.0 * outcome.b, -2.0 * outcome.a * alpha * alpha);
    st.sigma = sigma;
    return st;
}

GaussianMixtureState swap_cat(cdouble a0, cdouble a1, double d,
                              const SwapOutcome& outcome) {
    if (d < 0.0) throw std::domain_error("swap_cat: d must be >= 0");
    if (outcome.mu < 0.0) throw std::domain_error("swap_cat: mu must be >= 0");
    const double norm = std::norm(a0) + std::norm(a1);
    if (std::abs(norm - 1.0) > 1e-12)
        throw std::invalid_argument("swap_cat: |a0|^2 + |a1|^2 must equal 1");

    const double mu2 = outcome.mu * outcome.mu;
    const double h = 2.0 / (2.0 + 2.0 * mu2 + mu2 * mu2);
    const cdouble amp[2] = {a0, a1};

    GaussianMixtureState st;
    st.terms.reserve(4);
    for (int j = 0; j < 2; ++j) {
        for (int k = 0; k < 2; ++k) {
            const double ej = (j == 0) ? 1.0 : -1.0;
            const double ek = (k == 0) ? 1.0 : -1.0;
            const double re =
                d * outcome.b * h * (ej + (1.0 + mu2) * ek) - d * d * h * ej * ek;
            const double im = outcome.a * d * h * ((1.0 + mu2) * ej - ek);
            st.terms.push_back({amp[j] * amp[k] * std::exp(cdouble(re, im)),
                                ej * d, -ek * d});
        }
    }
    return st;
}

std::vector<PurificationReport> purification_scan(cdouble a0, double d, double mu,
                                                  const std::vector<double>& a_grid,
                                                  const std::vector<double>& b_grid,
                                                  int tol_sigfigs, int jobs) {
    if (a_grid.empty() || b_grid.empty())
        throw std::domain_error("purification_scan: grids must be nonempty");
    const double rest = 1.0 - std::norm(a0);
    if (rest < -1e-12)
        throw std::invalid_argument("purification_scan: |a0|^2 must be <= 1");
    const cdouble a1 = std::sqrt(std::max(rest, 0.0));

    const GaussianMixtureState cat = make_cat(a0, a1, d);
    const EntanglementResult initial = converge(reduce_mixture(cat, 1), tol_sigfigs);

    const std::ptrdiff_t cells =
        static_cast<std::ptrdiff_t>(a_grid.size()) * b_grid.size();
    std::vector<PurificationReport> out(cells);

#ifdef _OPENMP
    const int nthreads = jobs > 0 ? jobs : omp_get_max_threads();
#else
    const int nthreads = 1;
    (void)jobs;
#endif
#pragma omp parallel for schedule(dynamic) num_threads(nthreads)
    for (std::ptrdiff_t idx = 0; idx < cells; ++idx) {
        const double a = a_grid[idx / b_grid.size()];
        const double b = b_grid[idx % b_grid.size()];
        PurificationReport rep;
        rep.outcome = {a, b, mu};
        rep.e_initial = initial.entropy_bits;
        try {
            const GaussianMixtureState swapped = swap_cat(a0, a1, d, rep.outcome);
            const EntanglementResult res =
                converge(reduce_mixture(swapped, 1), tol_sigfigs);
            rep.e_swapped = res.entropy_bits;
            rep.gain = rep.e_swapped - rep.e_initial;
            rep.converged = res.converged && initial.converged;
        } catch (const std::exception&) {
            rep.converged = false;  // per-cell failure must not abort the scan
        }
        out[idx] = rep;
    }
    return out;
}

}  // namespace cvent
