#include "cvent/reduction.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace cvent {

namespace {

// Reduced Gaussian kernel rho(x,x') = exp(-A(x^2+x'^2) + B x x' + D x + conj(D) x')
struct ReducedGaussian {
    double quad;   // A
    double cross;  // B
    cdouble lin;   // D

    cdouble operator()(double x, double xp) const {
        const double re = -quad * (x * x + xp * xp) + cross * x * xp +
                          lin.real() * (x + xp);
        const double im = lin.imag() * (x - xp);
        return std::exp(cdouble(re, im));
    }
};

DensityKernel gaussian_kernel(const ReducedGaussian& g) {
    const double diag = 2.0 * g.quad - g.cross;  // decay of rho(x,x)
    DensityKernel k;
    k.evaluate = g;
    k.trace_analytic = std::sqrt(M_PI / diag) *
                       std::exp(g.lin.real() * g.lin.real() / diag);
    k.window.center = g.lin.real() / diag;
    k.window.std_estimate = 1.0 / std::sqrt(2.0 * diag);
    k.window.half_width = 10.0 * k.window.std_estimate;
    return k;
}

// interior bilinear interpolation on a Hermitian table over the lattice
struct TabulatedKernel {
    int n;
    double delta;
    std::vector<cdouble> table;  // (2n+1)^2 row-major

    cdouble operator()(double x, double xp) const {
        const int side = 2 * n + 1;
        auto clamp01 = [this](double u) {
            return std::min(std::max(u / delta + n, 0.0), 2.0 * n - 1e-12);
        };
        const double fx = clamp01(x), fy = clamp01(xp);
        const int i = static_cast<int>(fx), j = static_cast<int>(fy);
        const double tx = fx - i, ty = fy - j;
        auto v = [&](int a, int b) { return table[static_cast<size_t>(a) * side + b]; };
        return (1 - tx) * (1 - ty) * v(i, j) + tx * (1 - ty) * v(i + 1, j) +
               (1 - tx) * ty * v(i, j + 1) + tx * ty * v(i + 1, j + 1);
    }
};

DensityKernel tabulated_kernel(int n, double delta, std::vector<cdouble> table) {
    // std estimate from the diagonal mass distribution
    double w0 = 0.0, w1 = 0.0, w2 = 0.0;
    const int side = 2 * n + 1;
    for (int p = -n; p <= n; ++p) {
        const double x = p * delta;
        const double m = std::abs(table[static_cast<size_t>(p + n) * side + (p + n)]);
        w0 += m;
        w1 += m * x;
        w2 += m * x * x;
    }
    DensityKernel k;
    KernelWindow win;
    win.center = 0.0;
    win.std_estimate = (w0 > 0.0) ? std::sqrt(std::max(w2 / w0 - (w1 / w0) * (w1 / w0),
                                                       delta * delta))
                                  : delta;
    win.half_width = n * delta;  // cannot exceed the tabulated range
    k.window = win;
    k.evaluate = TabulatedKernel{n, delta, std::move(table)};
    return k;
}

DensityKernel reduce_numeric_impl(const GridWavefunction& psi, int which,
                                  bool parallel) {
    if (which != 1 && which != 2)
        throw std::domain_error("reduce_numeric: which must be 1 or 2");
    if (boundary_fraction(psi) >= 1e-10)
        throw boundary_error("reduce_numeric: wavefunction not contained in window");

    const int n = psi.half_count;
    const int side = psi.side();
    std::vector<cdouble> table(static_cast<size_t>(side) * side);
#pragma omp parallel for schedule(dynamic, 4) if (parallel)
    for (int p = 0; p < side; ++p) {
        for (int q = p; q < side; ++q) {
            cdouble acc(0.0, 0.0);
            if (which == 1) {
                for (int r = -n; r <= n; ++r)
                    acc += psi.at(p - n, r) * std::conj(psi.at(q - n, r));
            } else {
                for (int r = -n; r <= n; ++r)
                    acc += psi.at(r, p - n) * std::conj(psi.at(r, q - n));
            }
            table[static_cast<size_t>(p) * side + q] = acc * psi.delta;
        }
    }
    for (int p = 0; p < side; ++p) {
        table[static_cast<size_t>(p) * side + p] =
            table[static_cast<size_t>(p) * side + p].real();
        for (int q = p + 1; q < side; ++q)
            table[static_cast<size_t>(q) * side + p] =
                std::conj(table[static_cast<size_t>(p) * side + q]);
    }
    return tabulated_kernel(n, psi.delta, std::move(table));
}

}  // namespace

DensityKernel reduce_gaussian(const GaussianBipartiteState& s, int which) {
    if (!s.square_integrable())
        throw std::domain_error("reduce_gaussian: state is not square integrable");
    if (which != 1 && which != 2)
        throw std::domain_error("reduce_gaussian: which must be 1 or 2");

    // integrate the other variable out by completing the square
    ReducedGaussian g;
    if (which == 1) {
        g.quad = s.qxx - s.qxy * s.qxy / (2.0 * s.qyy);
        g.cross = s.qxy * s.qxy / s.qyy;
        g.lin = s.lx + s.qxy * s.ly.real() / s.qyy;
    } else {
        g.quad = s.qyy - s.qxy * s.qxy / (2.0 * s.qxx);
        g.cross = s.qxy * s.qxy / s.qxx;
        g.lin = s.ly + s.qxy * s.lx.real() / s.qxx;
    }
    return gaussian_kernel(g);
}

DensityKernel reduce_mixture(const GaussianMixtureState& s, int which) {
    if (which != 1 && which != 2)
        throw std::domain_error("reduce_mixture: which must be 1 or 2");
    bool nonzero = false;
    for (const auto& t : s.terms) nonzero = nonzero || (t.coeff != cdouble(0.0, 0.0));
    if (s.terms.empty() || !nonzero)
        throw std::domain_error("reduce_mixture: mixture has no nonzero term");

    const size_t m = s.terms.size();
    std::vector<double> kept(m), traced(m);
    std::vector<cdouble> coeff(m);
    double traced_max = 0.0;
    for (size_t i = 0; i < m; ++i) {
        kept[i] = (which == 1) ? s.terms[i].cx : s.terms[i].cy;
        traced[i] = (which == 1) ? s.terms[i].cy : s.terms[i].cx;
        coeff[i] = s.terms[i].coeff;
        traced_max = std::max(traced_max, std::abs(traced[i]));
    }

    // exact pairwise overlap sqrt(pi/2) e^{-(u-v)^2/2}, rescaled by the
    // overall factor e^{2 max|cy|^2}/sqrt(pi/2) so the cat kernel matches
    // the exp(2 d^2 delta_jk) convention term for term
    const double logscale = 2.0 * traced_max * traced_max;
    std::vector<cdouble> weight(m * m);
    for (size_t i = 0; i < m; ++i)
        for (size_t j = 0; j < m; ++j) {
            const double dv = traced[i] - traced[j];
            weight[i * m + j] =
                coeff[i] * std::conj(coeff[j]) * std::exp(logscale - dv * dv / 2.0);
        }

    cdouble tr(0.0, 0.0);
    for (size_t i = 0; i < m; ++i)
        for (size_t j = 0; j < m; ++j) {
            const double du = kept[i] - kept[j];
            tr += weight[i * m + j] * std::sqrt(M_PI / 2.0) * std::exp(-du * du / 2.0);
        }

    double span = 0.0;
    for (size_t i = 0; i < m; ++i) span = std::max(span, std::abs(kept[i]));

    DensityKernel k;
    k.trace_analytic = tr.real();
    k.window.center = 0.0;
    k.window.std_estimate = 1.0 / std::sqrt(2.0) + span;
    k.window.half_width = 10.0 * k.window.std_estimate;
    k.evaluate = [m, kept, weight](double x, double xp) {
        cdouble acc(0.0, 0.0);
        for (size_t i = 0; i < m; ++i) {
            const double gi = std::exp(-(x - kept[i]) * (x - kept[i]));
            for (size_t j = 0; j < m; ++j) {
                const double gj = std::exp(-(xp - kept[j]) * (xp - kept[j]));
                acc += weight[i * m + j] * gi * gj;
            }
        }
        return acc;
    };
    return k;
}

DensityKernel reduce_numeric(const GridWavefunction& psi, int which) {
    return reduce_numeric_impl(psi, which, true);
}

DensityKernel reduce_numeric_ref(const GridWavefunction& psi, int which) {
    return reduce_numeric_impl(psi, which, false);
}

DensityKernel reduce_numeric(const std::function<cdouble(double, double)>& psi,
                             int which, const KernelWindow& window, int half_count) {
    const int n = half_count;
    const double delta = window.half_width / n;
    GridWavefunction w(n, delta);
    for (int p = -n; p <= n; ++p)
        for (int q = -n; q <= n; ++q)
            w.at(p, q) = psi(window.center + p * delta, window.center + q * delta);
    return reduce_numeric_impl(w, which, true);
}

DensityKernel canonical_bell_kernel(double alpha, double beta) {
    if (alpha <= 0.0 || beta <= 0.0)
        throw std::domain_error("canonical_bell_kernel: alpha, beta must be positive");
    ReducedGaussian g{1.0 + 2.0 * alpha * alpha * beta * beta, 2.0, cdouble(0.0, 0.0)};
    DensityKernel k = gaussian_kernel(g);
    k.trace_analytic = trace_analytic_bell(alpha, beta);
    return k;
}

double trace_analytic_bell(double alpha, double beta) {
    if (alpha <= 0.0 || beta <= 0.0)
        throw std::domain_error("trace_analytic_bell: alpha, beta must be positive");
    return std::sqrt(M_PI) / (2.0 * alpha * beta);
}

double kernel_trace_quadrature(const DensityKernel& k, int half_count) {
    const double delta = k.window.half_width / half_count;
    double acc = 0.0;
    for (int p = -half_count; p <= half_count; ++p) {
        const double x = k.window.center + p * delta;
        acc += k.evaluate(x, x).real();
    }
    return acc * delta;
}

namespace {

double trace_moment_impl(const DensityKernel& k, int power, int n, bool parallel) {
    if (power < 1 || power > 3)
        throw std::domain_error("trace_moment: power must be 1, 2 or 3");
    if (power == 1) return kernel_trace_quadrature(k, n);

    const double delta = k.window.half_width / n;
    const double c = k.window.center;
    const int side = 2 * n + 1;
    std::vector<cdouble> M(static_cast<size_t>(side) * side);
#pragma omp parallel for schedule(dynamic, 4) if (parallel)
    for (int p = 0; p < side; ++p)
        for (int q = 0; q < side; ++q)
            M[static_cast<size_t>(p) * side + q] =
                delta * k.evaluate(c + (p - n) * delta, c + (q - n) * delta);

    double acc = 0.0;
    if (power == 2) {
#pragma omp parallel for reduction(+ : acc) schedule(static) if (parallel)
        for (int p = 0; p < side; ++p)
            for (int q = 0; q < side; ++q)
                acc += std::norm(M[static_cast<size_t>(p) * side + q]);
    } else {
#pragma omp parallel for reduction(+ : acc) schedule(dynamic, 2) if (parallel)
        for (int p = 0; p < side; ++p)
            for (int q = 0; q < side; ++q) {
                cdouble pq(0.0, 0.0);  // (M^2)_pq via hermiticity of the rows
                const cdouble* rowp = &M[static_cast<size_t>(p) * side];
                const cdouble* rowq = &M[static_cast<size_t>(q) * side];
                for (int r = 0; r < side; ++r) pq += rowp[r] * std::conj(rowq[r]);
                acc += (pq * std::conj(rowp[q])).real();
            }
    }
    return acc;
}

}  // namespace

double trace_moment(const DensityKernel& k, int power, int half_count) {
    return trace_moment_impl(k, power, half_count, true);
}

double trace_moment_ref(const DensityKernel& k, int power, int half_count) {
    return trace_moment_impl(k, power, half_count, false);
}

}  // namespace cvent
