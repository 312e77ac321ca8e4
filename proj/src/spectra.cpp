#include "cvent/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace cvent {

namespace {

DiscretizedKernel discretize_impl(const DensityKernel& k, int n, double delta,
                                  int max_side, bool parallel) {
    if (n < 0 || delta <= 0.0)
        throw std::domain_error("discretize: need n >= 0 and delta > 0");
    const int side = 2 * n + 1;
    if (side > max_side)
        throw std::length_error("discretize: matrix side exceeds the configured cap");

    DiscretizedKernel dk;
    dk.half_count = n;
    dk.delta = delta;
    dk.half_width = n * delta;
    dk.center = k.window.center;
    dk.trace_target = k.trace_analytic;
    dk.entries.resize(side, side);

    const double c = dk.center;
#pragma omp parallel for schedule(dynamic, 4) if (parallel)
    for (int p = 0; p < side; ++p) {
        const double xp = c + (p - n) * delta;
        for (int q = p; q < side; ++q)
            dk.entries(p, q) = delta * k.evaluate(xp, c + (q - n) * delta);
    }
    for (int p = 0; p < side; ++p) {
        dk.entries(p, p) = dk.entries(p, p).real();
        for (int q = p + 1; q < side; ++q) dk.entries(q, p) = std::conj(dk.entries(p, q));
    }
    return dk;
}

}  // namespace

DiscretizedKernel discretize(const DensityKernel& k, int half_count, double delta,
                             int max_side) {
    return discretize_impl(k, half_count, delta, max_side, true);
}

DiscretizedKernel discretize_ref(const DensityKernel& k, int half_count, double delta,
                                 int max_side) {
    return discretize_impl(k, half_count, delta, max_side, false);
}

Spectrum eig_hermitian(const DiscretizedKernel& m) {
    const auto side = m.entries.rows();
    if (side == 0 || m.entries.cols() != side)
        throw std::domain_error("eig_hermitian: empty or non-square matrix");

    Eigen::VectorXd ev;
    if (m.entries.imag().cwiseAbs().maxCoeff() == 0.0) {
        Eigen::MatrixXd real = m.entries.real();
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(real, Eigen::EigenvaluesOnly);
        if (es.info() != Eigen::Success)
            throw std::runtime_error("eig_hermitian: real-symmetric solver failed");
        ev = es.eigenvalues();
    } else {
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(m.entries,
                                                           Eigen::EigenvaluesOnly);
        if (es.info() != Eigen::Success)
            throw std::runtime_error("eig_hermitian: hermitian solver failed");
        ev = es.eigenvalues();
    }

    Spectrum s;
    s.eigenvalues.assign(ev.data(), ev.data() + ev.size());
    std::sort(s.eigenvalues.begin(), s.eigenvalues.end(), std::greater<double>());
    s.raw_sum = 0.0;
    for (double v : s.eigenvalues) s.raw_sum += v;
    if (!std::isfinite(s.raw_sum))
        throw std::runtime_error("eig_hermitian: non-finite eigenvalues");

    if (s.eigenvalues.back() < -1e-10 * std::abs(s.raw_sum))
        throw std::runtime_error(
            "eig_hermitian: kernel is not positive semidefinite beyond noise");

    s.trace_target = m.trace_target;
    if (s.trace_target && *s.trace_target != 0.0)
        s.trace_rel_err = std::abs(s.raw_sum - *s.trace_target) / std::abs(*s.trace_target);
    return s;
}

double entropy(const Spectrum& s) {
    if (!(s.raw_sum > 0.0))
        throw std::domain_error("entropy: eigenvalue sum must be positive");
    double total = 0.0;
    for (double v : s.eigenvalues) total += std::max(v, 0.0);
    double e = 0.0;
    for (double v : s.eigenvalues) {
        if (v <= 0.0) continue;  // clipped noise and exact zeros contribute nothing
        const double p = v / total;
        e -= p * std::log2(p);
    }
    return e;
}

double spectrum_moment(const Spectrum& s, int power) {
    double acc = 0.0;
    for (double v : s.eigenvalues) acc += std::pow(v, power);
    return acc;
}

EntanglementResult converge(const DensityKernel& k, int tol_sigfigs, int n0,
                            std::optional<double> trace_target, int max_side) {
    if (tol_sigfigs < 1) throw std::domain_error("converge: tol_sigfigs must be >= 1");
    double target;
    if (trace_target)
        target = *trace_target;
    else if (k.trace_analytic)
        target = *k.trace_analytic;
    else
        throw std::invalid_argument(
            "converge: kernel has no analytic trace and no target was supplied");

    const double tol = std::pow(10.0, -tol_sigfigs);
    int n = std::min(n0, (max_side - 1) / 2);
    n = std::max(n, 1);
    double w = k.window.half_width;

    EntanglementResult best;
    bool have_prev = false, prev_trace_ok = false;
    double prev_entropy = 0.0;

    while (2 * n + 1 <= max_side) {
        const double delta = w / n;
        DiscretizedKernel dk = discretize(k, n, delta, max_side);
        dk.trace_target = target;
        Spectrum sp = eig_hermitian(dk);
        const double e = entropy(sp);
        const bool trace_ok = sp.trace_rel_err && *sp.trace_rel_err <= tol;

        best.entropy_bits = e;
        best.spectrum = std::move(sp);
        best.half_count = n;
        best.delta = delta;
        best.half_width = w;

        if (have_prev && trace_ok && prev_trace_ok &&
            std::abs(e - prev_entropy) <= tol * std::max(1.0, std::abs(e))) {
            best.converged = true;
            return best;
        }
        have_prev = true;
        prev_trace_ok = trace_ok;
        prev_entropy = e;
        n *= 2;
        w *= std::sqrt(2.0);
    }
    best.converged = false;
    return best;
}

}  // namespace cvent
