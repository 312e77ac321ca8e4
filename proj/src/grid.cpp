#include "cvent/grid.hpp"

#include <cmath>
#include <cstdlib>

namespace cvent {

namespace {
constexpr double kBoundaryTol = 1e-10;

void require_contained(const GridWavefunction& w, const char* who) {
    if (boundary_fraction(w) >= kBoundaryTol)
        throw boundary_error(std::string(who) +
                             ": wavefunction not negligible at the grid boundary");
}
}  // namespace

GridWavefunction::GridWavefunction(int n, double dx) : half_count(n), delta(dx) {
    if (n < 0 || dx <= 0.0)
        throw std::domain_error("GridWavefunction: need n >= 0 and delta > 0");
    values.assign(static_cast<size_t>(side()) * side(), cdouble(0.0, 0.0));
}

cdouble& GridWavefunction::at(int p, int q) {
    return values[static_cast<size_t>(p + half_count) * side() + (q + half_count)];
}

cdouble GridWavefunction::at(int p, int q) const {
    return values[static_cast<size_t>(p + half_count) * side() + (q + half_count)];
}

double GridWavefunction::max_abs() const {
    double m = 0.0;
    for (const auto& v : values) m = std::max(m, std::abs(v));
    return m;
}

double boundary_fraction(const GridWavefunction& w) {
    const int n = w.half_count;
    double edge = 0.0;
    for (int p = -n; p <= n; ++p) {
        edge = std::max(edge, std::abs(w.at(p, -n)));
        edge = std::max(edge, std::abs(w.at(p, n)));
        edge = std::max(edge, std::abs(w.at(-n, p)));
        edge = std::max(edge, std::abs(w.at(n, p)));
    }
    const double m = w.max_abs();
    return m > 0.0 ? edge / m : 0.0;
}

GridWavefunction sample_grid(int n, double delta,
                             const std::function<cdouble(double, double)>& f) {
    GridWavefunction w(n, delta);
    for (int p = -n; p <= n; ++p)
        for (int q = -n; q <= n; ++q) w.at(p, q) = f(p * delta, q * delta);
    return w;
}

GridWavefunction sample_state(const GaussianBipartiteState& s, int n, double delta) {
    return sample_grid(n, delta, [&s](double x, double y) {
        const cdouble ex = -s.qxx * x * x - s.qyy * y * y + 2.0 * s.qxy * x * y +
                           s.lx * x + s.ly * y;
        return std::exp(ex);
    });
}

GridWavefunction sample_mixture(const GaussianMixtureState& s, int n, double delta) {
    return sample_grid(n, delta, [&s](double x, double y) {
        cdouble v(0.0, 0.0);
        for (const auto& t : s.terms)
            v += t.coeff * std::exp(-(x - t.cx) * (x - t.cx) - (y - t.cy) * (y - t.cy));
        return v;
    });
}

GridWavefunction sample_gaussian_product(double alpha, double beta, double x1,
                                         double x2, double sigma, int n, double delta) {
    const double wa = alpha * sigma, wb = beta * sigma;
    return sample_grid(n, delta, [=](double x, double y) {
        return cdouble(std::exp(-(x - x1) * (x - x1) / (wa * wa) -
                                (y - x2) * (y - x2) / (wb * wb)),
                       0.0);
    });
}

namespace {

// out(t, .) = delta / (sqrt(pi) sigma) * sum_u exp(sgn 2 i t u / sigma^2) in(u, .)
// along the chosen axis.
GridWavefunction fourier_impl(const GridWavefunction& w, int subsystem, double sigma,
                              GateDirection dir, bool parallel) {
    if (subsystem != 1 && subsystem != 2)
        throw std::domain_error("apply_fourier_grid: subsystem must be 1 or 2");
    if (sigma <= 0.0) throw std::domain_error("apply_fourier_grid: sigma must be > 0");
    require_contained(w, "apply_fourier_grid");

    const int n = w.half_count;
    const int side = w.side();
    const double sgn = (dir == GateDirection::Forward) ? 1.0 : -1.0;
    const double norm = w.delta / (std::sqrt(M_PI) * sigma);
    const double freq = 2.0 * w.delta * w.delta / (sigma * sigma);

    GridWavefunction out(n, w.delta);
#pragma omp parallel for schedule(static) if (parallel)
    for (int ip = 0; ip < side; ++ip) {
        const int p = ip - n;
        for (int iq = 0; iq < side; ++iq) {
            const int q = iq - n;
            cdouble acc(0.0, 0.0);
            if (subsystem == 1) {
                for (int r = -n; r <= n; ++r) {
                    const double phase = sgn * freq * p * r;
                    acc += cdouble(std::cos(phase), std::sin(phase)) * w.at(r, q);
                }
            } else {
                for (int r = -n; r <= n; ++r) {
                    const double phase = sgn * freq * q * r;
                    acc += cdouble(std::cos(phase), std::sin(phase)) * w.at(p, r);
                }
            }
            out.at(p, q) = norm * acc;
        }
    }
    return out;
}

}  // namespace

GridWavefunction apply_fourier_grid(const GridWavefunction& w, int subsystem,
                                    double sigma, GateDirection dir) {
    return fourier_impl(w, subsystem, sigma, dir, true);
}

GridWavefunction apply_fourier_grid_ref(const GridWavefunction& w, int subsystem,
                                        double sigma, GateDirection dir) {
    return fourier_impl(w, subsystem, sigma, dir, false);
}

GridWavefunction apply_cnot_grid(const GridWavefunction& w, GateDirection dir) {
    const int n = w.half_count;
    const int sgn = (dir == GateDirection::Forward) ? 1 : -1;

    // amplitude at (p, s) lands at (p, s + sgn*p); whatever leaves the grid
    // must be negligible
    double lost = 0.0;
    for (int p = -n; p <= n; ++p)
        for (int s = -n; s <= n; ++s) {
            const int dst = s + sgn * p;
            if (dst < -n || dst > n) lost = std::max(lost, std::abs(w.at(p, s)));
        }
    const double m = w.max_abs();
    if (m > 0.0 && lost / m >= kBoundaryTol)
        throw boundary_error("apply_cnot_grid: shear pushes amplitude off the grid");

    GridWavefunction out(n, w.delta);
    for (int p = -n; p <= n; ++p)
        for (int q = -n; q <= n; ++q) {
            const int src = q - sgn * p;
            if (src >= -n && src <= n) out.at(p, q) = w.at(p, src);
        }
    return out;
}

GridWavefunction apply_entangler_grid(const GridWavefunction& w, double sigma,
                                      GateDirection dir) {
    if (dir == GateDirection::Forward)
        return apply_cnot_grid(apply_fourier_grid(w, 1, sigma), GateDirection::Forward);
    return apply_fourier_grid(apply_cnot_grid(w, GateDirection::Inverse), 1, sigma,
                              GateDirection::Inverse);
}

}  // namespace cvent
