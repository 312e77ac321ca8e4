#include "cvent/analytic.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace cvent {

double p_parameter(double qxx, double qyy, double qxy) {
    if (qxy == 0.0)
        throw std::domain_error(
            "p_parameter: separable state (cross coefficient is zero)");
    return 2.0 * (qxx * qyy / (qxy * qxy) - 1.0);
}

double p_parameter(const GaussianBipartiteState& s) {
    return p_parameter(s.qxx, s.qyy, s.qxy);
}

double squeezed_entanglement(double r) {
    if (r < 0.0) throw std::domain_error("squeezed_entanglement: r must be >= 0");
    if (r == 0.0) return 0.0;
    const double c2 = std::cosh(r) * std::cosh(r);
    const double s2 = std::sinh(r) * std::sinh(r);
    return c2 * std::log2(c2) - s2 * std::log2(s2);
}

double squeezed_schmidt_weight(double r, int level) {
    if (r < 0.0 || level < 0)
        throw std::domain_error("squeezed_schmidt_weight: bad arguments");
    const double c2 = std::cosh(r) * std::cosh(r);
    return std::pow(std::tanh(r), 2.0 * level) / c2;
}

double entanglement_from_p(double p) {
    if (p < 0.0) throw std::domain_error("entanglement_from_p: P must be nonnegative");
    if (p == 0.0) return std::numeric_limits<double>::infinity();
    const double r = 0.5 * std::asinh(std::sqrt(2.0 / p));
    return squeezed_entanglement(r);
}

double g_factor(double alpha, double beta) {
    const double a2 = alpha * alpha, b2 = beta * beta;
    return a2 * a2 + a2 * b2 + 1.0;
}

double swap_p(double alpha, double beta) {
    if (alpha <= 0.0 || beta <= 0.0)
        throw std::domain_error("swap_p: alpha, beta must be positive");
    return 2.0 * (g_factor(alpha, beta) * g_factor(beta, alpha) - 1.0);
}

}  // namespace cvent
