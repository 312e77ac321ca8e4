#pragma once

#include "cvent/states.hpp"

namespace cvent {

/// Spectral invariant P = 2 (qxx qyy / qxy^2 - 1) of a Gaussian bipartite
/// state; independent of the linear coefficients. Throws std::domain_error
/// when qxy = 0 (separable state, P undefined/infinite).
double p_parameter(double qxx, double qyy, double qxy);
double p_parameter(const GaussianBipartiteState& s);

/// Closed-form entanglement of the two-mode squeezed state:
/// E = cosh^2 r log2 cosh^2 r - sinh^2 r log2 sinh^2 r, E(0) = 0.
double squeezed_entanglement(double r);

/// Schmidt weight of level n in the number basis: tanh^{2n} r / cosh^2 r.
double squeezed_schmidt_weight(double r, int level);

/// Entanglement as a function of P via r = arcsinh(sqrt(2/P)) / 2.
/// Strictly decreasing in P; returns +infinity at P = 0 (entanglement
/// diverges as P -> 0) and throws std::domain_error for P < 0.
double entanglement_from_p(double p);

/// g(alpha, beta) = alpha^4 + alpha^2 beta^2 + 1.
double g_factor(double alpha, double beta);

/// P of the post-swap pair: 2 [ g(alpha,beta) g(beta,alpha) - 1 ].
/// Domain error on non-positive inputs.
double swap_p(double alpha, double beta);

}  // namespace cvent
