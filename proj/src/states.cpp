#include "cvent/states.hpp"

#include <cmath>
#include <stdexcept>

namespace cvent {

GaussianBipartiteState make_bell(double alpha, double beta, double x1, double x2,
                                 double sigma) {
    if (alpha <= 0.0 || beta <= 0.0 || sigma <= 0.0)
        throw std::domain_error("make_bell: alpha, beta and sigma must be positive");

    // Shear output variable z = x + y + x2 eliminates the internal
    // integration variable; expanding -(z - x - x2)^2 / (beta sigma)^2
    // gives the exponent below (the constant -x2^2/(beta sigma)^2 is
    // dropped with the normalization).
    const double s2 = sigma * sigma;
    const double b2 = beta * beta;
    GaussianBipartiteState st;
    st.qxx = (alpha * alpha + 1.0 / b2) / s2;
    st.qyy = 1.0 / (b2 * s2);
    st.qxy = 1.0 / (b2 * s2);
    st.lx = cdouble(-2.0 * x2 / b2, 2.0 * x1) / s2;
    st.ly = cdouble(2.0 * x2 / (b2 * s2), 0.0);
    st.sigma = sigma;
    return st;
}

GaussianBipartiteState make_squeezed(double r) {
    if (r < 0.0) throw std::domain_error("make_squeezed: r must be >= 0");
    GaussianBipartiteState st;
    st.qxx = std::cosh(2.0 * r) / 2.0;
    st.qyy = st.qxx;
    st.qxy = -std::sinh(2.0 * r) / 2.0;
    st.sigma = 1.0;
    return st;
}

GaussianMixtureState make_cat(cdouble a0, cdouble a1, double d) {
    if (d < 0.0) throw std::domain_error("make_cat: d must be >= 0");
    const double norm = std::norm(a0) + std::norm(a1);
    if (std::abs(norm - 1.0) > 1e-12)
        throw std::invalid_argument("make_cat: |a0|^2 + |a1|^2 must equal 1");
    GaussianMixtureState st;
    st.terms = {{a0, d, -d}, {a1, -d, d}};
    return st;
}

}  // namespace cvent
