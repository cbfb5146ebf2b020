#pragma once

#include <cmath>
#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <vector>

namespace starpart {

/// Node counts and interval-splitting policy for the quadrature routines.
struct QuadratureSpec {
    int node_count_outer = 256;
    int node_count_inner = 256;
    /// Width of the first panel when an endpoint singularity is declared, in (0, pi].
    double singularity_split = 3.14159265358979323846;

    void validate() const;
};

/// Result of an ordinary least-squares fit of ln y against ln theta.
struct LogLogFit {
    double slope = 0.0;
    double intercept = 0.0;
    double r_squared = 0.0;
    double theta_lo = 0.0;
    double theta_hi = 0.0;
};

/// Modified Bessel function of the first kind, order zero.  Power series for
/// x <= 20, scaled asymptotic expansion above.  Relative error <= 1e-12.
double bessel_i0(double x);

/// exp(-x) * I0(x); stays finite for large x and is what the correlation
/// ratios use to avoid overflow.
double bessel_i0_scaled(double x);

/// ln Gamma(x) for x > 0 via Stirling's series with Bernoulli corrections,
/// shifted upward when x < 12.  Relative error <= 1e-12.
double log_gamma(double x);

/// sinh(a*x)/x extended continuously with value a at x = 0.  Uses the Taylor
/// branch a*(1 + (ax)^2/6 + (ax)^4/120) when a*x < 1e-4.
double sinh_ratio(double a, double x);

/// Gauss-Legendre nodes and weights mapped to [0, 1].
struct GaussLegendreRule {
    std::vector<double> nodes;
    std::vector<double> weights;
};

/// Cached rule of the given order (thread-safe).
const GaussLegendreRule& gauss_legendre(int n);

/// Plain Gauss-Legendre on [lo, hi].
template <class F>
double integrate_gl(F&& f, double lo, double hi, int n) {
    const GaussLegendreRule& rule = gauss_legendre(n);
    const double width = hi - lo;
    double acc = 0.0;
    for (std::size_t i = 0; i < rule.nodes.size(); ++i)
        acc += rule.weights[i] * f(lo + width * rule.nodes[i]);
    return width * acc;
}

/// Gauss-Legendre after the grading substitution t = lo + (hi-lo) * u^p,
/// which clusters nodes toward the lower endpoint.  p >= 1.
template <class F>
double integrate_gl_graded_lo(F&& f, double lo, double hi, double p, int n) {
    const GaussLegendreRule& rule = gauss_legendre(n);
    const double width = hi - lo;
    double acc = 0.0;
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
        const double u = rule.nodes[i];
        const double up = std::pow(u, p - 1.0);
        acc += rule.weights[i] * p * up * f(lo + width * (up * u));
    }
    return width * acc;
}

/// Mirror image of integrate_gl_graded_lo: nodes cluster toward hi.
template <class F>
double integrate_gl_graded_hi(F&& f, double lo, double hi, double p, int n) {
    const GaussLegendreRule& rule = gauss_legendre(n);
    const double width = hi - lo;
    double acc = 0.0;
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
        const double u = rule.nodes[i];
        const double up = std::pow(u, p - 1.0);
        acc += rule.weights[i] * p * up * f(hi - width * (up * u));
    }
    return width * acc;
}

/// Declares that the integrand behaves like (t - lo)^{-exponent} at the lower
/// endpoint, with exponent in (0, 1).
struct EndpointSingularity {
    double exponent;
};

/// Composite Gauss-Legendre on [lo, hi].  With a declared singularity the
/// first panel (width spec.singularity_split) uses the substitution
/// t = s^{1/(1-q)}, which turns t^{-q} dt into a bounded integrand.
double integrate_1d(const std::function<double(double)>& f, double lo, double hi,
                    const QuadratureSpec& spec,
                    std::optional<EndpointSingularity> singularity = std::nullopt);

/// OLS of ln y on ln theta.  Requires >= 5 strictly positive points.
LogLogFit fit_loglog(std::span<const double> thetas, std::span<const double> ys);

}  // namespace starpart
