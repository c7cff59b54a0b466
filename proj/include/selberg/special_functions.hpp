#pragma once

#include <complex>

#include "selberg/errors.hpp"

namespace selberg {

using Complex = std::complex<double>;

struct SpectralPoint {
    double sigma = 0.5;
    double t = 0.0;
    Complex beta() const { return {sigma, t}; }
};

struct EvalConfig {
    double target_abs_tol = 1e-12;
    int euler_maclaurin_cutoff = 20;  // lower bound on N, raised with |Im s|
    int max_bernoulli_terms = 30;
};

/// Principal branch of log Gamma, continuous off the non-positive real axis.
Complex log_gamma(Complex z);
Complex complex_gamma(Complex z);

Complex zeta(Complex s, const EvalConfig& cfg = {});
/// Central difference derivative of zeta, used for zero-proximity estimates.
Complex zeta_derivative(Complex s, const EvalConfig& cfg = {});

/// pi^{-s/2} Gamma(s/2) zeta(s)
Complex lambda_completed(Complex s, const EvalConfig& cfg = {});

/// Gamma(beta - 1/2) / Gamma(1/2 - beta), evaluated in log space.
Complex gamma_ratio_half(Complex beta);

/// log(sin(pi z)) without overflow for large |Im z|.
Complex log_sin_pi(Complex z);

}  // namespace selberg
