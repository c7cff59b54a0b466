#pragma once

#include <array>

#include "selberg/special_functions.hpp"

namespace selberg {

/// 3x3 scattering matrix with cusp index order (0, inf, -1/2).
using Matrix3 = std::array<std::array<Complex, 3>, 3>;
using Matrix2 = std::array<std::array<Complex, 2>, 2>;

struct ScatteringConfig {
    EvalConfig eval{};
    /// Points whose estimated distance (in beta) to a zero of zeta(2 beta) is below this are rejected.
    double zero_radius = 1e-3;
    double symmetry_tol = 1e-10;
};

/// Common scalar factor Lambda(2b-1) / (Lambda(2b) (2^{2b}-1)); equals the C_+ entry.
Complex s0_prefactor(Complex beta, const ScatteringConfig& cfg = {});
Matrix3 s0(Complex beta, const ScatteringConfig& cfg = {});

struct ParitySplit {
    Matrix2 s_plus;
    Complex c_minus;
};

ParitySplit parity_split(const Matrix3& m, double tol = 1e-10);

/// Closed forms of the odd and even (inf, inf) +- (inf, -1/2) combinations at alpha = 0.
Complex c_minus(Complex beta, const ScatteringConfig& cfg = {});
Complex c_plus(Complex beta, const ScatteringConfig& cfg = {});

Complex x_factor(double alpha, Complex beta);
Complex y_minus(Complex beta, const ScatteringConfig& cfg = {});
Complex y_plus(Complex beta, const ScatteringConfig& cfg = {});

/// pi^{2it} (2^{1+2it}-1) / (2^{1-2it}-1) zeta(-2it) / zeta(2it)
Complex y_minus_line(double t, const EvalConfig& cfg = {});
/// pi^{2it} (2^{1+2it}-1) zeta(-2it) / zeta(2it)
Complex y_plus_line(double t, const EvalConfig& cfg = {});

struct D00Config {
    double hit_abs = 1e-14;
    /// rejection when |den / d den/d beta| < hit_dist * max(1, |beta|)
    double hit_dist = 1e-13;
};

/// Leading-order model of the (0,0) entry at alpha > 0 built from the alpha = 0 entries.
Complex d00_model(double alpha, Complex beta, const ScatteringConfig& cfg = {}, const D00Config& hit = {});

}  // namespace selberg
