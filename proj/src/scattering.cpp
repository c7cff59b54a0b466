#include "selberg/scattering.hpp"

#include <cmath>
#include <numbers>

namespace selberg {

namespace {

constexpr double kPi = std::numbers::pi;
const double kLog2 = std::log(2.0);

Complex pow2(Complex s) { return std::exp(s * kLog2); }

bool near(Complex a, Complex b) { return std::abs(a - b) < 1e-14; }

Complex lambda_ratio(Complex beta, const EvalConfig& cfg) {
    try {
        return lambda_completed(2.0 * beta - 1.0, cfg) / lambda_completed(2.0 * beta, cfg);
    } catch (const PoleAt&) {
        throw SingularAt(beta, "Lambda pole in scattering prefactor");
    }
}

}  // namespace

Complex s0_prefactor(Complex beta, const ScatteringConfig& cfg) {
    if (near(beta, 0.0) || near(beta, 0.5) || near(beta, 1.0)) throw SingularAt(beta, "Lambda pole");
    const Complex q = pow2(2.0 * beta) - 1.0;
    if (std::abs(q) < 1e-14) throw SingularAt(beta, "2^{2 beta} = 1");
    const Complex s = 2.0 * beta;
    if (s.real() > -1e-3 && s.real() < 1.0 + 1e-3) {
        const Complex z = zeta(s, cfg.eval);
        if (std::abs(z) < 0.1) {
            const Complex dz = zeta_derivative(s, cfg.eval);
            if (std::abs(z / dz) * 0.5 < cfg.zero_radius) throw SingularAt(beta, "zeta(2 beta) vanishes");
        }
    }
    return lambda_ratio(beta, cfg.eval) / q;
}

Matrix3 s0(Complex beta, const ScatteringConfig& cfg) {
    const Complex p = s0_prefactor(beta, cfg);
    const Complex diag = p * pow2(1.0 - 2.0 * beta);
    const Complex off = p - diag;
    return {{{diag, off, off}, {off, diag, off}, {off, off, diag}}};
}

ParitySplit parity_split(const Matrix3& m, double tol) {
    double scale = 1.0;
    for (const auto& row : m)
        for (const auto& e : row) scale = std::max(scale, std::abs(e));
    const double lim = tol * scale;
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j)
            if (std::abs(m[i][j] - m[j][i]) > lim) throw AsymmetryDetected("matrix is not symmetric");
    if (std::abs(m[1][1] - m[2][2]) > lim) throw AsymmetryDetected("C_inf,inf differs from C_-1/2,-1/2");
    if (std::abs(m[0][1] - m[0][2]) > lim) throw AsymmetryDetected("C_0,inf differs from C_0,-1/2");
    const Complex r2 = std::sqrt(2.0);
    ParitySplit out;
    out.s_plus = {{{m[0][0], r2 * m[0][1]}, {r2 * m[0][1], m[1][1] + m[1][2]}}};
    out.c_minus = m[1][1] - m[1][2];
    return out;
}

Complex c_minus(Complex beta, const ScatteringConfig& cfg) {
    return lambda_ratio(beta, cfg.eval) * (pow2(2.0 - 2.0 * beta) - 1.0) / (pow2(2.0 * beta) - 1.0);
}

Complex c_plus(Complex beta, const ScatteringConfig& cfg) {
    return lambda_ratio(beta, cfg.eval) / (pow2(2.0 * beta) - 1.0);
}

Complex x_factor(double alpha, Complex beta) {
    if (!(alpha > 0.0)) throw OutOfRange("alpha must be positive");
    return std::exp((2.0 * beta - 1.0) * std::log(kPi * alpha) + log_gamma(0.5 - beta) - log_gamma(beta - 0.5));
}

Complex y_minus(Complex beta, const ScatteringConfig& cfg) { return gamma_ratio_half(beta) / c_minus(beta, cfg); }

Complex y_plus(Complex beta, const ScatteringConfig& cfg) { return gamma_ratio_half(beta) / c_plus(beta, cfg); }

Complex y_plus_line(double t, const EvalConfig& cfg) {
    const Complex it(0.0, t);
    return std::exp(2.0 * it * std::log(kPi)) * (pow2(1.0 + 2.0 * it) - 1.0) * zeta(-2.0 * it, cfg) /
           zeta(2.0 * it, cfg);
}

Complex y_minus_line(double t, const EvalConfig& cfg) {
    const Complex it(0.0, t);
    return y_plus_line(t, cfg) / (pow2(1.0 - 2.0 * it) - 1.0);
}

Complex d00_model(double alpha, Complex beta, const ScatteringConfig& cfg, const D00Config& hit) {
    auto parts = [&](Complex b, Complex& num) {
        const Complex p = s0_prefactor(b, cfg);
        const Complex diag = p * pow2(1.0 - 2.0 * b);
        const Complex off = p - diag;
        const Complex x = x_factor(alpha, b);
        num = diag - x * (diag * p - 2.0 * off * off);
        return 1.0 - x * p;
    };
    Complex num;
    const Complex den = parts(beta, num);
    if (std::abs(den) < hit.hit_abs) throw ResonanceHit(beta);
    if (std::abs(den) < 1e-6) {
        const double h = 1e-6 * std::max(1.0, std::abs(beta));
        Complex scratch;
        const Complex dden = (parts(beta + h, scratch) - parts(beta - h, scratch)) / (2.0 * h);
        if (std::abs(den) < hit.hit_dist * std::max(1.0, std::abs(beta)) * std::abs(dden)) throw ResonanceHit(beta);
    }
    return num / den;
}

}  // namespace selberg
