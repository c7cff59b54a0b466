#include "selberg/special_functions.hpp"

#include <array>
#include <cmath>
#include <numbers>

namespace selberg {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr int kMaxBernoulli = 40;

// B_{2k}/(2k)! = (-1)^{k+1} 2 zeta(2k) / (2 pi)^{2k}
const std::array<double, kMaxBernoulli + 1>& bernoulli_over_factorial() {
    static const auto table = [] {
        std::array<double, kMaxBernoulli + 1> c{};
        const double even_zeta[] = {0.0, kPi * kPi / 6.0, std::pow(kPi, 4) / 90.0, std::pow(kPi, 6) / 945.0,
                                    std::pow(kPi, 8) / 9450.0};
        for (int k = 1; k <= kMaxBernoulli; ++k) {
            double z2k = 0.0;
            if (k <= 4) {
                z2k = even_zeta[k];
            } else {
                for (int n = 60; n >= 1; --n) z2k += std::pow(double(n), -2.0 * k);
            }
            const double sign = (k % 2 == 1) ? 1.0 : -1.0;
            c[k] = sign * 2.0 * z2k / std::pow(2.0 * kPi, 2.0 * k);
        }
        return c;
    }();
    return table;
}

bool near_nonpositive_integer(Complex z) {
    if (z.real() > 0.5) return false;
    const double n = std::round(z.real());
    const double scale = std::max(1.0, std::abs(z));
    return std::abs(z.real() - n) < 1e-14 * scale && std::abs(z.imag()) < 1e-14 * scale;
}

Complex log_gamma_stirling(Complex z) {
    // requires Re z >= 15
    const auto& c = bernoulli_over_factorial();
    Complex series = 0.0;
    const Complex inv = 1.0 / z;
    const Complex inv2 = inv * inv;
    Complex pw = inv;
    double fact = 1.0;  // (2k-2)!
    for (int k = 1; k <= 12; ++k) {
        if (k > 1) fact *= double(2 * k - 2) * double(2 * k - 3);
        series += c[k] * fact * pw;
        pw *= inv2;
    }
    return (z - 0.5) * std::log(z) - z + 0.5 * std::log(2.0 * kPi) + series;
}

Complex zeta_euler_maclaurin(Complex s, const EvalConfig& cfg) {
    const auto& c = bernoulli_over_factorial();
    const int n_cut = std::max({cfg.euler_maclaurin_cutoff, 10, int(std::ceil(2.0 * std::abs(s.imag())))});
    const double N = n_cut;
    Complex sum = 0.0;
    for (int n = n_cut - 1; n >= 1; --n) sum += std::exp(-s * std::log(double(n)));
    const Complex n_pow = std::exp(-s * std::log(N));
    sum += n_pow * N / (s - 1.0) + 0.5 * n_pow;

    // s (s+1) ... (s+2k-2) N^{-s-2k+1}
    Complex rising = s;
    Complex power = n_pow / N;
    const int terms = std::min(cfg.max_bernoulli_terms, kMaxBernoulli);
    for (int k = 1; k <= terms; ++k) {
        const Complex term = c[k] * rising * power;
        sum += term;
        if (std::abs(term) < 1e-17 * std::max(1.0, std::abs(sum))) break;
        rising *= (s + double(2 * k - 1)) * (s + double(2 * k));
        power /= N * N;
    }
    return sum;
}

}  // namespace

Complex log_sin_pi(Complex z) {
    const Complex w = kPi * z;
    if (std::abs(w.imag()) < 20.0) return std::log(std::sin(w));
    const Complex i(0.0, 1.0);
    if (w.imag() > 0.0) {
        // sin w = e^{-iw} (1 - e^{2iw}) i/2
        return -i * w + std::log(1.0 - std::exp(2.0 * i * w)) + std::log(0.5 * i);
    }
    return std::conj(log_sin_pi(std::conj(z)));
}

Complex log_gamma(Complex z) {
    if (near_nonpositive_integer(z)) throw PoleAt(z, "Gamma pole");
    if (z.real() >= 15.0) return log_gamma_stirling(z);
    const int shift = int(std::ceil(15.0 - z.real()));
    Complex log_acc = 0.0;
    for (int j = 0; j < shift; ++j) log_acc += std::log(z + double(j));
    return log_gamma_stirling(z + double(shift)) - log_acc;
}

Complex complex_gamma(Complex z) { return std::exp(log_gamma(z)); }

Complex zeta(Complex s, const EvalConfig& cfg) {
    if (std::abs(s - 1.0) < 1e-15) throw PoleAt(s, "zeta pole");
    if (s.real() >= 0.0) return zeta_euler_maclaurin(s, cfg);
    // zeta(s) = 2^s pi^{s-1} sin(pi s / 2) Gamma(1-s) zeta(1-s)
    const Complex one_minus = 1.0 - s;
    const Complex log_factor = s * std::log(2.0) + (s - 1.0) * std::log(kPi) + log_gamma(one_minus);
    const Complex sine = std::sin(0.5 * kPi * s);
    if (std::abs(s.imag()) < 200.0) {
        return std::exp(log_factor) * sine * zeta_euler_maclaurin(one_minus, cfg);
    }
    return std::exp(log_factor + log_sin_pi(0.5 * s)) * zeta_euler_maclaurin(one_minus, cfg);
}

Complex zeta_derivative(Complex s, const EvalConfig& cfg) {
    const double h = 1e-5;
    return (zeta(s + h, cfg) - zeta(s - h, cfg)) / (2.0 * h);
}

Complex lambda_completed(Complex s, const EvalConfig& cfg) {
    if (std::abs(s) < 1e-15) throw PoleAt(s, "Lambda pole");
    if (std::abs(s - 1.0) < 1e-15) throw PoleAt(s, "Lambda pole");
    const Complex half = 0.5 * s;
    // Gamma(s/2) has poles at the trivial zeros of zeta; the product is finite there
    if (half.real() < 0.0 && std::abs(half - std::round(half.real())) < 1e-3) {
        return lambda_completed(1.0 - s, cfg);
    }
    return std::exp(-half * std::log(kPi) + log_gamma(half)) * zeta(s, cfg);
}

Complex gamma_ratio_half(Complex beta) {
    const Complex num = beta - 0.5;
    const Complex den = 0.5 - beta;
    if (near_nonpositive_integer(num)) throw PoleAt(beta, "Gamma(beta-1/2) pole");
    if (near_nonpositive_integer(den)) throw PoleAt(beta, "Gamma(1/2-beta) pole");
    return std::exp(log_gamma(num) - log_gamma(den));
}

}  // namespace selberg
