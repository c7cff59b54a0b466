#include "selberg/fourier.hpp"

#include <cmath>
#include <numbers>
#include <numeric>
#include <tuple>

namespace selberg {

namespace {

constexpr double kPi = std::numbers::pi;

std::int64_t mod_inverse(std::int64_t a, std::int64_t m) {
    std::int64_t g = m, x = 0, x1 = 1, a1 = ((a % m) + m) % m;
    while (a1 != 0) {
        const std::int64_t q = g / a1;
        std::tie(g, a1) = std::pair{a1, g - q * a1};
        std::tie(x, x1) = std::pair{x1, x - q * x1};
    }
    if (g != 1) throw NotInGroup("modulus and residue are not coprime");
    return ((x % m) + m) % m;
}

}  // namespace

SeriesTerm series_term(double alpha, std::int64_t p, std::int64_t q, std::int64_t s) {
    const std::int64_t num = 1 - 4 * q * s;
    if (p <= 0 || num % p != 0) throw NotInGroup("no integer completion for this (p, q, s)");
    const Gamma04Element g(num / p, s, -4 * q, p);
    const double phase = -2.0 * kPi * alpha * (double(omega_row(num / p, s)) - double(s) / double(p));
    return {g, {std::cos(phase), std::sin(phase)}};
}

TruncationReport phi_series(double alpha, Complex beta, int c_max) {
    if (!(beta.real() > 1.0)) throw NotConvergent("Fourier series needs Re beta > 1");
    if (c_max < 2) throw OutOfRange("c_max must be at least 2");
    TruncationReport rep;
    rep.c_max = c_max;
    Complex total = 0.0;
    for (std::int64_t p = 1; 2 * p <= c_max; p += 2) {
        Complex inner = 0.0;
        for (std::int64_t q = 0; q < p; ++q) {
            if (std::gcd(q, p) != 1) continue;
            std::int64_t s = p == 1 ? 0 : mod_inverse(4 * q, p);
            if (2 * s > p) s -= p;
            inner += series_term(alpha, p, q, s).value;
        }
        total += std::exp(-2.0 * beta * std::log(2.0 * double(p))) * inner;
    }
    rep.partial_sum = total;
    const double sigma = beta.real();
    rep.tail_bound = std::pow(double(c_max), 2.0 - 2.0 * sigma) / (4.0 * sigma - 4.0);
    return rep;
}

Complex phi_closed_form_alpha0(Complex beta) {
    const Complex two_b = 2.0 * beta;
    const double l2 = std::log(2.0);
    return (1.0 - std::exp((1.0 - two_b) * l2)) / (std::exp(two_b * l2) - 1.0) * zeta(two_b - 1.0) / zeta(two_b);
}

Complex phi_prefactor(Complex beta) {
    return kPi * std::exp((2.0 - 2.0 * beta) * std::log(2.0) + log_gamma(2.0 * beta - 1.0) - 2.0 * log_gamma(beta));
}

DerivativeCheck phi_alpha_derivative_check(Complex beta, double h, int c_max) {
    if (!(beta.real() > 1.5)) throw NotConvergent("derivative check needs Re beta > 3/2");
    if (!(h >= 1e-4 && h <= 1e-2)) throw OutOfRange("h must lie in [1e-4, 1e-2]");
    const Complex plus = phi_series(h, beta, c_max).partial_sum;
    const Complex minus = phi_series(-h, beta, c_max).partial_sum;
    const Complex zero = phi_series(0.0, beta, c_max).partial_sum;
    return {std::abs((plus - minus) / (2.0 * h)), (plus - 2.0 * zero + minus) / (h * h)};
}

}  // namespace selberg
