#pragma once

#include <cstdint>

#include "selberg/gamma04.hpp"
#include "selberg/special_functions.hpp"

namespace selberg {

struct TruncationReport {
    int c_max = 0;
    Complex partial_sum;
    double tail_bound = 0.0;
};

/// One inner-sum term chi_alpha(gamma)^{-1} e^{2 pi i alpha a / c} for c = 2p, d = 2q, a = 2s.
/// gamma = (r s; -4q p) with r p + 4 q s = 1 is checked for membership in Gamma0(4).
struct SeriesTerm {
    Gamma04Element gamma;
    Complex value;
};

SeriesTerm series_term(double alpha, std::int64_t p, std::int64_t q, std::int64_t s);

/// Truncated Fourier coefficient Phi_{0,inf}(alpha, beta) over moduli c <= c_max.
TruncationReport phi_series(double alpha, Complex beta, int c_max = 2000);

/// Closed form of Phi_{0,inf}(0, beta).
Complex phi_closed_form_alpha0(Complex beta);

/// pi 2^{2-2 beta} Gamma(2 beta - 1) / Gamma(beta)^2
Complex phi_prefactor(Complex beta);

struct DerivativeCheck {
    double first_difference = 0.0;
    Complex second_difference;
};

DerivativeCheck phi_alpha_derivative_check(Complex beta, double h, int c_max = 2000);

}  // namespace selberg
