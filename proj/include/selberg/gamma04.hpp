#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "selberg/errors.hpp"

namespace selberg {

/// Element of Gamma_0(4) modulo +-1, stored with the first nonzero entry of the top row positive.
class Gamma04Element {
public:
    Gamma04Element(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d);

    static Gamma04Element identity() { return {1, 0, 0, 1}; }
    static Gamma04Element pi_inf(std::int64_t power = 1) { return {1, power, 0, 1}; }
    static Gamma04Element pi_0(std::int64_t power = 1) { return {1, 0, -4 * power, 1}; }

    std::int64_t a() const { return a_; }
    std::int64_t b() const { return b_; }
    std::int64_t c() const { return c_; }
    std::int64_t d() const { return d_; }

    Gamma04Element operator*(const Gamma04Element& rhs) const;
    Gamma04Element inverse() const { return {d_, -b_, -c_, a_}; }
    bool operator==(const Gamma04Element& rhs) const = default;

private:
    std::int64_t a_, b_, c_, d_;
};

enum class Generator { PiInf, Pi0 };

struct WordLetter {
    Generator gen;
    std::int64_t power;
    bool operator==(const WordLetter&) const = default;
};

using Word = std::vector<WordLetter>;

/// Merges adjacent letters with the same generator and drops zero powers.
Word reduce_word(const Word& w);
Gamma04Element word_matrix(const Word& w);
std::int64_t pi_inf_exponent_sum(const Word& w);

/// Reduced word in pi_inf, pi_0 whose product equals g (up to sign).
Word decompose(const Gamma04Element& g);

std::int64_t omega_row(std::int64_t a, std::int64_t b);
inline std::int64_t omega(const Gamma04Element& g) { return omega_row(g.a(), g.b()); }

/// exp(2 pi i alpha Omega(g))
std::complex<double> chi(double alpha, const Gamma04Element& g);

bool in_gamma04(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d);

}  // namespace selberg
