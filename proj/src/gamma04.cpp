#include "selberg/gamma04.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <string>

namespace selberg {

namespace {

std::int64_t checked(__int128 v) {
    if (v > INT64_MAX || v < INT64_MIN) throw OutOfRange("matrix entry overflows 64 bits");
    return static_cast<std::int64_t>(v);
}

std::int64_t floor_div(std::int64_t x, std::int64_t y) {
    std::int64_t q = x / y;
    if ((x % y != 0) && ((x < 0) != (y < 0))) --q;
    return q;
}

// round(x / y); callers guarantee no ties
std::int64_t nearest_div(std::int64_t x, std::int64_t y) {
    if (y < 0) {
        x = -x;
        y = -y;
    }
    return floor_div(checked(__int128(2) * x + y), checked(__int128(2) * y));
}

}  // namespace

bool in_gamma04(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d) {
    const __int128 det = __int128(a) * d - __int128(b) * c;
    return det == 1 && c % 4 == 0;
}

Gamma04Element::Gamma04Element(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d)
    : a_(a), b_(b), c_(c), d_(d) {
    if (!in_gamma04(a, b, c, d)) {
        throw NotInGroup("(" + std::to_string(a) + " " + std::to_string(b) + "; " + std::to_string(c) + " " +
                         std::to_string(d) + ") is not in Gamma0(4)");
    }
    const bool flip = a_ < 0 || (a_ == 0 && b_ < 0);
    if (flip) {
        a_ = -a_;
        b_ = -b_;
        c_ = -c_;
        d_ = -d_;
    }
}

Gamma04Element Gamma04Element::operator*(const Gamma04Element& r) const {
    return {checked(__int128(a_) * r.a_ + __int128(b_) * r.c_), checked(__int128(a_) * r.b_ + __int128(b_) * r.d_),
            checked(__int128(c_) * r.a_ + __int128(d_) * r.c_), checked(__int128(c_) * r.b_ + __int128(d_) * r.d_)};
}

Word reduce_word(const Word& w) {
    Word out;
    for (const auto& letter : w) {
        if (letter.power == 0) continue;
        if (!out.empty() && out.back().gen == letter.gen) {
            out.back().power += letter.power;
            if (out.back().power == 0) out.pop_back();
        } else {
            out.push_back(letter);
        }
    }
    return out;
}

Gamma04Element word_matrix(const Word& w) {
    Gamma04Element m = Gamma04Element::identity();
    for (const auto& letter : w) {
        m = m * (letter.gen == Generator::PiInf ? Gamma04Element::pi_inf(letter.power)
                                                 : Gamma04Element::pi_0(letter.power));
    }
    return m;
}

std::int64_t pi_inf_exponent_sum(const Word& w) {
    std::int64_t s = 0;
    for (const auto& letter : w)
        if (letter.gen == Generator::PiInf) s += letter.power;
    return s;
}

Word decompose(const Gamma04Element& g) {
    std::int64_t a = g.a(), b = g.b(), c = g.c(), d = g.d();
    Word suffix;  // rightmost factor first
    for (int guard = 0; b != 0; ++guard) {
        if (guard > 200) throw NotInGroup("reduction stalled");
        const std::int64_t n = nearest_div(b, a);
        b = checked(__int128(b) - __int128(n) * a);
        d = checked(__int128(d) - __int128(n) * c);
        suffix.push_back({Generator::PiInf, n});
        if (b == 0) break;
        const std::int64_t m = nearest_div(a, checked(__int128(4) * b));
        a = checked(__int128(a) - __int128(4) * m * b);
        c = checked(__int128(c) - __int128(4) * m * d);
        suffix.push_back({Generator::Pi0, -m});
    }
    if (a < 0) {
        a = -a;
        c = -c;
        d = -d;
    }
    if (a != 1 || d != 1 || c % 4 != 0) throw NotInGroup("reduction did not reach a lower triangular unipotent");
    Word w{{Generator::Pi0, -c / 4}};
    w.insert(w.end(), suffix.rbegin(), suffix.rend());
    return reduce_word(w);
}

std::int64_t omega_row(std::int64_t a, std::int64_t b) {
    if (a % 2 == 0) throw InvalidRow("top-left entry must be odd");
    if (std::gcd(a, b) != 1) throw InvalidRow("row entries must be coprime");
    std::int64_t total = 0;
    while (b != 0) {
        const std::int64_t n = nearest_div(b, a);
        b -= n * a;
        total += n;
        if (b == 0) break;
        a -= 4 * nearest_div(a, 4 * b) * b;
    }
    return total;
}

std::complex<double> chi(double alpha, const Gamma04Element& g) {
    const double phase = 2.0 * std::numbers::pi * alpha * double(omega(g));
    return {std::cos(phase), std::sin(phase)};
}

}  // namespace selberg
