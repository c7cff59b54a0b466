#include <doctest.h>

#include <cmath>
#include <cstdlib>
#include <numbers>

#include "selberg/errors.hpp"
#include "selberg/gamma04.hpp"
#include "selberg/random.hpp"

using namespace selberg;

namespace {

Word random_reduced_word(Rng& rng, int max_len) {
    const auto len = rng.integer(0, max_len);
    Word w;
    auto gen = rng.integer(0, 1) == 0 ? Generator::PiInf : Generator::Pi0;
    for (std::int64_t i = 0; i < len; ++i) {
        std::int64_t power = rng.integer(1, 3);
        if (rng.integer(0, 1) == 0) power = -power;
        w.push_back({gen, power});
        gen = gen == Generator::PiInf ? Generator::Pi0 : Generator::PiInf;
    }
    return w;
}

}  // namespace

TEST_CASE("element validation and canonical sign") {
    CHECK_THROWS_AS(Gamma04Element(1, 1, 1, 2), NotInGroup);
    CHECK_THROWS_AS(Gamma04Element(2, 1, 1, 1), NotInGroup);
    const Gamma04Element g(-1, -1, 0, -1);
    CHECK(g.a() == 1);
    CHECK(g.b() == 1);
    CHECK(g == Gamma04Element::pi_inf(1));
    CHECK(in_gamma04(-7, 9, -4, 5));
    CHECK_FALSE(in_gamma04(1, 0, 2, 1));
}

TEST_CASE("omega_row examples") {
    CHECK(omega_row(1, 0) == 0);
    CHECK(omega_row(1, 1) == 1);
    CHECK(omega_row(-7, 9) == 1);
    CHECK_THROWS_AS(omega_row(2, 1), InvalidRow);
    CHECK_THROWS_AS(omega_row(3, 6), InvalidRow);
}

TEST_CASE("omega on generators") {
    CHECK(omega(Gamma04Element::pi_0(1)) == 0);
    CHECK(omega(Gamma04Element::pi_inf(5)) == 5);
    CHECK(omega(Gamma04Element::pi_inf(-3)) == -3);
}

TEST_CASE("decompose examples") {
    CHECK(decompose(Gamma04Element(1, 0, 0, 1)).empty());
    const Word expected{{Generator::PiInf, 2}, {Generator::Pi0, 1}, {Generator::PiInf, -1}};
    const Gamma04Element g(-7, 9, -4, 5);
    CHECK(decompose(g) == expected);
    CHECK(word_matrix(expected) == g);
    CHECK(decompose(Gamma04Element::pi_inf(1)) == Word{{Generator::PiInf, 1}});
}

TEST_CASE("reduce_word merges and cancels") {
    const Word w{{Generator::PiInf, 2}, {Generator::PiInf, -2}, {Generator::Pi0, 1}, {Generator::Pi0, 2}};
    CHECK(reduce_word(w) == Word{{Generator::Pi0, 3}});
}

TEST_CASE("character values") {
    CHECK(std::abs(chi(0.37, Gamma04Element::pi_0(1)) - 1.0) < 1e-15);
    CHECK(std::abs(chi(0.1, Gamma04Element::pi_inf(1)) - std::polar(1.0, 0.2 * std::numbers::pi)) < 1e-15);
    const Gamma04Element g(-7, 9, -4, 5);
    CHECK(std::abs(chi(0.3, g * g.inverse()) - 1.0) < 1e-15);
}

TEST_CASE("matrix product overflow is reported") {
    const Gamma04Element big = Gamma04Element::pi_inf(std::int64_t(1) << 40);
    CHECK_THROWS_AS(big * Gamma04Element::pi_0(std::int64_t(1) << 40) * big, OutOfRange);
}

TEST_CASE("property: omega equals exponent sum on 500 random words") {
    Rng rng(21);
    for (int i = 0; i < 500; ++i) {
        const Word w = random_reduced_word(rng, 20);
        const Gamma04Element g = word_matrix(w);
        CHECK(omega(g) == pi_inf_exponent_sum(w));
        CHECK(std::abs(omega(g)) <= std::abs(g.b()));
    }
}

TEST_CASE("property: free-group roundtrip") {
    Rng rng(22);
    for (int i = 0; i < 300; ++i) {
        const Word w = random_reduced_word(rng, 15);
        CHECK(decompose(word_matrix(w)) == w);
    }
}

TEST_CASE("property: sign flips of the top row") {
    Rng rng(23);
    for (int i = 0; i < 300; ++i) {
        const Gamma04Element g = word_matrix(random_reduced_word(rng, 12));
        if (g.b() == 0) continue;
        CHECK(omega_row(g.a(), -g.b()) == -omega(g));
        CHECK(omega_row(g.d(), -g.b()) == -omega(g));
    }
}

TEST_CASE("property: character is multiplicative") {
    Rng rng(24);
    for (int i = 0; i < 200; ++i) {
        const Gamma04Element g = word_matrix(random_reduced_word(rng, 6));
        const Gamma04Element h = word_matrix(random_reduced_word(rng, 6));
        const double alpha = rng.uniform(-1.0, 1.0);
        CHECK(std::abs(chi(alpha, g * h) - chi(alpha, g) * chi(alpha, h)) < 1e-12);
        CHECK(std::abs(std::abs(chi(alpha, g)) - 1.0) < 1e-14);
    }
}
