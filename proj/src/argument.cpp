#include "selberg/argument.hpp"

#include <cmath>
#include <numbers>

namespace selberg {

PhaseTracker::PhaseTracker(std::function<Complex(double)> f, double t0, double arg0, double step_max)
    : f_(std::move(f)) {
    if (!(step_max > 0.0)) throw OutOfRange("tracking step must be positive");
    trail_.t_last = t0;
    trail_.unwrapped_value = arg0;
    trail_.step_max = step_max;
    last_ = f_(t0);
}

double PhaseTracker::advance(double t) {
    constexpr double kQuarter = std::numbers::pi / 2.0;
    while (trail_.t_last != t) {
        double h = t - trail_.t_last;
        if (std::abs(h) > trail_.step_max) h = std::copysign(trail_.step_max, h);
        for (;;) {
            const double t_next = (std::abs(t - trail_.t_last) <= std::abs(h)) ? t : trail_.t_last + h;
            const Complex v = f_(t_next);
            const double d = std::arg(v / last_);
            if (std::abs(d) < kQuarter || std::abs(h) < 1e-12) {
                trail_.unwrapped_value += d;
                trail_.t_last = t_next;
                last_ = v;
                break;
            }
            h *= 0.5;
        }
    }
    return trail_.unwrapped_value;
}

double phi_minus(double t, double step_max) {
    PhaseTracker tracker([](double s) { return y_minus_line(s); }, 0.0, 0.0, step_max);
    return tracker.advance(t);
}

double m_of(double t) {
    const Complex w = std::exp(Complex(1.0, 2.0 * t) * std::log(2.0)) - 1.0;
    return std::log(std::abs(w));
}

ArgModulus a_m_of(double t, double step_max) {
    PhaseTracker tracker([](double s) { return y_plus_line(s); }, 0.0, 0.0, step_max);
    return {tracker.advance(t), m_of(t)};
}

YPlusBranch::YPlusBranch(double t, const ScatteringConfig& cfg) : t_(t), cfg_(cfg) {
    if (!(t > 0.0)) throw SingularLine("resonance branch needs t > 0");
    try {
        y_line_ = y_plus(Complex(0.5, t), cfg_);
    } catch (const Error& e) {
        throw SingularLine(std::string("Y_+ undefined on the line: ") + e.what());
    }
    if (!(std::abs(y_line_) > 0.0) || !std::isfinite(std::abs(y_line_))) throw SingularLine("Y_+ degenerate on the line");
    a_line_ = a_m_of(t).A;
}

ArgModulus YPlusBranch::at(double sigma) const {
    const Complex y = y_plus(Complex(sigma, t_), cfg_);
    return {a_line_ + std::arg(y / y_line_), std::log(std::abs(y))};
}

}  // namespace selberg
