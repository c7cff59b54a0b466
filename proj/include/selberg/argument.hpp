#pragma once

#include <functional>

#include "selberg/scattering.hpp"

namespace selberg {

struct ArgTrail {
    double t_last = 0.0;
    double unwrapped_value = 0.0;
    double step_max = 0.05;
};

/// Continuous argument of a nonvanishing complex function of one real variable.
/// Steps are bisected until the principal increment stays below pi/2.
class PhaseTracker {
public:
    PhaseTracker(std::function<Complex(double)> f, double t0, double arg0, double step_max = 0.05);

    double advance(double t);
    const ArgTrail& trail() const { return trail_; }
    Complex last_value() const { return last_; }

private:
    std::function<Complex(double)> f_;
    ArgTrail trail_;
    Complex last_;
};

constexpr double kDefaultTrackStep = 0.05;

double phi_minus(double t, double step_max = kDefaultTrackStep);

struct ArgModulus {
    double A = 0.0;
    double M = 0.0;
};

ArgModulus a_m_of(double t, double step_max = kDefaultTrackStep);

/// log|2^{1+2it} - 1|
double m_of(double t);

/// Branch of log Y_+(0, sigma + it) near the line, anchored to a_m_of(t) at sigma = 1/2.
class YPlusBranch {
public:
    explicit YPlusBranch(double t, const ScatteringConfig& cfg = {});
    ArgModulus at(double sigma) const;
    double t() const { return t_; }
    double line_argument() const { return a_line_; }

private:
    double t_;
    double a_line_;
    Complex y_line_;
    ScatteringConfig cfg_;
};

}  // namespace selberg
