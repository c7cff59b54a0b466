#pragma once

#include <vector>

#include "selberg/argument.hpp"

namespace selberg {

/// Odd part near an unperturbed eigenvalue t0 with a pole at beta0 + p(alpha), p = p2 alpha^2,
/// and the reflected zero at beta0 + n(alpha), n = -conj(p).
class AvoidedCrossingModel {
public:
    AvoidedCrossingModel(double t0, Complex p2);

    double t0() const { return t0_; }
    Complex p2() const { return p2_; }
    Complex p(double alpha) const { return p2_ * alpha * alpha; }
    Complex n(double alpha) const { return -std::conj(p(alpha)); }

    /// Continuous argument of Y_- at (alpha, 1/2 + i(t0 + s)), anchored below t0.
    double a_minus(double alpha, double s) const;
    /// 2t log(pi alpha) - A_-, with t = t0 + s
    double f(double alpha, double s) const;

private:
    double t0_;
    Complex p2_;
};

struct AvoidedCrossingResult {
    int k = 0;
    double alpha_k = 0.0;
    double t_k = 0.0;
    double slope = 0.0;
    double predicted_slope = 0.0;
    /// slope relative to the generic steepness t / (alpha |log pi alpha|)
    double steepness_ratio = 0.0;
};

AvoidedCrossingResult avoided_crossing_slope(const AvoidedCrossingModel& model, int k);

/// Even part near a resonance at beta0 = 1/2 + i t0 with a constant gamma-tilde factor.
class LoopModel {
public:
    LoopModel(double t0, Complex p2, Complex rplus2, Complex rinf2, Complex gamma_tilde0);

    /// Builds a consistent model whose loop circle has radius `radius` (in units of alpha^2)
    /// and touches the line at rinf2; p2 must lie inside that circle.
    static LoopModel tangent_circle(double t0, double rinf2_imag, double radius, Complex p2, double phase);

    double t0() const { return t0_; }
    Complex beta0() const { return {0.5, t0_}; }
    Complex p2() const { return p2_; }
    Complex rplus2() const { return rplus2_; }
    Complex r002() const { return -std::conj(rplus2_); }
    Complex rinf2() const { return rinf2_; }
    Complex gamma_tilde0() const { return gamma_tilde0_; }

private:
    double t0_;
    Complex p2_, rplus2_, rinf2_, gamma_tilde0_;
};

struct LoopZeta {
    Complex zeta;
    Complex z;  // zeta - beta0
    Complex u;
    int iterations = 0;
    double contraction_ratio = 0.0;
};

LoopZeta loop_zeta(const LoopModel& model, double alpha, Complex u_seed = 0.0);
std::vector<double> loop_touchings(const LoopModel& model, const std::vector<int>& ks);
/// Largest alpha on a geometric grid for which the fixed-point contraction ratio stays below 0.5.
double loop_validity_radius(const LoopModel& model, double alpha_start = 1e-6, double factor = 1.25);
/// Unwrapped argument of (z - r_+)/(z - p) from alpha_hi down to alpha_lo.
double loop_winding(const LoopModel& model, double alpha_hi, double alpha_lo);

}  // namespace selberg
