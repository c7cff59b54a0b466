#pragma once

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "selberg/argument.hpp"

namespace selberg {

struct EigenSolution {
    double t = 0.0;
    double residual = 0.0;
    int iterations = 0;
};

/// Embedded eigenvalue t of the odd part: 2t log(pi alpha) = phi_-(t) - 2 pi k.
EigenSolution solve_tau_k_detail(double alpha, int k);
inline double solve_tau_k(double alpha, int k) { return solve_tau_k_detail(alpha, k).t; }

/// Inverse of the eigenvalue curve: alpha at which t is the k-th embedded eigenvalue.
double solve_a_k(double t, int k);

struct ResonanceConfig {
    double abs_tol = 1e-12;
    int max_iter = 200;
    /// warm start (x, y) with x = -1/log(pi alpha), y = 1/2 - sigma
    std::optional<std::pair<double, double>> warm_start;
    ScatteringConfig scattering{};
};

struct ResonanceSolution {
    double alpha = 0.0;
    double sigma = 0.5;
    double t = 0.0;
    int k = 0;
    int iterations = 0;
    double contraction_ratio = 0.0;
    double x = 0.0;
    double y = 0.0;
    Complex beta() const { return {sigma, t}; }
};

ResonanceSolution solve_resonance(double t, int k, const ResonanceConfig& cfg = {});
/// Finds the point of the k-th resonance curve with the given alpha (bisection in t).
ResonanceSolution solve_resonance_at_alpha(double alpha, int k, const ResonanceConfig& cfg = {});

enum class CurveKind { Eigenvalue, Resonance };

struct CurveSample {
    int k = 0;
    double alpha = 0.0;
    double sigma = 0.5;
    double t = 0.0;
};

std::vector<CurveSample> trace_curve(CurveKind kind, int k, std::span<const double> t_grid,
                                     const ResonanceConfig& cfg = {});

enum class TheoremId {
    EigenSmallAlpha,
    EigenAlphaOfT,
    ResonanceTSmallAlpha,
    ResonanceSigmaSmallAlpha,
    ResonanceAlphaOfT,
    ResonanceSigmaOfT,
    TouchingWidth,
};

TheoremId parse_theorem_id(const std::string& name);
std::string theorem_name(TheoremId id);
std::vector<TheoremId> all_theorems();

struct AsymptoticArgs {
    double alpha = 0.0;
    double t = 0.0;
    int k = 1;
    double k_I = 0.0;
    double eta2 = 0.0;
    int ell = 1;
};

double asymptotic_eval(TheoremId which, const AsymptoticArgs& args);

struct KDiagnostics {
    double k1 = 0.0;
    double k2 = 0.0;
    double k3 = 0.0;
};

KDiagnostics k_diagnostics(double alpha, Complex beta);

}  // namespace selberg
