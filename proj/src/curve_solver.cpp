#include "selberg/curve_solver.hpp"

#include <cmath>
#include <numbers>

namespace selberg {

namespace {

constexpr double kPi = std::numbers::pi;
const double kLog2 = std::log(2.0);
const double kLogPi = std::log(kPi);

}  // namespace

EigenSolution solve_tau_k_detail(double alpha, int k) {
    if (k < 1) throw OutOfRange("k must be positive");
    if (!(alpha > 0.0) || !(alpha < std::exp(-2.0) / kPi)) {
        throw NoBracket("alpha outside the monotone range (0, e^-2/pi)");
    }
    const double ell = std::log(kPi * alpha);
    const double two_pi_k = 2.0 * kPi * k;
    auto g = [&](double t) { return 2.0 * t * ell - phi_minus(t) + two_pi_k; };

    double lo = kPi * k / (-ell + 5.0);
    double hi = kPi * k / std::max(-ell - 5.0, -0.5 * ell);
    int guard = 0;
    while (g(lo) <= 0.0) {
        lo *= 0.5;
        if (++guard > 60) throw NoBracket("no sign change below the eigenvalue estimate");
    }
    guard = 0;
    while (g(hi) >= 0.0) {
        hi *= 1.5;
        if (++guard > 60) throw NoBracket("no sign change above the eigenvalue estimate");
    }

    EigenSolution out;
    while (hi - lo > 1e-8 * hi) {
        const double mid = 0.5 * (lo + hi);
        (g(mid) > 0.0 ? lo : hi) = mid;
        ++out.iterations;
    }
    double t = 0.5 * (lo + hi);
    double gt = g(t);
    for (int it = 0; it < 30; ++it) {
        const double h = 1e-7 * t;
        const double slope = (g(t + h) - g(t - h)) / (2.0 * h);
        double next = t - gt / slope;
        if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
        const double g_next = g(next);
        (g_next > 0.0 ? lo : hi) = next;
        const bool done = std::abs(next - t) <= 4e-16 * t;
        t = next;
        gt = g_next;
        ++out.iterations;
        if (done || gt == 0.0) break;
    }
    out.t = t;
    out.residual = std::abs(gt);
    if (!(out.residual < 1e-12 * std::max(1.0, double(k)))) {
        throw NonConvergence("eigenvalue residual " + std::to_string(out.residual));
    }
    return out;
}

double solve_a_k(double t, int k) {
    if (!(t > 0.0)) throw OutOfRange("t must be positive");
    const double alpha = std::exp((phi_minus(t) - 2.0 * kPi * k) / (2.0 * t)) / kPi;
    if (!(alpha < 1.0)) throw OutOfRange("alpha_k(t) >= 1; k too small for this t");
    return alpha;
}

ResonanceSolution solve_resonance(double t, int k, const ResonanceConfig& cfg) {
    if (k < 1) throw OutOfRange("k must be positive");
    const YPlusBranch branch(t, cfg.scattering);
    const double two_pi_k = 2.0 * kPi * k;

    auto map = [&](double y) {
        const ArgModulus am = branch.at(0.5 - y);
        const double den = two_pi_k - am.A;
        if (!(den > 0.0)) throw NotContracting("2 pi k - A_+ is not positive; k too small");
        return std::pair{2.0 * t / den, t * am.M / den};
    };

    double x, y;
    if (cfg.warm_start) {
        std::tie(x, y) = *cfg.warm_start;
    } else {
        x = 2.0 * t / (two_pi_k - branch.line_argument());
        y = 0.0;
    }

    ResonanceSolution out;
    out.k = k;
    out.t = t;
    double prev_dist = -1.0;
    int polish = 0;
    bool converged = false;
    for (int it = 1; it <= cfg.max_iter; ++it) {
        const auto [xn, yn] = map(y);
        const double dist = std::hypot(xn - x, yn - y);
        x = xn;
        y = yn;
        out.iterations = it;
        if (prev_dist > 1e-13 && dist > 1e-13) {
            const double ratio = dist / prev_dist;
            out.contraction_ratio = std::max(out.contraction_ratio, ratio);
            if (ratio >= 1.0) throw NotContracting("fixed-point ratio " + std::to_string(ratio));
        }
        if (converged) {
            // iterate down to rounding level once the tolerance is met
            if (dist == 0.0 || dist >= prev_dist || ++polish >= 4) break;
        } else if (dist < cfg.abs_tol) {
            converged = true;
        }
        prev_dist = dist;
    }
    if (!converged) throw NonConvergence("resonance fixed point did not converge");
    out.x = x;
    out.y = y;
    out.sigma = 0.5 - y;
    out.alpha = std::exp(-1.0 / x) / kPi;
    return out;
}

ResonanceSolution solve_resonance_at_alpha(double alpha, int k, const ResonanceConfig& cfg) {
    if (!(alpha > 0.0 && alpha < 1.0)) throw OutOfRange("alpha must lie in (0, 1)");
    const double target = std::log(kPi * alpha);
    auto log_pi_alpha = [&](double t) { return -1.0 / solve_resonance(t, k, cfg).x; };

    const double guess = kPi * k / std::abs(std::log(kPi * kPi * alpha));
    double lo = 0.5 * guess, hi = 2.0 * guess;
    int guard = 0;
    while (log_pi_alpha(lo) > target) {
        lo *= 0.5;
        if (++guard > 40) throw NoBracket("cannot bracket t for the requested alpha");
    }
    guard = 0;
    while (log_pi_alpha(hi) < target) {
        hi *= 1.5;
        if (++guard > 40) throw NoBracket("cannot bracket t for the requested alpha");
    }
    for (int it = 0; it < 200 && hi - lo > 2e-16 * hi; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) break;
        (log_pi_alpha(mid) < target ? lo : hi) = mid;
    }
    return solve_resonance(0.5 * (lo + hi), k, cfg);
}

std::vector<CurveSample> trace_curve(CurveKind kind, int k, std::span<const double> t_grid,
                                     const ResonanceConfig& cfg) {
    std::vector<CurveSample> out;
    out.reserve(t_grid.size());
    ResonanceConfig local = cfg;
    for (double t : t_grid) {
        if (kind == CurveKind::Eigenvalue) {
            out.push_back({k, solve_a_k(t, k), 0.5, t});
        } else {
            const ResonanceSolution s = solve_resonance(t, k, local);
            local.warm_start = std::pair{s.x, s.y};
            out.push_back({k, s.alpha, s.sigma, t});
        }
    }
    return out;
}

namespace {

struct TheoremName {
    TheoremId id;
    const char* name;
};

constexpr TheoremName kTheoremNames[] = {
    {TheoremId::EigenSmallAlpha, "eigen-t-small-alpha"},
    {TheoremId::EigenAlphaOfT, "eigen-alpha-of-t"},
    {TheoremId::ResonanceTSmallAlpha, "resonance-t-small-alpha"},
    {TheoremId::ResonanceSigmaSmallAlpha, "resonance-sigma-small-alpha"},
    {TheoremId::ResonanceAlphaOfT, "resonance-alpha-of-t"},
    {TheoremId::ResonanceSigmaOfT, "resonance-sigma-of-t"},
    {TheoremId::TouchingWidth, "touching-width"},
};

}  // namespace

TheoremId parse_theorem_id(const std::string& name) {
    for (const auto& entry : kTheoremNames)
        if (name == entry.name) return entry.id;
    throw UnknownTheorem("unknown asymptotic formula: " + name);
}

std::string theorem_name(TheoremId id) {
    for (const auto& entry : kTheoremNames)
        if (entry.id == id) return entry.name;
    throw UnknownTheorem("unnamed asymptotic formula");
}

std::vector<TheoremId> all_theorems() {
    std::vector<TheoremId> out;
    for (const auto& entry : kTheoremNames) out.push_back(entry.id);
    return out;
}

double asymptotic_eval(TheoremId which, const AsymptoticArgs& a) {
    auto need_alpha = [&] {
        if (!(a.alpha > 0.0 && a.alpha < 1.0)) throw OutOfRange("alpha must lie in (0, 1)");
    };
    auto need_t = [&] {
        if (!(a.t > 0.0)) throw OutOfRange("t must be positive");
    };
    const double pk = kPi * a.k;
    switch (which) {
        case TheoremId::EigenSmallAlpha:
            need_alpha();
            return pk / -std::log(kPi * kPi * a.alpha / 4.0);
        case TheoremId::EigenAlphaOfT:
            need_t();
            return std::exp(phi_minus(a.t) / (2.0 * a.t) + kPi * a.k_I / (2.0 * a.t) - pk / a.t) / kPi;
        case TheoremId::ResonanceTSmallAlpha:
            need_alpha();
            return pk / std::abs(std::log(kPi * kPi * a.alpha));
        case TheoremId::ResonanceSigmaSmallAlpha: {
            need_alpha();
            const double L = std::abs(std::log(kPi * kPi * a.alpha));
            return 0.5 - 2.0 * std::pow(pk * kLog2, 2) / (L * L * L);
        }
        case TheoremId::ResonanceAlphaOfT:
            need_t();
            return std::exp(a_m_of(a.t).A / (2.0 * a.t) - pk / a.t) / kPi;
        case TheoremId::ResonanceSigmaOfT:
            need_t();
            return 0.5 - a.t * m_of(a.t) / (2.0 * pk);
        case TheoremId::TouchingWidth: {
            if (a.ell < 1) throw OutOfRange("ell must be positive");
            const double t_ell = kPi * a.ell / kLog2;
            return a.eta2 / (kPi * kPi) * std::exp(a_m_of(t_ell).A / t_ell - 2.0 * pk / t_ell);
        }
    }
    throw UnknownTheorem("unhandled asymptotic formula");
}

KDiagnostics k_diagnostics(double alpha, Complex beta) {
    if (!(alpha > 0.0 && alpha < 1.0)) throw DegenerateInput("alpha must lie in (0, 1)");
    const double gap = 0.5 - beta.real();
    if (!(gap > 0.0)) throw DegenerateInput("sigma must be below 1/2");
    const double t = beta.imag();
    const double L = std::abs(std::log(kPi * alpha));
    KDiagnostics d;
    d.k1 = std::sqrt(gap * L * L * L / (2.0 * kPi * kPi * kLog2 * kLog2));
    d.k2 = t / (kPi / L + kPi * kLogPi / (L * L) + kPi * kLogPi * kLogPi / (L * L * L));
    d.k3 = 2.0 * kLog2 * kLog2 * t * t * t / (kPi * gap);
    return d;
}

}  // namespace selberg
