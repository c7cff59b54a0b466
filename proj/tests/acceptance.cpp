#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <numbers>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "selberg/analysis_io.hpp"
#include "selberg/argument.hpp"
#include "selberg/curve_solver.hpp"
#include "selberg/errors.hpp"
#include "selberg/fourier.hpp"
#include "selberg/gamma04.hpp"
#include "selberg/random.hpp"
#include "selberg/scattering.hpp"
#include "selberg/toy_models.hpp"

using namespace selberg;
using std::numbers::pi;
namespace fs = std::filesystem;

namespace {

struct Outcome {
    bool pass;
    std::string detail;
};

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3g", v);
    return buf;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

double unit_error(const Matrix3& a, const Matrix3& b, bool adjoint) {
    double worst = 0.0;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            Complex s = 0.0;
            for (int l = 0; l < 3; ++l) s += a[i][l] * (adjoint ? std::conj(b[j][l]) : b[l][j]);
            worst = std::max(worst, std::abs(s - (i == j ? 1.0 : 0.0)));
        }
    return worst;
}

Complex random_strip_point(Rng& rng) {
    for (;;) {
        const Complex b(rng.uniform(0.1, 0.9), rng.uniform(0.1, 10.0));
        try {
            s0(b);
            s0(1.0 - b);
            return b;
        } catch (const SingularAt&) {
        }
    }
}

Outcome scattering_identities() {
    const auto t0 = std::chrono::steady_clock::now();
    double unit = 0.0, fe = 0.0;
    for (int i = 1; i <= 100; ++i) {
        const Matrix3 m = s0({0.5, 0.1 * i});
        unit = std::max(unit, unit_error(m, m, true));
    }
    Rng rng(101);
    for (int i = 0; i < 100; ++i) {
        const Complex b = random_strip_point(rng);
        fe = std::max(fe, unit_error(s0(b), s0(1.0 - b), false));
    }
    const double secs = seconds_since(t0);
    return {unit < 1e-9 && fe < 1e-9 && secs < 5.0,
            "unitarity " + fmt(unit) + ", functional equation " + fmt(fe) + ", " + fmt(secs) + " s"};
}

Outcome closed_forms() {
    Rng rng(102);
    double dup = 0.0, entry = 0.0, ym = 0.0;
    for (int i = 0; i < 100; ++i) {
        const Complex b(rng.uniform(0.6, 4.0), rng.uniform(-20.0, 20.0));
        const Complex lhs = pi * std::exp((2.0 - 2.0 * b) * std::log(2.0) + log_gamma(2.0 * b - 1.0) - 2.0 * log_gamma(b));
        const Complex rhs = std::sqrt(pi) * std::exp(log_gamma(b - 0.5) - log_gamma(b));
        dup = std::max(dup, std::abs(lhs - rhs) / std::abs(rhs));
    }
    for (int i = 0; i < 100; ++i) {
        const Complex b = random_strip_point(rng);
        const Complex closed = std::sqrt(pi) * std::exp(log_gamma(b - 0.5) - log_gamma(b)) *
                               (1.0 - std::pow(Complex(2.0), 1.0 - 2.0 * b)) / (std::pow(Complex(2.0), 2.0 * b) - 1.0) *
                               zeta(2.0 * b - 1.0) / zeta(2.0 * b);
        entry = std::max(entry, std::abs(s0(b)[0][1] - closed) / std::abs(closed));
    }
    for (int i = 1; i <= 19; ++i) {
        const double t = 0.5 * i;
        const Complex it(0.0, t);
        const Complex printed = std::exp(2.0 * it * std::log(pi)) * (std::pow(Complex(2.0), 1.0 + 2.0 * it) - 1.0) /
                                (std::pow(Complex(2.0), 1.0 - 2.0 * it) - 1.0) * zeta(-2.0 * it) / zeta(2.0 * it);
        ym = std::max(ym, std::abs(y_minus({0.5, t}) - printed));
    }
    return {dup < 1e-10 && entry < 1e-10 && ym < 1e-9,
            "duplication " + fmt(dup) + ", (0,inf) entry " + fmt(entry) + ", Y- forms " + fmt(ym)};
}

Outcome character_oracle() {
    const auto t0 = std::chrono::steady_clock::now();
    Rng rng(103);
    int mismatch = 0, bound = 0;
    for (int i = 0; i < 500; ++i) {
        const auto len = rng.integer(1, 20);
        Word w;
        auto gen = rng.integer(0, 1) == 0 ? Generator::PiInf : Generator::Pi0;
        for (std::int64_t j = 0; j < len; ++j) {
            std::int64_t power = rng.integer(1, 3);
            if (rng.integer(0, 1) == 0) power = -power;
            w.push_back({gen, power});
            gen = gen == Generator::PiInf ? Generator::Pi0 : Generator::PiInf;
        }
        const Gamma04Element g = word_matrix(w);
        if (omega(g) != pi_inf_exponent_sum(w)) ++mismatch;
        if (std::abs(omega(g)) > std::abs(g.b())) ++bound;
    }
    const double secs = seconds_since(t0);
    return {mismatch == 0 && bound == 0 && secs < 2.0, std::to_string(mismatch) + " exponent-sum mismatches, " +
                                                           std::to_string(bound) + " bound violations, " + fmt(secs) + " s"};
}

Outcome eigen_convergence() {
    bool ok = true;
    std::string detail;
    for (int k = 1; k <= 3; ++k) {
        double prev = 1e300;
        for (double alpha : {1e-3, 1e-6, 1e-9, 1e-12}) {
            const double r = std::abs(solve_tau_k(alpha, k) * -std::log(pi * pi * alpha / 4.0) / pi - k);
            ok = ok && r < prev;
            prev = r;
        }
        ok = ok && prev < 0.05;
        detail += "k=" + std::to_string(k) + " residual " + fmt(prev) + (k < 3 ? ", " : "");
    }
    return {ok, detail};
}

Outcome resonance_small_alpha() {
    bool ok = true;
    std::string detail;
    const double decades[] = {1e-4, 1e-6, 1e-8, 1e-10, 1e-12};
    for (int k = 1; k <= 3; ++k) {
        double prev1 = 1e300, prev3 = 1e300;
        bool monotone = true;
        KDiagnostics last{};
        for (double alpha : decades) {
            const ResonanceSolution r = solve_resonance_at_alpha(alpha, k);
            ok = ok && r.sigma < 0.5;
            last = k_diagnostics(r.alpha, r.beta());
            const double e1 = std::abs(last.k1 - k), e3 = std::abs(last.k3 - k);
            monotone = monotone && e1 < prev1 && e3 < prev3;
            prev1 = e1;
            prev3 = e3;
        }
        std::vector<double> ts;
        for (int i = 0; i <= 20; ++i) ts.push_back(pi * k / std::abs(std::log(pi * pi * 1e-4)) * (1.0 - 0.6 * i / 20.0));
        std::sort(ts.begin(), ts.end());
        for (const auto& s : trace_curve(CurveKind::Resonance, k, ts)) ok = ok && s.sigma < 0.5;
        ok = ok && monotone && prev1 < 0.1 && prev3 < 0.1;
        detail += "k=" + std::to_string(k) + ": k1 " + fmt(last.k1) + ", k3 " + fmt(last.k3) +
                  (monotone ? "" : ", not monotone") + (k < 3 ? "; " : "");
    }
    return {ok, detail};
}

Outcome resonance_large_k() {
    bool ok = true;
    double worst_a = 0.0, worst_s = 0.0;
    for (double t : {2.5, 3.0, 4.0}) {
        double prev_a = 1e300, prev_s = 1e300;
        for (int k : {20, 40, 80}) {
            const ResonanceSolution r = solve_resonance(t, k);
            AsymptoticArgs a;
            a.t = t;
            a.k = k;
            const double ea = std::abs(r.alpha / asymptotic_eval(TheoremId::ResonanceAlphaOfT, a) - 1.0);
            const double es = std::abs((0.5 - r.sigma) / (0.5 - asymptotic_eval(TheoremId::ResonanceSigmaOfT, a)) - 1.0);
            ok = ok && ea < 2.0 / k && es < 5.0 / k && ea < prev_a && es < prev_s;
            worst_a = std::max(worst_a, ea * k);
            worst_s = std::max(worst_s, es * k);
            prev_a = ea;
            prev_s = es;
        }
    }
    return {ok, "max k*alpha error " + fmt(worst_a) + " (limit 2), max k*sigma error " + fmt(worst_s) + " (limit 5)"};
}

Outcome touching() {
    const double t1 = pi / std::log(2.0);
    double worst = 0.0;
    for (int k : {40, 60}) worst = std::max(worst, std::abs(solve_resonance(t1, k).sigma - 0.5));
    const double m = std::max(std::abs(m_of(t1)), std::abs(m_of(2.0 * t1)));
    return {worst < 1e-8 && m < 1e-10, "|sigma-1/2| " + fmt(worst) + ", |M(t_l)| " + fmt(m)};
}

Outcome dirichlet_series() {
    const TruncationReport r0 = phi_series(0.0, 2.0, 2000);
    const Complex closed = phi_closed_form_alpha0(2.0);
    const double rel = std::abs(r0.partial_sum - closed) / std::abs(closed);
    double even = 0.0;
    bool even_ok = true;
    for (double alpha : {0.05, 0.1, 0.2}) {
        const TruncationReport a = phi_series(alpha, 2.0), b = phi_series(-alpha, 2.0);
        const double d = std::abs(a.partial_sum - b.partial_sum);
        even = std::max(even, d);
        even_ok = even_ok && d < 2.0 * a.tail_bound;
    }
    Rng rng(108);
    int rep_fail = 0;
    for (int i = 0; i < 100; ++i) {
        const std::int64_t p = 2 * rng.integer(1, 200) + 1;
        std::int64_t q = rng.integer(1, p - 1);
        while (std::gcd(q, p) != 1) q = rng.integer(1, p - 1);
        std::int64_t s = 1;
        while ((4 * q * s) % p != 1) ++s;
        const double alpha = rng.uniform(-0.5, 0.5);
        const Complex v = series_term(alpha, p, q, s).value;
        if (std::abs(series_term(alpha, p, q, s + p).value - v) > 1e-14) ++rep_fail;
        if (std::abs(series_term(alpha, p, q + p, s).value - v) > 1e-14) ++rep_fail;
    }
    const double deriv = std::abs(phi_alpha_derivative_check(2.5, 1e-3).first_difference);
    return {rel < 1e-6 && even_ok && rep_fail == 0 && deriv < 1e-6,
            "alpha=0 rel " + fmt(rel) + ", evenness " + fmt(even) + ", representative failures " + std::to_string(rep_fail) +
                ", dPhi/dalpha " + fmt(deriv)};
}

Outcome toy_models() {
    const LoopModel m = LoopModel::tangent_circle(5.5, 0.8, 0.5, {-0.35, 0.75}, 0.7);
    std::vector<int> ks;
    for (int k = 10; k <= 16; ++k) ks.push_back(k);
    const auto ak = loop_touchings(m, ks);
    double ratio = 0.0;
    for (std::size_t i = 1; i < ak.size(); ++i) ratio = std::max(ratio, std::abs(ak[i] / ak[i - 1] / std::exp(-pi / m.t0()) - 1.0));
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    const double n = double(ak.size());
    for (double a : ak) {
        const double x = std::log(a), y = std::log(std::abs(loop_zeta(m, a).z));
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
    }
    const double exponent = (n * sxy - sx * sy) / (n * sxx - sx * sx);
    const AvoidedCrossingResult av = avoided_crossing_slope(AvoidedCrossingModel(5.0, {1.0, 1.0}), 16);
    const double slope_err = std::abs(av.slope / av.predicted_slope - 1.0);
    return {ratio < 1e-3 && std::abs(exponent - 2.0) < 0.05 && av.alpha_k < 1e-4 && slope_err < 0.05,
            "touching ratio " + fmt(ratio) + ", exponent " + fmt(exponent) + ", slope error " + fmt(slope_err) +
                " at alpha_k " + fmt(av.alpha_k)};
}

Outcome pipeline(const std::string& cli) {
    const double c[6] = {0.75, 2.0, -5.0, 3.0, 1.0, -2.0};
    std::vector<FitSample> samples;
    for (int i = 0; i < 500; ++i) {
        const double alpha = std::exp(std::log(1e-60) + (std::log(1e-3) - std::log(1e-60)) * i / 499.0);
        const double x = 1.0 / std::abs(std::log(alpha));
        double v = 0.0, p = 1.0;
        for (double ci : c) {
            v += ci * p;
            p *= x;
        }
        samples.push_back({alpha, v});
    }
    const double fit_err = std::abs(fit_limit(samples).coefficients[0] - c[0]);
    std::vector<double> x;
    for (int k = 1; k <= 19; ++k) x.push_back(std::log(solve_a_k(3.0, k) * pi) + pi * k / 3.0 - phi_minus(3.0) / 6.0);
    const double proj = std::abs(project_kI(x));

    bool same = false;
    double secs = 0.0;
    int code = -1;
    if (!cli.empty()) {
        const fs::path base = fs::temp_directory_path() / "selberg_acceptance";
        fs::remove_all(base);
        auto read = [](const fs::path& p) {
            std::ifstream f(p);
            std::stringstream ss;
            ss << f.rdbuf();
            return ss.str();
        };
        const auto t0 = std::chrono::steady_clock::now();
        const int c1 = std::system(("\"" + cli + "\" verify-identities --output-dir \"" + (base / "a").string() + "\" > /dev/null").c_str());
        const int c2 = std::system(("\"" + cli + "\" verify-identities --output-dir \"" + (base / "b").string() + "\" > /dev/null").c_str());
        secs = seconds_since(t0);
        code = c1 == 0 && c2 == 0 ? 0 : 1;
        const std::string ra = read(base / "a" / "report.csv");
        same = !ra.empty() && ra == read(base / "b" / "report.csv");
        fs::remove_all(base);
    }
    return {fit_err < 1e-6 && proj < 1e-8 && code == 0 && same && secs < 60.0,
            "c0 error " + fmt(fit_err) + ", projection " + fmt(proj) + ", CLI " + (code == 0 ? "passed" : "failed") +
                (same ? ", byte-identical" : ", outputs differ") + ", " + fmt(secs) + " s"};
}

}  // namespace

int main(int argc, char** argv) {
    const std::string cli = argc > 1 ? argv[1] : "";
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
        {"scattering identities", scattering_identities},
        {"closed-form cross-checks", closed_forms},
        {"character oracle", character_oracle},
        {"eigenvalue small-alpha convergence", eigen_convergence},
        {"resonance small-alpha convergence", resonance_small_alpha},
        {"resonance large-k expansions", resonance_large_k},
        {"touching points", touching},
        {"Dirichlet series", dirichlet_series},
        {"toy models", toy_models},
        {"analysis pipeline", [&] { return pipeline(cli); }},
    };
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Outcome o;
        try {
            o = criteria[i].second();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        if (!o.pass) ++failed;
        std::printf("criterion %2zu %s: %s (%s)\n", i + 1, o.pass ? "PASS" : "FAIL", criteria[i].first.c_str(), o.detail.c_str());
        std::fflush(stdout);
    }
    std::printf("%d of %zu criteria passed\n", int(criteria.size()) - failed, criteria.size());
    return failed == 0 ? 0 : 1;
}
