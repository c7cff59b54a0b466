#include "selberg/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <map>
#include <numbers>
#include <ostream>
#include <sstream>

#include "selberg/analysis_io.hpp"
#include "selberg/curve_solver.hpp"
#include "selberg/fourier.hpp"
#include "selberg/gamma04.hpp"
#include "selberg/parallel.hpp"
#include "selberg/random.hpp"
#include "selberg/toy_models.hpp"

namespace selberg::cli {

namespace {

constexpr double kPi = std::numbers::pi;

double rel_err(Complex a, Complex b) { return std::abs(a - b) / std::max(std::abs(b), 1e-300); }

double max_identity_error(const Matrix3& a, const Matrix3& b, bool conj_transpose_b) {
    double worst = 0.0;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            Complex s = 0.0;
            for (int l = 0; l < 3; ++l) s += a[i][l] * (conj_transpose_b ? std::conj(b[j][l]) : b[l][j]);
            worst = std::max(worst, std::abs(s - (i == j ? 1.0 : 0.0)));
        }
    return worst;
}

Word random_word(Rng& rng) {
    const auto len = rng.integer(1, 20);
    Word w;
    auto gen = rng.integer(0, 1) == 0 ? Generator::PiInf : Generator::Pi0;
    for (std::int64_t i = 0; i < len; ++i) {
        std::int64_t power = rng.integer(1, 2);
        if (rng.integer(0, 1) == 0) power = -power;
        w.push_back({gen, power});
        gen = gen == Generator::PiInf ? Generator::Pi0 : Generator::PiInf;
    }
    return w;
}

Complex random_strip_point(Rng& rng) {
    for (;;) {
        const Complex b(rng.uniform(0.1, 0.9), rng.uniform(-20.0, 20.0));
        try {
            s0(b);
            s0(1.0 - b);
            return b;
        } catch (const SingularAt&) {
        }
    }
}

}  // namespace

std::vector<CheckRow> verify_identities(unsigned long long seed) {
    std::vector<CheckRow> rows;
    auto add = [&](std::string name, double value, double tol) {
        rows.push_back({std::move(name), value, tol, std::isfinite(value) && value <= tol});
    };
    Rng rng(seed);

    add("gamma_half_sqrt_pi", std::abs(complex_gamma(0.5) - std::sqrt(kPi)), 1e-14);
    add("gamma_five", std::abs(complex_gamma(5.0) - 24.0) / 24.0, 1e-13);
    add("zeta_two", std::abs(zeta(2.0) - kPi * kPi / 6.0), 1e-13);
    add("zeta_four", std::abs(zeta(4.0) - std::pow(kPi, 4) / 90.0), 1e-13);
    add("lambda_three_minus_two", rel_err(lambda_completed(-2.0), lambda_completed(3.0)), 1e-12);

    double worst = 0.0;
    for (int i = 0; i < 200; ++i) {
        Complex s;
        do {
            s = Complex(rng.uniform(-4.0, 5.0), rng.uniform(-50.0, 50.0));
        } while (std::abs(s) < 0.1 || std::abs(s - 1.0) < 0.1);
        worst = std::max(worst, rel_err(lambda_completed(s), lambda_completed(1.0 - s)));
    }
    add("lambda_functional_equation", worst, 1e-10);

    worst = 0.0;
    for (int i = 0; i < 100; ++i) {
        const Complex b(rng.uniform(0.6, 4.0), rng.uniform(-20.0, 20.0));
        const Complex lhs = kPi * std::exp((2.0 - 2.0 * b) * std::log(2.0) + log_gamma(2.0 * b - 1.0) - 2.0 * log_gamma(b));
        const Complex rhs = std::sqrt(kPi) * std::exp(log_gamma(b - 0.5) - log_gamma(b));
        worst = std::max(worst, rel_err(lhs, rhs));
    }
    add("duplication_identity", worst, 1e-12);

    worst = 0.0;
    for (int i = 1; i <= 100; ++i) {
        const Matrix3 m = s0(Complex(0.5, 0.1 * i));
        worst = std::max(worst, max_identity_error(m, m, true));
    }
    add("s0_unitarity_line", worst, 1e-9);

    worst = 0.0;
    double worst_entry = 0.0, worst_split = 0.0;
    for (int i = 0; i < 100; ++i) {
        const Complex b = random_strip_point(rng);
        worst = std::max(worst, max_identity_error(s0(b), s0(1.0 - b), false));
        const Complex closed = std::sqrt(kPi) * std::exp(log_gamma(b - 0.5) - log_gamma(b)) *
                               (1.0 - std::exp((1.0 - 2.0 * b) * std::log(2.0))) /
                               (std::exp(2.0 * b * std::log(2.0)) - 1.0) * zeta(2.0 * b - 1.0) / zeta(2.0 * b);
        const Matrix3 m = s0(b);
        worst_entry = std::max(worst_entry, rel_err(m[0][1], closed));
        const ParitySplit split = parity_split(m);
        worst_split = std::max({worst_split, rel_err(split.c_minus, c_minus(b)), rel_err(split.s_plus[1][1], c_plus(b))});
    }
    add("s0_functional_equation", worst, 1e-9);
    add("entry_0inf_closed_form", worst_entry, 1e-10);
    add("parity_split_closed_forms", worst_split, 1e-10);

    worst = 0.0;
    double worst_mod = 0.0;
    for (int i = 1; i <= 19; ++i) {
        const double t = 0.5 * i;
        worst = std::max(worst, std::abs(y_minus(Complex(0.5, t)) - y_minus_line(t)));
        worst_mod = std::max(worst_mod, std::abs(std::log(std::abs(y_plus(Complex(0.5, t)))) - m_of(t)));
    }
    add("y_minus_two_forms", worst, 1e-9);
    add("y_plus_log_modulus", worst_mod, 1e-9);

    worst = 0.0;
    double worst_refl = 0.0;
    for (double alpha : {0.05, 0.01}) {
        for (int i = 1; i <= 20; ++i) {
            const double t = 0.5 * i;
            worst = std::max(worst, std::abs(std::abs(d00_model(alpha, Complex(0.5, t))) - 1.0));
            const Complex b(0.45 - 0.01 * (i % 5), t);
            worst_refl = std::max(worst_refl, std::abs(std::abs(d00_model(alpha, 1.0 - std::conj(b))) *
                                                           std::abs(d00_model(alpha, b)) -
                                                       1.0));
        }
    }
    add("d00_unimodular_line", worst, 1e-9);
    add("d00_reflection", worst_refl, 1e-9);

    double mismatches = 0.0;
    for (int i = 0; i < 500; ++i) {
        const Word w = random_word(rng);
        if (omega(word_matrix(w)) != pi_inf_exponent_sum(w)) mismatches += 1.0;
        if (word_matrix(decompose(word_matrix(w))) != word_matrix(w)) mismatches += 1.0;
    }
    add("character_word_oracle", mismatches, 0.0);

    mismatches = 0.0;
    for (int i = 0; i < 500; ++i) {
        const Word w = random_word(rng);
        const Gamma04Element g = word_matrix(w);
        if (omega_row(g.a(), -g.b()) != -omega(g)) mismatches += 1.0;
    }
    add("omega_sign_flip", mismatches, 0.0);

    worst = 0.0;
    for (double t : {1.0, 3.0, 7.0})
        worst = std::max(worst, std::abs(phi_minus(t, kDefaultTrackStep) - phi_minus(t, 0.5 * kDefaultTrackStep)));
    add("phi_minus_step_halving", worst, 1e-9);

    const double t1 = kPi / std::log(2.0);
    add("m_zero_first", std::abs(m_of(t1)), 1e-10);
    add("m_zero_second", std::abs(m_of(2.0 * t1)), 1e-10);
    add("entry_0inf_zero_line", std::abs(s0(Complex(0.5, t1))[0][1]) / std::abs(c_plus(Complex(0.5, t1))), 1e-12);

    const TruncationReport series = phi_series(0.0, 2.0);
    const Complex closed = phi_closed_form_alpha0(2.0);
    add("phi_series_alpha0", rel_err(series.partial_sum, closed), series.tail_bound / std::abs(closed));
    const TruncationReport plus = phi_series(0.2, 2.5), minus = phi_series(-0.2, 2.5);
    add("phi_series_evenness", std::abs(plus.partial_sum - minus.partial_sum), 2.0 * plus.tail_bound);
    return rows;
}

std::vector<int> parse_int_range(const std::string& text) {
    std::vector<int> out;
    try {
        const auto dots = text.find("..");
        if (dots != std::string::npos) {
            const int lo = std::stoi(text.substr(0, dots));
            const int hi = std::stoi(text.substr(dots + 2));
            if (hi < lo) throw ConfigError("empty range '" + text + "'");
            for (int k = lo; k <= hi; ++k) out.push_back(k);
            return out;
        }
        std::stringstream ss(text);
        std::string item;
        while (std::getline(ss, item, ',')) out.push_back(std::stoi(item));
    } catch (const std::logic_error&) {
        throw ConfigError("cannot parse integer range '" + text + "'");
    }
    if (out.empty()) throw ConfigError("empty range");
    return out;
}

std::vector<double> parse_real_list(const std::string& text) {
    std::vector<double> out;
    try {
        if (text.find(':') != std::string::npos) {
            std::vector<std::string> parts;
            std::stringstream ss(text);
            std::string item;
            while (std::getline(ss, item, ':')) parts.push_back(item);
            if (parts.size() < 3 || parts.size() > 4) throw ConfigError("range must be lo:hi:n[:log]");
            const double lo = std::stod(parts[0]), hi = std::stod(parts[1]);
            const int n = std::stoi(parts[2]);
            const bool geometric = parts.size() == 4;
            if (geometric && parts[3] != "log") throw ConfigError("range spacing must be 'log'");
            if (n < 1 || (geometric && !(lo > 0.0 && hi > 0.0))) throw ConfigError("bad range '" + text + "'");
            for (int i = 0; i < n; ++i) {
                const double f = n == 1 ? 0.0 : double(i) / double(n - 1);
                out.push_back(geometric ? std::exp(std::log(lo) + f * (std::log(hi) - std::log(lo))) : lo + f * (hi - lo));
            }
            return out;
        }
        std::stringstream ss(text);
        std::string item;
        while (std::getline(ss, item, ',')) out.push_back(std::stod(item));
    } catch (const std::logic_error&) {
        throw ConfigError("cannot parse real list '" + text + "'");
    }
    if (out.empty()) throw ConfigError("empty list");
    return out;
}

namespace {

struct Options {
    std::map<std::string, std::string> values;
    std::string get(const std::string& key) const { return values.at(key); }
    double real(const std::string& key) const {
        try {
            return std::stod(values.at(key));
        } catch (const std::logic_error&) {
            throw ConfigError("option --" + key + " expects a number");
        }
    }
    Complex complex(const std::string& key) const {
        const auto v = parse_real_list(values.at(key));
        if (v.size() > 2) throw ConfigError("option --" + key + " expects re[,im]");
        return {v[0], v.size() == 2 ? v[1] : 0.0};
    }
};

const std::map<std::string, std::map<std::string, std::string>>& command_defaults() {
    static const std::map<std::string, std::map<std::string, std::string>> d = {
        {"verify-identities", {}},
        {"trace-eigen", {{"k", "1..5"}, {"alpha", "1e-6"}, {"t", ""}}},
        {"trace-resonance", {{"k", "20..22"}, {"t", "1:9:17"}, {"alpha", ""}}},
        {"eval-asymptotics", {{"k", "1..3"}, {"alpha", "1e-6,1e-9,1e-12"}, {"t", "3"}, {"formula", "all"}, {"eta2", "0"}}},
        {"fit-limits", {{"k", "1..3"}, {"alpha", "1e-60:1e-8:60:log"}}},
        {"phi-series", {{"alpha", "0,0.1,0.2"}, {"beta", "2"}, {"cmax", "2000"}}},
        {"toy-avoided", {{"k", "15..17"}, {"t0", "5"}, {"p2", "1,1"}}},
        {"toy-loop",
         {{"k", "10..16"}, {"t0", "5.5"}, {"rinf2", "0.8"}, {"radius", "0.5"}, {"p2", "-0.35,0.75"}, {"phase", "0.7"}}},
    };
    return d;
}

class Writer {
public:
    explicit Writer(std::string dir) : dir_(std::move(dir)) { std::filesystem::create_directories(dir_); }
    std::ofstream open(const std::string& name) const {
        std::ofstream f(std::filesystem::path(dir_) / name);
        if (!f) throw ConfigError("cannot write into " + dir_);
        return f;
    }
    const std::string& dir() const { return dir_; }

private:
    std::string dir_;
};

int write_report(const Writer& w, const std::vector<CheckRow>& rows, std::ostream& out) {
    auto f = w.open("report.csv");
    f << "check_name,value,tolerance,pass\n";
    bool all = true;
    for (const auto& r : rows) {
        f << r.name << ',' << format_double(r.value) << ',' << format_double(r.tolerance) << ','
          << (r.pass ? "pass" : "fail") << '\n';
        out << (r.pass ? "pass  " : "FAIL  ") << r.name << "  " << format_double(r.value) << " (tol "
            << format_double(r.tolerance) << ")\n";
        all = all && r.pass;
    }
    return all ? kPass : kCheckFailed;
}

int cmd_trace_eigen(const Options& o, const Writer& w, std::ostream& out) {
    const auto ks = parse_int_range(o.get("k"));
    std::vector<CurveRecord> records;
    if (!o.get("t").empty()) {
        const auto ts = parse_real_list(o.get("t"));
        for (int k : ks)
            for (double t : ts) {
                try {
                    records.push_back({"eigen_k" + std::to_string(k), k, solve_a_k(t, k), 0.5, t});
                } catch (const OutOfRange&) {
                }
            }
    } else {
        const auto alphas = parse_real_list(o.get("alpha"));
        std::vector<std::pair<int, double>> jobs;
        for (int k : ks)
            for (double a : alphas) jobs.emplace_back(k, a);
        const auto ts = parallel_map<double>(jobs.size(), [&](std::size_t i) { return solve_tau_k(jobs[i].second, jobs[i].first); });
        for (std::size_t i = 0; i < jobs.size(); ++i)
            records.push_back({"eigen_k" + std::to_string(jobs[i].first), jobs[i].first, jobs[i].second, 0.5, ts[i]});
    }
    auto f = w.open("eigen_curves.csv");
    write_curve_csv(f, records);
    out << records.size() << " eigenvalue samples written\n";
    return kPass;
}

int cmd_trace_resonance(const Options& o, const Writer& w, std::ostream& out) {
    const auto ks = parse_int_range(o.get("k"));
    std::vector<CurveRecord> records;
    if (!o.get("alpha").empty()) {
        const auto alphas = parse_real_list(o.get("alpha"));
        std::vector<std::pair<int, double>> jobs;
        for (int k : ks)
            for (double a : alphas) jobs.emplace_back(k, a);
        const auto sols = parallel_map<ResonanceSolution>(
            jobs.size(), [&](std::size_t i) { return solve_resonance_at_alpha(jobs[i].second, jobs[i].first); });
        for (const auto& s : sols) records.push_back({"resonance_k" + std::to_string(s.k), s.k, s.alpha, s.sigma, s.t});
    } else {
        const auto ts = parse_real_list(o.get("t"));
        const auto curves = parallel_map<std::vector<CurveSample>>(
            ks.size(), [&](std::size_t i) { return trace_curve(CurveKind::Resonance, ks[i], ts); });
        for (const auto& curve : curves)
            for (const auto& s : curve) records.push_back({"resonance_k" + std::to_string(s.k), s.k, s.alpha, s.sigma, s.t});
    }
    auto f = w.open("resonance_curves.csv");
    write_curve_csv(f, records);
    out << records.size() << " resonance samples written\n";
    return kPass;
}

int cmd_eval_asymptotics(const Options& o, const Writer& w, std::ostream& out) {
    std::vector<TheoremId> ids;
    if (o.get("formula") == "all") {
        ids = all_theorems();
    } else {
        ids.push_back(parse_theorem_id(o.get("formula")));
    }
    const auto ks = parse_int_range(o.get("k"));
    const auto alphas = parse_real_list(o.get("alpha"));
    const auto ts = parse_real_list(o.get("t"));
    const double eta2 = o.real("eta2");
    auto f = w.open("asymptotics.csv");
    f << "formula,k,alpha,t,asymptotic,model\n";
    std::size_t rows = 0;
    for (TheoremId id : ids) {
        const bool by_alpha = id == TheoremId::EigenSmallAlpha || id == TheoremId::ResonanceTSmallAlpha ||
                              id == TheoremId::ResonanceSigmaSmallAlpha;
        for (int k : ks) {
            const std::vector<double>& grid = by_alpha ? alphas : ts;
            for (double x : grid) {
                AsymptoticArgs args;
                args.k = k;
                args.eta2 = eta2;
                (by_alpha ? args.alpha : args.t) = x;
                const double value = asymptotic_eval(id, args);
                std::string model;
                try {
                    switch (id) {
                        case TheoremId::EigenSmallAlpha: model = format_double(solve_tau_k(x, k)); break;
                        case TheoremId::EigenAlphaOfT: model = format_double(solve_a_k(x, k)); break;
                        case TheoremId::ResonanceTSmallAlpha: model = format_double(solve_resonance_at_alpha(x, k).t); break;
                        case TheoremId::ResonanceSigmaSmallAlpha:
                            model = format_double(solve_resonance_at_alpha(x, k).sigma);
                            break;
                        case TheoremId::ResonanceAlphaOfT: model = format_double(solve_resonance(x, k).alpha); break;
                        case TheoremId::ResonanceSigmaOfT: model = format_double(solve_resonance(x, k).sigma); break;
                        case TheoremId::TouchingWidth: break;
                    }
                } catch (const Error&) {
                    model.clear();
                }
                f << theorem_name(id) << ',' << k << ',' << (by_alpha ? format_double(x) : "") << ','
                  << (by_alpha ? "" : format_double(x)) << ',' << format_double(value) << ',' << model << '\n';
                ++rows;
            }
        }
    }
    out << rows << " asymptotic rows written\n";
    return kPass;
}

int cmd_fit_limits(const Options& o, const Writer& w, std::ostream& out) {
    const auto ks = parse_int_range(o.get("k"));
    const auto alphas = parse_real_list(o.get("alpha"));
    struct Fits {
        int k;
        FitResult f1, f2, f3;
    };
    const auto fits = parallel_map<Fits>(ks.size(), [&](std::size_t i) {
        const int k = ks[i];
        std::vector<double> ts;
        for (double a : alphas) ts.push_back(kPi * k / std::abs(std::log(kPi * kPi * a)));
        std::sort(ts.begin(), ts.end());
        std::vector<FitSample> s1, s2, s3;
        for (const auto& s : trace_curve(CurveKind::Resonance, k, ts)) {
            const KDiagnostics d = k_diagnostics(s.alpha, Complex(s.sigma, s.t));
            s1.push_back({s.alpha, d.k1});
            s2.push_back({s.alpha, d.k2});
            s3.push_back({s.alpha, d.k3});
        }
        return Fits{k, fit_limit(s1), fit_limit(s2), fit_limit(s3)};
    });
    auto f = w.open("fits.csv");
    f << "k,diagnostic,c0,condition,rms_residual\n";
    for (const auto& fit : fits) {
        const std::pair<const char*, const FitResult*> named[] = {{"k1", &fit.f1}, {"k2", &fit.f2}, {"k3", &fit.f3}};
        for (const auto& [name, r] : named) {
            f << fit.k << ',' << name << ',' << format_double(r->coefficients[0]) << ',' << format_double(r->condition)
              << ',' << format_double(r->rms_residual) << '\n';
            out << "k=" << fit.k << ' ' << name << " limit " << format_double(r->coefficients[0]) << '\n';
        }
    }
    return kPass;
}

int cmd_phi_series(const Options& o, const Writer& w, std::ostream& out) {
    const auto alphas = parse_real_list(o.get("alpha"));
    const Complex beta = o.complex("beta");
    const int c_max = int(o.real("cmax"));
    const auto reps = parallel_map<TruncationReport>(alphas.size(), [&](std::size_t i) { return phi_series(alphas[i], beta, c_max); });
    auto f = w.open("phi_series.csv");
    f << "alpha,re,im,tail_bound\n";
    std::vector<CheckRow> rows;
    for (std::size_t i = 0; i < alphas.size(); ++i) {
        f << format_double(alphas[i]) << ',' << format_double(reps[i].partial_sum.real()) << ','
          << format_double(reps[i].partial_sum.imag()) << ',' << format_double(reps[i].tail_bound) << '\n';
        if (alphas[i] == 0.0) {
            const Complex closed = phi_closed_form_alpha0(beta);
            const double tol = reps[i].tail_bound / std::abs(closed);
            const double err = std::abs(reps[i].partial_sum - closed) / std::abs(closed);
            rows.push_back({"alpha0_closed_form", err, tol, err <= tol});
        } else if (beta.imag() == 0.0) {
            const double im = std::abs(reps[i].partial_sum.imag());
            rows.push_back({"evenness_alpha_" + format_double(alphas[i]), im, reps[i].tail_bound, im <= reps[i].tail_bound});
        }
    }
    return write_report(w, rows, out);
}

int cmd_toy_avoided(const Options& o, const Writer& w, std::ostream& out) {
    const AvoidedCrossingModel model(o.real("t0"), o.complex("p2"));
    const auto ks = parse_int_range(o.get("k"));
    const auto res = parallel_map<AvoidedCrossingResult>(ks.size(), [&](std::size_t i) { return avoided_crossing_slope(model, ks[i]); });
    auto f = w.open("toy_avoided.csv");
    f << "k,alpha_k,t_k,slope,predicted_slope,steepness_ratio\n";
    std::vector<CheckRow> rows;
    for (const auto& r : res) {
        f << r.k << ',' << format_double(r.alpha_k) << ',' << format_double(r.t_k) << ',' << format_double(r.slope) << ','
          << format_double(r.predicted_slope) << ',' << format_double(r.steepness_ratio) << '\n';
        const double rel = std::abs(r.slope / r.predicted_slope - 1.0);
        rows.push_back({"slope_k" + std::to_string(r.k), rel, 0.05, rel <= 0.05});
        rows.push_back({"steepness_k" + std::to_string(r.k), r.steepness_ratio, 1e-2, r.steepness_ratio <= 1e-2});
    }
    return write_report(w, rows, out);
}

int cmd_toy_loop(const Options& o, const Writer& w, std::ostream& out) {
    const LoopModel model =
        LoopModel::tangent_circle(o.real("t0"), o.real("rinf2"), o.real("radius"), o.complex("p2"), o.real("phase"));
    const auto ks = parse_int_range(o.get("k"));
    const auto alphas = loop_touchings(model, ks);
    auto f = w.open("toy_loop.csv");
    f << "k,alpha_k,re_z_over_alpha2,im_z_over_alpha2\n";
    std::vector<CheckRow> rows;
    double worst_touch = 0.0, worst_ratio = 0.0, worst_between = -1e300;
    for (std::size_t i = 0; i < alphas.size(); ++i) {
        const double a2 = alphas[i] * alphas[i];
        const LoopZeta lz = loop_zeta(model, alphas[i]);
        f << ks[i] << ',' << format_double(alphas[i]) << ',' << format_double(lz.z.real() / a2) << ','
          << format_double(lz.z.imag() / a2) << '\n';
        worst_touch = std::max(worst_touch, std::abs(lz.z.real()) / a2);
        if (i + 1 < alphas.size() && ks[i + 1] == ks[i] + 1) {
            worst_ratio = std::max(worst_ratio, std::abs(alphas[i + 1] / alphas[i] / std::exp(-kPi / model.t0()) - 1.0));
            const double mid = std::sqrt(alphas[i] * alphas[i + 1]);
            worst_between = std::max(worst_between, loop_zeta(model, mid).z.real() / (mid * mid));
        }
    }
    rows.push_back({"touching_real_part", worst_touch, 1e-8, worst_touch <= 1e-8});
    rows.push_back({"touching_ratio", worst_ratio, 1e-3, worst_ratio <= 1e-3});
    if (alphas.size() > 1) rows.push_back({"between_touchings_left", worst_between, 0.0, worst_between < 0.0});
    const double eps = loop_validity_radius(model);
    rows.push_back({"validity_radius_covers_touchings", alphas.empty() ? 0.0 : *std::max_element(alphas.begin(), alphas.end()),
                    eps, alphas.empty() || *std::max_element(alphas.begin(), alphas.end()) <= eps});
    return write_report(w, rows, out);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Numerical laboratory for scattering resonances of Gamma0(4) with a character"};
    app.require_subcommand(1);
    std::string config_path, output_dir = "selberg_out";
    unsigned long long seed = 0;
    std::map<std::string, std::string> cli_values;

    for (const auto& [name, defaults] : command_defaults()) {
        auto* sub = app.add_subcommand(name);
        sub->add_option("--config", config_path, "JSON file with option values");
        sub->add_option("--output-dir", output_dir, "directory for CSV outputs");
        sub->add_option("--seed", seed, "random seed");
        for (const auto& [key, value] : defaults) {
            sub->add_option("--" + key, cli_values[name + "/" + key], "default: " + (value.empty() ? "unset" : value));
        }
    }

    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
        app.parse(rev);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kPass;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << '\n';
        return kUsage;
    }

    CLI::App* sub = app.get_subcommands().front();
    const std::string command = sub->get_name();
    try {
        Options opts;
        opts.values = command_defaults().at(command);
        if (!config_path.empty()) {
            std::ifstream cf(config_path);
            if (!cf) throw ConfigError("cannot open config " + config_path);
            nlohmann::json j;
            try {
                cf >> j;
            } catch (const nlohmann::json::exception& e) {
                throw ConfigError(std::string("config is not valid JSON: ") + e.what());
            }
            for (const auto& [key, value] : j.items()) {
                const std::string text = value.is_string() ? value.get<std::string>() : value.dump();
                if (key == "output-dir") {
                    if (sub->count("--output-dir") == 0) output_dir = text;
                } else if (key == "seed") {
                    if (sub->count("--seed") == 0) seed = std::stoull(text);
                } else if (opts.values.count(key)) {
                    opts.values[key] = text;
                } else {
                    throw ConfigError("unknown config key '" + key + "' for " + command);
                }
            }
        }
        for (auto& [key, value] : opts.values)
            if (sub->count("--" + key) > 0) value = cli_values[command + "/" + key];

        const Writer writer(output_dir);
        if (command == "verify-identities") return write_report(writer, verify_identities(seed), out);
        if (command == "trace-eigen") return cmd_trace_eigen(opts, writer, out);
        if (command == "trace-resonance") return cmd_trace_resonance(opts, writer, out);
        if (command == "eval-asymptotics") return cmd_eval_asymptotics(opts, writer, out);
        if (command == "fit-limits") return cmd_fit_limits(opts, writer, out);
        if (command == "phi-series") return cmd_phi_series(opts, writer, out);
        if (command == "toy-avoided") return cmd_toy_avoided(opts, writer, out);
        if (command == "toy-loop") return cmd_toy_loop(opts, writer, out);
        throw ConfigError("unknown command " + command);
    } catch (const ConfigError& e) {
        err << "config error: " << e.what() << '\n';
        return kUsage;
    } catch (const UnknownTheorem& e) {
        err << "config error: " << e.what() << '\n';
        return kUsage;
    } catch (const Error& e) {
        err << "check failed: " << e.what() << '\n';
        return kCheckFailed;
    }
}

}  // namespace selberg::cli
