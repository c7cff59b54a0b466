#include "selberg/analysis_io.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <istream>
#include <map>
#include <ostream>

namespace selberg {

double project_kI(std::span<const double> values) {
    if (values.empty()) throw EmptyInput("no values to project");
    const double log_n = std::log(double(values.size()));
    double num = 0.0, den = 0.0;
    for (std::size_t i = 0; i < values.size(); ++i) {
        const double w = std::exp(20.0 * (std::log(double(i + 1)) - log_n));
        num += w * values[i];
        den += w;
    }
    return num / den;
}

FitResult fit_limit(std::span<const FitSample> samples, int n_terms, double max_condition) {
    if (n_terms < 1) throw IllConditioned("need at least one basis function");
    if (samples.size() < std::size_t(std::max(n_terms, 6))) throw IllConditioned("too few samples for the fit");
    const Eigen::Index m = Eigen::Index(samples.size());
    Eigen::MatrixXd a(m, n_terms);
    Eigen::VectorXd b(m);
    for (Eigen::Index i = 0; i < m; ++i) {
        const auto& s = samples[std::size_t(i)];
        if (!(s.alpha > 0.0 && s.alpha < 1.0)) throw IllConditioned("sample alpha outside (0, 1)");
        const double x = 1.0 / std::abs(std::log(s.alpha));
        double p = 1.0;
        for (int j = 0; j < n_terms; ++j, p *= x) a(i, j) = p;
        b(i) = s.value;
    }
    const Eigen::VectorXd scale = a.colwise().norm().transpose();
    for (int j = 0; j < n_terms; ++j) a.col(j) /= scale(j);

    Eigen::JacobiSVD<Eigen::MatrixXd> svd(a, Eigen::ComputeThinU | Eigen::ComputeThinV);
    const auto& sv = svd.singularValues();
    FitResult out;
    out.condition = sv(0) / sv(sv.size() - 1);
    if (!(out.condition <= max_condition)) throw IllConditioned("condition number " + std::to_string(out.condition));
    const Eigen::VectorXd coef = svd.solve(b);
    out.rms_residual = std::sqrt((a * coef - b).squaredNorm() / double(m));
    out.coefficients.resize(std::size_t(n_terms));
    for (int j = 0; j < n_terms; ++j) out.coefficients[std::size_t(j)] = coef(j) / scale(j);
    return out;
}

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

void sort_records(std::vector<CurveRecord>& records) {
    std::stable_sort(records.begin(), records.end(), [](const CurveRecord& x, const CurveRecord& y) {
        if (x.curve_id != y.curve_id) return x.curve_id < y.curve_id;
        return x.alpha > y.alpha;
    });
}

void write_curve_csv(std::ostream& out, std::vector<CurveRecord> records) {
    sort_records(records);
    out << kCurveHeader << '\n';
    for (const auto& r : records) {
        out << r.curve_id << ',' << (r.k ? std::to_string(*r.k) : std::string()) << ',' << format_double(r.alpha)
            << ',' << format_double(r.sigma) << ',' << format_double(r.t) << '\n';
    }
}

namespace {

std::vector<std::string> split_commas(const std::string& line) {
    std::vector<std::string> out(1);
    for (char ch : line) {
        if (ch == ',') {
            out.emplace_back();
        } else {
            out.back() += ch;
        }
    }
    return out;
}

double parse_real(const std::string& s, std::size_t line, const char* field) {
    double v = 0.0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) {
        throw ParseError(line, std::string("bad ") + field + " '" + s + "'");
    }
    return v;
}

}  // namespace

std::vector<CurveRecord> read_curve_csv(std::istream& in) {
    std::string line;
    std::size_t line_no = 1;
    if (!std::getline(in, line)) throw ParseError(1, "missing header");
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line != kCurveHeader) throw ParseError(1, "header must be '" + std::string(kCurveHeader) + "'");
    std::vector<CurveRecord> out;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        const auto f = split_commas(line);
        if (f.size() != 5) throw ParseError(line_no, "expected 5 fields, got " + std::to_string(f.size()));
        if (f[0].empty()) throw ParseError(line_no, "empty curve_id");
        CurveRecord r;
        r.curve_id = f[0];
        if (!f[1].empty()) {
            int k = 0;
            const auto [ptr, ec] = std::from_chars(f[1].data(), f[1].data() + f[1].size(), k);
            if (ec != std::errc() || ptr != f[1].data() + f[1].size()) throw ParseError(line_no, "bad k '" + f[1] + "'");
            r.k = k;
        }
        r.alpha = parse_real(f[2], line_no, "alpha");
        r.sigma = parse_real(f[3], line_no, "sigma");
        r.t = parse_real(f[4], line_no, "t");
        if (!(r.alpha > 0.0 && r.alpha < 1.0)) throw ParseError(line_no, "alpha outside (0, 1)");
        out.push_back(std::move(r));
    }
    sort_records(out);
    return out;
}

std::vector<std::string> export_plot_series(const std::vector<CurveRecord>& records, const std::string& dir,
                                            const std::string& x_field, const std::string& y_field) {
    auto pick = [](const CurveRecord& r, const std::string& field) -> double {
        if (field == "alpha") return r.alpha;
        if (field == "sigma") return r.sigma;
        if (field == "t") return r.t;
        if (field == "k") return r.k ? double(*r.k) : std::nan("");
        if (field == "log10_alpha") return std::log10(r.alpha);
        throw ConfigError("unknown plot field '" + field + "'");
    };
    std::map<std::string, std::vector<const CurveRecord*>> groups;
    for (const auto& r : records) groups[r.curve_id].push_back(&r);
    std::filesystem::create_directories(dir);
    std::vector<std::string> paths;
    for (const auto& [id, rows] : groups) {
        const auto path = (std::filesystem::path(dir) / (id + ".csv")).string();
        std::ofstream f(path);
        f << "x,y\n";
        for (const auto* r : rows) f << format_double(pick(*r, x_field)) << ',' << format_double(pick(*r, y_field)) << '\n';
        paths.push_back(path);
    }
    return paths;
}

}  // namespace selberg
