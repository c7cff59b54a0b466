#pragma once

#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "selberg/errors.hpp"

namespace selberg {

/// sum k^20 x_k / sum k^20 over k = 1..n, with weights formed in log space.
double project_kI(std::span<const double> values);

struct FitSample {
    double alpha;
    double value;
};

struct FitResult {
    std::vector<double> coefficients;  // c_0 .. c_{n-1} for |log alpha|^{-l}
    double condition = 0.0;
    double rms_residual = 0.0;
};

/// Least squares in the basis |log alpha|^{-l}, l = 0..n_terms-1 (column-scaled SVD).
FitResult fit_limit(std::span<const FitSample> samples, int n_terms = 6, double max_condition = 1e12);

struct CurveRecord {
    std::string curve_id;
    std::optional<int> k;
    double alpha = 0.0;
    double sigma = 0.5;
    double t = 0.0;
    bool operator==(const CurveRecord&) const = default;
};

inline constexpr const char* kCurveHeader = "curve_id,k,alpha,sigma,t";

/// Stable sort by curve id, then alpha descending.
void sort_records(std::vector<CurveRecord>& records);
void write_curve_csv(std::ostream& out, std::vector<CurveRecord> records);
std::vector<CurveRecord> read_curve_csv(std::istream& in);

/// Writes one "x,y" file per curve id into `dir`, named <curve_id>.csv; returns the paths written.
std::vector<std::string> export_plot_series(const std::vector<CurveRecord>& records, const std::string& dir,
                                            const std::string& x_field, const std::string& y_field);

std::string format_double(double v);

}  // namespace selberg
