#pragma once

#include <vector>

namespace liepurity::fit {

struct FitResult {
    double slope = 0.0;
    double intercept = 0.0;
    double slope_stderr = 0.0;
    double residual_rms = 0.0;
    int n_points = 0;
    double amplitude = 0.0; // exp(intercept), meaningful for power fits
};

/// Ordinary least squares y = slope * x + intercept with the slope's standard error.
FitResult linear_fit(const std::vector<double>& xs, const std::vector<double>& ys);

/// Power-law fit y = A x^m through log-log least squares; requires positive data.
FitResult power_fit(const std::vector<double>& xs, const std::vector<double>& ys);

/// Logarithmic fit y = a ln(x) + b; requires positive x.
FitResult log_fit(const std::vector<double>& xs, const std::vector<double>& ys);

} // namespace liepurity::fit
