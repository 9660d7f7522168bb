#include "liepurity/fit.hpp"

#include "liepurity/core.hpp"

#include <cmath>

namespace liepurity::fit {

FitResult linear_fit(const std::vector<double>& xs, const std::vector<double>& ys) {
    if (xs.size() != ys.size()) throw SpecError("linear_fit: size mismatch");
    const std::size_t n = xs.size();
    if (n < 2) throw SpecError("linear_fit: need at least two points");

    double mx = 0.0, my = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        mx += xs[i];
        my += ys[i];
    }
    mx /= double(n);
    my /= double(n);
    double sxx = 0.0, sxy = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        sxx += (xs[i] - mx) * (xs[i] - mx);
        sxy += (xs[i] - mx) * (ys[i] - my);
    }
    if (sxx <= 0) throw SpecError("linear_fit: degenerate abscissa (ill-conditioned window)");

    FitResult r;
    r.n_points = int(n);
    r.slope = sxy / sxx;
    r.intercept = my - r.slope * mx;
    double ss_res = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double e = ys[i] - (r.slope * xs[i] + r.intercept);
        ss_res += e * e;
    }
    r.residual_rms = std::sqrt(ss_res / double(n));
    r.slope_stderr = (n > 2) ? std::sqrt(ss_res / (double(n) - 2.0) / sxx) : 0.0;
    r.amplitude = std::exp(r.intercept);
    return r;
}

FitResult power_fit(const std::vector<double>& xs, const std::vector<double>& ys) {
    if (xs.size() != ys.size()) throw SpecError("power_fit: size mismatch");
    std::vector<double> lx, ly;
    lx.reserve(xs.size());
    ly.reserve(ys.size());
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (!(xs[i] > 0) || !(ys[i] > 0))
            throw SpecError("power_fit: log-log fit needs strictly positive data");
        lx.push_back(std::log(xs[i]));
        ly.push_back(std::log(ys[i]));
    }
    return linear_fit(lx, ly);
}

FitResult log_fit(const std::vector<double>& xs, const std::vector<double>& ys) {
    if (xs.size() != ys.size()) throw SpecError("log_fit: size mismatch");
    std::vector<double> lx;
    lx.reserve(xs.size());
    for (double x : xs) {
        if (!(x > 0)) throw SpecError("log_fit: needs strictly positive abscissa");
        lx.push_back(std::log(x));
    }
    return linear_fit(lx, ys);
}

} // namespace liepurity::fit
