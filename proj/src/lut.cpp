#include "curvekit/lut.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <utility>

namespace curvekit {

Lut::Lut(const CurveParams& p, std::vector<double> values)
    : params_(p), values_(std::move(values)) {}

Lut build_lut(const CurveParams& p, int resolution, EpsilonPolicy guard) {
    if (resolution < 2) throw std::domain_error("lut resolution must be >= 2");
    std::vector<double> values(static_cast<std::size_t>(resolution));
    for (int i = 0; i < resolution; ++i) {
        const double x = static_cast<double>(i) / static_cast<double>(resolution - 1);
        values[static_cast<std::size_t>(i)] = curve(x, p, guard);
    }
    // The curve is monotone; a running max absorbs ulp-level jitter at
    // near-flat parameters so the table invariant holds bit-exactly.
    for (std::size_t i = 1; i < values.size(); ++i)
        values[i] = std::max(values[i], values[i - 1]);
    return Lut(p, std::move(values));
}

double lut_eval(const Lut& lut, double x) {
    if (!std::isfinite(x) || x < 0.0 || x > 1.0)
        throw std::domain_error("lut_eval: x must be in [0,1]");
    const std::vector<double>& v = lut.values();
    const int n = lut.resolution();
    const double last = static_cast<double>(n - 1);
    int i = static_cast<int>(x * last);
    i = std::clamp(i, 0, n - 2);
    // Interpolate against the true knot coordinates; the index guess above
    // may be off by one ulp of x*(n-1), the frac guards below correct it.
    const double x0 = static_cast<double>(i) / last;
    const double x1 = static_cast<double>(i + 1) / last;
    const double frac = (x - x0) / (x1 - x0);
    const std::size_t k = static_cast<std::size_t>(i);
    if (frac <= 0.0) return v[k];
    if (frac >= 1.0) return v[k + 1];
    return std::clamp(v[k] + frac * (v[k + 1] - v[k]), v[k], v[k + 1]);
}

}  // namespace curvekit
