#include "curvekit/series.hpp"

#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>

namespace curvekit {

SampleSeries::SampleSeries(std::vector<SamplePoint> points) : points_(std::move(points)) {
    if (points_.size() < 2) throw std::domain_error("series needs at least 2 points");
    double prev_x = -1.0;
    for (const SamplePoint& pt : points_) {
        if (!std::isfinite(pt.x) || pt.x < 0.0 || pt.x > 1.0)
            throw std::domain_error("series x out of [0,1]: " + std::to_string(pt.x));
        if (!std::isfinite(pt.y) || pt.y < 0.0 || pt.y > 1.0)
            throw std::domain_error("series y out of [0,1]: " + std::to_string(pt.y));
        if (pt.x <= prev_x) throw std::domain_error("series x must be strictly increasing");
        prev_x = pt.x;
    }
}

SampleSeries sample_curve(const CurveParams& p, int n, EpsilonPolicy guard) {
    if (n < 2) throw std::domain_error("sample count must be >= 2");
    std::vector<SamplePoint> pts;
    pts.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        const double x = static_cast<double>(i) / static_cast<double>(n - 1);
        pts.push_back({x, curve(x, p, guard)});
    }
    return SampleSeries(std::move(pts));
}

}  // namespace curvekit
