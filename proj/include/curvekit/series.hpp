#pragma once

#include <cstddef>
#include <vector>

#include "curvekit/curve.hpp"

namespace curvekit {

struct SamplePoint {
    double x;
    double y;
};

// Ordered (x, y) samples on the unit square: x strictly increasing, every
// coordinate finite and in [0,1], at least two points.
class SampleSeries {
public:
    explicit SampleSeries(std::vector<SamplePoint> points);

    const std::vector<SamplePoint>& points() const { return points_; }
    std::size_t size() const { return points_.size(); }
    const SamplePoint& operator[](std::size_t i) const { return points_[i]; }

private:
    std::vector<SamplePoint> points_;
};

// n curve values at equally spaced x = i/(n-1), n >= 2.
SampleSeries sample_curve(const CurveParams& p, int n, EpsilonPolicy guard = {});

}  // namespace curvekit
