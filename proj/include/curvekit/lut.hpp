#pragma once

#include <vector>

#include "curvekit/curve.hpp"

namespace curvekit {

class Lut;

// Tabulates curve values at x = i/(resolution-1), resolution >= 2.
Lut build_lut(const CurveParams& p, int resolution, EpsilonPolicy guard = {});

// Immutable, equally spaced table of curve values, evaluated by linear
// interpolation between the bracketing knots.
class Lut {
public:
    int resolution() const { return static_cast<int>(values_.size()); }
    const std::vector<double>& values() const { return values_; }
    const CurveParams& params() const { return params_; }

    friend Lut build_lut(const CurveParams&, int, EpsilonPolicy);

private:
    Lut(const CurveParams& p, std::vector<double> values);

    CurveParams params_;
    std::vector<double> values_;
};

// Linear interpolation; exact at knots, monotone, result in [0,1].
double lut_eval(const Lut& lut, double x);

}  // namespace curvekit
