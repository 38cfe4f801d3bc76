#pragma once

#include <limits>

namespace curvekit {

// Additive guard applied to the branch denominators of the slope/threshold
// curve so the rational forms stay total when t sits at 0 or 1. Defaults to
// the machine epsilon of double (2^-52).
class EpsilonPolicy {
public:
    constexpr EpsilonPolicy() = default;
    explicit EpsilonPolicy(double eps);
    constexpr double eps() const { return eps_; }

private:
    double eps_ = std::numeric_limits<double>::epsilon();
};

// Shape parameter of Schlick's bias and gain, restricted to the open
// interval (0,1); the endpoints zero a denominator and are rejected.
class ShapeParam {
public:
    explicit ShapeParam(double a);
    constexpr double value() const { return a_; }

private:
    double a_;
};

// Slope/threshold pair of the generalized curve: s >= 0 is the slope at
// x = t, and t in [0,1] is where the curve switches branch (and a fixed
// point of the map).
class CurveParams {
public:
    CurveParams(double slope, double threshold);
    constexpr double slope() const { return s_; }
    constexpr double threshold() const { return t_; }

private:
    double s_;
    double t_;
};

// Clamps ulp-level overshoot into [0,1]; also normalizes -0.0 to 0.0.
constexpr double clamp_unit(double v) {
    if (v <= 0.0) return 0.0;
    if (v >= 1.0) return 1.0;
    return v;
}

// Schlick bias: x / ((1/a - 2)(1 - x) + 1). Monotone, fixes 0 and 1,
// identity at a = 1/2.
double schlick_bias(double x, ShapeParam a);

// Schlick gain: two scaled bias curves joined at x = 1/2.
double schlick_gain(double x, ShapeParam a);

// The generalized curve. Lower branch t*x / (x + s*(t-x) + eps) for x < t,
// upper branch (1-t)*(x-1) / (1-x - s*(t-x) + eps) + 1 for x >= t. Output
// is clamped into [0,1].
double curve(double x, const CurveParams& p, EpsilonPolicy guard = {});

// Inverse of curve(., p): evaluates the curve with reciprocal slope.
// Requires s > 0; a zero-slope curve plateaus at t and is not injective.
double curve_inverse(double y, const CurveParams& p, EpsilonPolicy guard = {});

// Analytic derivative of the active branch (quotient rule, guard included).
// Equals s at x = t up to rounding; non-negative everywhere.
double curve_derivative(double x, const CurveParams& p, EpsilonPolicy guard = {});

// Mirror parameters: curve(x, p) == 1 - curve(1-x, reflect_params(p)).
CurveParams reflect_params(const CurveParams& p);

// The two parameter pairs that reproduce schlick_bias(., a): one with the
// threshold at 0, one with it at 1.
struct BiasCurveForms {
    CurveParams threshold_zero;  // (1/s, 0)
    CurveParams threshold_one;   // (s, 1)
};

BiasCurveForms bias_as_curve(ShapeParam a);

// Parameters reproducing schlick_gain(., a): slope 1/a - 1, threshold 1/2.
CurveParams gain_as_curve(ShapeParam a);

}  // namespace curvekit
