#include "curvekit/curve.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace curvekit {
namespace {

[[noreturn]] void fail(const std::string& msg) { throw std::domain_error(msg); }

void require_unit(double v, const char* name) {
    if (!std::isfinite(v)) fail(std::string(name) + " must be finite");
    if (v < 0.0 || v > 1.0)
        fail(std::string(name) + " must be in [0,1], got " + std::to_string(v));
}

}  // namespace

EpsilonPolicy::EpsilonPolicy(double eps) : eps_(eps) {
    if (!std::isfinite(eps) || eps <= 0.0) fail("eps must be positive and finite");
}

ShapeParam::ShapeParam(double a) : a_(a) {
    if (!std::isfinite(a) || a <= 0.0 || a >= 1.0)
        fail("shape parameter a must lie in (0,1)");
}

CurveParams::CurveParams(double slope, double threshold) : s_(slope), t_(threshold) {
    if (!std::isfinite(slope) || slope < 0.0) fail("slope s must be finite and >= 0");
    if (!std::isfinite(threshold) || threshold < 0.0 || threshold > 1.0)
        fail("threshold t must be in [0,1]");
}

namespace {

// a is a validated shape value, or its complement 1-a, which can round to
// exactly 1.0 when a is denormal; the x == 0 guard keeps that case total.
double bias_value(double x, double a) {
    if (x == 0.0) return 0.0;
    const double k = 1.0 / a - 2.0;
    return clamp_unit(x / (k * (1.0 - x) + 1.0));
}

}  // namespace

double schlick_bias(double x, ShapeParam a) {
    require_unit(x, "x");
    return bias_value(x, a.value());
}

double schlick_gain(double x, ShapeParam a) {
    require_unit(x, "x");
    if (x < 0.5) return clamp_unit(0.5 * bias_value(2.0 * x, a.value()));
    return clamp_unit(0.5 * (bias_value(2.0 * x - 1.0, 1.0 - a.value()) + 1.0));
}

double curve(double x, const CurveParams& p, EpsilonPolicy guard) {
    require_unit(x, "x");
    const double s = p.slope();
    const double t = p.threshold();
    const double eps = guard.eps();
    double y;
    if (x < t)
        y = t * x / (x + s * (t - x) + eps);
    else
        y = (1.0 - t) * (x - 1.0) / (1.0 - x - s * (t - x) + eps) + 1.0;
    return clamp_unit(y);
}

double curve_inverse(double y, const CurveParams& p, EpsilonPolicy guard) {
    if (p.slope() == 0.0) fail("curve_inverse requires s > 0");
    return curve(y, CurveParams(1.0 / p.slope(), p.threshold()), guard);
}

double curve_derivative(double x, const CurveParams& p, EpsilonPolicy guard) {
    require_unit(x, "x");
    const double s = p.slope();
    const double t = p.threshold();
    const double eps = guard.eps();
    if (x < t) {
        const double d = x + s * (t - x) + eps;
        return t * (s * t + eps) / (d * d);
    }
    const double d = 1.0 - x - s * (t - x) + eps;
    return (1.0 - t) * (s * (1.0 - t) + eps) / (d * d);
}

CurveParams reflect_params(const CurveParams& p) {
    return CurveParams(p.slope(), 1.0 - p.threshold());
}

BiasCurveForms bias_as_curve(ShapeParam a) {
    const double s = 1.0 / a.value() - 1.0;
    return BiasCurveForms{CurveParams(1.0 / s, 0.0), CurveParams(s, 1.0)};
}

CurveParams gain_as_curve(ShapeParam a) {
    return CurveParams(1.0 / a.value() - 1.0, 0.5);
}

}  // namespace curvekit
