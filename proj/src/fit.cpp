#include "curvekit/fit.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace curvekit {
namespace {

constexpr double kSlopeMin = 1.0 / 64.0;
constexpr double kSlopeMax = 64.0;
constexpr int kGrid = 64;
constexpr int kMaxSweeps = 200;
// Sweeps stop once both parameter deltas fall below this. 1e-9 rather than
// the 1e-6 one might expect: near-axis-aligned valleys make per-sweep moves
// an order of magnitude smaller than the remaining parameter error, and the
// recovery contract (1e-2 in parameters, 1e-8 in rmse) needs the slack.
constexpr double kDeltaTol = 1e-9;

double sse(const SampleSeries& samples, double s, double t, EpsilonPolicy guard) {
    const CurveParams p(s, t);
    double acc = 0.0;
    for (const SamplePoint& pt : samples.points()) {
        const double r = curve(pt.x, p, guard) - pt.y;
        acc += r * r;
    }
    return acc;
}

// Objective values this close count as a tie; the post-fit snap resolves
// such ties toward t = 1/2.
double tie_tol(double best) { return 1e-14 + 1e-12 * best; }

// Deterministic golden-section minimum of f on [lo, hi].
template <typename F>
double golden_min(F&& f, double lo, double hi, double tol) {
    constexpr double kInvPhi = 0.6180339887498949;
    double a = lo;
    double b = hi;
    double x1 = b - kInvPhi * (b - a);
    double x2 = a + kInvPhi * (b - a);
    double f1 = f(x1);
    double f2 = f(x2);
    while (b - a > tol) {
        if (f1 <= f2) {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - kInvPhi * (b - a);
            f1 = f(x1);
        } else {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + kInvPhi * (b - a);
            f2 = f(x2);
        }
    }
    return 0.5 * (a + b);
}

}  // namespace

FitResult fit_params(const SampleSeries& samples, EpsilonPolicy guard) {
    if (samples.size() < 3) throw std::domain_error("fit needs at least 3 points");

    const double u_min = std::log(kSlopeMin);
    const double u_max = std::log(kSlopeMax);

    // Coarse scan.
    double best_u = 0.0;
    double best_t = 0.5;
    double best = sse(samples, 1.0, 0.5, guard);
    for (int j = 0; j < kGrid; ++j) {
        const double u = u_min + (u_max - u_min) * j / (kGrid - 1);
        const double s = std::exp(u);
        for (int k = 0; k < kGrid; ++k) {
            const double t = static_cast<double>(k) / (kGrid - 1);
            const double f = sse(samples, s, t, guard);
            if (f < best) {
                best = f;
                best_u = u;
                best_t = t;
            }
        }
    }

    // Coordinate descent; line searches stay within a trust window of two
    // grid spacings around the incumbent, so sweeps can still travel. Each
    // sweep ends with a line search along the combined displacement, which
    // cuts through the diagonal valleys plain alternation zigzags across.
    const double radius_u = 2.0 * (u_max - u_min) / (kGrid - 1);
    const double radius_t = 2.0 / (kGrid - 1);
    int sweeps = 0;
    while (sweeps < kMaxSweeps) {
        ++sweeps;
        const double sweep_u = best_u;
        const double sweep_t = best_t;
        const double prev_s = std::exp(best_u);

        const double u_cand = golden_min(
            [&](double u) { return sse(samples, std::exp(u), best_t, guard); },
            std::max(u_min, best_u - radius_u), std::min(u_max, best_u + radius_u), 1e-12);
        double f = sse(samples, std::exp(u_cand), best_t, guard);
        if (f < best) {
            best = f;
            best_u = u_cand;
        }

        const double s_now = std::exp(best_u);
        const double t_cand = golden_min(
            [&](double t) { return sse(samples, s_now, t, guard); },
            std::max(0.0, best_t - radius_t), std::min(1.0, best_t + radius_t), 1e-12);
        f = sse(samples, s_now, t_cand, guard);
        if (f < best) {
            best = f;
            best_t = t_cand;
        }

        const double du = best_u - sweep_u;
        const double dt = best_t - sweep_t;
        if (du != 0.0 || dt != 0.0) {
            double alpha_hi = 8.0;
            if (du > 0.0) alpha_hi = std::min(alpha_hi, (u_max - best_u) / du);
            if (du < 0.0) alpha_hi = std::min(alpha_hi, (u_min - best_u) / du);
            if (dt > 0.0) alpha_hi = std::min(alpha_hi, (1.0 - best_t) / dt);
            if (dt < 0.0) alpha_hi = std::min(alpha_hi, (0.0 - best_t) / dt);
            if (alpha_hi > 1e-9) {
                const auto along = [&](double alpha) {
                    const double u = std::clamp(best_u + alpha * du, u_min, u_max);
                    const double t = std::clamp(best_t + alpha * dt, 0.0, 1.0);
                    return sse(samples, std::exp(u), t, guard);
                };
                const double alpha = golden_min(along, 0.0, alpha_hi, 1e-10);
                const double u_acc = std::clamp(best_u + alpha * du, u_min, u_max);
                const double t_acc = std::clamp(best_t + alpha * dt, 0.0, 1.0);
                f = sse(samples, std::exp(u_acc), t_acc, guard);
                if (f < best) {
                    best = f;
                    best_u = u_acc;
                    best_t = t_acc;
                }
            }
        }

        if (std::abs(std::exp(best_u) - prev_s) < kDeltaTol &&
            std::abs(best_t - sweep_t) < kDeltaTol)
            break;
    }

    // When the threshold is unidentifiable (s = 1 makes every t an identity
    // curve) the documented tie-break lands on t = 1/2.
    double s_fit = std::exp(best_u);
    double t_fit = best_t;
    if (t_fit != 0.5) {
        const double f_half = sse(samples, s_fit, 0.5, guard);
        if (f_half <= best + tie_tol(best)) {
            t_fit = 0.5;
            best = f_half;
        }
    }

    const double rmse = std::sqrt(sse(samples, s_fit, t_fit, guard) /
                                  static_cast<double>(samples.size()));
    return FitResult{CurveParams(s_fit, t_fit), rmse, sweeps};
}

}  // namespace curvekit
