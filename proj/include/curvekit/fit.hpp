#pragma once

#include "curvekit/curve.hpp"
#include "curvekit/series.hpp"

namespace curvekit {

struct FitResult {
    CurveParams params;
    double rmse;     // root-mean-square residual in y
    int iterations;  // coordinate-descent sweeps used
};

// Least-squares recovery of (s, t) from samples (at least 3 points).
// Deterministic: a coarse 64x64 scan over s in [1/64, 64] (log-spaced) and
// t in [0, 1], then coordinate descent until parameter deltas drop below
// 1e-6 or 200 sweeps. Ties are broken toward t = 1/2, which matters when
// s = 1 leaves t unidentifiable. Noisy (non-monotone) y is fit as-is.
FitResult fit_params(const SampleSeries& samples, EpsilonPolicy guard = {});

}  // namespace curvekit
