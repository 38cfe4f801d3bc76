#pragma once

#include <string>
#include <vector>

#include "curvekit/curve.hpp"

namespace curvekit {

// Small-multiples grid: one cell per (s, t) pair, rows follow s_values top
// to bottom, columns follow t_values left to right. width/height/margin are
// per-cell pixel dimensions; margin also pads the outer border. Defaults
// give bias curves in the outer columns and gain curves in the middle one.
struct PlotSpec {
    int width = 160;
    int height = 160;
    int margin = 16;
    std::vector<double> s_values = {0.25, 0.5, 1.0, 2.0, 4.0};
    std::vector<double> t_values = {0.0, 0.25, 0.5, 0.75, 1.0};
    int samples_per_curve = 257;
    bool show_knots = true;
};

// Deterministic SVG bytes: cell borders, one polyline per cell sampled with
// sample_curve, and (optionally) a knot marker at (t, curve(t)).
std::string emit_svg_grid(const PlotSpec& spec, EpsilonPolicy guard = {});

enum class FamilyKind { bias, gain };

// Single panel with one polyline per shape parameter.
std::string emit_svg_family(FamilyKind kind, const std::vector<double>& a_values,
                            int width = 480, int height = 480, int margin = 32,
                            int samples_per_curve = 257);

}  // namespace curvekit
