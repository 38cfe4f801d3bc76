#pragma once

#include <string>

#include "curvekit/curve.hpp"
#include "curvekit/series.hpp"

namespace curvekit {

// Shortest decimal rendering that parses back to the same double.
std::string format_double(double v);

// Header "x,y", one row per point, newline-terminated.
std::string emit_csv(const SampleSeries& series);

// {"s":...,"t":...,"points":[[x,y],...]} with round-trip number rendering.
std::string emit_json(const SampleSeries& series, const CurveParams& p);

// Readers for the emitted formats (parse_csv also accepts "i,x,y" tables).
// Malformed text throws std::runtime_error; invariant violations in the
// parsed data throw std::domain_error.
SampleSeries parse_csv(const std::string& text);
SampleSeries parse_json(const std::string& text);

}  // namespace curvekit
