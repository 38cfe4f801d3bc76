#include "curvekit/svg.hpp"

#include <cmath>
#include <cstddef>
#include <stdexcept>

#include "curvekit/serial.hpp"
#include "curvekit/series.hpp"

namespace curvekit {
namespace {

constexpr const char* kCurveColors[] = {
    "#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd",
    "#8c564b", "#e377c2", "#7f7f7f", "#bcbd22", "#17becf",
};
constexpr std::size_t kCurveColorCount = sizeof kCurveColors / sizeof kCurveColors[0];

// Pixel coordinates are quantized to 1/100 px so the byte output stays
// short and deterministic.
std::string px(double v) { return format_double(std::round(v * 100.0) / 100.0); }

struct CellFrame {
    double ox;
    double oy;
    double w;
    double h;

    double map_x(double x) const { return ox + x * w; }
    double map_y(double y) const { return oy + (1.0 - y) * h; }
};

void append_header(std::string& out, int total_w, int total_h) {
    out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + std::to_string(total_w) +
           "\" height=\"" + std::to_string(total_h) + "\" viewBox=\"0 0 " +
           std::to_string(total_w) + " " + std::to_string(total_h) + "\">\n";
    out += "<rect x=\"0\" y=\"0\" width=\"" + std::to_string(total_w) + "\" height=\"" +
           std::to_string(total_h) + "\" fill=\"#ffffff\"/>\n";
}

void append_border(std::string& out, const CellFrame& f) {
    out += "<rect x=\"" + px(f.ox) + "\" y=\"" + px(f.oy) + "\" width=\"" + px(f.w) +
           "\" height=\"" + px(f.h) + "\" fill=\"none\" stroke=\"#888888\" stroke-width=\"1\"/>\n";
}

void append_label(std::string& out, const CellFrame& f, const std::string& label) {
    out += "<text x=\"" + px(f.ox + 4.0) + "\" y=\"" + px(f.oy + 12.0) +
           "\" font-family=\"sans-serif\" font-size=\"10\" fill=\"#555555\">" + label +
           "</text>\n";
}

void append_polyline(std::string& out, const CellFrame& f, const SampleSeries& series,
                     const char* color) {
    out += "<polyline fill=\"none\" stroke=\"";
    out += color;
    out += "\" stroke-width=\"1.5\" points=\"";
    bool first = true;
    for (const SamplePoint& pt : series.points()) {
        if (!first) out += ' ';
        first = false;
        out += px(f.map_x(pt.x));
        out += ',';
        out += px(f.map_y(pt.y));
    }
    out += "\"/>\n";
}

}  // namespace

std::string emit_svg_grid(const PlotSpec& spec, EpsilonPolicy guard) {
    if (spec.width < 64 || spec.height < 64)
        throw std::domain_error("plot cells must be at least 64x64 px");
    if (spec.margin < 0) throw std::domain_error("plot margin must be >= 0");
    if (spec.samples_per_curve < 2) throw std::domain_error("samples per curve must be >= 2");
    if (spec.s_values.empty() || spec.t_values.empty())
        throw std::domain_error("s_values and t_values must be non-empty");

    const int rows = static_cast<int>(spec.s_values.size());
    const int cols = static_cast<int>(spec.t_values.size());
    const int total_w = cols * spec.width + (cols + 1) * spec.margin;
    const int total_h = rows * spec.height + (rows + 1) * spec.margin;

    std::string out;
    append_header(out, total_w, total_h);
    for (int r = 0; r < rows; ++r) {
        for (int c = 0; c < cols; ++c) {
            const CurveParams p(spec.s_values[static_cast<std::size_t>(r)],
                                spec.t_values[static_cast<std::size_t>(c)]);
            const CellFrame f{static_cast<double>(spec.margin + c * (spec.width + spec.margin)),
                              static_cast<double>(spec.margin + r * (spec.height + spec.margin)),
                              static_cast<double>(spec.width),
                              static_cast<double>(spec.height)};
            out += "<g>\n";
            append_border(out, f);
            append_label(out, f,
                         "s=" + format_double(p.slope()) + " t=" + format_double(p.threshold()));
            append_polyline(out, f, sample_curve(p, spec.samples_per_curve, guard),
                            kCurveColors[0]);
            if (spec.show_knots) {
                const double knot_y = curve(p.threshold(), p, guard);
                out += "<circle cx=\"" + px(f.map_x(p.threshold())) + "\" cy=\"" +
                       px(f.map_y(knot_y)) + "\" r=\"3\" fill=\"#d62728\"/>\n";
            }
            out += "</g>\n";
        }
    }
    out += "</svg>\n";
    return out;
}

std::string emit_svg_family(FamilyKind kind, const std::vector<double>& a_values, int width,
                            int height, int margin, int samples_per_curve) {
    if (width < 64 || height < 64) throw std::domain_error("plot must be at least 64x64 px");
    if (margin < 0) throw std::domain_error("plot margin must be >= 0");
    if (samples_per_curve < 2) throw std::domain_error("samples per curve must be >= 2");
    if (a_values.empty()) throw std::domain_error("a_values must be non-empty");
    std::vector<ShapeParam> shapes;
    shapes.reserve(a_values.size());
    for (double a : a_values) shapes.emplace_back(a);

    const int total_w = width + 2 * margin;
    const int total_h = height + 2 * margin;
    const CellFrame f{static_cast<double>(margin), static_cast<double>(margin),
                      static_cast<double>(width), static_cast<double>(height)};

    std::string out;
    append_header(out, total_w, total_h);
    out += "<g>\n";
    append_border(out, f);
    append_label(out, f, kind == FamilyKind::bias ? "bias" : "gain");
    for (std::size_t i = 0; i < shapes.size(); ++i) {
        std::vector<SamplePoint> pts;
        pts.reserve(static_cast<std::size_t>(samples_per_curve));
        for (int k = 0; k < samples_per_curve; ++k) {
            const double x = static_cast<double>(k) / static_cast<double>(samples_per_curve - 1);
            const double y = kind == FamilyKind::bias ? schlick_bias(x, shapes[i])
                                                      : schlick_gain(x, shapes[i]);
            pts.push_back({x, y});
        }
        append_polyline(out, f, SampleSeries(std::move(pts)),
                        kCurveColors[i % kCurveColorCount]);
    }
    out += "</g>\n";
    out += "</svg>\n";
    return out;
}

}  // namespace curvekit
