// curvekit command line: evaluate, sample, plot, fit, and tabulate the
// slope/threshold curve family and Schlick's bias/gain.
//
// Exit codes: 0 success, 1 I/O failure, 2 domain or usage error.

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "curvekit/curve.hpp"
#include "curvekit/fit.hpp"
#include "curvekit/lut.hpp"
#include "curvekit/serial.hpp"
#include "curvekit/series.hpp"
#include "curvekit/svg.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kIoError = 1;
constexpr int kDomainError = 2;

const std::vector<double> kDefaultShapeFamily = {0.01, 0.05, 0.1, 0.25, 0.5,
                                                 0.75, 0.9,  0.95, 0.99};

int io_fail(const std::string& msg) {
    std::cerr << "error: " << msg << "\n";
    return kIoError;
}

// Writes to stdout when path is "-".
int write_output(const std::string& path, const std::string& content) {
    if (path == "-") {
        std::cout << content;
        std::cout.flush();
        return std::cout ? kOk : io_fail("failed writing to stdout");
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) return io_fail("cannot open output file: " + path);
    out << content;
    out.flush();
    return out ? kOk : io_fail("failed writing output file: " + path);
}

struct EvalOptions {
    std::string mode = "curve";
    std::optional<double> x;
    std::optional<double> y;
    double s = 1.0;
    double t = 0.5;
    std::optional<double> a;
    bool clamp = false;
};

double eval_input(const EvalOptions& opt) {
    const bool inverse = opt.mode == "inverse";
    const std::optional<double>& v = inverse ? (opt.y ? opt.y : opt.x) : opt.x;
    if (!v) {
        throw std::domain_error(inverse ? "inverse mode needs --y"
                                        : "mode '" + opt.mode + "' needs --x");
    }
    if (opt.clamp && std::isfinite(*v)) return std::clamp(*v, 0.0, 1.0);
    return *v;
}

int cmd_eval(const EvalOptions& opt) {
    const double input = eval_input(opt);
    double result = 0.0;
    if (opt.mode == "bias" || opt.mode == "gain") {
        if (!opt.a) throw std::domain_error("mode '" + opt.mode + "' needs --a");
        const curvekit::ShapeParam a(*opt.a);
        result = opt.mode == "bias" ? curvekit::schlick_bias(input, a)
                                    : curvekit::schlick_gain(input, a);
    } else {
        const curvekit::CurveParams p(opt.s, opt.t);
        result = opt.mode == "curve" ? curvekit::curve(input, p)
                                     : curvekit::curve_inverse(input, p);
    }
    return write_output("-", curvekit::format_double(result) + "\n");
}

int cmd_sample(double s, double t, int n, const std::string& format, const std::string& out) {
    const curvekit::CurveParams p(s, t);
    const curvekit::SampleSeries series = curvekit::sample_curve(p, n);
    const std::string text =
        format == "csv" ? curvekit::emit_csv(series) : curvekit::emit_json(series, p);
    return write_output(out, text);
}

struct PlotOptions {
    std::string figure = "grid";
    std::string out = "-";
    curvekit::PlotSpec spec;
    std::vector<double> a_values = kDefaultShapeFamily;
    bool no_knots = false;
};

int cmd_plot(const PlotOptions& opt) {
    std::string text;
    if (opt.figure == "grid") {
        curvekit::PlotSpec spec = opt.spec;
        spec.show_knots = !opt.no_knots;
        text = curvekit::emit_svg_grid(spec);
    } else {
        const auto kind = opt.figure == "bias" ? curvekit::FamilyKind::bias
                                               : curvekit::FamilyKind::gain;
        text = curvekit::emit_svg_family(kind, opt.a_values);
    }
    return write_output(opt.out, text);
}

int cmd_fit(const std::string& input, const std::string& format) {
    std::string text;
    if (input == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        if (std::cin.bad()) return io_fail("failed reading stdin");
        text = buf.str();
    } else {
        std::ifstream in(input, std::ios::binary);
        if (!in) return io_fail("cannot open input file: " + input);
        std::ostringstream buf;
        buf << in.rdbuf();
        if (in.bad()) return io_fail("failed reading input file: " + input);
        text = buf.str();
    }

    std::string fmt = format;
    if (fmt == "auto") {
        const std::size_t first = text.find_first_not_of(" \t\r\n");
        fmt = (first != std::string::npos && text[first] == '{') ? "json" : "csv";
    }
    const curvekit::SampleSeries series =
        fmt == "json" ? curvekit::parse_json(text) : curvekit::parse_csv(text);
    const curvekit::FitResult fit = curvekit::fit_params(series);

    std::string result = "{\"s\":" + curvekit::format_double(fit.params.slope()) +
                         ",\"t\":" + curvekit::format_double(fit.params.threshold()) +
                         ",\"rmse\":" + curvekit::format_double(fit.rmse) +
                         ",\"iterations\":" + std::to_string(fit.iterations) + "}\n";
    return write_output("-", result);
}

int cmd_table(double s, double t, int resolution, const std::string& out) {
    const curvekit::Lut lut = curvekit::build_lut(curvekit::CurveParams(s, t), resolution);
    std::string text = "i,x,y\n";
    for (int i = 0; i < lut.resolution(); ++i) {
        const double x = static_cast<double>(i) / static_cast<double>(lut.resolution() - 1);
        text += std::to_string(i);
        text += ',';
        text += curvekit::format_double(x);
        text += ',';
        text += curvekit::format_double(lut.values()[static_cast<std::size_t>(i)]);
        text += '\n';
    }
    return write_output(out, text);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Slope/threshold curve toolkit: bias, gain, and their "
                 "two-parameter generalization"};
    app.require_subcommand(1);

    EvalOptions eval_opt;
    CLI::App* eval = app.add_subcommand("eval", "Evaluate one curve value");
    eval->add_option("--mode", eval_opt.mode, "curve|bias|gain|inverse")
        ->check(CLI::IsMember({"curve", "bias", "gain", "inverse"}));
    eval->add_option("--x", eval_opt.x, "Input in [0,1]");
    eval->add_option("--y", eval_opt.y, "Input in [0,1] (inverse mode)");
    eval->add_option("--s", eval_opt.s, "Slope (curve/inverse)");
    eval->add_option("--t", eval_opt.t, "Threshold (curve/inverse)");
    eval->add_option("--a", eval_opt.a, "Shape parameter (bias/gain)");
    eval->add_flag("--clamp", eval_opt.clamp, "Clamp out-of-range finite inputs into [0,1]");

    double sample_s = 1.0;
    double sample_t = 0.5;
    int sample_n = 65;
    std::string sample_format = "csv";
    std::string sample_out = "-";
    CLI::App* sample = app.add_subcommand("sample", "Sample a curve to CSV or JSON");
    sample->add_option("--s", sample_s, "Slope");
    sample->add_option("--t", sample_t, "Threshold");
    sample->add_option("--n", sample_n, "Sample count (>= 2)");
    sample->add_option("--format", sample_format, "csv|json")
        ->check(CLI::IsMember({"csv", "json"}));
    sample->add_option("--out", sample_out, "Output path or - for stdout");

    PlotOptions plot_opt;
    CLI::App* plot = app.add_subcommand("plot", "Emit an SVG figure");
    plot->add_option("--figure", plot_opt.figure, "bias|gain|grid")
        ->check(CLI::IsMember({"bias", "gain", "grid"}));
    plot->add_option("--out", plot_opt.out, "Output path or - for stdout");
    plot->add_option("--s-values", plot_opt.spec.s_values, "Comma list of grid slopes")
        ->delimiter(',');
    plot->add_option("--t-values", plot_opt.spec.t_values, "Comma list of grid thresholds")
        ->delimiter(',');
    plot->add_option("--a-values", plot_opt.a_values, "Comma list of bias/gain shapes")
        ->delimiter(',');
    plot->add_option("--width", plot_opt.spec.width, "Cell width in px");
    plot->add_option("--height", plot_opt.spec.height, "Cell height in px");
    plot->add_option("--margin", plot_opt.spec.margin, "Margin in px");
    plot->add_option("--samples", plot_opt.spec.samples_per_curve, "Points per polyline");
    plot->add_flag("--no-knots", plot_opt.no_knots, "Skip knot markers in the grid");

    std::string fit_input;
    std::string fit_format = "auto";
    CLI::App* fit = app.add_subcommand("fit", "Fit (s, t) to sampled points");
    fit->add_option("--input", fit_input, "CSV/JSON sample file, or - for stdin")->required();
    fit->add_option("--format", fit_format, "csv|json|auto")
        ->check(CLI::IsMember({"csv", "json", "auto"}));

    double table_s = 1.0;
    double table_t = 0.5;
    int table_resolution = 257;
    std::string table_out = "-";
    CLI::App* table = app.add_subcommand("table", "Write a lookup table as CSV");
    table->add_option("--s", table_s, "Slope");
    table->add_option("--t", table_t, "Threshold");
    table->add_option("--resolution", table_resolution, "Knot count (>= 2)");
    table->add_option("--out", table_out, "Output path or - for stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        std::cerr << "error: " << e.what() << "\n";
        return kDomainError;
    }

    try {
        if (eval->parsed()) return cmd_eval(eval_opt);
        if (sample->parsed()) return cmd_sample(sample_s, sample_t, sample_n, sample_format, sample_out);
        if (plot->parsed()) return cmd_plot(plot_opt);
        if (fit->parsed()) return cmd_fit(fit_input, fit_format);
        if (table->parsed()) return cmd_table(table_s, table_t, table_resolution, table_out);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kDomainError;
    }
    return kOk;
}
