// Acceptance suite: checks the library's numerical contracts end to end and
// prints one PASS/FAIL line per criterion. Exit code is the failure count.

#include <cmath>
#include <cstdio>
#include <cstring>
#include <functional>
#include <json.hpp>
#include <limits>
#include <string>
#include <vector>

#include "curvekit/curve.hpp"
#include "curvekit/fit.hpp"
#include "curvekit/serial.hpp"
#include "curvekit/series.hpp"
#include "curvekit/svg.hpp"
#include "subprocess.hpp"
#include "test_util.hpp"
#include "xml_lite.hpp"

using namespace curvekit;

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();
const std::vector<double> kSlopeSet = {0.125, 0.25, 0.5, 1.0, 2.0, 4.0, 8.0};

struct Outcome {
    bool pass = true;
    std::string detail;
};

struct Tracker {
    double worst = 0.0;
    bool ok = true;
    std::string first_failure;

    void observe(double err, double tol, const std::string& where) {
        if (err > worst) worst = err;
        if (err > tol && ok) {
            ok = false;
            first_failure = where;
        }
    }

    Outcome outcome(double tol, const std::string& label) const {
        char buf[160];
        if (ok) {
            std::snprintf(buf, sizeof buf, "%s %.2e (tol %.0e)", label.c_str(), worst, tol);
            return {true, buf};
        }
        std::snprintf(buf, sizeof buf, "%s %.2e > %.0e at %s", label.c_str(), worst, tol,
                      first_failure.c_str());
        return {false, buf};
    }
};

std::string spot(double a, double b) {
    return "(" + format_double(a) + ", " + format_double(b) + ")";
}

std::string spot(double a, double b, double c) {
    return "(" + format_double(a) + ", " + format_double(b) + ", " + format_double(c) + ")";
}

Outcome eq4_bias_reproduction() {
    Tracker tr;
    for (double s : kSlopeSet) {
        const ShapeParam a(1.0 / (s + 1.0));
        const CurveParams low(1.0 / s, 0.0);
        const CurveParams high(s, 1.0);
        for (double x : testutil::linspace(0.0, 1.0, 257)) {
            const double b = schlick_bias(x, a);
            tr.observe(std::abs(b - curve(x, low)), 1e-9, spot(x, s));
            tr.observe(std::abs(b - curve(x, high)), 1e-9, spot(x, s));
        }
    }
    return tr.outcome(1e-9, "max|B - C|");
}

Outcome eq5_gain_reproduction() {
    Tracker tr;
    for (double s : kSlopeSet) {
        const ShapeParam a(1.0 / (s + 1.0));
        const CurveParams p(s, 0.5);
        for (double x : testutil::linspace(0.0, 1.0, 257))
            tr.observe(std::abs(schlick_gain(x, a) - curve(x, p)), 1e-9, spot(x, s));
    }
    return tr.outcome(1e-9, "max|G - C|");
}

Outcome eq6_symmetry() {
    Tracker tr;
    for (double s : kSlopeSet) {
        for (double t : testutil::linspace(0.0, 1.0, 11)) {
            const CurveParams p(s, t);
            const CurveParams r(s, 1.0 - t);
            for (double x : testutil::linspace(0.0, 1.0, 257))
                tr.observe(std::abs(curve(x, p) - 1.0 + curve(1.0 - x, r)), 1e-12,
                           spot(x, s, t));
        }
    }
    return tr.outcome(1e-12, "max|C(x,s,t)-1+C(1-x,s,1-t)|");
}

Outcome eq7_inversion() {
    Tracker tr;
    for (int k = 0; k <= 8; ++k) {
        const double s = std::pow(16.0, -1.0 + 0.25 * k);
        for (double t : testutil::linspace(0.05, 0.95, 10)) {
            const CurveParams p(s, t);
            for (double x : testutil::linspace(0.0, 1.0, 257))
                tr.observe(std::abs(curve_inverse(curve(x, p), p) - x), 1e-9, spot(x, s, t));
        }
    }
    return tr.outcome(1e-9, "max round-trip err");
}

Outcome derivative_contract() {
    Tracker analytic;
    Tracker fd;
    const double h = 1e-6;
    auto gen = testutil::rng(0xacce5501);
    for (int c = 0; c < 20; ++c) {
        const double s = testutil::log_uniform(gen, 1.0 / 16.0, 16.0);
        const double t = testutil::uniform(gen, 0.05, 0.95);
        const CurveParams p(s, t);
        analytic.observe(std::abs(curve_derivative(t, p) - s), 1e-9, spot(s, t));
        const auto f = [&](double x) { return curve(x, p); };
        for (int i = 0; i < 100; ++i) {
            double x = testutil::uniform(gen, 2.0 * h, 1.0 - 2.0 * h);
            while (std::abs(x - t) < 1e-4) x = testutil::uniform(gen, 2.0 * h, 1.0 - 2.0 * h);
            fd.observe(std::abs(curve_derivative(x, p) - testutil::central_diff(f, x, h)),
                       1e-4, spot(x, s, t));
        }
    }
    if (!analytic.ok) return analytic.outcome(1e-9, "max|C'(t)-s|");
    const Outcome fd_out = fd.outcome(1e-4, "max|C'-FD|");
    if (!fd_out.pass) return fd_out;
    char buf[160];
    std::snprintf(buf, sizeof buf, "max|C'(t)-s| %.2e (tol 1e-09), max|C'-FD| %.2e (tol 1e-04)",
                  analytic.worst, fd.worst);
    return {true, buf};
}

Outcome range_and_monotonicity() {
    auto gen = testutil::rng(0xacce5502);
    for (int i = 0; i < 100000; ++i) {
        const double x = testutil::uniform(gen, 0.0, 1.0);
        const double t = testutil::uniform(gen, 0.0, 1.0);
        const double s = (i % 100 == 0) ? 0.0 : testutil::log_uniform(gen, 1e-6, 1e6);
        const double y = curve(x, CurveParams(s, t));
        if (!(y >= 0.0 && y <= 1.0))
            return {false, "range violation at " + spot(x, s, t) + ": " + format_double(y)};
    }
    for (double s : {1e-6, 0.01, 0.25, 1.0, 4.0, 100.0, 1e6}) {
        for (double t : {0.0, 0.3, 0.5, 0.77, 1.0}) {
            const CurveParams p(s, t);
            double prev = 0.0;
            for (double x : testutil::linspace(0.0, 1.0, 10001)) {
                const double y = curve(x, p);
                if (y < prev)
                    return {false, "monotonicity violation at " + spot(x, s, t)};
                prev = y;
            }
        }
    }
    return {true, "100000 random triples in range; 35 sweeps of 10001 points non-decreasing"};
}

Outcome fixed_points() {
    Tracker tr;
    std::vector<double> thresholds = {1e-6, 1e-5, 1e-4, 1e-3, 0.01};
    for (double t : testutil::linspace(0.05, 0.95, 19)) thresholds.push_back(t);
    thresholds.insert(thresholds.end(), {0.99, 1.0 - 1e-3, 1.0 - 1e-6});
    for (double s : kSlopeSet)
        for (double t : thresholds)
            tr.observe(std::abs(curve(t, CurveParams(s, t)) - t), 4.0 * kEps, spot(s, t));
    return tr.outcome(4.0 * kEps, "max|C(t)-t|");
}

Outcome fit_recovery() {
    Tracker s_err;
    Tracker t_err;
    Tracker rmse_tr;
    for (double s : {0.25, 0.5, 2.0, 4.0}) {
        for (double t : {0.1, 0.25, 0.5, 0.75, 0.9}) {
            const FitResult r = fit_params(sample_curve(CurveParams(s, t), 65));
            s_err.observe(std::abs(r.params.slope() - s), 1e-2, spot(s, t));
            t_err.observe(std::abs(r.params.threshold() - t), 1e-2, spot(s, t));
            rmse_tr.observe(r.rmse, 1e-8, spot(s, t));
        }
    }
    if (!s_err.ok) return s_err.outcome(1e-2, "max|s_fit - s|");
    if (!t_err.ok) return t_err.outcome(1e-2, "max|t_fit - t|");
    if (!rmse_tr.ok) return rmse_tr.outcome(1e-8, "max rmse");
    char buf[160];
    std::snprintf(buf, sizeof buf,
                  "20 cases: max|ds| %.1e, max|dt| %.1e (tol 1e-02), max rmse %.1e (tol 1e-08)",
                  s_err.worst, t_err.worst, rmse_tr.worst);
    return {true, buf};
}

Outcome figure_reproduction(const std::string& cli) {
    subprocess::TempDir tmp;
    const auto path = tmp.file("grid.svg");
    const auto run = subprocess::run(cli + " plot --figure grid --out " + path.string());
    if (run.exit_code != 0) return {false, "plot subcommand exited " + std::to_string(run.exit_code)};

    const xmllite::Document doc = xmllite::parse(subprocess::read_file(path));
    if (!doc.ok) return {false, "svg not well-formed: " + doc.error};

    const PlotSpec spec;  // the CLI default grid
    const std::size_t cells = spec.s_values.size() * spec.t_values.size();
    if (doc.count("polyline") != cells || doc.count("circle") != cells)
        return {false, "expected " + std::to_string(cells) + " polylines and knots, got " +
                           std::to_string(doc.count("polyline")) + "/" +
                           std::to_string(doc.count("circle"))};

    // Middle column is the gain family: midpoint fixed at 1/2.
    Tracker mid;
    for (double s : spec.s_values)
        mid.observe(std::abs(curve(0.5, CurveParams(s, 0.5)) - 0.5), 4.0 * kEps,
                    spot(s, 0.5));
    if (!mid.ok) return mid.outcome(4.0 * kEps, "middle column |C(1/2)-1/2|");

    // Outer columns are bias curves, both parameterizations.
    Tracker outer;
    for (double s : spec.s_values) {
        const SampleSeries left = sample_curve(CurveParams(s, 0.0), spec.samples_per_curve);
        const ShapeParam a_left(s / (s + 1.0));  // C(x,s,0) = B(x, s/(s+1))
        for (const SamplePoint& pt : left.points())
            outer.observe(std::abs(pt.y - schlick_bias(pt.x, a_left)), 1e-9, spot(pt.x, s));
        const SampleSeries right = sample_curve(CurveParams(s, 1.0), spec.samples_per_curve);
        const ShapeParam a_right(1.0 / (s + 1.0));  // C(x,s,1) = B(x, 1/(s+1))
        for (const SamplePoint& pt : right.points())
            outer.observe(std::abs(pt.y - schlick_bias(pt.x, a_right)), 1e-9, spot(pt.x, s));
    }
    if (!outer.ok) return outer.outcome(1e-9, "outer column bias mismatch");

    char buf[160];
    std::snprintf(buf, sizeof buf,
                  "%zu cells; midpoint err %.2e (tol 4eps), outer-column err %.2e (tol 1e-09)",
                  cells, mid.worst, outer.worst);
    return {true, buf};
}

Outcome cli_contract(const std::string& cli) {
    subprocess::TempDir tmp;
    std::vector<std::string> notes;

    auto expect = [&](const std::string& args, int want) -> bool {
        const auto r = subprocess::run(cli + " " + args);
        if (r.exit_code != want) {
            notes.push_back("`" + args + "` exited " + std::to_string(r.exit_code) +
                            ", wanted " + std::to_string(want));
            return false;
        }
        if (want != 0 && !r.stdout_text.empty()) {
            notes.push_back("`" + args + "` wrote to stdout on failure");
            return false;
        }
        return true;
    };

    bool ok = true;

    // Success paths re-parse losslessly.
    const auto eval = subprocess::run(cli + " eval --mode curve --x 0.25 --s 2 --t 0.5");
    ok &= eval.exit_code == 0;
    if (eval.exit_code == 0) {
        const double v = std::stod(eval.stdout_text);
        if (format_double(v) + "\n" != eval.stdout_text) {
            ok = false;
            notes.push_back("eval output is not round-trip clean");
        }
    }

    const auto csv = subprocess::run(cli + " sample --s 2 --t 0.5 --n 17");
    ok &= csv.exit_code == 0;
    if (csv.exit_code == 0) {
        const SampleSeries parsed = parse_csv(csv.stdout_text);
        const SampleSeries want = sample_curve(CurveParams(2.0, 0.5), 17);
        for (std::size_t i = 0; i < want.size(); ++i)
            if (std::memcmp(&parsed[i].y, &want[i].y, sizeof(double)) != 0) {
                ok = false;
                notes.push_back("sample csv is not lossless");
                break;
            }
    }

    const auto json_out = subprocess::run(cli + " sample --s 3 --t 0.3 --n 9 --format json");
    ok &= json_out.exit_code == 0;
    if (json_out.exit_code == 0) {
        const SampleSeries parsed = parse_json(json_out.stdout_text);
        const SampleSeries want = sample_curve(CurveParams(3.0, 0.3), 9);
        for (std::size_t i = 0; i < want.size(); ++i)
            if (std::memcmp(&parsed[i].y, &want[i].y, sizeof(double)) != 0) {
                ok = false;
                notes.push_back("sample json is not lossless");
                break;
            }
    }

    const auto fit_path = tmp.file("fit.csv");
    ok &= expect("sample --s 4 --t 0.25 --n 33 --out " + fit_path.string(), 0);
    const auto fit = subprocess::run(cli + " fit --input " + fit_path.string());
    ok &= fit.exit_code == 0;
    if (fit.exit_code == 0) {
        try {
            const nlohmann::json doc = nlohmann::json::parse(fit.stdout_text);
            if (std::abs(doc.at("s").get<double>() - 4.0) > 1e-2 ||
                std::abs(doc.at("t").get<double>() - 0.25) > 1e-2) {
                ok = false;
                notes.push_back("fit output missed the generating parameters");
            }
        } catch (const std::exception& e) {
            ok = false;
            notes.push_back(std::string("fit output is not valid json: ") + e.what());
        }
    }

    const auto table = subprocess::run(cli + " table --s 2 --t 0.5 --resolution 9");
    ok &= table.exit_code == 0;
    if (table.exit_code == 0) {
        const SampleSeries parsed = parse_csv(table.stdout_text);
        if (parsed.size() != 9) {
            ok = false;
            notes.push_back("table output did not re-parse to 9 rows");
        }
    }

    const auto svg_path = tmp.file("fig.svg");
    ok &= expect("plot --figure bias --out " + svg_path.string(), 0);
    if (!xmllite::parse(subprocess::read_file(svg_path)).ok) {
        ok = false;
        notes.push_back("plot output is not well-formed xml");
    }

    // Domain violations exit 2.
    ok &= expect("eval --mode inverse --y 0.5 --s 0 --t 0.5", 2);
    ok &= expect("eval --mode curve --x 1.5 --s 2 --t 0.5", 2);
    ok &= expect("sample --n 1", 2);
    ok &= expect("plot --figure grid --s-values 1,bogus --out -", 2);
    ok &= expect("table --resolution 1", 2);
    const auto two_path = tmp.file("two.csv");
    ok &= expect("sample --n 2 --out " + two_path.string(), 0);
    ok &= expect("fit --input " + two_path.string(), 2);

    // I/O failures exit 1.
    ok &= expect("sample --n 5 --out /nonexistent_dir/out.csv", 1);
    ok &= expect("plot --figure grid --out /nonexistent_dir/out.svg", 1);
    ok &= expect("table --resolution 5 --out /nonexistent_dir/out.csv", 1);
    ok &= expect("fit --input " + tmp.file("missing.csv").string(), 1);

    if (ok) return {true, "every subcommand exercised across exit codes 0/1/2; outputs lossless"};
    std::string detail;
    for (const std::string& n : notes) detail += (detail.empty() ? "" : "; ") + n;
    if (detail.empty()) detail = "unexpected exit codes";
    return {false, detail};
}

}  // namespace

int main() {
    const std::string cli = CURVEKIT_CLI;
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
        {"bias-reproduction", eq4_bias_reproduction},
        {"gain-reproduction", eq5_gain_reproduction},
        {"reflection-symmetry", eq6_symmetry},
        {"inversion-round-trip", eq7_inversion},
        {"derivative-contract", derivative_contract},
        {"range-and-monotonicity", range_and_monotonicity},
        {"fixed-points", fixed_points},
        {"fit-recovery", fit_recovery},
        {"figure-reproduction", [&] { return figure_reproduction(cli); }},
        {"cli-contract", [&] { return cli_contract(cli); }},
    };

    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const Outcome out = criteria[i].second();
        if (!out.pass) ++failures;
        std::printf("[%s] %2zu %-24s %s\n", out.pass ? "PASS" : "FAIL", i + 1,
                    criteria[i].first.c_str(), out.detail.c_str());
    }
    if (failures == 0)
        std::printf("all %zu acceptance criteria passed\n", criteria.size());
    else
        std::printf("%d of %zu acceptance criteria FAILED\n", failures, criteria.size());
    return failures;
}
