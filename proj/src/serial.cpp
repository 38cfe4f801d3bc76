#include "curvekit/serial.hpp"

#include <charconv>
#include <stdexcept>
#include <string_view>
#include <system_error>
#include <vector>

#include <json.hpp>

namespace curvekit {
namespace {

double parse_number(std::string_view field, const char* what) {
    double value = 0.0;
    const char* first = field.data();
    const char* last = field.data() + field.size();
    const auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || ptr != last)
        throw std::runtime_error(std::string("bad ") + what + " value: '" +
                                 std::string(field) + "'");
    return value;
}

std::vector<std::string_view> split(std::string_view line, char sep) {
    std::vector<std::string_view> out;
    std::size_t start = 0;
    while (true) {
        const std::size_t pos = line.find(sep, start);
        if (pos == std::string_view::npos) {
            out.push_back(line.substr(start));
            return out;
        }
        out.push_back(line.substr(start, pos - start));
        start = pos + 1;
    }
}

std::string_view strip_cr(std::string_view line) {
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    return line;
}

}  // namespace

std::string format_double(double v) {
    char buf[32];
    const auto res = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, res.ptr);
}

std::string emit_csv(const SampleSeries& series) {
    std::string out = "x,y\n";
    for (const SamplePoint& pt : series.points()) {
        out += format_double(pt.x);
        out += ',';
        out += format_double(pt.y);
        out += '\n';
    }
    return out;
}

std::string emit_json(const SampleSeries& series, const CurveParams& p) {
    std::string out = "{\"s\":";
    out += format_double(p.slope());
    out += ",\"t\":";
    out += format_double(p.threshold());
    out += ",\"points\":[";
    bool first = true;
    for (const SamplePoint& pt : series.points()) {
        if (!first) out += ',';
        first = false;
        out += '[';
        out += format_double(pt.x);
        out += ',';
        out += format_double(pt.y);
        out += ']';
    }
    out += "]}";
    return out;
}

SampleSeries parse_csv(const std::string& text) {
    std::vector<SamplePoint> pts;
    std::size_t start = 0;
    bool saw_header = false;
    bool indexed = false;
    while (start < text.size()) {
        std::size_t end = text.find('\n', start);
        if (end == std::string::npos) end = text.size();
        const std::string_view line = strip_cr(std::string_view(text).substr(start, end - start));
        start = end + 1;
        if (line.empty()) continue;
        if (!saw_header) {
            if (line == "x,y")
                indexed = false;
            else if (line == "i,x,y")
                indexed = true;
            else
                throw std::runtime_error("csv header must be 'x,y' or 'i,x,y'");
            saw_header = true;
            continue;
        }
        const auto fields = split(line, ',');
        const std::size_t expected = indexed ? 3 : 2;
        if (fields.size() != expected)
            throw std::runtime_error("csv row has wrong field count: '" + std::string(line) + "'");
        const double x = parse_number(fields[expected - 2], "x");
        const double y = parse_number(fields[expected - 1], "y");
        pts.push_back({x, y});
    }
    if (!saw_header) throw std::runtime_error("csv input is empty");
    return SampleSeries(std::move(pts));
}

SampleSeries parse_json(const std::string& text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw std::runtime_error(std::string("json parse error: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("points") || !doc["points"].is_array())
        throw std::runtime_error("json input must be an object with a 'points' array");
    std::vector<SamplePoint> pts;
    for (const auto& entry : doc["points"]) {
        if (!entry.is_array() || entry.size() != 2 || !entry[0].is_number() ||
            !entry[1].is_number())
            throw std::runtime_error("json points must be [x,y] number pairs");
        pts.push_back({entry[0].get<double>(), entry[1].get<double>()});
    }
    return SampleSeries(std::move(pts));
}

}  // namespace curvekit
