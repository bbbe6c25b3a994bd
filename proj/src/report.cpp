#include "tsgeom/report.hpp"

#include <charconv>
#include <cmath>
#include <limits>

namespace tsgeom {

using nlohmann::ordered_json;

namespace {

constexpr double kUndefined = std::numeric_limits<double>::quiet_NaN();

bool double_eq(double a, double b) {
    return (std::isnan(a) && std::isnan(b)) || a == b;
}

bool values_eq(const std::vector<double>& a, const std::vector<double>& b) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (!double_eq(a[i], b[i])) return false;
    return true;
}

ordered_json values_json(const std::vector<double>& values) {
    ordered_json arr = ordered_json::array();
    for (double v : values) {
        if (std::isnan(v)) arr.push_back(nullptr);
        else arr.push_back(v);
    }
    return arr;
}

std::vector<double> values_from_json(const ordered_json& arr) {
    std::vector<double> out;
    out.reserve(arr.size());
    for (const auto& v : arr) out.push_back(v.is_null() ? kUndefined : v.get<double>());
    return out;
}

ordered_json series_json(const WindowedSeries& s) {
    ordered_json j;
    j["measure"] = measure_name(s.measure);
    j["window_starts_s"] = s.window_starts_s;
    j["values"] = values_json(s.values);
    j["undefined_windows"] = s.undefined_windows;
    return j;
}

WindowedSeries series_from_json(const ordered_json& j) {
    WindowedSeries s;
    s.measure = measure_from_name(j.at("measure").get<std::string>());
    s.window_starts_s = j.at("window_starts_s").get<std::vector<double>>();
    s.values = values_from_json(j.at("values"));
    s.undefined_windows = j.at("undefined_windows").get<std::vector<std::size_t>>();
    return s;
}

ordered_json matrix_json(const TransitionMatrix& m) {
    ordered_json rows = ordered_json::array();
    for (const auto& row : m.cells) {
        ordered_json r = ordered_json::array();
        for (double cell : row) r.push_back(cell);
        rows.push_back(std::move(r));
    }
    const BlockViews blocks = block_views(m);
    ordered_json j;
    j["count"] = m.count;
    j["cells"] = std::move(rows);
    j["block_sums"] = {{"abundant_abundant", blocks.abundant_abundant.sum()},
                       {"abundant_sparse", blocks.abundant_sparse.sum()},
                       {"sparse_abundant", blocks.sparse_abundant.sum()},
                       {"sparse_sparse", blocks.sparse_sparse.sum()}};
    return j;
}

TransitionMatrix matrix_from_json(const ordered_json& j) {
    TransitionMatrix m;
    m.count = j.at("count").get<std::size_t>();
    const auto& rows = j.at("cells");
    for (int i = 0; i < kConfigurationCount; ++i)
        for (int c = 0; c < kConfigurationCount; ++c)
            m.cells[i][c] = rows.at(i).at(c).get<double>();
    return m;
}

ordered_json histogram_json(const ConfigurationHistogram& h) {
    ordered_json j;
    j["counts"] = h.counts;
    j["total"] = h.total;
    return j;
}

ConfigurationHistogram histogram_from_json(const ordered_json& j) {
    ConfigurationHistogram h;
    const auto& counts = j.at("counts");
    for (int i = 0; i < kConfigurationCount; ++i) h.counts[i] = counts.at(i).get<std::uint64_t>();
    h.total = j.at("total").get<std::uint64_t>();
    return h;
}

ordered_json minimum_json(const SeriesMin& m) {
    ordered_json j;
    j["index"] = m.index;
    j["start_s"] = m.start_s;
    j["value"] = m.value;
    return j;
}

} // namespace

std::uint64_t fnv1a64(std::string_view bytes) {
    std::uint64_t hash = 0xcbf29ce484222325ull;
    for (unsigned char b : bytes) {
        hash ^= b;
        hash *= 0x100000001b3ull;
    }
    return hash;
}

std::string content_digest(std::string_view bytes) {
    static const char* hex = "0123456789abcdef";
    const std::uint64_t h = fnv1a64(bytes);
    std::string out = "fnv1a64:";
    for (int shift = 60; shift >= 0; shift -= 4) out += hex[(h >> shift) & 0xf];
    return out;
}

ordered_json to_json(const AnalysisReport& report) {
    ordered_json j;
    j["tool"] = report.tool;
    j["version"] = report.version;
    j["command"] = report.command;
    j["input"] = {{"path", report.input_path},
                  {"digest", report.input_digest},
                  {"rows", report.rows},
                  {"skipped_rows", report.skipped_rows}};

    ordered_json params;
    params["fs"] = report.parameters.fs;
    params["tau"] = report.parameters.tau;
    params["window_s"] = report.parameters.window_s;
    params["hop_s"] = report.parameters.hop_s;
    params["eps_power"] = report.parameters.eps_power;
    params["product"] = product_name(report.parameters.product);
    params["convention"] = convention_name(report.parameters.convention);
    params["seed"] = report.parameters.seed;
    params["strict"] = report.parameters.strict;
    if (report.parameters.dt) params["dt"] = *report.parameters.dt;
    j["parameters"] = std::move(params);

    ordered_json channels = ordered_json::array();
    for (const ChannelReport& ch : report.channels) {
        ordered_json c;
        c["name"] = ch.name;
        c["length"] = ch.length;
        if (ch.symbols) c["symbols"] = *ch.symbols;
        if (ch.histogram) c["histogram"] = histogram_json(*ch.histogram);
        if (ch.matrix) c["matrix"] = matrix_json(*ch.matrix);
        if (!ch.windowed_matrices.empty()) {
            ordered_json wm = ordered_json::array();
            for (const WindowedMatrix& w : ch.windowed_matrices) {
                ordered_json entry;
                entry["start_s"] = w.start_s;
                entry["matrix"] = matrix_json(w.matrix);
                wm.push_back(std::move(entry));
            }
            c["windowed_matrices"] = std::move(wm);
        }
        if (!ch.series.empty()) {
            ordered_json series = ordered_json::array();
            for (const WindowedSeries& s : ch.series) series.push_back(series_json(s));
            c["series"] = std::move(series);
        }
        if (ch.minimum) c["minimum"] = minimum_json(*ch.minimum);
        if (ch.marginal_coupling) c["marginal_coupling"] = *ch.marginal_coupling;
        if (ch.phases) c["phases"] = *ch.phases;
        if (ch.observable) c["observable"] = *ch.observable;
        channels.push_back(std::move(c));
    }
    j["channels"] = std::move(channels);
    if (report.order_parameter) j["order_parameter"] = *report.order_parameter;
    return j;
}

AnalysisReport report_from_json(const ordered_json& j) {
    AnalysisReport report;
    report.tool = j.at("tool").get<std::string>();
    report.version = j.at("version").get<std::string>();
    report.command = j.at("command").get<std::string>();
    const auto& input = j.at("input");
    report.input_path = input.at("path").get<std::string>();
    report.input_digest = input.at("digest").get<std::string>();
    report.rows = input.at("rows").get<std::size_t>();
    report.skipped_rows = input.at("skipped_rows").get<std::size_t>();

    const auto& params = j.at("parameters");
    report.parameters.fs = params.at("fs").get<double>();
    report.parameters.tau = params.at("tau").get<double>();
    report.parameters.window_s = params.at("window_s").get<double>();
    report.parameters.hop_s = params.at("hop_s").get<double>();
    report.parameters.eps_power = params.at("eps_power").get<double>();
    report.parameters.product = product_from_name(params.at("product").get<std::string>());
    report.parameters.convention = convention_from_name(params.at("convention").get<std::string>());
    report.parameters.seed = params.at("seed").get<std::uint64_t>();
    report.parameters.strict = params.at("strict").get<bool>();
    if (params.contains("dt")) report.parameters.dt = params.at("dt").get<double>();

    for (const auto& c : j.at("channels")) {
        ChannelReport ch;
        ch.name = c.at("name").get<std::string>();
        ch.length = c.at("length").get<std::size_t>();
        if (c.contains("symbols")) ch.symbols = c.at("symbols").get<std::vector<std::uint8_t>>();
        if (c.contains("histogram")) ch.histogram = histogram_from_json(c.at("histogram"));
        if (c.contains("matrix")) ch.matrix = matrix_from_json(c.at("matrix"));
        if (c.contains("windowed_matrices")) {
            for (const auto& w : c.at("windowed_matrices")) {
                WindowedMatrix wm;
                wm.start_s = w.at("start_s").get<double>();
                wm.matrix = matrix_from_json(w.at("matrix"));
                ch.windowed_matrices.push_back(std::move(wm));
            }
        }
        if (c.contains("series"))
            for (const auto& s : c.at("series")) ch.series.push_back(series_from_json(s));
        if (c.contains("minimum")) {
            const auto& m = c.at("minimum");
            ch.minimum = SeriesMin{m.at("index").get<std::size_t>(), m.at("start_s").get<double>(),
                                   m.at("value").get<double>()};
        }
        if (c.contains("marginal_coupling")) ch.marginal_coupling = c.at("marginal_coupling").get<double>();
        if (c.contains("phases")) ch.phases = c.at("phases").get<std::vector<double>>();
        if (c.contains("observable")) ch.observable = c.at("observable").get<std::vector<double>>();
        report.channels.push_back(std::move(ch));
    }
    if (j.contains("order_parameter"))
        report.order_parameter = j.at("order_parameter").get<std::vector<double>>();
    return report;
}

std::string render_json(const AnalysisReport& report) {
    return to_json(report).dump(2) + "\n";
}

std::string render_series_csv(const WindowedSeries& series) {
    std::string out = "window_start_s,value,defined\n";
    char buf[32];
    auto append = [&](double v) {
        auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
        out.append(buf, ptr);
    };
    for (std::size_t k = 0; k < series.values.size(); ++k) {
        append(series.window_starts_s[k]);
        out += ',';
        if (series.defined(k)) {
            append(series.values[k]);
            out += ",true\n";
        } else {
            out += ",false\n";
        }
    }
    return out;
}

bool operator==(const WindowedSeries& a, const WindowedSeries& b) {
    return a.measure == b.measure && a.window_starts_s == b.window_starts_s &&
           values_eq(a.values, b.values) && a.undefined_windows == b.undefined_windows;
}

bool operator==(const ConfigurationHistogram& a, const ConfigurationHistogram& b) {
    return a.counts == b.counts && a.total == b.total;
}

bool operator==(const TransitionMatrix& a, const TransitionMatrix& b) {
    return a.count == b.count && a.cells == b.cells;
}

bool operator==(const SeriesMin& a, const SeriesMin& b) {
    return a.index == b.index && a.start_s == b.start_s && a.value == b.value;
}

bool operator==(const WindowedMatrix& a, const WindowedMatrix& b) {
    return a.start_s == b.start_s && a.matrix == b.matrix;
}

bool operator==(const ChannelReport& a, const ChannelReport& b) {
    return a.name == b.name && a.length == b.length && a.symbols == b.symbols &&
           a.histogram == b.histogram && a.matrix == b.matrix &&
           a.windowed_matrices == b.windowed_matrices && a.series == b.series &&
           a.minimum == b.minimum && a.marginal_coupling == b.marginal_coupling &&
           a.phases == b.phases && a.observable == b.observable;
}

bool operator==(const AnalysisReport& a, const AnalysisReport& b) {
    return a.tool == b.tool && a.version == b.version && a.command == b.command &&
           a.input_path == b.input_path && a.input_digest == b.input_digest && a.rows == b.rows &&
           a.skipped_rows == b.skipped_rows && a.parameters == b.parameters &&
           a.channels == b.channels && a.order_parameter == b.order_parameter;
}

} // namespace tsgeom
