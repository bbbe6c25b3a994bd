#ifndef TSGEOM_REPORT_HPP
#define TSGEOM_REPORT_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "tsgeom/kuramoto.hpp"
#include "tsgeom/measures.hpp"
#include "tsgeom/transitions.hpp"

namespace tsgeom {

/// Everything needed to reproduce a report.
struct ReportParameters {
    double fs = 0.0;
    double tau = 0.0;
    double window_s = 2.0;
    double hop_s = 2.0;
    double eps_power = 1e-12;
    ProductSide product = ProductSide::Left;
    SignConvention convention = SignConvention::Standard;
    std::uint64_t seed = 0;
    bool strict = false;
    std::optional<double> dt; // simulate only

    bool operator==(const ReportParameters&) const = default;
};

struct WindowedMatrix {
    double start_s = 0.0;
    TransitionMatrix matrix;
};

/// Per-channel (or per-oscillator) results. Which fields are present depends
/// on the command that produced the report.
struct ChannelReport {
    std::string name;
    std::size_t length = 0;
    std::optional<std::vector<std::uint8_t>> symbols;
    std::optional<ConfigurationHistogram> histogram;
    std::optional<TransitionMatrix> matrix;
    std::vector<WindowedMatrix> windowed_matrices;
    std::vector<WindowedSeries> series;
    std::optional<SeriesMin> minimum;
    std::optional<double> marginal_coupling;      // simulate
    std::optional<std::vector<double>> phases;    // simulate
    std::optional<std::vector<double>> observable; // simulate
};

struct AnalysisReport {
    std::string tool;
    std::string version;
    std::string command;
    std::string input_path;
    std::string input_digest;
    std::size_t rows = 0;
    std::size_t skipped_rows = 0;
    ReportParameters parameters;
    std::vector<ChannelReport> channels; // sorted by name
    std::optional<std::vector<double>> order_parameter; // simulate: r at every step
};

/// FNV-1a 64-bit content digest, rendered as "fnv1a64:<16 hex digits>".
std::uint64_t fnv1a64(std::string_view bytes);
std::string content_digest(std::string_view bytes);

/// Fixed-key-order JSON. Undefined series values serialize as null.
nlohmann::ordered_json to_json(const AnalysisReport& report);
AnalysisReport report_from_json(const nlohmann::ordered_json& j);

/// Byte-stable renderers. JSON covers the whole report; the CSV form covers
/// one windowed series (columns window_start_s,value,defined).
std::string render_json(const AnalysisReport& report);
std::string render_series_csv(const WindowedSeries& series);

/// Lossless round-trip equality; undefined windows compare equal regardless
/// of the stored sentinel bits.
bool operator==(const AnalysisReport& a, const AnalysisReport& b);

bool operator==(const WindowedSeries& a, const WindowedSeries& b);
bool operator==(const ConfigurationHistogram& a, const ConfigurationHistogram& b);
bool operator==(const TransitionMatrix& a, const TransitionMatrix& b);
bool operator==(const ChannelReport& a, const ChannelReport& b);
bool operator==(const WindowedMatrix& a, const WindowedMatrix& b);
bool operator==(const SeriesMin& a, const SeriesMin& b);

} // namespace tsgeom

#endif // TSGEOM_REPORT_HPP
