#include "tsgeom/measures.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace tsgeom {

namespace {

constexpr double kUndefined = std::numeric_limits<double>::quiet_NaN();

double entropy_bits(std::span<const std::uint64_t> counts, std::uint64_t total) {
    double h = 0.0;
    for (std::uint64_t c : counts) {
        if (c == 0) continue;
        const double p = static_cast<double>(c) / static_cast<double>(total);
        h -= p * std::log2(p);
    }
    // clamp the tiny negative that p == 1 can round to
    return h < 0.0 ? 0.0 : h;
}

} // namespace

const char* measure_name(MeasureTag tag) {
    switch (tag) {
    case MeasureTag::SemanticEntropy: return "semantic_entropy";
    case MeasureTag::PermutationEntropy: return "permutation_entropy";
    case MeasureTag::InformationPower: return "information_power";
    case MeasureTag::SpectralPower: return "spectral_power";
    case MeasureTag::EpRatio: return "ep_ratio";
    case MeasureTag::Synchronizability: return "synchronizability";
    }
    return "unknown";
}

MeasureTag measure_from_name(std::string_view name) {
    if (name == "semantic_entropy") return MeasureTag::SemanticEntropy;
    if (name == "permutation_entropy") return MeasureTag::PermutationEntropy;
    if (name == "information_power") return MeasureTag::InformationPower;
    if (name == "spectral_power") return MeasureTag::SpectralPower;
    if (name == "ep_ratio") return MeasureTag::EpRatio;
    if (name == "synchronizability") return MeasureTag::Synchronizability;
    throw SpecError("unknown measure: " + std::string(name));
}

const char* product_name(ProductSide side) {
    return side == ProductSide::Left ? "left" : "right";
}

ProductSide product_from_name(std::string_view name) {
    if (name == "left") return ProductSide::Left;
    if (name == "right") return ProductSide::Right;
    throw SpecError("unknown product side: " + std::string(name));
}

bool WindowedSeries::defined(std::size_t k) const {
    return k < values.size() && !std::isnan(values[k]);
}

double ConfigurationHistogram::probability(int id) const {
    if (total == 0) return 0.0;
    return static_cast<double>(counts[id - 1]) / static_cast<double>(total);
}

ConfigurationHistogram histogram(const SymbolString& symbols) {
    ConfigurationHistogram hist;
    for (std::uint8_t id : symbols.symbols) ++hist.counts[id - 1];
    hist.total = symbols.symbols.size();
    return hist;
}

double semantic_entropy(const ConfigurationHistogram& hist) {
    if (hist.total == 0) throw EmptyInput("semantic_entropy: no symbols");
    return entropy_bits(hist.counts, hist.total);
}

double semantic_entropy(const SymbolString& symbols) {
    if (symbols.empty()) throw EmptyInput("semantic_entropy: no symbols");
    return semantic_entropy(histogram(symbols));
}

double permutation_entropy3(std::span<const double> window, TiePolicy) {
    const std::size_t n = window.size();
    if (n < 3) throw EmptyInput("permutation_entropy3: need at least 3 samples");

    // Stable ranking of (x0, x1, x2): ties keep temporal order. The six
    // patterns are indexed by the lexicographic rank of the sorted positions.
    std::array<std::uint64_t, 6> counts{};
    for (std::size_t k = 0; k + 2 < n; ++k) {
        const double x0 = window[k];
        const double x1 = window[k + 1];
        const double x2 = window[k + 2];
        int p0 = 0, p1 = 1, p2 = 2;          // positions sorted by (value, position)
        if (x1 < x0) std::swap(p0, p1);      // stable: swap only on strict inequality
        const double lo = p0 == 0 ? x0 : x1;
        const double hi = p1 == 0 ? x0 : x1;
        if (x2 < lo) {
            p2 = p1; p1 = p0; p0 = 2;
        } else if (x2 < hi) {
            p2 = p1; p1 = 2;
        }
        const int pattern = p0 * 2 + (p1 > p2 ? 1 : 0); // lex rank of (p0, p1, p2)
        ++counts[static_cast<std::size_t>(pattern)];
    }
    return entropy_bits(counts, n - 2);
}

double information_power(std::span<const double> window, ProductSide side) {
    const std::size_t n = window.size();
    if (n < 3) throw EmptyInput("information_power: need at least 3 samples");
    double sum = 0.0;
    double d_left = window[1] - window[0];
    for (std::size_t k = 0; k + 2 < n; ++k) {
        const double d_right = window[k + 2] - window[k + 1];
        const double d2 = d_right - d_left;
        sum += std::abs(d2 * (side == ProductSide::Left ? d_left : d_right));
        d_left = d_right;
    }
    return sum / static_cast<double>(n - 2);
}

double spectral_power(std::span<const double> window) {
    if (window.empty()) throw EmptyInput("spectral_power: empty window");
    double mean = 0.0;
    for (double x : window) mean += x;
    mean /= static_cast<double>(window.size());
    double sum = 0.0;
    for (double x : window) {
        const double d = x - mean;
        sum += d * d;
    }
    return sum / static_cast<double>(window.size());
}

RatioSeries ratio_series(const Signal& signal, const WindowSpec& spec, const RatioParams& params) {
    RatioSeries out;
    out.entropy.measure = MeasureTag::SemanticEntropy;
    out.power.measure = MeasureTag::InformationPower;
    out.ratio.measure = MeasureTag::EpRatio;

    const auto ranges = windows(signal, spec);
    const double fs = signal.sample_rate;
    for (std::size_t k = 0; k < ranges.size(); ++k) {
        const auto view = signal.view(ranges[k].begin, ranges[k].end);
        const double start_s = static_cast<double>(ranges[k].begin) / fs;
        const SymbolString symbols = symbolize_span(view, params.tau, ranges[k].begin);
        const double entropy = semantic_entropy(symbols);
        const double power = information_power(view, params.product);

        out.entropy.window_starts_s.push_back(start_s);
        out.entropy.values.push_back(entropy);
        out.power.window_starts_s.push_back(start_s);
        out.power.values.push_back(power);
        out.ratio.window_starts_s.push_back(start_s);
        if (power < params.eps_power) {
            out.ratio.values.push_back(kUndefined);
            out.ratio.undefined_windows.push_back(k);
        } else {
            out.ratio.values.push_back(entropy / power);
        }
    }
    return out;
}

WindowedSeries measure_series(const Signal& signal, const WindowSpec& spec, MeasureTag tag,
                              const RatioParams& params) {
    WindowedSeries out;
    out.measure = tag;
    const auto ranges = windows(signal, spec);
    const double fn = signal.sample_rate;
    for (const auto& range : ranges) {
        const auto view = signal.view(range.begin, range.end);
        out.window_starts_s.push_back(static_cast<double>(range.begin) / fn);
        switch (tag) {
        case MeasureTag::SemanticEntropy:
            out.values.push_back(semantic_entropy(symbolize_span(view, params.tau, range.begin)));
            break;
        case MeasureTag::PermutationEntropy:
            out.values.push_back(permutation_entropy3(view));
            break;
        case MeasureTag::InformationPower:
            out.values.push_back(information_power(view, params.product));
            break;
        case MeasureTag::SpectralPower:
            out.values.push_back(spectral_power(view));
            break;
        default:
            throw InvalidInput("measure_series: tag has no single-window form");
        }
    }
    return out;
}

SeriesMin locate_min(const WindowedSeries& series) {
    std::size_t best = series.values.size();
    for (std::size_t k = 0; k < series.values.size(); ++k) {
        if (!series.defined(k)) continue;
        if (best == series.values.size() || series.values[k] < series.values[best]) best = k;
    }
    if (best == series.values.size())
        throw NoDefinedValue("locate_min: series has no defined window");
    return SeriesMin{best, series.window_starts_s[best], series.values[best]};
}

} // namespace tsgeom
