#include "tsgeom/symbolize.hpp"

namespace tsgeom {

namespace {

constexpr Sign N = Sign::Neg;
constexpr Sign Z = Sign::Zero;
constexpr Sign P = Sign::Pos;

constexpr std::array<Configuration, kConfigurationCount> kTable = {{
    {1, N, P, N},
    {2, P, N, P},
    {3, P, P, P},
    {4, N, N, N},
    {5, N, P, P},
    {6, P, N, N},
    {7, P, Z, P},
    {8, N, Z, N},
    {9, Z, Z, Z},
    {10, Z, P, P},
    {11, Z, N, N},
    {12, P, N, Z},
    {13, N, P, Z},
}};

constexpr int triple_index(Sign first, Sign curvature, Sign last) {
    return (sign_value(first) + 1) * 9 + (sign_value(curvature) + 1) * 3 + (sign_value(last) + 1);
}

// 27-slot lookup: configuration id, or 0 for the 14 unrealizable patterns.
constexpr std::array<std::uint8_t, 27> build_lookup() {
    std::array<std::uint8_t, 27> lut{};
    for (const auto& row : kTable)
        lut[triple_index(row.first_sign, row.curvature_sign, row.last_sign)] = row.id;
    return lut;
}

constexpr std::array<std::uint8_t, 27> kLookup = build_lookup();

} // namespace

const std::array<Configuration, kConfigurationCount>& configuration_table() { return kTable; }

const Configuration& configuration(int id) {
    if (id < 1 || id > kConfigurationCount)
        throw InvalidInput("configuration: id must be in 1..13");
    return kTable[static_cast<std::size_t>(id - 1)];
}

DifferenceTriple difference_triple(const Signal& signal, std::size_t n) {
    const std::size_t size = signal.size();
    if (size < 3) throw EmptyInput("difference_triple: signal needs at least 3 samples");
    if (n < 1 || n > size - 2)
        throw InvalidInput("difference_triple: index " + std::to_string(n) + " is not interior");
    const double d_left = signal.samples[n] - signal.samples[n - 1];
    const double d_right = signal.samples[n + 1] - signal.samples[n];
    return DifferenceTriple{d_left, d_right - d_left, d_right, n};
}

std::optional<Configuration> pattern_lookup(Sign first, Sign curvature, Sign last) {
    const std::uint8_t id = kLookup[static_cast<std::size_t>(triple_index(first, curvature, last))];
    if (id == 0) return std::nullopt;
    return kTable[static_cast<std::size_t>(id - 1)];
}

std::vector<std::array<Sign, 3>> enumerate_valid_patterns() {
    std::vector<std::array<Sign, 3>> out;
    out.reserve(kConfigurationCount);
    for (const auto& row : kTable)
        out.push_back({row.first_sign, row.curvature_sign, row.last_sign});
    return out;
}

namespace {

inline Sign raw_sign(double x, double tau) {
    // classify() validated tau once; samples are finite by Signal invariant
    if (x > tau) return Sign::Pos;
    if (x < -tau) return Sign::Neg;
    return Sign::Zero;
}

inline Configuration classify_triple(double d_left, double d2, double d_right, double tau,
                                     std::size_t index) {
    const Sign first = raw_sign(d_left, tau);
    const Sign curvature = raw_sign(d2, tau);
    const Sign last = raw_sign(d_right, tau);
    const std::uint8_t id = kLookup[static_cast<std::size_t>(triple_index(first, curvature, last))];
    if (id == 0) throw ClassificationError(index, d_left, d2, d_right);
    return kTable[static_cast<std::size_t>(id - 1)];
}

} // namespace

Configuration classify(const Signal& signal, std::size_t n, double tau) {
    if (!(tau >= 0.0) || !std::isfinite(tau))
        throw InvalidInput("classify: tau must be finite and >= 0");
    const DifferenceTriple t = difference_triple(signal, n);
    return classify_triple(t.d_left, t.d2, t.d_right, tau, n);
}

SymbolString symbolize_span(std::span<const double> samples, double tau, std::size_t offset) {
    if (!(tau >= 0.0) || !std::isfinite(tau))
        throw InvalidInput("symbolize: tau must be finite and >= 0");
    const std::size_t n = samples.size();
    if (n < 3) throw EmptyInput("symbolize: signal needs at least 3 samples");

    SymbolString out;
    out.source_length = n;
    out.symbols.resize(n - 2);
    double d_left = samples[1] - samples[0];
    for (std::size_t k = 0; k + 2 < n; ++k) {
        const double d_right = samples[k + 2] - samples[k + 1];
        const double d2 = d_right - d_left;
        out.symbols[k] = classify_triple(d_left, d2, d_right, tau, offset + k + 1).id;
        d_left = d_right;
    }
    return out;
}

SymbolString symbolize(const Signal& signal, double tau) {
    return symbolize_span(signal.samples, tau, 0);
}

PeaksTroughs peaks_troughs(const SymbolString& symbols) {
    PeaksTroughs out;
    for (std::size_t k = 0; k < symbols.symbols.size(); ++k) {
        const std::size_t source_index = k + SymbolString::start_index;
        if (symbols.symbols[k] == 6) out.peaks.push_back(source_index);
        else if (symbols.symbols[k] == 5) out.troughs.push_back(source_index);
    }
    return out;
}

} // namespace tsgeom
