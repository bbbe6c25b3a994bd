#ifndef TSGEOM_SYMBOLIZE_HPP
#define TSGEOM_SYMBOLIZE_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "tsgeom/sign.hpp"
#include "tsgeom/signal.hpp"

namespace tsgeom {

/// The two first differences and the second difference around interior
/// index n. Conventions: d_left = s[n] - s[n-1] (backward first difference),
/// d_right = s[n+1] - s[n] (forward), d2 = d_right - d_left, all attributed
/// to n.
struct DifferenceTriple {
    double d_left;
    double d2;
    double d_right;
    std::size_t index;
};

inline constexpr int kConfigurationCount = 13;

/// One of the 13 realizable 3-point shapes. Ids 1..6 are the statistically
/// abundant shapes; 7..13 require exact zero differences and are sparse on
/// continuous-valued data.
struct Configuration {
    std::uint8_t id; // 1..13
    Sign first_sign;
    Sign curvature_sign;
    Sign last_sign;

    bool abundant() const { return id <= 6; }
    bool operator==(const Configuration&) const = default;
};

/// The 13 rows in id order.
const std::array<Configuration, kConfigurationCount>& configuration_table();

/// Row with the given id (1..13).
const Configuration& configuration(int id);

DifferenceTriple difference_triple(const Signal& signal, std::size_t n);

inline double left_product(const DifferenceTriple& t) { return t.d2 * t.d_left; }
inline double right_product(const DifferenceTriple& t) { return t.d2 * t.d_right; }

/// Maps a sign triple to its configuration, or nullopt for the 14 patterns
/// that no real triple can realize.
std::optional<Configuration> pattern_lookup(Sign first, Sign curvature, Sign last);

/// All realizable sign triples (first, curvature, last) in id order.
std::vector<std::array<Sign, 3>> enumerate_valid_patterns();

/// Classifies the 3-point neighbourhood of interior index n. Signs are taken
/// from the actual real-valued triple with one shared tau. With tau = 0 the
/// result is always one of the 13 rows; with tau > 0 an unrealizable rounded
/// pattern raises ClassificationError carrying the raw triple.
Configuration classify(const Signal& signal, std::size_t n, double tau = 0.0);

/// The configuration sequence of a signal. symbols[k] classifies interior
/// sample index k + 1; length is N - 2. Adjacent symbols always agree on
/// their shared differences: last_sign(symbols[k]) == first_sign(symbols[k+1]).
struct SymbolString {
    std::vector<std::uint8_t> symbols;
    std::size_t source_length = 0;

    static constexpr std::size_t start_index = 1;
    std::size_t size() const { return symbols.size(); }
    bool empty() const { return symbols.empty(); }
};

SymbolString symbolize(const Signal& signal, double tau = 0.0);

/// Symbolizes one in-memory window; offset is the window's start index in
/// the source signal (used only for error attribution).
SymbolString symbolize_span(std::span<const double> samples, double tau = 0.0,
                            std::size_t offset = 0);

/// Peak (id 6) and trough (id 5) positions in source-signal coordinates.
struct PeaksTroughs {
    std::vector<std::size_t> peaks;
    std::vector<std::size_t> troughs;
};

PeaksTroughs peaks_troughs(const SymbolString& symbols);

} // namespace tsgeom

#endif // TSGEOM_SYMBOLIZE_HPP
