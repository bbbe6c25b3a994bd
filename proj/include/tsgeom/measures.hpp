#ifndef TSGEOM_MEASURES_HPP
#define TSGEOM_MEASURES_HPP

#include <array>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "tsgeom/symbolize.hpp"

namespace tsgeom {

enum class MeasureTag {
    SemanticEntropy,
    PermutationEntropy,
    InformationPower,
    SpectralPower,
    EpRatio,
    Synchronizability,
};

const char* measure_name(MeasureTag tag);
MeasureTag measure_from_name(std::string_view name); // throws SpecError

/// Per-window values of one measure. Undefined windows carry a NaN sentinel
/// and are listed in undefined_windows.
struct WindowedSeries {
    MeasureTag measure = MeasureTag::SemanticEntropy;
    std::vector<double> window_starts_s;
    std::vector<double> values;
    std::vector<std::size_t> undefined_windows;

    std::size_t size() const { return values.size(); }
    bool defined(std::size_t k) const;
};

/// Configuration counts of a symbol string; total == N - 2.
struct ConfigurationHistogram {
    std::array<std::uint64_t, kConfigurationCount> counts{};
    std::uint64_t total = 0;

    std::uint64_t count(int id) const { return counts[id - 1]; }
    double probability(int id) const;
};

ConfigurationHistogram histogram(const SymbolString& symbols);

/// Shannon entropy (bits) of the configuration frequency distribution,
/// in [0, log2 13]. Throws EmptyInput for an empty string.
double semantic_entropy(const SymbolString& symbols);
double semantic_entropy(const ConfigurationHistogram& hist);

/// Rank ties are broken by temporal order (stable ranking).
enum class TiePolicy { StableTemporal };

/// Shannon entropy (bits) of the 6 order-3 ordinal patterns over all
/// embedded triples, in [0, log2 6]. Throws EmptyInput for fewer than
/// 3 samples.
double permutation_entropy3(std::span<const double> window,
                            TiePolicy policy = TiePolicy::StableTemporal);

/// Which first difference multiplies the second difference.
enum class ProductSide { Left, Right };

const char* product_name(ProductSide side);
ProductSide product_from_name(std::string_view name); // throws SpecError

/// Mean absolute P-operator value over the window's interior points,
/// |d2 * d_left| under the default left-product convention. Throws
/// EmptyInput for fewer than 3 samples.
double information_power(std::span<const double> window, ProductSide side = ProductSide::Left);

/// Mean squared deviation from the window mean. Throws EmptyInput when empty.
double spectral_power(std::span<const double> window);

struct RatioParams {
    double tau = 0.0;
    double eps_power = 1e-12; // windows with power below this are undefined
    ProductSide product = ProductSide::Left;
};

/// Entropy, power and entropy/power per window. Windows whose information
/// power falls below eps_power get the undefined sentinel in the ratio.
struct RatioSeries {
    WindowedSeries entropy;
    WindowedSeries power;
    WindowedSeries ratio;
};

RatioSeries ratio_series(const Signal& signal, const WindowSpec& spec,
                         const RatioParams& params = {});

/// One windowed series of a single measure (entropy, permutation entropy,
/// information power or spectral power).
WindowedSeries measure_series(const Signal& signal, const WindowSpec& spec, MeasureTag tag,
                              const RatioParams& params = {});

struct SeriesMin {
    std::size_t index;
    double start_s;
    double value;
};

/// Earliest minimum among defined windows. Throws NoDefinedValue when every
/// window is undefined (or the series is empty).
SeriesMin locate_min(const WindowedSeries& series);

} // namespace tsgeom

#endif // TSGEOM_MEASURES_HPP
