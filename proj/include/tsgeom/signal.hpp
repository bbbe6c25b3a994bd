#ifndef TSGEOM_SIGNAL_HPP
#define TSGEOM_SIGNAL_HPP

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "tsgeom/errors.hpp"

namespace tsgeom {

/// A finite sequence of real amplitudes sampled at a fixed rate.
/// Every sample is finite and sample_rate > 0; both are checked on
/// construction so downstream analysis never revalidates.
struct Signal {
    std::vector<double> samples;
    double sample_rate = 1.0; // samples per second
    std::string label;

    Signal() = default;
    Signal(std::vector<double> samples, double sample_rate, std::string label = "");

    std::size_t size() const { return samples.size(); }
    double duration_s() const { return static_cast<double>(samples.size()) / sample_rate; }
    std::span<const double> view() const { return samples; }
    std::span<const double> view(std::size_t begin, std::size_t end) const;
};

/// Sliding-window geometry in sample counts. width >= 3 so every window
/// holds at least one interior triple.
struct WindowSpec {
    std::size_t width;
    std::size_t hop;

    WindowSpec(std::size_t width, std::size_t hop);

    /// Converts second-based window/hop to sample counts (rounded).
    static WindowSpec from_seconds(double window_s, double hop_s, double sample_rate);
};

/// Half-open index range [begin, end).
struct IndexRange {
    std::size_t begin;
    std::size_t end;

    std::size_t size() const { return end - begin; }
    bool operator==(const IndexRange&) const = default;
};

/// All ranges [k*hop, k*hop + width) that fit inside the signal, in order.
/// A signal shorter than the width yields an empty result, not an error.
std::vector<IndexRange> windows(const Signal& signal, const WindowSpec& spec);

} // namespace tsgeom

#endif // TSGEOM_SIGNAL_HPP
