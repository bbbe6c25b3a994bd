#include "tsgeom/signal.hpp"

#include <cmath>
#include <utility>

namespace tsgeom {

Signal::Signal(std::vector<double> samples_in, double sample_rate_in, std::string label_in)
    : samples(std::move(samples_in)), sample_rate(sample_rate_in), label(std::move(label_in)) {
    if (!(sample_rate > 0.0) || !std::isfinite(sample_rate))
        throw InvalidInput("Signal: sample_rate must be finite and > 0");
    for (std::size_t i = 0; i < samples.size(); ++i) {
        if (!std::isfinite(samples[i]))
            throw InvalidInput("Signal: non-finite sample at index " + std::to_string(i));
    }
}

std::span<const double> Signal::view(std::size_t begin, std::size_t end) const {
    if (begin > end || end > samples.size())
        throw InvalidInput("Signal: view range out of bounds");
    return std::span<const double>(samples).subspan(begin, end - begin);
}

WindowSpec::WindowSpec(std::size_t width_in, std::size_t hop_in) : width(width_in), hop(hop_in) {
    if (width < 3) throw InvalidInput("WindowSpec: width must be >= 3");
    if (hop < 1) throw InvalidInput("WindowSpec: hop must be >= 1");
}

WindowSpec WindowSpec::from_seconds(double window_s, double hop_s, double sample_rate) {
    if (!(sample_rate > 0.0) || !std::isfinite(sample_rate))
        throw InvalidInput("WindowSpec: sample_rate must be finite and > 0");
    if (!(window_s > 0.0) || !(hop_s > 0.0))
        throw InvalidInput("WindowSpec: window and hop must be > 0 seconds");
    const auto width = static_cast<std::size_t>(std::llround(window_s * sample_rate));
    const auto hop = static_cast<std::size_t>(std::llround(hop_s * sample_rate));
    return WindowSpec(width < 3 ? 3 : width, hop < 1 ? 1 : hop);
}

std::vector<IndexRange> windows(const Signal& signal, const WindowSpec& spec) {
    std::vector<IndexRange> out;
    const std::size_t n = signal.size();
    if (n < spec.width) return out;
    out.reserve((n - spec.width) / spec.hop + 1);
    for (std::size_t start = 0; start + spec.width <= n; start += spec.hop)
        out.push_back(IndexRange{start, start + spec.width});
    return out;
}

} // namespace tsgeom
