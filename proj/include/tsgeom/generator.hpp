#ifndef TSGEOM_GENERATOR_HPP
#define TSGEOM_GENERATOR_HPP

#include <cstdint>
#include <string>
#include <string_view>

#include "tsgeom/signal.hpp"

namespace tsgeom {

enum class SignalKind {
    Constant,
    Ramp,
    Sine,
    Triangle,
    WhiteNoise,
    Ar1,
    SeizureSurrogate,
};

const char* kind_name(SignalKind kind);
SignalKind kind_from_name(std::string_view name); // throws SpecError

/// Declarative synthetic-signal description. Generation is a pure function
/// of the spec: identical specs (including seed) yield bit-identical samples.
struct GeneratorSpec {
    SignalKind kind = SignalKind::Constant;
    double duration_s = 1.0;
    double sample_rate = 256.0;
    std::uint64_t seed = 0;
    std::string label = "synthetic";

    // constant
    double value = 0.0;
    // ramp: start + slope * n (slope is per sample)
    double start = 0.0;
    double slope = 1.0;
    // sine
    double amplitude = 1.0;
    double frequency_hz = 1.0;
    double phase = 0.0;
    // white_noise / ar1 / surrogate baseline deviation
    double sigma = 1.0;
    // ar1: x[n] = ar_coeff * x[n-1] + sigma * g[n]
    double ar_coeff = 0.9;
    // seizure_surrogate: noise baseline, then a regular oscillation over
    // [burst_start_s, burst_end_s), then noise baseline again
    double burst_amplitude = 10.0;
    double burst_frequency_hz = 25.0;
    double burst_start_s = 8.0;
    double burst_end_s = 12.0;
};

/// Deterministic defaults mirroring a seizure-like recording: 8 s of unit
/// noise, 4 s of high-power regular oscillation, 8 s of unit noise at 256 Hz.
GeneratorSpec seizure_surrogate_defaults(std::uint64_t seed);

Signal generate(const GeneratorSpec& spec); // throws SpecError on invalid parameters

} // namespace tsgeom

#endif // TSGEOM_GENERATOR_HPP
