#include "tsgeom/generator.hpp"

#include <cmath>
#include <numbers>

#include "tsgeom/rng.hpp"

namespace tsgeom {

namespace {

void require(bool ok, const char* what) {
    if (!ok) throw SpecError(what);
}

void require_finite(double v, const char* what) {
    if (!std::isfinite(v)) throw SpecError(std::string("generate: non-finite ") + what);
}

} // namespace

const char* kind_name(SignalKind kind) {
    switch (kind) {
    case SignalKind::Constant: return "constant";
    case SignalKind::Ramp: return "ramp";
    case SignalKind::Sine: return "sine";
    case SignalKind::Triangle: return "triangle";
    case SignalKind::WhiteNoise: return "white_noise";
    case SignalKind::Ar1: return "ar1";
    case SignalKind::SeizureSurrogate: return "seizure_surrogate";
    }
    return "unknown";
}

SignalKind kind_from_name(std::string_view name) {
    if (name == "constant") return SignalKind::Constant;
    if (name == "ramp") return SignalKind::Ramp;
    if (name == "sine") return SignalKind::Sine;
    if (name == "triangle") return SignalKind::Triangle;
    if (name == "white_noise") return SignalKind::WhiteNoise;
    if (name == "ar1") return SignalKind::Ar1;
    if (name == "seizure_surrogate") return SignalKind::SeizureSurrogate;
    throw SpecError("unknown signal kind: " + std::string(name));
}

GeneratorSpec seizure_surrogate_defaults(std::uint64_t seed) {
    GeneratorSpec spec;
    spec.kind = SignalKind::SeizureSurrogate;
    spec.duration_s = 20.0;
    spec.sample_rate = 256.0;
    spec.seed = seed;
    spec.label = "surrogate";
    return spec;
}

Signal generate(const GeneratorSpec& spec) {
    require(std::isfinite(spec.sample_rate) && spec.sample_rate > 0.0,
            "generate: sample_rate must be finite and > 0");
    require(std::isfinite(spec.duration_s) && spec.duration_s > 0.0,
            "generate: duration_s must be finite and > 0");
    const auto n = static_cast<std::size_t>(std::llround(spec.duration_s * spec.sample_rate));
    require(n >= 1, "generate: spec yields no samples");

    std::vector<double> samples(n);
    const double fs = spec.sample_rate;
    const double two_pi = 2.0 * std::numbers::pi;

    switch (spec.kind) {
    case SignalKind::Constant: {
        require_finite(spec.value, "value");
        for (auto& s : samples) s = spec.value;
        break;
    }
    case SignalKind::Ramp: {
        require_finite(spec.start, "start");
        require_finite(spec.slope, "slope");
        for (std::size_t i = 0; i < n; ++i)
            samples[i] = spec.start + spec.slope * static_cast<double>(i);
        break;
    }
    case SignalKind::Sine: {
        require_finite(spec.amplitude, "amplitude");
        require_finite(spec.frequency_hz, "frequency");
        require_finite(spec.phase, "phase");
        for (std::size_t i = 0; i < n; ++i)
            samples[i] = spec.amplitude *
                         std::sin(two_pi * spec.frequency_hz * static_cast<double>(i) / fs + spec.phase);
        break;
    }
    case SignalKind::Triangle: {
        // exact period-2 unit step so closed-form measure values hold
        for (std::size_t i = 0; i < n; ++i) samples[i] = static_cast<double>(i % 2);
        break;
    }
    case SignalKind::WhiteNoise: {
        require(std::isfinite(spec.sigma) && spec.sigma >= 0.0, "generate: sigma must be >= 0");
        Rng rng(spec.seed);
        for (auto& s : samples) s = spec.sigma * rng.normal();
        break;
    }
    case SignalKind::Ar1: {
        require(std::isfinite(spec.sigma) && spec.sigma >= 0.0, "generate: sigma must be >= 0");
        require(std::isfinite(spec.ar_coeff) && std::abs(spec.ar_coeff) < 1.0,
                "generate: ar_coeff must satisfy |rho| < 1");
        Rng rng(spec.seed);
        double prev = spec.sigma * rng.normal();
        samples[0] = prev;
        for (std::size_t i = 1; i < n; ++i) {
            prev = spec.ar_coeff * prev + spec.sigma * rng.normal();
            samples[i] = prev;
        }
        break;
    }
    case SignalKind::SeizureSurrogate: {
        require(std::isfinite(spec.sigma) && spec.sigma >= 0.0, "generate: sigma must be >= 0");
        require_finite(spec.burst_amplitude, "burst_amplitude");
        require_finite(spec.burst_frequency_hz, "burst_frequency");
        require(spec.burst_start_s >= 0.0 && spec.burst_end_s >= spec.burst_start_s &&
                    spec.burst_end_s <= spec.duration_s,
                "generate: burst segment must lie inside [0, duration]");
        Rng rng(spec.seed);
        for (std::size_t i = 0; i < n; ++i) {
            const double t = static_cast<double>(i) / fs;
            if (t >= spec.burst_start_s && t < spec.burst_end_s) {
                samples[i] = spec.burst_amplitude *
                             std::sin(two_pi * spec.burst_frequency_hz * (t - spec.burst_start_s));
            } else {
                samples[i] = spec.sigma * rng.normal();
            }
        }
        break;
    }
    }

    return Signal(std::move(samples), fs, spec.label);
}

} // namespace tsgeom
