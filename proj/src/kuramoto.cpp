#include "tsgeom/kuramoto.hpp"

#include <cmath>

namespace tsgeom {

const char* convention_name(SignConvention convention) {
    return convention == SignConvention::Standard ? "standard" : "paper";
}

SignConvention convention_from_name(std::string_view name) {
    if (name == "standard") return SignConvention::Standard;
    if (name == "paper") return SignConvention::Paper;
    throw SpecError("unknown sign convention: " + std::string(name));
}

void OscillatorNetwork::validate() const {
    const std::size_t n = natural_frequencies.size();
    if (n < 1) throw SpecError("network: need at least one oscillator");
    if (initial_phases.size() != n)
        throw SpecError("network: initial_phases length does not match oscillator count");
    for (double w : natural_frequencies)
        if (!std::isfinite(w)) throw SpecError("network: non-finite natural frequency");
    for (double p : initial_phases)
        if (!std::isfinite(p)) throw SpecError("network: non-finite initial phase");
    if (const auto* k = std::get_if<double>(&coupling)) {
        if (!std::isfinite(*k)) throw SpecError("network: non-finite coupling constant");
    } else {
        const auto& m = std::get<CouplingMatrix>(coupling);
        if (m.n != n || m.values.size() != n * n)
            throw SpecError("network: coupling matrix dimensions do not match oscillator count");
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                const double v = m.at(i, j);
                if (!std::isfinite(v) || v < 0.0)
                    throw SpecError("network: coupling entries must be finite and >= 0");
                if (i == j && v != 0.0)
                    throw SpecError("network: coupling matrix diagonal must be zero");
            }
        }
    }
}

namespace {

struct Derivative {
    const OscillatorNetwork& net;
    double flip; // +1 for sin(theta_j - theta_i), -1 for the paper's sign

    void operator()(std::span<const double> theta, std::span<double> dtheta) const {
        const std::size_t n = theta.size();
        if (const auto* k = std::get_if<double>(&net.coupling)) {
            const double gain = *k / static_cast<double>(n);
            for (std::size_t i = 0; i < n; ++i) {
                double sum = 0.0;
                for (std::size_t j = 0; j < n; ++j) {
                    if (j == i) continue;
                    sum += std::sin(flip * (theta[j] - theta[i]));
                }
                dtheta[i] = net.natural_frequencies[i] + gain * sum;
            }
        } else {
            const auto& m = std::get<CouplingMatrix>(net.coupling);
            const double inv_n = 1.0 / static_cast<double>(n);
            for (std::size_t i = 0; i < n; ++i) {
                double sum = 0.0;
                for (std::size_t j = 0; j < n; ++j) {
                    if (j == i) continue;
                    sum += m.at(i, j) * std::sin(flip * (theta[j] - theta[i]));
                }
                dtheta[i] = net.natural_frequencies[i] + inv_n * sum;
            }
        }
    }
};

} // namespace

Trajectory integrate(const OscillatorNetwork& net, double dt, std::size_t steps) {
    net.validate();
    if (!(dt > 0.0) || !std::isfinite(dt)) throw InvalidInput("integrate: dt must be finite and > 0");
    if (steps < 1) throw InvalidInput("integrate: steps must be >= 1");

    const std::size_t n = net.size();
    const Derivative deriv{net, net.sign_convention == SignConvention::Standard ? 1.0 : -1.0};

    Trajectory traj;
    traj.dt = dt;
    traj.oscillators = n;
    traj.phases.resize((steps + 1) * n);

    std::vector<double> state(net.initial_phases);
    std::vector<double> k1(n), k2(n), k3(n), k4(n), scratch(n);
    std::copy(state.begin(), state.end(), traj.phases.begin());

    for (std::size_t step = 0; step < steps; ++step) {
        deriv(state, k1);
        for (std::size_t i = 0; i < n; ++i) scratch[i] = state[i] + 0.5 * dt * k1[i];
        deriv(scratch, k2);
        for (std::size_t i = 0; i < n; ++i) scratch[i] = state[i] + 0.5 * dt * k2[i];
        deriv(scratch, k3);
        for (std::size_t i = 0; i < n; ++i) scratch[i] = state[i] + dt * k3[i];
        deriv(scratch, k4);
        for (std::size_t i = 0; i < n; ++i) {
            state[i] += dt / 6.0 * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
            if (!std::isfinite(state[i])) throw DivergenceError(step + 1);
        }
        std::copy(state.begin(), state.end(), traj.phases.begin() + static_cast<std::ptrdiff_t>((step + 1) * n));
    }
    return traj;
}

std::span<const double> Trajectory::phases_at(std::size_t step) const {
    return std::span<const double>(phases).subspan(step * oscillators, oscillators);
}

Signal Trajectory::observable(std::size_t i) const {
    if (i >= oscillators) throw InvalidInput("observable: oscillator index out of range");
    std::vector<double> samples(steps() + 1);
    for (std::size_t step = 0; step < samples.size(); ++step)
        samples[step] = std::sin(phase(step, i));
    return Signal(std::move(samples), 1.0 / dt, "osc" + std::to_string(i));
}

std::vector<double> Trajectory::order_parameter_series() const {
    std::vector<double> out(steps() + 1);
    for (std::size_t step = 0; step < out.size(); ++step)
        out[step] = order_parameter(phases_at(step));
    return out;
}

double order_parameter(std::span<const double> phases) {
    if (phases.empty()) throw InvalidInput("order_parameter: no phases");
    double re = 0.0, im = 0.0;
    for (double theta : phases) {
        re += std::cos(theta);
        im += std::sin(theta);
    }
    const double n = static_cast<double>(phases.size());
    return std::sqrt(re * re + im * im) / n;
}

double marginal_coupling(const OscillatorNetwork& net, std::size_t i) {
    if (i >= net.size()) throw InvalidInput("marginal_coupling: oscillator index out of range");
    if (const auto* k = std::get_if<double>(&net.coupling)) return *k;
    const auto& m = std::get<CouplingMatrix>(net.coupling);
    double sum = 0.0;
    for (std::size_t j = 0; j < m.n; ++j)
        if (j != i) sum += m.at(i, j);
    return sum;
}

WindowedSeries synchronizability(const Signal& observable, double k_i, const WindowSpec& window,
                                 const RatioParams& params) {
    if (!(k_i > 0.0) || !std::isfinite(k_i))
        throw InvalidInput("synchronizability: marginal coupling must be finite and > 0");
    RatioSeries ratio = ratio_series(observable, window, params);
    WindowedSeries out = std::move(ratio.ratio);
    out.measure = MeasureTag::Synchronizability;
    for (double& v : out.values)
        if (!std::isnan(v)) v /= k_i;
    return out;
}

} // namespace tsgeom
