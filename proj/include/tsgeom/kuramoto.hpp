#ifndef TSGEOM_KURAMOTO_HPP
#define TSGEOM_KURAMOTO_HPP

#include <cstddef>
#include <span>
#include <string_view>
#include <variant>
#include <vector>

#include "tsgeom/measures.hpp"
#include "tsgeom/signal.hpp"

namespace tsgeom {

/// Standard uses sin(theta_j - theta_i), which synchronizes; Paper flips the
/// argument to sin(theta_i - theta_j), which drives phases apart.
enum class SignConvention { Standard, Paper };

const char* convention_name(SignConvention convention);
SignConvention convention_from_name(std::string_view name); // throws SpecError

/// Full pairwise coupling, non-negative with zero diagonal, row-major.
struct CouplingMatrix {
    std::size_t n = 0;
    std::vector<double> values;

    double at(std::size_t i, std::size_t j) const { return values[i * n + j]; }
};

/// N phase oscillators with natural frequencies, initial phases, and either
/// one global coupling constant K or a full matrix K_ij.
struct OscillatorNetwork {
    std::vector<double> natural_frequencies; // radians per second
    std::vector<double> initial_phases;      // radians
    std::variant<double, CouplingMatrix> coupling = 0.0;
    SignConvention sign_convention = SignConvention::Standard;

    std::size_t size() const { return natural_frequencies.size(); }
    bool has_matrix_coupling() const { return std::holds_alternative<CouplingMatrix>(coupling); }
    void validate() const; // throws SpecError
};

/// Fixed-step integration output: phases per step (step-major, including the
/// initial state) plus the sine-projected observables.
struct Trajectory {
    double dt = 0.01;
    std::size_t oscillators = 0;
    std::vector<double> phases; // (steps + 1) * N, row-major by step

    std::size_t steps() const { return oscillators ? phases.size() / oscillators - 1 : 0; }
    double phase(std::size_t step, std::size_t i) const { return phases[step * oscillators + i]; }
    std::span<const double> phases_at(std::size_t step) const;

    /// Observable s_i[t] = sin(theta_i[t]) as a Signal at rate 1/dt.
    Signal observable(std::size_t i) const;

    /// Order parameter r at every step.
    std::vector<double> order_parameter_series() const;
};

/// Classic RK4 with fixed step dt over
///   dtheta_i/dt = omega_i + (K/N) sum_{j != i} sin(theta_j - theta_i)
/// (or the matrix-coupled / flipped-sign variants). Deterministic; throws
/// DivergenceError with the step index if the state becomes non-finite.
Trajectory integrate(const OscillatorNetwork& net, double dt, std::size_t steps);

/// r = |(1/N) sum exp(i * theta_j)|, in [0, 1].
double order_parameter(std::span<const double> phases);

/// K_i = sum_{j != i} K_ij for matrix coupling; K itself for global coupling
/// (kept independent of N so S_i stays comparable across network sizes).
double marginal_coupling(const OscillatorNetwork& net, std::size_t i);

/// Per-window S_i = E_i / (P_i * K_i); undefined-sentinel handling matches
/// ratio_series. Throws InvalidInput for k_i <= 0.
WindowedSeries synchronizability(const Signal& observable, double k_i, const WindowSpec& window,
                                 const RatioParams& params = {});

} // namespace tsgeom

#endif // TSGEOM_KURAMOTO_HPP
