#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>

#include "oracles.hpp"
#include "tsgeom/generator.hpp"
#include "tsgeom/kuramoto.hpp"
#include "tsgeom/rng.hpp"

using namespace tsgeom;

namespace {

OscillatorNetwork seeded_network(std::size_t n, double coupling, std::uint64_t seed) {
    OscillatorNetwork net;
    Rng rng(seed);
    net.natural_frequencies.resize(n);
    for (double& w : net.natural_frequencies) w = rng.normal();
    net.initial_phases.resize(n);
    for (double& p : net.initial_phases) p = rng.uniform(0.0, 2.0 * std::numbers::pi);
    net.coupling = coupling;
    return net;
}

double tail_mean_order(const Trajectory& traj) {
    const auto r = traj.order_parameter_series();
    const std::size_t tail = r.size() / 5; // last 20 %
    double sum = 0.0;
    for (std::size_t k = r.size() - tail; k < r.size(); ++k) sum += r[k];
    return sum / static_cast<double>(tail);
}

} // namespace

TEST_SUITE("kuramoto") {

TEST_CASE("network validation") {
    OscillatorNetwork net;
    CHECK_THROWS_AS(net.validate(), SpecError); // empty

    net = seeded_network(3, 1.0, 1);
    net.initial_phases.pop_back();
    CHECK_THROWS_AS(net.validate(), SpecError);

    net = seeded_network(2, 0.0, 1);
    CouplingMatrix m;
    m.n = 2;
    m.values = {0.0, -1.0, 1.0, 0.0}; // negative entry
    net.coupling = m;
    CHECK_THROWS_AS(net.validate(), SpecError);
    m.values = {0.5, 1.0, 1.0, 0.0}; // nonzero diagonal
    net.coupling = m;
    CHECK_THROWS_AS(net.validate(), SpecError);
    m.values = {0.0, 1.0, 1.0, 0.0};
    net.coupling = m;
    CHECK_NOTHROW(net.validate());
}

TEST_CASE("decoupled oscillators drift at their natural frequencies") {
    OscillatorNetwork net = seeded_network(4, 0.0, 9);
    const double dt = 0.01;
    const std::size_t steps = 2000;
    const Trajectory traj = integrate(net, dt, steps);
    for (std::size_t i = 0; i < net.size(); ++i) {
        const double expected = net.initial_phases[i] + net.natural_frequencies[i] * dt *
                                                            static_cast<double>(steps);
        CHECK(traj.phase(steps, i) == doctest::Approx(expected).epsilon(1e-9));
    }
}

TEST_CASE("equal-frequency pair closes its gap monotonically") {
    OscillatorNetwork net;
    net.natural_frequencies = {1.3, 1.3};
    net.initial_phases = {0.0, 0.5};
    net.coupling = 1.0;
    const Trajectory traj = integrate(net, 0.01, 2000); // 20 s
    double previous = 0.5;
    for (std::size_t s = 1; s <= traj.steps(); ++s) {
        const double gap = std::fabs(traj.phase(s, 1) - traj.phase(s, 0));
        CHECK(gap <= previous + 1e-12);
        previous = gap;
    }
    CHECK(previous < 1e-3);
    // matches the closed-form solution of the gap equation
    const double exact = oracles::two_oscillator_gap(0.5, 1.0, 20.0);
    CHECK(previous == doctest::Approx(exact).epsilon(1e-6));
}

TEST_CASE("integration matches an independent RK4") {
    OscillatorNetwork net = seeded_network(3, 2.0, 21);
    const Trajectory traj = integrate(net, 0.05, 100);
    const auto reference = oracles::rk4_global(net.initial_phases, net.natural_frequencies,
                                               2.0, 0.05, 100);
    for (std::size_t i = 0; i < 3; ++i)
        CHECK(traj.phase(100, i) == doctest::Approx(reference[i]).epsilon(1e-12));
}

TEST_CASE("trajectories are reproducible bit for bit") {
    OscillatorNetwork net = seeded_network(10, 5.0, 77);
    const Trajectory a = integrate(net, 0.01, 1000);
    const Trajectory b = integrate(net, 0.01, 1000);
    CHECK(a.phases == b.phases);
}

TEST_CASE("paper sign convention pushes the pair apart") {
    OscillatorNetwork net;
    net.natural_frequencies = {0.0, 0.0};
    net.initial_phases = {0.0, 0.5};
    net.coupling = 1.0;
    net.sign_convention = SignConvention::Paper;
    const Trajectory traj = integrate(net, 0.01, 500);
    const double final_gap = std::fabs(traj.phase(500, 1) - traj.phase(500, 0));
    CHECK(final_gap > 0.5);
}

TEST_CASE("integration reports divergence with the step index") {
    OscillatorNetwork net;
    net.natural_frequencies = {1e308, -1e308};
    net.initial_phases = {0.0, 0.0};
    net.coupling = 1.0;
    CHECK_THROWS_AS(integrate(net, 10.0, 5), DivergenceError);
}

TEST_CASE("order parameter endpoints") {
    CHECK(order_parameter(std::vector<double>{0.7, 0.7, 0.7}) == doctest::Approx(1.0).epsilon(1e-15));
    const double pi = std::numbers::pi;
    CHECK(order_parameter(std::vector<double>{0.0, pi / 2, pi, 3 * pi / 2}) ==
          doctest::Approx(0.0).epsilon(1e-15));
    CHECK(order_parameter(std::vector<double>{0.0, pi}) == doctest::Approx(0.0).epsilon(1e-15));
    CHECK_THROWS_AS(order_parameter(std::vector<double>{}), InvalidInput);
}

TEST_CASE("marginal coupling") {
    OscillatorNetwork net;
    net.natural_frequencies = {0, 0, 0, 0};
    net.initial_phases = {0, 0, 0, 0};
    CouplingMatrix m;
    m.n = 4;
    m.values = {0, 1, 2, 3,
                1, 0, 0, 0,
                2, 0, 0, 0,
                3, 0, 0, 0};
    net.coupling = m;
    CHECK(marginal_coupling(net, 0) == 6.0);
    CHECK(marginal_coupling(net, 1) == 1.0);

    net.coupling = 5.0;
    CHECK(marginal_coupling(net, 0) == 5.0);
    CHECK(marginal_coupling(net, 3) == 5.0);

    m.values.assign(16, 0.0);
    net.coupling = m;
    CHECK(marginal_coupling(net, 2) == 0.0);
    // a zero marginal coupling leaves synchronizability undefined
    const Signal obs(std::vector<double>(64, 0.5), 32.0);
    CHECK_THROWS_AS(synchronizability(obs, 0.0, WindowSpec(32, 32)), InvalidInput);
}

TEST_CASE("synchronizability divides the ratio by the marginal coupling") {
    GeneratorSpec spec;
    spec.kind = SignalKind::Triangle;
    spec.duration_s = 100.0;
    spec.sample_rate = 1.0;
    const Signal tri = generate(spec); // per window: E = 1 bit, P = 2
    const WindowedSeries s = synchronizability(tri, 4.0, WindowSpec(100, 100));
    REQUIRE(s.size() == 1);
    CHECK(s.measure == MeasureTag::Synchronizability);
    CHECK(s.values[0] == 0.125);

    const Signal flat(std::vector<double>(64, 1.0), 32.0);
    const WindowedSeries undef = synchronizability(flat, 4.0, WindowSpec(64, 64));
    REQUIRE(undef.size() == 1);
    CHECK_FALSE(undef.defined(0));
    CHECK(undef.undefined_windows == std::vector<std::size_t>{0});
}

TEST_CASE("rotational and frequency-shift invariance") {
    OscillatorNetwork base = seeded_network(5, 1.5, 33);
    const Trajectory t0 = integrate(base, 0.01, 1000);

    OscillatorNetwork rotated = base;
    for (double& p : rotated.initial_phases) p += 1.234;
    const Trajectory t1 = integrate(rotated, 0.01, 1000);

    OscillatorNetwork shifted = base;
    for (double& w : shifted.natural_frequencies) w += 0.7;
    const Trajectory t2 = integrate(shifted, 0.01, 1000);

    const auto r0 = t0.order_parameter_series();
    const auto r1 = t1.order_parameter_series();
    for (std::size_t s = 0; s < r0.size(); ++s) CHECK(r1[s] == doctest::Approx(r0[s]).epsilon(1e-9));

    for (std::size_t s = 0; s <= t0.steps(); s += 100) {
        for (std::size_t i = 1; i < 5; ++i) {
            const double gap0 = t0.phase(s, i) - t0.phase(s, 0);
            CHECK(t1.phase(s, i) - t1.phase(s, 0) == doctest::Approx(gap0).epsilon(1e-9));
            CHECK(t2.phase(s, i) - t2.phase(s, 0) == doctest::Approx(gap0).epsilon(1e-9));
        }
    }
}

TEST_CASE("halving dt converges at fourth order") {
    // gap equation has the closed form tan(d/2) = tan(d0/2) exp(-Kt)
    OscillatorNetwork net;
    net.natural_frequencies = {0.0, 0.0};
    net.initial_phases = {0.0, 2.0};
    net.coupling = 1.0;
    const double exact = oracles::two_oscillator_gap(2.0, 1.0, 5.0);

    auto gap_error = [&](double dt) {
        const auto steps = static_cast<std::size_t>(std::llround(5.0 / dt));
        const Trajectory traj = integrate(net, dt, steps);
        return std::fabs((traj.phase(steps, 1) - traj.phase(steps, 0)) - exact);
    };
    const double order = std::log2(gap_error(0.2) / gap_error(0.1));
    CHECK(order >= 4.0);
    CHECK(order <= 5.0);
}

TEST_CASE("stronger coupling raises the time-averaged order parameter") {
    const OscillatorNetwork base = seeded_network(10, 0.0, 1);
    double previous = -1.0;
    for (double coupling : {0.1, 1.0, 2.0, 5.0}) {
        OscillatorNetwork net = base;
        net.coupling = coupling;
        const double r = tail_mean_order(integrate(net, 0.01, 5000));
        CHECK(r >= previous);
        previous = r;
    }
}

TEST_CASE("median synchronizability drops with strong coupling") {
    std::vector<double> weak, strong;
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        for (double coupling : {0.1, 5.0}) {
            OscillatorNetwork net = seeded_network(10, coupling, 1000 + seed);
            const Trajectory traj = integrate(net, 0.01, 3000);
            auto& bucket = coupling == 0.1 ? weak : strong;
            for (std::size_t i = 0; i < net.size(); ++i) {
                const Signal obs = traj.observable(i);
                const WindowedSeries s =
                    synchronizability(obs, coupling, WindowSpec(obs.size(), obs.size()));
                if (s.defined(0)) bucket.push_back(s.values[0]);
            }
        }
    }
    REQUIRE(weak.size() > 100);
    REQUIRE(strong.size() > 100);
    auto median = [](std::vector<double>& v) {
        std::sort(v.begin(), v.end());
        return v[v.size() / 2];
    };
    CHECK(median(strong) < median(weak));
}

} // TEST_SUITE
