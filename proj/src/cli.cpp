#include "tsgeom/cli.hpp"

#include <algorithm>
#include <cmath>
#include <iostream>
#include <optional>

#include <CLI11.hpp>
#include <json.hpp>

#include "tsgeom/csv.hpp"
#include "tsgeom/generator.hpp"
#include "tsgeom/kuramoto.hpp"
#include "tsgeom/measures.hpp"
#include "tsgeom/report.hpp"
#include "tsgeom/rng.hpp"
#include "tsgeom/symbolize.hpp"
#include "tsgeom/transitions.hpp"
#include "tsgeom/version.hpp"

namespace tsgeom::cli {

namespace {

struct CommonOptions {
    std::string input;
    std::string out;
    std::optional<double> fs;
    double tau = 0.0;
    double window_s = 2.0;
    std::optional<double> hop_s; // defaults to window_s
    double eps_power = 1e-12;
    std::string product = "left";
    std::string convention = "standard";
    std::uint64_t seed = 0;
    std::string format = "json";
    bool strict = false;

    double hop() const { return hop_s.value_or(window_s); }
};

void add_analysis_flags(CLI::App* cmd, CommonOptions& opt, bool with_input = true) {
    if (with_input) cmd->add_option("input", opt.input, "input CSV file")->required();
    cmd->add_option("--fs", opt.fs, "sample rate (samples/s); may instead come from a '# fs=' directive");
    cmd->add_option("--tau", opt.tau, "sign dead band half-width (default 0: exact comparison)");
    cmd->add_option("--window-s", opt.window_s, "window length in seconds (default 2)");
    cmd->add_option("--hop-s", opt.hop_s, "hop in seconds (default: window length)");
    cmd->add_option("--eps-power", opt.eps_power, "power below this makes a ratio window undefined");
    cmd->add_option("--product", opt.product, "P-operator product side")
        ->check(CLI::IsMember({"left", "right"}));
    cmd->add_option("--convention", opt.convention, "coupling sign convention")
        ->check(CLI::IsMember({"standard", "paper"}));
    cmd->add_option("--seed", opt.seed, "seed recorded in the report");
    cmd->add_option("--format", opt.format, "report format")->check(CLI::IsMember({"json", "csv"}));
    cmd->add_option("--out", opt.out, "output file (json) or file prefix (csv); stdout when omitted");
    cmd->add_flag("--strict", opt.strict, "treat malformed CSV rows as errors");
}

ReportParameters make_parameters(const CommonOptions& opt, double fs) {
    ReportParameters p;
    p.fs = fs;
    p.tau = opt.tau;
    p.window_s = opt.window_s;
    p.hop_s = opt.hop();
    p.eps_power = opt.eps_power;
    p.product = product_from_name(opt.product);
    p.convention = convention_from_name(opt.convention);
    p.seed = opt.seed;
    p.strict = opt.strict;
    return p;
}

AnalysisReport make_report(const std::string& command, const CommonOptions& opt,
                           const ChannelTable& table, const std::string& raw_bytes) {
    AnalysisReport report;
    report.tool = kToolName;
    report.version = kToolVersion;
    report.command = command;
    report.input_path = table.source_path;
    report.input_digest = content_digest(raw_bytes);
    report.rows = table.rows;
    report.skipped_rows = table.skipped_rows;
    report.parameters = make_parameters(opt, table.channels.empty() ? 0.0 : table.channels[0].sample_rate);
    return report;
}

ChannelTable load_input(const CommonOptions& opt, std::string& raw_bytes) {
    raw_bytes = read_file(opt.input);
    CsvOptions csv_opt;
    csv_opt.sample_rate = opt.fs;
    csv_opt.strict = opt.strict;
    ChannelTable table = parse_csv(raw_bytes, opt.input, csv_opt);
    // report assembly is order-independent: channels are sorted by name
    std::sort(table.channels.begin(), table.channels.end(),
              [](const Signal& a, const Signal& b) { return a.label < b.label; });
    return table;
}

RatioParams make_ratio_params(const CommonOptions& opt) {
    RatioParams params;
    params.tau = opt.tau;
    params.eps_power = opt.eps_power;
    params.product = product_from_name(opt.product);
    return params;
}

void emit_json(const AnalysisReport& report, const std::string& out_path) {
    const std::string bytes = render_json(report);
    if (out_path.empty()) std::cout << bytes;
    else write_file(out_path, bytes);
}

void emit_series_csv(const AnalysisReport& report, const std::string& prefix) {
    if (prefix.empty())
        throw UsageError("--format csv needs --out as a file prefix (one file per series)");
    for (const ChannelReport& ch : report.channels) {
        for (const WindowedSeries& s : ch.series) {
            const std::string path = prefix + "." + ch.name + "." + measure_name(s.measure) + ".csv";
            write_file(path, render_series_csv(s));
        }
    }
}

void emit(const AnalysisReport& report, const CommonOptions& opt) {
    if (opt.format == "json") emit_json(report, opt.out);
    else emit_series_csv(report, opt.out);
}

// ---- subcommand bodies ----------------------------------------------------

int run_symbolize(const CommonOptions& opt) {
    std::string raw;
    const ChannelTable table = load_input(opt, raw);
    if (opt.format != "json")
        throw UsageError("symbolize reports have no windowed series; use --format json");
    AnalysisReport report = make_report("symbolize", opt, table, raw);
    for (const Signal& signal : table.channels) {
        ChannelReport ch;
        ch.name = signal.label;
        ch.length = signal.size();
        const SymbolString symbols = symbolize(signal, opt.tau);
        ch.symbols = symbols.symbols;
        ch.histogram = histogram(symbols);
        report.channels.push_back(std::move(ch));
    }
    emit(report, opt);
    return 0;
}

int run_transitions(const CommonOptions& opt, bool windowed) {
    std::string raw;
    const ChannelTable table = load_input(opt, raw);
    if (opt.format != "json")
        throw UsageError("transition reports have no windowed series; use --format json");
    AnalysisReport report = make_report("transitions", opt, table, raw);
    for (const Signal& signal : table.channels) {
        ChannelReport ch;
        ch.name = signal.label;
        ch.length = signal.size();
        if (windowed) {
            const WindowSpec spec = WindowSpec::from_seconds(opt.window_s, opt.hop(), signal.sample_rate);
            for (const IndexRange& range : windows(signal, spec)) {
                WindowedMatrix wm;
                wm.start_s = static_cast<double>(range.begin) / signal.sample_rate;
                wm.matrix = count_transitions(
                    symbolize_span(signal.view(range.begin, range.end), opt.tau, range.begin));
                ch.windowed_matrices.push_back(std::move(wm));
            }
        } else {
            ch.matrix = count_transitions(symbolize(signal, opt.tau));
        }
        report.channels.push_back(std::move(ch));
    }
    emit(report, opt);
    return 0;
}

int run_measure(const CommonOptions& opt, const std::string& measures_csv) {
    std::string raw;
    const ChannelTable table = load_input(opt, raw);
    std::vector<MeasureTag> tags;
    std::size_t start = 0;
    const std::string list = measures_csv;
    while (start <= list.size()) {
        const std::size_t comma = list.find(',', start);
        const std::string name = list.substr(start, comma == std::string::npos ? std::string::npos
                                                                               : comma - start);
        if (!name.empty()) {
            const MeasureTag tag = measure_from_name(name);
            if (tag == MeasureTag::EpRatio || tag == MeasureTag::Synchronizability)
                throw UsageError("measure '" + name + "' is produced by the ratio/simulate command");
            tags.push_back(tag);
        }
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    if (tags.empty()) throw UsageError("no measures requested");

    AnalysisReport report = make_report("measure", opt, table, raw);
    const RatioParams params = make_ratio_params(opt);
    for (const Signal& signal : table.channels) {
        ChannelReport ch;
        ch.name = signal.label;
        ch.length = signal.size();
        const WindowSpec spec = WindowSpec::from_seconds(opt.window_s, opt.hop(), signal.sample_rate);
        for (MeasureTag tag : tags) ch.series.push_back(measure_series(signal, spec, tag, params));
        report.channels.push_back(std::move(ch));
    }
    emit(report, opt);
    return 0;
}

int run_ratio(const CommonOptions& opt) {
    std::string raw;
    const ChannelTable table = load_input(opt, raw);
    AnalysisReport report = make_report("ratio", opt, table, raw);
    const RatioParams params = make_ratio_params(opt);
    for (const Signal& signal : table.channels) {
        ChannelReport ch;
        ch.name = signal.label;
        ch.length = signal.size();
        const WindowSpec spec = WindowSpec::from_seconds(opt.window_s, opt.hop(), signal.sample_rate);
        RatioSeries series = ratio_series(signal, spec, params);
        bool any_defined = false;
        for (std::size_t k = 0; k < series.ratio.size(); ++k)
            if (series.ratio.defined(k)) any_defined = true;
        if (any_defined) ch.minimum = locate_min(series.ratio);
        ch.series.push_back(std::move(series.entropy));
        ch.series.push_back(std::move(series.power));
        ch.series.push_back(std::move(series.ratio));
        report.channels.push_back(std::move(ch));
    }
    emit(report, opt);
    return 0;
}

int run_generate(const CommonOptions& opt, const GeneratorSpec& spec) {
    if (opt.out.empty()) throw UsageError("generate needs --out for the signal CSV");
    const Signal signal = generate(spec);
    write_file(opt.out, render_signal_csv(std::span<const Signal>(&signal, 1)));
    return 0;
}

OscillatorNetwork network_from_json(const nlohmann::ordered_json& j) {
    OscillatorNetwork net;
    std::size_t n = 0;
    if (j.contains("n")) n = j.at("n").get<std::size_t>();
    if (j.contains("natural_frequencies")) {
        net.natural_frequencies = j.at("natural_frequencies").get<std::vector<double>>();
        n = net.natural_frequencies.size();
    }
    if (j.contains("initial_phases")) {
        net.initial_phases = j.at("initial_phases").get<std::vector<double>>();
        if (n == 0) n = net.initial_phases.size();
    }
    if (n == 0) throw SpecError("network: give n, natural_frequencies or initial_phases");

    // omitted arrays are drawn deterministically from the seed:
    // omega ~ N(0,1), phases ~ U[0, 2*pi)
    Rng rng(j.value("seed", std::uint64_t{0}));
    if (net.natural_frequencies.empty()) {
        net.natural_frequencies.resize(n);
        for (double& w : net.natural_frequencies) w = rng.normal();
    }
    if (net.initial_phases.empty()) {
        net.initial_phases.resize(n);
        for (double& p : net.initial_phases) p = rng.uniform(0.0, 2.0 * std::numbers::pi);
    }

    if (!j.contains("coupling")) throw SpecError("network: coupling missing");
    const auto& coupling = j.at("coupling");
    if (coupling.is_number()) {
        net.coupling = coupling.get<double>();
    } else if (coupling.is_array()) {
        CouplingMatrix m;
        m.n = n;
        m.values.reserve(n * n);
        for (const auto& row : coupling)
            for (const auto& cell : row) m.values.push_back(cell.get<double>());
        if (m.values.size() != n * n) throw SpecError("network: coupling matrix is not n x n");
        net.coupling = std::move(m);
    } else {
        throw SpecError("network: coupling must be a number or an n x n array");
    }
    if (j.contains("sign_convention"))
        net.sign_convention = convention_from_name(j.at("sign_convention").get<std::string>());
    net.validate();
    return net;
}

int run_simulate(const CommonOptions& opt, const std::string& net_path, double dt, double duration_s) {
    if (!(dt > 0.0)) throw UsageError("simulate: --dt must be > 0");
    if (!(duration_s > 0.0)) throw UsageError("simulate: --duration-s must be > 0");
    const std::string raw = read_file(net_path);
    nlohmann::ordered_json j;
    try {
        j = nlohmann::ordered_json::parse(raw);
    } catch (const nlohmann::json::parse_error& e) {
        throw SpecError("network: invalid JSON: " + std::string(e.what()));
    }
    OscillatorNetwork net = network_from_json(j);
    if (!opt.convention.empty() && !j.contains("sign_convention"))
        net.sign_convention = convention_from_name(opt.convention);

    const auto steps = static_cast<std::size_t>(std::llround(duration_s / dt));
    const Trajectory traj = integrate(net, dt, steps);

    AnalysisReport report;
    report.tool = kToolName;
    report.version = kToolVersion;
    report.command = "simulate";
    report.input_path = net_path;
    report.input_digest = content_digest(raw);
    report.rows = net.size();
    report.parameters = make_parameters(opt, 1.0 / dt);
    report.parameters.convention = net.sign_convention;
    report.parameters.seed = j.value("seed", std::uint64_t{0});
    report.parameters.dt = dt;

    const RatioParams params = make_ratio_params(opt);
    const WindowSpec spec = WindowSpec::from_seconds(opt.window_s, opt.hop(), 1.0 / dt);
    for (std::size_t i = 0; i < net.size(); ++i) {
        ChannelReport ch;
        ch.name = "osc" + std::to_string(i);
        const Signal obs = traj.observable(i);
        ch.length = obs.size();
        ch.marginal_coupling = marginal_coupling(net, i);
        ch.phases = std::vector<double>(traj.steps() + 1);
        for (std::size_t s = 0; s <= traj.steps(); ++s) (*ch.phases)[s] = traj.phase(s, i);
        ch.observable = obs.samples;
        if (*ch.marginal_coupling > 0.0)
            ch.series.push_back(synchronizability(obs, *ch.marginal_coupling, spec, params));
        report.channels.push_back(std::move(ch));
    }
    report.order_parameter = traj.order_parameter_series();

    emit(report, opt);
    return 0;
}

} // namespace

int run(const std::vector<std::string>& args) {
    CLI::App app{"geometric time-series symbolization, entropy/power measures and "
                 "coupled-oscillator simulation"};
    app.set_version_flag("--version", std::string(kToolVersion));
    app.require_subcommand(1);

    CommonOptions opt;

    // generate
    GeneratorSpec gen_spec;
    std::string gen_kind = "white_noise";
    auto* generate_cmd = app.add_subcommand("generate", "write a synthetic signal CSV");
    generate_cmd->add_option("--kind", gen_kind, "signal kind")
        ->check(CLI::IsMember({"constant", "ramp", "sine", "triangle", "white_noise", "ar1",
                               "seizure_surrogate"}));
    generate_cmd->add_option("--duration-s", gen_spec.duration_s, "signal length in seconds");
    generate_cmd->add_option("--fs", gen_spec.sample_rate, "sample rate");
    generate_cmd->add_option("--seed", gen_spec.seed, "generator seed");
    generate_cmd->add_option("--label", gen_spec.label, "channel name");
    generate_cmd->add_option("--value", gen_spec.value, "constant value");
    generate_cmd->add_option("--start", gen_spec.start, "ramp start");
    generate_cmd->add_option("--slope", gen_spec.slope, "ramp slope per sample");
    generate_cmd->add_option("--amplitude", gen_spec.amplitude, "sine amplitude");
    generate_cmd->add_option("--frequency", gen_spec.frequency_hz, "sine frequency (Hz)");
    generate_cmd->add_option("--phase", gen_spec.phase, "sine phase (radians)");
    generate_cmd->add_option("--sigma", gen_spec.sigma, "noise standard deviation");
    generate_cmd->add_option("--ar-coeff", gen_spec.ar_coeff, "AR(1) coefficient");
    generate_cmd->add_option("--burst-amplitude", gen_spec.burst_amplitude, "surrogate burst amplitude");
    generate_cmd->add_option("--burst-frequency", gen_spec.burst_frequency_hz, "surrogate burst frequency (Hz)");
    generate_cmd->add_option("--burst-start-s", gen_spec.burst_start_s, "surrogate burst start (s)");
    generate_cmd->add_option("--burst-end-s", gen_spec.burst_end_s, "surrogate burst end (s)");
    generate_cmd->add_option("--out", opt.out, "output CSV path")->required();

    auto* symbolize_cmd = app.add_subcommand("symbolize", "emit symbol strings and histograms");
    add_analysis_flags(symbolize_cmd, opt);

    bool transitions_windowed = false;
    auto* transitions_cmd = app.add_subcommand("transitions", "emit transition matrices and block sums");
    add_analysis_flags(transitions_cmd, opt);
    transitions_cmd->add_flag("--windowed", transitions_windowed,
                              "one matrix per window instead of the whole signal");

    std::string measures_csv = "semantic_entropy,permutation_entropy,information_power,spectral_power";
    auto* measure_cmd = app.add_subcommand("measure", "emit windowed measure series");
    add_analysis_flags(measure_cmd, opt);
    measure_cmd->add_option("--measures", measures_csv, "comma-separated measure names");

    auto* ratio_cmd = app.add_subcommand("ratio",
                                         "emit entropy, power and entropy/power series with the minimum");
    add_analysis_flags(ratio_cmd, opt);

    std::string net_path;
    double sim_dt = 0.01;
    double sim_duration = 50.0;
    auto* simulate_cmd = app.add_subcommand("simulate", "integrate a coupled-oscillator network");
    simulate_cmd->add_option("--net", net_path, "network spec JSON")->required();
    simulate_cmd->add_option("--dt", sim_dt, "integration step (s)");
    simulate_cmd->add_option("--duration-s", sim_duration, "simulated duration (s)");
    add_analysis_flags(simulate_cmd, opt, /*with_input=*/false);

    std::vector<std::string> cli_args(args.rbegin(), args.rend()); // CLI11 wants reversed argv tail
    try {
        app.parse(cli_args);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (generate_cmd->parsed()) {
            gen_spec.kind = kind_from_name(gen_kind);
            return run_generate(opt, gen_spec);
        }
        if (symbolize_cmd->parsed()) return run_symbolize(opt);
        if (transitions_cmd->parsed()) return run_transitions(opt, transitions_windowed);
        if (measure_cmd->parsed()) return run_measure(opt, measures_csv);
        if (ratio_cmd->parsed()) return run_ratio(opt);
        if (simulate_cmd->parsed()) return run_simulate(opt, net_path, sim_dt, sim_duration);
        throw UsageError("no subcommand given");
    } catch (const UsageError& e) {
        std::cerr << kToolName << ": " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << kToolName << ": " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << kToolName << ": " << e.what() << "\n";
        return 1;
    }
}

int run(int argc, const char* const* argv) {
    std::vector<std::string> args;
    args.reserve(static_cast<std::size_t>(argc > 0 ? argc - 1 : 0));
    for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
    return run(args);
}

} // namespace tsgeom::cli
