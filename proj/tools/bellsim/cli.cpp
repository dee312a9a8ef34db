// Copyright 2026 The bellsim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "bellsim/cli.hpp"

#include "bellsim/analysis.hpp"
#include "bellsim/coincidence.hpp"
#include "bellsim/hv_models.hpp"
#include "bellsim/io.hpp"
#include "bellsim/sim_engine.hpp"

#include "CLI11.hpp"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <memory>
#include <optional>
#include <ostream>
#include <sstream>

namespace bellsim::cli {

namespace {

constexpr std::uint64_t kDefaultPulsedTrials = 10'000'000;
constexpr std::uint64_t kDefaultEmissions = 200'000;

std::vector<std::string> const kModelNames{
    "epr-simple", "pearle", "clocked-core", "clocked-simplified",
    "clocked-optimized"};

// Model parameters as optional overrides of the per-model defaults.
struct ParamFlags {
    std::optional<double> ts, asym, gain, window;

    void attach(CLI::App *cmd) {
        cmd->add_option("--ts", ts, "Delay timescale in seconds (clocked-core)");
        cmd->add_option("--asym", asym, "Jitter asymmetry in (0, 1] (clocked-core)");
        cmd->add_option("--delay-gain", gain, "Cosine gain in the delay rule");
        cmd->add_option("--window", window, "Coincidence window in seconds");
    }

    [[nodiscard]] ModelParams resolve(ModelId model) const {
        ModelParams p = ModelParams::defaults(model);
        if (ts)
            p.timescale_ts = *ts;
        if (asym)
            p.asym = *asym;
        if (gain)
            p.delay_gain = *gain;
        if (window)
            p.coinc_window = *window;
        p.validate();
        return p;
    }
};

struct Angles {
    std::vector<double> alice_deg{0.0, 90.0};
    std::vector<double> bob_deg{45.0, 135.0};

    void attach(CLI::App *cmd) {
        cmd->add_option("--angles-a", alice_deg, "Alice's settings in degrees")
            ->delimiter(',')
            ->capture_default_str();
        cmd->add_option("--angles-b", bob_deg, "Bob's settings in degrees")
            ->delimiter(',')
            ->capture_default_str();
    }
};

std::vector<double> to_radians(std::vector<double> const &deg) {
    std::vector<double> rad;
    rad.reserve(deg.size());
    for (double d : deg)
        rad.push_back(d * kDegree);
    return rad;
}

std::string encode(ChshReport const &rep, std::string const &format) {
    return format == "csv" ? io::report_to_csv(rep) : io::report_to_json(rep);
}

// Output files are staged and only renamed into place once every one of
// them has been written, so a failed command leaves no partial output.
class Outputs {
  public:
    std::ostream &open(std::string const &path) {
        files_.push_back(std::make_unique<io::OutputFile>(path));
        return files_.back()->stream();
    }
    void commit() {
        for (auto &f : files_)
            f->commit();
    }

  private:
    std::vector<std::unique_ptr<io::OutputFile>> files_;
};

std::ifstream open_input(std::string const &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw std::runtime_error("cannot open '" + path + "'");
    return in;
}

struct ClockedAnalysis {
    ChshReport report;
    std::vector<CoincidencePair> pairs;
};

ClockedAnalysis analyse_records(std::vector<TrialRecord> const &records,
                                double window, std::vector<double> const &alice_deg,
                                std::vector<double> const &bob_deg,
                                std::string model) {
    auto const accepted = match_trial_paired(records, window);
    ClockedAnalysis out;
    out.pairs = pairs_from_records(accepted);
    auto const counts =
        coincidence_counts(out.pairs, alice_deg.size(), bob_deg.size());
    auto const singles =
        singles_from_records(records, alice_deg.size(), bob_deg.size());
    std::uint64_t left = 0, right = 0;
    for (auto const &r : records) {
        left += r.a_out != Outcome::None;
        right += r.b_out != Outcome::None;
    }
    out.report = assemble_clocked_report(counts.tables, left, right, singles,
                                         to_radians(alice_deg),
                                         to_radians(bob_deg), std::move(model));
    return out;
}

ClockedAnalysis analyse_streams(std::vector<DetectionEvent> const &left,
                                std::vector<DetectionEvent> const &right,
                                double window, std::vector<double> const &alice_deg,
                                std::vector<double> const &bob_deg,
                                std::string model) {
    auto match = match_streams(left, right, window);
    auto const counts =
        coincidence_counts(match.pairs, alice_deg.size(), bob_deg.size());
    std::optional<SinglesGrids> singles;
    auto has_emission = [](auto const &events) {
        return std::all_of(events.begin(), events.end(),
                           [](auto const &e) { return e.emission.has_value(); });
    };
    if (has_emission(left) && has_emission(right))
        singles = singles_from_streams(left, right, alice_deg.size(), bob_deg.size());
    ClockedAnalysis out;
    out.report = assemble_clocked_report(counts.tables, left.size(), right.size(),
                                         singles, to_radians(alice_deg),
                                         to_radians(bob_deg), std::move(model));
    out.pairs = std::move(match.pairs);
    return out;
}

// ------------------------------------------------------------- simulate

struct SimulateArgs {
    std::string model;
    std::optional<std::uint64_t> n;
    std::optional<std::uint64_t> seed;
    Angles angles;
    ParamFlags params;
    double period = 10.0 / 200000.0;
    std::string pairing = "trial";
    std::string out_path, format = "json";
    std::string tables_out, records_out, events_left, events_right, pairs_out;
};

int simulate(SimulateArgs const &a, std::ostream &out) {
    RunConfig config;
    config.model = parse_model(a.model);
    config.params = a.params.resolve(config.model);
    config.alice_settings = to_radians(a.angles.alice_deg);
    config.bob_settings = to_radians(a.angles.bob_deg);
    config.n = a.n.value_or(is_pulsed(config.model) ? kDefaultPulsedTrials
                                                    : kDefaultEmissions);
    config.seed = *a.seed;
    config.emission_period = a.period;
    config.validate();

    if (is_pulsed(config.model)) {
        if (!a.records_out.empty() || !a.events_left.empty() ||
            !a.events_right.empty() || !a.pairs_out.empty())
            throw std::invalid_argument(
                "event, record and pair files apply to clocked models only");
        TableGrid const tables = run_pulsed(config);
        ChshReport const rep = assemble_pulsed_report(
            tables, config.alice_settings, config.bob_settings, a.model);

        Outputs files;
        if (!a.tables_out.empty())
            io::write_tables(files.open(a.tables_out), tables,
                             a.angles.alice_deg, a.angles.bob_deg);
        if (!a.out_path.empty())
            files.open(a.out_path) << encode(rep, a.format);
        files.commit();
        out << "Trials: " << config.n << '\n' << io::report_summary(rep);
        return 0;
    }

    if (!a.tables_out.empty())
        throw std::invalid_argument(
            "--tables-out applies to pulsed models; use --records-out");
    ClockedRun const run = run_clocked(config);
    double const window = config.params.coinc_window;
    ClockedAnalysis const analysis =
        a.pairing == "stream"
            ? analyse_streams(run.left, run.right, window, a.angles.alice_deg,
                              a.angles.bob_deg, a.model)
            : analyse_records(run.records, window, a.angles.alice_deg,
                              a.angles.bob_deg, a.model);

    Outputs files;
    if (!a.events_left.empty())
        io::write_events(files.open(a.events_left), run.left, a.angles.alice_deg);
    if (!a.events_right.empty())
        io::write_events(files.open(a.events_right), run.right, a.angles.bob_deg);
    if (!a.records_out.empty())
        io::write_records(files.open(a.records_out), run.records,
                          a.angles.alice_deg, a.angles.bob_deg);
    if (!a.pairs_out.empty())
        io::write_pairs(files.open(a.pairs_out), analysis.pairs,
                        a.angles.alice_deg, a.angles.bob_deg);
    if (!a.out_path.empty())
        files.open(a.out_path) << encode(analysis.report, a.format);
    files.commit();
    out << "Emissions: " << config.n << "  pairing: " << a.pairing
        << "  window: " << window << '\n'
        << io::report_summary(analysis.report);
    return 0;
}

// ---------------------------------------------------------------- match

struct MatchArgs {
    std::string left, right, out_path;
    double window = 0.0;
    std::vector<double> alice_deg, bob_deg;
};

int match(MatchArgs const &a, std::ostream &out) {
    auto read = [](std::string const &path, std::vector<double> const &order) {
        auto in = open_input(path);
        if (order.empty())
            return io::read_events(in, path);
        return io::read_events(in, path, std::span<double const>(order));
    };
    io::EventFile const left = read(a.left, a.alice_deg);
    io::EventFile const right = read(a.right, a.bob_deg);
    StreamMatch const m = match_streams(left.events, right.events, a.window);

    Outputs files;
    if (!a.out_path.empty())
        io::write_pairs(files.open(a.out_path), m.pairs, left.settings_deg,
                        right.settings_deg);
    files.commit();

    auto const singles = std::max(left.events.size(), right.events.size());
    std::ostringstream os;
    os << std::setprecision(7);
    os << "Pairs: " << m.pairs.size() << '\n'
       << "Singles: left " << left.events.size() << ", right "
       << right.events.size() << '\n'
       << "Unmatched: left " << m.unmatched_left << ", right "
       << m.unmatched_right << '\n';

    auto const counts = coincidence_counts(m.pairs, left.settings_deg.size(),
                                           right.settings_deg.size());
    os << "Settings      N_ab\n";
    for (std::size_t i = 0; i < counts.n_ab.n_alice(); ++i) {
        for (std::size_t j = 0; j < counts.n_ab.n_bob(); ++j) {
            std::ostringstream label;
            label << left.settings_deg[i] << ", " << right.settings_deg[j];
            os << std::left << std::setw(14) << label.str() << counts.n_ab(i, j)
               << '\n';
        }
    }

    if (singles == 0) {
        os << "gamma: undefined (no detections)\n";
    } else {
        double const gamma = gamma_overall(m.pairs.size(), singles);
        os << "gamma: " << gamma << '\n';
        if (gamma > 0.0)
            os << "coincidence bound 6/gamma - 4 (conjectured): "
               << coincidence_bound(gamma) << '\n';
        else
            os << "coincidence bound 6/gamma - 4 (conjectured): undefined\n";
    }
    if (left.has_emission && right.has_emission && !m.pairs.empty()) {
        try {
            auto const g = gamma_min(
                m.pairs, singles_from_streams(left.events, right.events,
                                              left.settings_deg.size(),
                                              right.settings_deg.size()));
            os << "gamma_min: " << g.min << '\n';
        } catch (UndefinedEfficiency const &e) {
            os << "gamma_min: undefined (" << e.what() << ")\n";
        }
    }
    out << os.str();
    return 0;
}

// -------------------------------------------------------------- analyze

struct AnalyzeArgs {
    std::string tables, records, left, right;
    std::optional<double> window;
    std::optional<std::string> model;
    Angles angles;
    bool angles_given = false;
    std::string out_path, format = "json";
};

int analyze(AnalyzeArgs const &a, std::ostream &out) {
    int const sources = !a.tables.empty() + !a.records.empty() +
                        (!a.left.empty() || !a.right.empty());
    if (sources != 1)
        throw std::invalid_argument(
            "give exactly one of --tables, --records or --left/--right");

    std::string const model_name = a.model.value_or("");
    ChshReport rep;
    if (!a.tables.empty()) {
        auto in = open_input(a.tables);
        io::TablesFile const file = io::read_tables(in, a.tables);
        std::vector<double> alice = a.angles.alice_deg, bob = a.angles.bob_deg;
        if (!file.legacy && !a.angles_given) {
            alice = file.alice_settings_deg;
            bob = file.bob_settings_deg;
        }
        if (file.tables.n_alice() != alice.size() || file.tables.n_bob() != bob.size())
            throw InconsistentCounts("table grid does not match the setting lists");
        rep = assemble_pulsed_report(file.tables, to_radians(alice),
                                     to_radians(bob), model_name);
    } else {
        auto resolve_window = [&]() {
            if (a.window)
                return *a.window;
            if (a.model)
                return ModelParams::defaults(parse_model(*a.model)).coinc_window;
            throw std::invalid_argument("--window (or --model) is required");
        };
        double const window = resolve_window();
        if (!a.records.empty()) {
            auto in = open_input(a.records);
            io::RecordsFile const file = io::read_records(in, a.records);
            rep = analyse_records(file.records, window, file.alice_settings_deg,
                                  file.bob_settings_deg, model_name)
                      .report;
        } else {
            if (a.left.empty() || a.right.empty())
                throw std::invalid_argument("--left and --right go together");
            auto read = [&](std::string const &path, std::vector<double> const &order) {
                auto in = open_input(path);
                if (!a.angles_given)
                    return io::read_events(in, path);
                return io::read_events(in, path, std::span<double const>(order));
            };
            io::EventFile const left = read(a.left, a.angles.alice_deg);
            io::EventFile const right = read(a.right, a.angles.bob_deg);
            rep = analyse_streams(left.events, right.events, window,
                                  left.settings_deg, right.settings_deg, model_name)
                      .report;
        }
    }

    Outputs files;
    if (!a.out_path.empty())
        files.open(a.out_path) << encode(rep, a.format);
    files.commit();
    out << io::report_summary(rep);
    return 0;
}

// ---------------------------------------------------------------- sweep

struct SweepArgs {
    std::string model;
    double step = 1.0;
    std::uint64_t m = 1'000'000;
    std::optional<std::uint64_t> seed;
    double beta_deg = 0.0;
    ParamFlags params;
    std::string out_path;
};

int sweep_cmd(SweepArgs const &a, std::ostream &out) {
    RunConfig config;
    config.model = parse_model(a.model);
    config.params = a.params.resolve(config.model);
    config.seed = *a.seed;
    SweepCurve const curve =
        sweep(config, a.beta_deg * kDegree, a.step, a.m);
    if (a.out_path.empty()) {
        io::write_curve(out, curve, a.beta_deg);
        return 0;
    }
    Outputs files;
    io::write_curve(files.open(a.out_path), curve, a.beta_deg);
    files.commit();
    out << "Wrote " << curve.angles_deg.size() << " grid points to " << a.out_path
        << '\n';
    return 0;
}

} // namespace

int run(std::vector<std::string> const &args, std::ostream &out,
        std::ostream &err) {
    CLI::App app{"Event-based simulation and analysis of EPR-B experiments "
                 "with detection and coincidence loopholes",
                 "bellsim"};
    app.require_subcommand(1);

    SimulateArgs sim;
    auto *sim_cmd = app.add_subcommand("simulate", "Run a pulsed or clocked experiment");
    sim_cmd->add_option("--model", sim.model, "Hidden-variable model")
        ->required()
        ->check(CLI::IsMember(kModelNames));
    sim_cmd->add_option("--n", sim.n, "Trials (pulsed) or emissions (clocked)");
    sim_cmd->add_option("--seed", sim.seed, "RNG seed")->required();
    sim.angles.attach(sim_cmd);
    sim.params.attach(sim_cmd);
    sim_cmd->add_option("--period", sim.period, "Emission period in seconds (clocked)")
        ->check(CLI::PositiveNumber);
    sim_cmd->add_option("--pairing", sim.pairing, "Clocked pairing: trial or stream")
        ->check(CLI::IsMember({"trial", "stream"}));
    sim_cmd->add_option("--out", sim.out_path, "Report file");
    sim_cmd->add_option("--format", sim.format, "Report format")
        ->check(CLI::IsMember({"json", "csv"}));
    sim_cmd->add_option("--tables-out", sim.tables_out, "Outcome tables CSV (pulsed)");
    sim_cmd->add_option("--records-out", sim.records_out, "Trial records CSV (clocked)");
    sim_cmd->add_option("--events-left", sim.events_left, "Alice's event file (clocked)");
    sim_cmd->add_option("--events-right", sim.events_right, "Bob's event file (clocked)");
    sim_cmd->add_option("--pairs-out", sim.pairs_out, "Accepted pairs CSV (clocked)");

    MatchArgs mat;
    auto *match_cmd = app.add_subcommand("match", "Pair two detection event files");
    match_cmd->add_option("--left", mat.left, "Alice's event file")->required();
    match_cmd->add_option("--right", mat.right, "Bob's event file")->required();
    match_cmd->add_option("--window", mat.window, "Coincidence window in seconds")
        ->required()
        ->check(CLI::PositiveNumber);
    match_cmd->add_option("--angles-a", mat.alice_deg, "Order of Alice's settings")
        ->delimiter(',');
    match_cmd->add_option("--angles-b", mat.bob_deg, "Order of Bob's settings")
        ->delimiter(',');
    match_cmd->add_option("--out", mat.out_path, "Pairs CSV");

    AnalyzeArgs ana;
    auto *analyze_cmd = app.add_subcommand("analyze", "CHSH report from saved data");
    analyze_cmd->add_option("--tables", ana.tables,
                            "Outcome tables (CSV or legacy 12-line layout)");
    analyze_cmd->add_option("--records", ana.records, "Clocked trial records CSV");
    analyze_cmd->add_option("--left", ana.left, "Alice's event file");
    analyze_cmd->add_option("--right", ana.right, "Bob's event file");
    analyze_cmd->add_option("--window", ana.window, "Coincidence window in seconds")
        ->check(CLI::PositiveNumber);
    analyze_cmd->add_option("--model", ana.model, "Model label and default window")
        ->check(CLI::IsMember(kModelNames));
    ana.angles.attach(analyze_cmd);
    analyze_cmd->add_option("--out", ana.out_path, "Report file");
    analyze_cmd->add_option("--format", ana.format, "Report format")
        ->check(CLI::IsMember({"json", "csv"}));

    SweepArgs swp;
    auto *sweep_sub = app.add_subcommand("sweep", "Correlation and acceptance curve");
    sweep_sub->add_option("--model", swp.model, "Hidden-variable model")
        ->required()
        ->check(CLI::IsMember(kModelNames));
    sweep_sub->add_option("--step", swp.step, "Grid step in degrees")
        ->capture_default_str();
    sweep_sub->add_option("--m", swp.m, "Hidden pairs in the shared sample")
        ->capture_default_str();
    sweep_sub->add_option("--seed", swp.seed, "RNG seed")->required();
    sweep_sub->add_option("--beta", swp.beta_deg, "Bob's fixed angle in degrees")
        ->capture_default_str();
    swp.params.attach(sweep_sub);
    sweep_sub->add_option("--out", swp.out_path, "Curve CSV (stdout if omitted)");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (CLI::ParseError const &e) {
        return app.exit(e, out, err);
    }

    try {
        if (*sim_cmd)
            return simulate(sim, out);
        if (*match_cmd)
            return match(mat, out);
        if (*analyze_cmd) {
            ana.angles_given = analyze_cmd->count("--angles-a") > 0 ||
                               analyze_cmd->count("--angles-b") > 0;
            return analyze(ana, out);
        }
        if (*sweep_sub)
            return sweep_cmd(swp, out);
    } catch (std::exception const &e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }
    return 2;
}

} // namespace bellsim::cli
