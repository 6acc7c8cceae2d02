#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "mcburst/burst_stats.hpp"
#include "mcburst/configs.hpp"
#include "mcburst/diversity.hpp"
#include "mcburst/errors.hpp"
#include "mcburst/latency_reliability.hpp"
#include "mcburst/montecarlo.hpp"
#include "mcburst/report.hpp"
#include "mcburst/text.hpp"
#include "mcburst/trace_io.hpp"

namespace {

using namespace mcburst;

std::string join_args(int argc, char** argv) {
    std::string out;
    for (int i = 1; i < argc; ++i) {
        if (i > 1) {
            out += ' ';
        }
        out += argv[i];
    }
    return out;
}

LatencyTrace load_trace(const std::string& path, const std::string& label,
                        double period_ms) {
    std::ifstream in(path);
    if (!in) {
        throw Error("cannot open trace file: " + path);
    }
    return parse_trace(in, label.empty() ? path : label, period_ms);
}

/// Output sink: a file when a path is given, stdout otherwise.
class Sink {
public:
    explicit Sink(const std::string& path) {
        if (!path.empty()) {
            file_.open(path);
            if (!file_) {
                throw Error("cannot open output file: " + path);
            }
        }
    }
    std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

private:
    std::ofstream file_;
};

void emit_provenance(std::ostream& out, const std::string& args,
                     std::uint64_t seed, std::uint64_t steps) {
    out << "# " << kToolVersion << '\n';
    out << "# args: " << args << '\n';
    out << "# seed=" << seed << " steps=" << steps << '\n';
}

DiversityProfile resolve_profile(const std::vector<std::string>& config_names,
                                 const std::vector<std::string>& params_files,
                                 std::optional<double> p,
                                 std::optional<double> r) {
    DiversityProfile profile;
    for (const std::string& name : config_names) {
        auto cfg = find_config(name);
        if (!cfg) {
            throw Error("unknown config '" + name +
                        "' (expected lte, wifi, 2xlte, 2xwifi, lte+wifi, "
                        "ur-lte, ur-wifi)");
        }
        for (std::size_t i = 0; i < cfg->profile.size(); ++i) {
            profile.interfaces.push_back(cfg->profile.interfaces[i]);
            profile.labels.push_back(cfg->profile.labels[i]);
        }
    }
    for (const std::string& path : params_files) {
        std::ifstream in(path);
        if (!in) {
            throw Error("cannot open params file: " + path);
        }
        const ParamsDoc doc = read_params_doc(in);
        profile.interfaces.push_back(doc.ge);
        profile.labels.push_back(doc.label);
    }
    if (p && r) {
        profile.interfaces.push_back({*p, *r});
        profile.labels.push_back("custom");
    } else if (p || r) {
        throw Error("--p and --r must be given together");
    }
    if (profile.interfaces.empty()) {
        throw Error("no interfaces: give --config, --params, or --p/--r");
    }
    return profile;
}

int run(int argc, char** argv) {
    CLI::App app{"Gilbert-Elliott multi-connectivity burst-error toolkit"};
    app.require_subcommand(1);
    const std::string args = join_args(argc, argv);

    // ---- estimate ----
    auto* estimate = app.add_subcommand(
        "estimate", "Fit Gilbert-Elliott parameters to a latency trace");
    std::string est_trace, est_label, est_out;
    double est_period = 100.0;
    std::optional<double> est_deadline, est_target;
    estimate->add_option("--trace", est_trace, "Trace file")->required();
    estimate->add_option("--label", est_label, "Interface label");
    estimate->add_option("--period", est_period, "Probe period [ms]");
    estimate->add_option("--deadline", est_deadline, "Latency deadline [ms]");
    estimate->add_option("--target", est_target,
                         "Target reliability; deadline resolved from the CDF");
    estimate->add_option("--out", est_out, "Params document output file");

    // ---- simulate ----
    auto* simulate = app.add_subcommand(
        "simulate", "Run a seeded Gilbert-Elliott / diversity simulation");
    std::vector<std::string> sim_configs, sim_params;
    std::optional<double> sim_p, sim_r;
    std::uint64_t sim_steps = 1'000'000, sim_seed = 1;
    std::string sim_out;
    simulate->add_option("--config", sim_configs,
                         "Built-in configuration name (repeatable)");
    simulate->add_option("--params", sim_params,
                         "Params document from `estimate` (repeatable)");
    simulate->add_option("--p", sim_p, "G->B transition probability");
    simulate->add_option("--r", sim_r, "B->G transition probability");
    simulate->add_option("--steps", sim_steps, "Number of time steps");
    simulate->add_option("--seed", sim_seed, "Master seed");
    simulate->add_option("--out", sim_out, "Run-length-encoded output file");

    // ---- burst ----
    auto* burst = app.add_subcommand(
        "burst", "Burst-length histogram/CCDF of an error series");
    std::string burst_series, burst_trace, burst_out, burst_state = "bad";
    std::optional<double> burst_deadline;
    double burst_period = 100.0;
    bool include_truncated = false;
    burst->add_option("--series", burst_series,
                      "Run-length-encoded series file (from `simulate`)");
    burst->add_option("--trace", burst_trace,
                      "Latency trace (needs --deadline)");
    burst->add_option("--deadline", burst_deadline, "Latency deadline [ms]");
    burst->add_option("--period", burst_period, "Probe period [ms]");
    burst->add_option("--state", burst_state, "good or bad")
        ->check(CLI::IsMember({"good", "bad"}));
    burst->add_flag("--include-truncated", include_truncated,
                    "Include boundary-censored runs");
    burst->add_option("--out", burst_out, "Output file");

    // ---- analyze ----
    auto* analyze = app.add_subcommand(
        "analyze", "Crossing deadline of two latency-reliability curves");
    std::vector<std::string> ana_traces;
    double ana_period = 100.0;
    std::string ana_out;
    analyze->add_option("--trace", ana_traces, "Trace file (give exactly two)");
    analyze->add_option("--period", ana_period, "Probe period [ms]");
    analyze->add_option("--out", ana_out,
                        "Directory for the two exported CDF files");

    // ---- reproduce ----
    auto* reproduce_cmd = app.add_subcommand(
        "reproduce", "Run the built-in configuration sets end to end");
    ReproduceOptions opts;
    reproduce_cmd->add_option("--table", opts.table, "1 or 2")
        ->check(CLI::Range(1, 2));
    reproduce_cmd->add_option("--steps", opts.steps, "Steps per configuration");
    reproduce_cmd->add_option("--seed", opts.master_seed, "Master seed");
    reproduce_cmd->add_option("--out", opts.out_dir, "Output directory")
        ->required();
    reproduce_cmd->add_flag("--include-truncated", opts.include_truncated,
                            "Include boundary-censored runs");

    CLI11_PARSE(app, argc, argv);

    if (estimate->parsed()) {
        if (!est_deadline && !est_target) {
            throw Error("estimate needs --deadline or --target");
        }
        const LatencyTrace trace = load_trace(est_trace, est_label, est_period);
        double deadline;
        if (est_deadline) {
            deadline = *est_deadline;
        } else {
            deadline = deadline_for(empirical_cdf(trace), *est_target);
        }
        const BinarySeries series = loss_indicator(trace, deadline);
        const GeParams ge = estimate_params(series);
        ParamsDoc doc;
        doc.label = trace.interface_label;
        doc.ge = ge;
        doc.deadline_ms = deadline;
        doc.source = std::string(kToolVersion) + " " + args;
        Sink sink(est_out);
        write_params_doc(doc, sink.stream());
        return 0;
    }

    if (simulate->parsed()) {
        SimulationSpec spec;
        spec.profile = resolve_profile(sim_configs, sim_params, sim_p, sim_r);
        spec.steps = sim_steps;
        spec.master_seed = sim_seed;
        const BinarySeries series = simulate_diversity(spec);
        Sink sink(sim_out);
        emit_provenance(sink.stream(), args, sim_seed, sim_steps);
        write_rle(series, sink.stream());
        return 0;
    }

    if (burst->parsed()) {
        BinarySeries series;
        if (!burst_series.empty()) {
            std::ifstream in(burst_series);
            if (!in) {
                throw Error("cannot open series file: " + burst_series);
            }
            series = read_rle(in, burst_series);
        } else if (!burst_trace.empty()) {
            if (!burst_deadline) {
                throw Error("--trace needs --deadline");
            }
            series = loss_indicator(load_trace(burst_trace, "", burst_period),
                                    *burst_deadline);
        } else {
            throw Error("burst needs --series or --trace");
        }
        const BurstHistogram hist = extract_runs(series);
        const State state = (burst_state == "bad") ? State::bad : State::good;
        Sink sink(burst_out);
        sink.stream() << "# " << kToolVersion << "\n# args: " << args << '\n';
        write_burst_csv(hist, state, sink.stream(), include_truncated);
        return 0;
    }

    if (analyze->parsed()) {
        if (ana_traces.size() != 2) {
            throw Error("analyze needs exactly two --trace files");
        }
        const LatencyTrace ta = load_trace(ana_traces[0], "", ana_period);
        const LatencyTrace tb = load_trace(ana_traces[1], "", ana_period);
        const EmpiricalCdf ca = empirical_cdf(ta);
        const EmpiricalCdf cb = empirical_cdf(tb);
        const Crossing cross = crossing_deadline(ca, cb);
        std::cout << "crossing deadline_ms: " << format_sig6(cross.latency_ms)
                  << '\n'
                  << "reliability: " << format_sig6(cross.reliability) << '\n'
                  << "gap: " << format_sig6(cross.gap) << '\n';
        const double ea =
            loss_indicator(ta, cross.latency_ms).error_fraction();
        const double eb =
            loss_indicator(tb, cross.latency_ms).error_fraction();
        std::cout << "error_rate_a: " << format_sig6(ea) << '\n'
                  << "error_rate_b: " << format_sig6(eb) << '\n';
        if (!ana_out.empty()) {
            std::filesystem::create_directories(ana_out);
            const std::pair<const char*, const EmpiricalCdf*> curves[] = {
                {"cdf_a.csv", &ca}, {"cdf_b.csv", &cb}};
            for (const auto& [name, cdf] : curves) {
                std::ofstream f(std::filesystem::path(ana_out) / name);
                f << "# " << kToolVersion << "\n# args: " << args << '\n';
                write_cdf(*cdf, f);
            }
        }
        return 0;
    }

    if (reproduce_cmd->parsed()) {
        opts.provenance = args;
        const std::vector<RunReport> reports = reproduce(opts);
        write_report(reports, std::cout);
        return 0;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const mcburst::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
}
