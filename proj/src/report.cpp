#include "mcburst/report.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <ostream>

#include "mcburst/burst_stats.hpp"
#include "mcburst/errors.hpp"
#include "mcburst/montecarlo.hpp"
#include "mcburst/text.hpp"

namespace mcburst {

namespace {

namespace fs = std::filesystem;

std::string sanitized(const std::string& name) {
    std::string out = name;
    std::replace(out.begin(), out.end(), '+', '_');
    return out;
}

void write_provenance(std::ostream& out, const ReproduceOptions& opts) {
    out << "# " << kToolVersion << '\n';
    if (!opts.provenance.empty()) {
        out << "# args: " << opts.provenance << '\n';
    }
    out << "# seed=" << opts.master_seed << " steps=" << opts.steps << '\n';
}

void write_analytic_csv(const NamedConfig& cfg, State state, std::ostream& out,
                        std::uint64_t k_max) {
    out << "k,pmf,ccdf\n";
    std::vector<double> pmf;
    if (state == State::bad) {
        pmf.reserve(k_max);
        for (std::uint64_t k = 1; k <= k_max; ++k) {
            pmf.push_back(diversity_bad_burst_pmf(cfg.profile, k));
        }
    } else {
        pmf = GoodBurstLaw(cfg.profile).pmf_upto(k_max);
    }
    double tail = 1.0;
    for (std::uint64_t k = 1; k <= k_max; ++k) {
        out << k << ',' << format_shortest(pmf[k - 1]) << ','
            << format_shortest(tail) << '\n';
        tail -= pmf[k - 1];
    }
}

}  // namespace

namespace {

RunReport build_report(const NamedConfig& cfg, std::uint64_t steps,
                       std::uint64_t master_seed, bool include_truncated,
                       const std::vector<std::uint64_t>& windows,
                       const BinarySeries& series, const BurstHistogram& hist) {
    RunReport report;
    report.config_name = cfg.name;
    report.deadline_ms = cfg.deadline_ms;
    report.steps = steps;
    report.seed = master_seed;

    for (std::size_t i = 0; i < cfg.profile.size(); ++i) {
        const GeParams& ge = cfg.profile.interfaces[i];
        report.interfaces.push_back({cfg.profile.labels[i], ge.p, ge.r,
                                     steady_state(ge).pi_b});
    }
    report.stationary_error = diversity_stationary_error(cfg.profile);

    const BurstMeans analytic = diversity_mean_burst_lengths(cfg.profile);
    report.analytic_mean_good = analytic.mean_good;
    report.analytic_mean_bad = analytic.mean_bad;

    report.simulated_error_fraction = series.error_fraction();
    report.simulated_mean_good =
        mean_burst_length(hist, State::good, include_truncated);
    report.simulated_mean_bad =
        mean_burst_length(hist, State::bad, include_truncated);

    report.reliability_windows = windows;
    for (std::uint64_t w : windows) {
        report.interval_reliability.push_back(interval_reliability(series, w));
    }
    return report;
}

BinarySeries simulate_config(const NamedConfig& cfg, std::uint64_t steps,
                             std::uint64_t master_seed) {
    SimulationSpec spec;
    spec.profile = cfg.profile;
    spec.steps = steps;
    spec.master_seed = master_seed;
    return simulate_diversity(spec);
}

}  // namespace

RunReport run_configuration(const NamedConfig& cfg, std::uint64_t steps,
                            std::uint64_t master_seed, bool include_truncated,
                            const std::vector<std::uint64_t>& windows) {
    const BinarySeries series = simulate_config(cfg, steps, master_seed);
    const BurstHistogram hist = extract_runs(series);
    return build_report(cfg, steps, master_seed, include_truncated, windows,
                        series, hist);
}

std::vector<RunReport> reproduce(const ReproduceOptions& opts) {
    if (opts.table != 1 && opts.table != 2) {
        throw DomainError("table must be 1 or 2");
    }
    const std::vector<NamedConfig> configs =
        (opts.table == 1) ? baseline_configs() : extended_configs();

    fs::path out_dir(opts.out_dir);
    fs::create_directories(out_dir);

    constexpr std::uint64_t kAnalyticKMax = 500;
    std::vector<RunReport> reports;
    for (const NamedConfig& cfg : configs) {
        const BinarySeries series =
            simulate_config(cfg, opts.steps, opts.master_seed);
        const BurstHistogram hist = extract_runs(series);
        reports.push_back(build_report(cfg, opts.steps, opts.master_seed,
                                       opts.include_truncated,
                                       opts.reliability_windows, series, hist));

        const std::string stem = sanitized(cfg.name);
        for (State state : {State::good, State::bad}) {
            const char* suffix = (state == State::bad) ? "bad" : "good";
            {
                std::ofstream f(out_dir / (stem + "_" + suffix + ".csv"));
                write_provenance(f, opts);
                f << "# config=" << cfg.name << " state=" << suffix
                  << " source=simulated\n";
                write_burst_csv(hist, state, f, opts.include_truncated);
            }
            {
                std::ofstream f(out_dir /
                                (stem + "_" + suffix + "_analytic.csv"));
                write_provenance(f, opts);
                f << "# config=" << cfg.name << " state=" << suffix
                  << " source=analytic\n";
                write_analytic_csv(cfg, state, f, kAnalyticKMax);
            }
        }
    }

    std::ofstream report_file(out_dir / "report.txt");
    write_provenance(report_file, opts);
    write_report(reports, report_file);
    return reports;
}

void write_report(const std::vector<RunReport>& reports, std::ostream& out) {
    for (const RunReport& r : reports) {
        out << "configuration: " << r.config_name
            << "  (deadline " << format_sig6(r.deadline_ms) << " ms, seed "
            << r.seed << ", steps " << r.steps << ")\n";
        for (const auto& iface : r.interfaces) {
            out << "  interface " << iface.label << ": p=" << format_sig6(iface.p)
                << " r=" << format_sig6(iface.r)
                << " pi_b=" << format_sig6(iface.pi_b) << '\n';
        }
        out << "  stationary error: analytic " << format_sig6(r.stationary_error)
            << ", simulated " << format_sig6(r.simulated_error_fraction) << '\n';
        out << "  mean good burst: analytic " << format_sig6(r.analytic_mean_good)
            << ", simulated " << format_sig6(r.simulated_mean_good) << '\n';
        out << "  mean bad burst:  analytic " << format_sig6(r.analytic_mean_bad)
            << ", simulated " << format_sig6(r.simulated_mean_bad) << '\n';
        out << "  interval reliability:";
        for (std::size_t i = 0; i < r.reliability_windows.size(); ++i) {
            out << ' ' << "w=" << r.reliability_windows[i] << ":"
                << format_sig6(r.interval_reliability[i]);
        }
        out << "\n\n";
    }
}

}  // namespace mcburst
