#include <algorithm>
#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "emberflow/export_io.hpp"
#include "emberflow/scenario.hpp"
#include "emberflow/solver.hpp"

namespace {

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw emberflow::IoError("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

emberflow::Scenario load_scenario(const std::string& file,
                                  const std::string& preset) {
    emberflow::ScenarioConfig cfg;
    if (!preset.empty()) {
        cfg = emberflow::preset_config(preset);
    } else {
        cfg = emberflow::parse_scenario_config(slurp(file));
    }
    return emberflow::build_scenario(cfg);
}

double percentile(std::vector<double> v, double q) {
    if (v.empty()) return 0.0;
    std::sort(v.begin(), v.end());
    const double pos = q * (v.size() - 1);
    const std::size_t lo = std::size_t(pos);
    const std::size_t hi = std::min(lo + 1, v.size() - 1);
    const double frac = pos - lo;
    return v[lo] * (1.0 - frac) + v[hi] * frac;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"2-D bushfire spread simulator"};
    app.require_subcommand(1);

    std::string scenario_file, preset, out_dir;
    int threads = 1;
    std::optional<double> fixed_dt;

    auto add_scenario_opts = [&](CLI::App* cmd, bool out_required) {
        cmd->add_option("scenario", scenario_file, "scenario file");
        cmd->add_option("--preset", preset, "built-in scenario name");
        auto* out = cmd->add_option("--out", out_dir, "output directory");
        if (out_required) out->required();
        cmd->add_option("--threads", threads, "worker threads")
            ->check(CLI::PositiveNumber);
        cmd->add_option("--fixed-dt", fixed_dt,
                        "override the adaptive time step");
    };

    auto* cmd_run = app.add_subcommand("run", "integrate a scenario and export");
    add_scenario_opts(cmd_run, true);

    auto* cmd_vf = app.add_subcommand(
        "validate-front",
        "compare predicted front speed against observed front motion");
    add_scenario_opts(cmd_vf, false);

    auto* cmd_presets = app.add_subcommand("presets", "list built-in scenarios");
    std::string show;
    cmd_presets->add_option("--show", show, "print the named preset's document");

    auto* cmd_diff =
        app.add_subcommand("diff-series", "max relative burned-area deviation");
    std::string series_a, series_b;
    cmd_diff->add_option("a", series_a, "first series.csv")->required();
    cmd_diff->add_option("b", series_b, "second series.csv")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (cmd_run->parsed() || cmd_vf->parsed()) {
            if (preset.empty() == scenario_file.empty()) {
                std::cerr << "give either a scenario file or --preset\n";
                return 1;
            }
        }

        if (cmd_run->parsed()) {
            const emberflow::Scenario s = load_scenario(scenario_file, preset);
            emberflow::SolverConfig config;
            config.threads = threads;
            config.fixed_dt = fixed_dt;
            const auto snapshots = emberflow::run(s, config);
            emberflow::export_run(out_dir, snapshots);
            std::cout << "wrote " << snapshots.size() << " snapshots to "
                      << out_dir << " (t = 0 .. "
                      << emberflow::format_double(snapshots.back().t)
                      << ", final burned area "
                      << emberflow::format_double(snapshots.back().burned_area)
                      << ")\n";
            return 0;
        }

        if (cmd_vf->parsed()) {
            const emberflow::Scenario s = load_scenario(scenario_file, preset);
            emberflow::SolverConfig config;
            config.threads = threads;
            config.fixed_dt = fixed_dt;
            auto snapshots = emberflow::run(s, config);
            std::vector<double> rel_errors;
            std::size_t degenerate = 0;
            for (std::size_t k = 0; k + 1 < snapshots.size(); ++k) {
                auto& snap = snapshots[k];
                const auto& next = snapshots[k + 1];
                const double dt = next.t - snap.t;
                if (snap.fronts.empty() || next.fronts.empty() || !(dt > 0.0)) {
                    continue;
                }
                snap.samples = emberflow::observed_normal_velocity(
                    std::move(snap.samples), next.fronts, dt);
                for (const auto& sample : snap.samples) {
                    if (sample.degenerate) {
                        ++degenerate;
                        continue;
                    }
                    if (!sample.v_observed) continue;
                    const double denom =
                        std::max(std::abs(*sample.v_observed), 1e-6);
                    rel_errors.push_back(
                        std::abs(sample.v_predicted - *sample.v_observed) /
                        denom);
                }
            }
            if (!out_dir.empty()) emberflow::export_run(out_dir, snapshots);
            if (rel_errors.empty()) {
                std::cout << "no comparable front samples\n";
                return 1;
            }
            std::cout << "front speed check over " << rel_errors.size()
                      << " samples (" << degenerate << " degenerate skipped)\n";
            std::cout << "median relative error: "
                      << emberflow::format_double(percentile(rel_errors, 0.5))
                      << "\n90th percentile:       "
                      << emberflow::format_double(percentile(rel_errors, 0.9))
                      << "\n";
            return 0;
        }

        if (cmd_presets->parsed()) {
            if (!show.empty()) {
                std::cout << emberflow::serialize_scenario_config(
                    emberflow::preset_config(show));
            } else {
                for (const auto& name : emberflow::preset_names()) {
                    std::cout << name << '\n';
                }
            }
            return 0;
        }

        if (cmd_diff->parsed()) {
            const double dev = emberflow::diff_series(series_a, series_b);
            std::cout << emberflow::format_double(dev) << '\n';
            return 0;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
