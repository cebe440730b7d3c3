// neyman-lab: Monte Carlo driver for adaptive treatment-allocation
// experiments. Subcommands:
//   compare      variance of each design per (instance, T)   -> comparison.csv
//   clip-ratio   predicted vs empirical clipping time         -> clip.csv
//   predict-clip theory-only clipping-phase predictions       -> stdout
//   run          compare + clip-ratio + SVG figures
#include <cstdint>
#include <filesystem>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "neyman/config.hpp"
#include "neyman/csv.hpp"
#include "neyman/errors.hpp"
#include "neyman/experiment.hpp"
#include "neyman/svg.hpp"
#include "neyman/theory.hpp"

namespace {

struct CommonOpts {
    std::string config_path;
    int workers = 0;       // 0: NEYMAN_LAB_WORKERS, then hardware
    std::int64_t seed = -1;  // -1: keep the config's seed
};

void add_common(CLI::App* cmd, CommonOpts& opts) {
    cmd->add_option("--config", opts.config_path, "experiment config (JSON)")
        ->required()
        ->check(CLI::ExistingFile);
    cmd->add_option("--workers", opts.workers,
                    "worker threads (default: NEYMAN_LAB_WORKERS or hardware)");
    cmd->add_option("--seed", opts.seed, "override the config seed");
}

neyman::ExperimentConfig load(const CommonOpts& opts) {
    neyman::ExperimentConfig config = neyman::load_config(opts.config_path);
    if (opts.seed >= 0) config.seed = static_cast<std::uint64_t>(opts.seed);
    return config;
}

void report_written(const std::vector<std::filesystem::path>& files) {
    for (const auto& f : files) std::cout << "wrote " << f.string() << "\n";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Monte Carlo lab for adaptive Neyman allocation designs"};
    app.require_subcommand(1);

    CommonOpts compare_opts;
    auto* compare = app.add_subcommand(
        "compare", "variance of each design across horizons");
    add_common(compare, compare_opts);

    CommonOpts clip_opts;
    std::vector<double> alphas = {0.1, 0.2, 1.0 / 3.0, 0.4};
    auto* clip_ratio = app.add_subcommand(
        "clip-ratio", "predicted vs empirical clipping times");
    add_common(clip_ratio, clip_opts);
    clip_ratio->add_option("--alphas", alphas, "clipping exponents in (0,0.5)")
        ->delimiter(',');

    CommonOpts predict_opts;
    double predict_alpha = 1.0 / 3.0;
    auto* predict = app.add_subcommand(
        "predict-clip", "closed-form clipping-phase predictions");
    add_common(predict, predict_opts);
    predict->add_option("--alpha", predict_alpha, "clipping exponent");

    CommonOpts run_opts;
    std::vector<double> run_alphas = {0.1, 0.2, 1.0 / 3.0, 0.4};
    auto* run = app.add_subcommand("run", "full pipeline: CSVs plus figures");
    add_common(run, run_opts);
    run->add_option("--alphas", run_alphas, "clipping exponents in (0,0.5)")
        ->delimiter(',');

    CLI11_PARSE(app, argc, argv);

    try {
        if (compare->parsed()) {
            const auto config = load(compare_opts);
            const auto result =
                neyman::variance_comparison(config, compare_opts.workers);
            std::filesystem::path dir(config.output_dir);
            neyman::emit_comparison_csv(result, dir / "comparison.csv");
            report_written({dir / "comparison.csv"});
        } else if (clip_ratio->parsed()) {
            const auto config = load(clip_opts);
            const auto result =
                neyman::clip_time_experiment(config, alphas, clip_opts.workers);
            std::filesystem::path dir(config.output_dir);
            neyman::emit_clip_csv(result, dir / "clip.csv");
            report_written({dir / "clip.csv"});
        } else if (predict->parsed()) {
            const auto config = load(predict_opts);
            const auto rows = neyman::predict_clip_rows(config, predict_alpha);
            neyman::emit_prediction_csv(rows, std::cout);
        } else if (run->parsed()) {
            const auto config = load(run_opts);
            std::filesystem::path dir(config.output_dir);
            auto result = neyman::variance_comparison(config, run_opts.workers);
            const auto clip =
                neyman::clip_time_experiment(config, run_alphas, run_opts.workers);
            result.clip_rows = clip.clip_rows;
            auto files = neyman::emit_csv(result, dir);
            for (const auto& f : neyman::emit_plots(result, dir)) {
                files.push_back(f);
            }
            report_written(files);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
