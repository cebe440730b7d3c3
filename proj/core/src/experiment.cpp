#include "neyman/experiment.hpp"

#include <atomic>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <limits>
#include <mutex>
#include <stdexcept>
#include <thread>

#include "neyman/errors.hpp"
#include "neyman/estimators.hpp"
#include "neyman/regret.hpp"
#include "neyman/stats.hpp"
#include "neyman/theory.hpp"

namespace neyman {

namespace {

constexpr std::uint64_t kCompareTag = 0x636f6d7061726531ull;
constexpr std::uint64_t kClipTag = 0x636c697074696d65ull;
constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

std::uint64_t cell_stream(std::uint64_t tag, std::uint64_t a, std::uint64_t b,
                          std::uint64_t c, std::uint64_t rep) {
    std::uint64_t h = fold_stream(tag, a);
    h = fold_stream(h, b);
    h = fold_stream(h, c);
    return fold_stream(h, rep);
}

}  // namespace

void validate(const ExperimentConfig& config) {
    if (config.instances.empty()) throw ConfigError("config: no instances");
    if (config.strategies.empty()) throw ConfigError("config: no strategies");
    if (config.horizons.empty()) throw ConfigError("config: no horizons");
    for (std::size_t i = 0; i < config.horizons.size(); ++i) {
        if (config.horizons[i] < 1) {
            throw ConfigError("config: horizons must be >= 1");
        }
        if (i > 0 && config.horizons[i] <= config.horizons[i - 1]) {
            throw ConfigError("config: horizons must be strictly increasing");
        }
    }
    if (config.replications < 1) {
        throw ConfigError("config: replications must be >= 1");
    }
    if (!(config.delta > 0.0 && config.delta < 1.0)) {
        throw ConfigError("config: delta must lie in (0,1)");
    }
    for (const auto& spec : config.strategies) {
        if (spec.kind == StrategyKind::Fixed &&
            !(spec.pi > 0.0 && spec.pi < 1.0)) {
            throw ConfigError("config: fixed allocation must lie in (0,1)");
        }
        if (spec.kind == StrategyKind::ClipSmt &&
            !(spec.alpha > 0.0 && spec.alpha < 1.0)) {
            throw ConfigError("config: clipsmt alpha must lie in (0,1)");
        }
        if (spec.kind == StrategyKind::ClipOgd &&
            !(spec.ogd_clip_exponent > 0.0 && spec.ogd_clip_exponent < 1.0)) {
            throw ConfigError("config: clipogd clip exponent must lie in (0,1)");
        }
    }
}

void parallel_for_index(std::int64_t count, int workers,
                        const std::function<void(std::int64_t)>& fn) {
    if (count <= 0) return;
    if (workers < 1) workers = 1;
    if (workers == 1 || count == 1) {
        for (std::int64_t i = 0; i < count; ++i) fn(i);
        return;
    }
    std::atomic<std::int64_t> next{0};
    std::atomic<bool> failed{false};
    std::exception_ptr first_error;
    std::mutex error_mutex;
    auto work = [&] {
        for (;;) {
            const std::int64_t i = next.fetch_add(1, std::memory_order_relaxed);
            if (i >= count || failed.load(std::memory_order_relaxed)) return;
            try {
                fn(i);
            } catch (...) {
                std::scoped_lock lock(error_mutex);
                if (!first_error) first_error = std::current_exception();
                failed.store(true, std::memory_order_relaxed);
                return;
            }
        }
    };
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(workers - 1));
    for (int w = 0; w < workers - 1; ++w) pool.emplace_back(work);
    work();
    for (auto& th : pool) th.join();
    if (first_error) std::rethrow_exception(first_error);
}

int resolve_workers(int requested) {
    if (requested > 0) return requested;
    if (const char* env = std::getenv("NEYMAN_LAB_WORKERS")) {
        char* end = nullptr;
        const long v = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && v > 0) return static_cast<int>(v);
    }
    const unsigned hc = std::thread::hardware_concurrency();
    return hc > 0 ? static_cast<int>(hc) : 1;
}

ExperimentResult variance_comparison(const ExperimentConfig& config,
                                     int workers) {
    validate(config);
    bool has_adaptive = false;
    bool has_oracle = false;
    bool has_balanced = false;
    for (const auto& spec : config.strategies) {
        has_adaptive |= !is_fixed_design(spec);
        has_oracle |= spec.kind == StrategyKind::NeymanOracle;
        has_balanced |= spec.kind == StrategyKind::Balanced;
    }
    if (!has_adaptive || !has_oracle || !has_balanced) {
        throw ConfigError(
            "variance_comparison: config must list at least one adaptive "
            "strategy plus the neyman-oracle and balanced reference designs");
    }
    workers = resolve_workers(workers);
    const std::int64_t reps = config.replications;

    struct Job {
        std::size_t i_inst, i_strat, i_horizon;
        std::vector<double> tau, regret;
    };
    std::vector<Job> jobs;
    for (std::size_t i = 0; i < config.instances.size(); ++i) {
        for (std::size_t s = 0; s < config.strategies.size(); ++s) {
            if (is_fixed_design(config.strategies[s])) continue;
            for (std::size_t h = 0; h < config.horizons.size(); ++h) {
                Job job{i, s, h, {}, {}};
                job.tau.resize(static_cast<std::size_t>(reps));
                job.regret.resize(static_cast<std::size_t>(reps));
                jobs.push_back(std::move(job));
            }
        }
    }

    const std::int64_t total = static_cast<std::int64_t>(jobs.size()) * reps;
    parallel_for_index(total, workers, [&](std::int64_t k) {
        Job& job = jobs[static_cast<std::size_t>(k / reps)];
        const std::int64_t r = k % reps;
        const auto& inst = config.instances[job.i_inst];
        const auto& spec = config.strategies[job.i_strat];
        const std::int64_t horizon = config.horizons[job.i_horizon];
        RngStream rng(config.seed,
                      cell_stream(kCompareTag, job.i_inst, job.i_strat,
                                  job.i_horizon, static_cast<std::uint64_t>(r)));
        try {
            const ReplicationResult res =
                run_replication(inst.instance, spec, horizon, rng);
            job.tau[static_cast<std::size_t>(r)] = aht_estimate(res.trace);
            job.regret[static_cast<std::size_t>(r)] = res.ledger.cumulative;
        } catch (const std::exception& e) {
            throw std::runtime_error("replication failed (instance=" + inst.id +
                                     " strategy=" + spec.id +
                                     " T=" + std::to_string(horizon) +
                                     " rep=" + std::to_string(r) + "): " +
                                     e.what());
        }
    });

    ExperimentResult result;
    std::size_t next_job = 0;
    for (std::size_t i = 0; i < config.instances.size(); ++i) {
        const auto& inst = config.instances[i];
        for (std::size_t s = 0; s < config.strategies.size(); ++s) {
            const auto& spec = config.strategies[s];
            for (std::size_t h = 0; h < config.horizons.size(); ++h) {
                const std::int64_t horizon = config.horizons[h];
                ComparisonCell cell;
                cell.instance = inst.id;
                cell.strategy = spec.id;
                cell.horizon = horizon;
                if (is_fixed_design(spec)) {
                    const double pi_f = resolve_fixed_pi(spec, inst.instance);
                    const double s0 = inst.instance.s0();
                    const double s1 = inst.instance.s1();
                    cell.variance =
                        ht_fixed_variance(inst.instance, pi_f, horizon);
                    cell.mean_estimate = inst.instance.tau();
                    const double excess =
                        std::max(0.0, neyman_loss(pi_f, s0, s1) -
                                          neyman_loss(neyman_allocation(s0, s1),
                                                      s0, s1));
                    const double regret = static_cast<double>(horizon) * excess;
                    cell.mean_regret = regret;
                    cell.regret_q05 = regret;
                    cell.regret_q50 = regret;
                    cell.regret_q95 = regret;
                } else {
                    const Job& job = jobs[next_job++];
                    cell.variance = sample_variance(job.tau);
                    cell.mean_estimate = mean(job.tau);
                    cell.mean_regret = mean(job.regret);
                    cell.regret_q05 = quantile(job.regret, 0.05);
                    cell.regret_q50 = quantile(job.regret, 0.50);
                    cell.regret_q95 = quantile(job.regret, 0.95);
                }
                result.cells.push_back(std::move(cell));
            }
        }
    }
    return result;
}

ExperimentResult clip_time_experiment(const ExperimentConfig& config,
                                      const std::vector<double>& alphas,
                                      int workers) {
    validate(config);
    if (alphas.empty()) {
        throw ConfigError("clip_time_experiment: no alphas given");
    }
    for (double alpha : alphas) {
        if (!(alpha > 0.0 && alpha < 0.5)) {
            throw ConfigError(
                "clip_time_experiment: alphas must lie in (0, 0.5)");
        }
    }
    workers = resolve_workers(workers);
    const std::int64_t reps = config.replications;
    const std::int64_t horizon = config.horizons.back();

    const std::size_t n_cells = config.instances.size() * alphas.size();
    std::vector<std::vector<double>> exits(n_cells);
    for (auto& v : exits) v.resize(static_cast<std::size_t>(reps));

    const std::int64_t total = static_cast<std::int64_t>(n_cells) * reps;
    parallel_for_index(total, workers, [&](std::int64_t k) {
        const std::size_t cell = static_cast<std::size_t>(k / reps);
        const std::int64_t r = k % reps;
        const std::size_t i_inst = cell / alphas.size();
        const std::size_t i_alpha = cell % alphas.size();
        StrategySpec spec;
        spec.kind = StrategyKind::ClipSmt;
        spec.alpha = alphas[i_alpha];
        RngStream rng(config.seed,
                      cell_stream(kClipTag, i_inst, i_alpha, 0,
                                  static_cast<std::uint64_t>(r)));
        const ReplicationResult res = run_replication(
            config.instances[i_inst].instance, spec, horizon, rng);
        exits[cell][static_cast<std::size_t>(r)] =
            static_cast<double>(res.clip_exit_round);
    });

    ExperimentResult result;
    for (std::size_t i = 0; i < config.instances.size(); ++i) {
        for (std::size_t a = 0; a < alphas.size(); ++a) {
            const auto& exit_rounds = exits[i * alphas.size() + a];
            ClipRow row;
            row.instance = config.instances[i].id;
            row.alpha = alphas[a];
            row.empirical_q95 = quantile(exit_rounds, 0.95);
            const ClipPhasePrediction pred = predict_clip_phase(
                config.instances[i].instance, alphas[a], config.delta);
            row.predicted = pred.t_clip;
            row.valid = pred.valid;
            row.ratio = pred.valid
                            ? pred.t_clip / std::max(row.empirical_q95, 1.0)
                            : kNaN;
            result.clip_rows.push_back(std::move(row));
        }
    }
    return result;
}

std::vector<ClipPrediction> predict_clip_rows(const ExperimentConfig& config,
                                              double alpha) {
    validate(config);
    std::vector<ClipPrediction> rows;
    for (const auto& inst : config.instances) {
        const ClipPhasePrediction pred =
            predict_clip_phase(inst.instance, alpha, config.delta);
        rows.push_back(ClipPrediction{inst.id, pred.t_lower, pred.t_upper,
                                      pred.t_clip, pred.valid});
    }
    return rows;
}

std::vector<NamedInstance> default_instance_grid() {
    // Rows fix the Neyman allocation (0.2, 0.35, 0.5); within a row the
    // treatment mean rises left to right and the control mean follows from
    // the row's moment ratio.
    const double r20 = (0.8 / 0.2) * (0.8 / 0.2);    // S0/S1 at pi* = 0.2
    const double r35 = (0.65 / 0.35) * (0.65 / 0.35);
    std::vector<std::pair<double, double>> params;
    for (double p1 : {0.02, 0.04, 0.06}) params.emplace_back(r20 * p1, p1);
    for (double p1 : {0.08, 0.17, 0.26}) params.emplace_back(r35 * p1, p1);
    for (double p1 : {0.3, 0.5, 0.7}) params.emplace_back(p1, p1);

    std::vector<NamedInstance> grid;
    for (const auto& [p0, p1] : params) {
        char id[48];
        std::snprintf(id, sizeof(id), "c%.4g_t%.4g", p0, p1);
        grid.push_back(NamedInstance{
            id, ProblemInstance{OutcomeDistribution::bernoulli(p0),
                                OutcomeDistribution::bernoulli(p1)}});
    }
    return grid;
}

std::vector<StrategySpec> default_strategies() {
    std::vector<StrategySpec> specs;
    const StrategyKind kinds[] = {StrategyKind::ClipSmt, StrategyKind::ClipOgd,
                                  StrategyKind::Etc, StrategyKind::NeymanOracle,
                                  StrategyKind::Balanced};
    for (StrategyKind kind : kinds) {
        StrategySpec spec;
        spec.kind = kind;
        spec.id = strategy_kind_name(kind);
        specs.push_back(spec);
    }
    return specs;
}

}  // namespace neyman
