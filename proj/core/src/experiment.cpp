#include "spwn/experiment.hpp"

#include <chrono>
#include <cmath>
#include <mutex>
#include <stdexcept>
#include <string>
#include <utility>

#include "spwn/parallel.hpp"
#include "spwn/special_functions.hpp"

namespace spwn {

void ExperimentConfig::validate() const {
    if (models.empty()) throw std::domain_error("experiment: model grid is empty");
    if (lambda_grid.empty()) throw std::domain_error("experiment: lambda grid is empty");
    for (double l : lambda_grid) {
        if (!std::isfinite(l) || !(l > 0.0 && l <= 1.0)) {
            throw std::domain_error("experiment: lambda must lie in (0, 1], got " +
                                    std::to_string(l));
        }
    }
    if (reps == 0) throw std::domain_error("experiment: reps must be >= 1");
    if (n < 2) throw std::domain_error("experiment: n must be >= 2");
    if (!(level > 0.0 && level < 1.0)) {
        throw std::domain_error("experiment: level must lie in (0, 1)");
    }
    // Stream ids are (row << 32) | rep; keep both halves injective.
    if (reps > (1ull << 32) || models.size() > (1ull << 32)) {
        throw std::domain_error("experiment: grid too large for stream addressing");
    }
    for (const ModelSpec& m : models) {
        std::visit([](const auto& spec) { spec.validate(); }, m);
    }
}

namespace {

double model_param(const ModelSpec& m) {
    return std::visit(
        [](const auto& spec) {
            if constexpr (std::is_same_v<std::decay_t<decltype(spec)>, ArchSpec>) {
                return spec.alpha1;
            } else {
                return spec.sigma2;
            }
        },
        m);
}

TimeSeries simulate_model(const ModelSpec& m, SimConfig cfg) {
    return std::visit(
        [&](const auto& spec) {
            if constexpr (std::is_same_v<std::decay_t<decltype(spec)>, ArchSpec>) {
                return simulate_arch1(spec, std::move(cfg));
            } else {
                return simulate_mar(spec, std::move(cfg));
            }
        },
        m);
}

}  // namespace

ExperimentReport run_experiment(const ExperimentConfig& cfg, const RunOptions& opts) {
    cfg.validate();
    const auto t0 = std::chrono::steady_clock::now();

    const std::size_t rows = cfg.models.size();
    const std::size_t cols = cfg.lambda_grid.size();
    const std::size_t total = rows * cfg.reps;
    const double z = normal_quantile(0.5 * (1.0 + cfg.level));
    const double sqrt_n = std::sqrt(static_cast<double>(cfg.n));

    const unsigned workers = resolve_workers(opts.workers, total);
    std::vector<std::vector<std::uint64_t>> counts(
        workers, std::vector<std::uint64_t>(rows * cols, 0));

    std::mutex progress_mutex;
    std::atomic<std::size_t> done{0};
    const std::size_t progress_step =
        opts.progress ? std::max<std::size_t>(1, total / 100) : 0;

    parallel_for(total, workers, [&](unsigned worker, std::size_t task) {
        if (opts.cancel && opts.cancel->load(std::memory_order_relaxed)) {
            throw Interrupted{};
        }
        const std::size_t row = task / cfg.reps;
        const std::size_t rep = task % cfg.reps;
        try {
            // One stream per (row, replication): reproducible at any
            // worker count, and rows/reps can be recomputed in isolation.
            const std::uint64_t stream_id =
                (static_cast<std::uint64_t>(row) << 32) | static_cast<std::uint64_t>(rep);
            TimeSeries path = simulate_model(
                cfg.models[row], SimConfig{cfg.n, cfg.burn_in, RngStream(cfg.seed, stream_id)});

            for (std::size_t j = 0; j < cols; ++j) {
                const double lambda = cfg.lambda_grid[j];
                std::optional<TimeSeries> transformed;
                const TimeSeries* y = &path;
                if (lambda != 1.0) {
                    transformed = transform_series(path, PowerParams{lambda, -1.0});
                    y = &*transformed;
                }
                const double rho1 = sample_acf(*y, 1)[0];
                const double w11 = w_hat(*y, 1, cfg.correction);
                if (std::fabs(rho1) > z * std::sqrt(w11) / sqrt_n) {
                    ++counts[worker][row * cols + j];
                }
            }
        } catch (const Interrupted&) {
            throw;
        } catch (const std::exception& e) {
            throw std::runtime_error("experiment row " + std::to_string(row) + ", rep " +
                                     std::to_string(rep) + ": " + e.what());
        }

        if (progress_step != 0) {
            std::size_t d = done.fetch_add(1, std::memory_order_relaxed) + 1;
            if (d % progress_step == 0 || d == total) {
                std::lock_guard lock(progress_mutex);
                opts.progress(d, total);
            }
        }
    });

    ExperimentReport report;
    report.config = cfg;
    report.param_values.reserve(rows);
    report.theoretical_w11.reserve(rows);
    report.rejection_rate.assign(rows, std::vector<double>(cols, 0.0));
    for (std::size_t g = 0; g < rows; ++g) {
        report.param_values.push_back(model_param(cfg.models[g]));
        if (const auto* arch = std::get_if<ArchSpec>(&cfg.models[g])) {
            report.theoretical_w11.push_back(arch1_theoretical_w11(*arch));
        } else {
            report.theoretical_w11.push_back(std::nullopt);
        }
        for (std::size_t j = 0; j < cols; ++j) {
            std::uint64_t c = 0;
            for (unsigned w = 0; w < workers; ++w) c += counts[w][g * cols + j];
            report.rejection_rate[g][j] =
                static_cast<double>(c) / static_cast<double>(cfg.reps);
        }
    }
    report.elapsed = std::chrono::steady_clock::now() - t0;
    return report;
}

ExperimentConfig table1_config() {
    ExperimentConfig cfg;
    for (double a : {0.05, 0.15, 0.25, 0.35, 0.45, 0.55, 0.65, 0.75, 0.85, 0.95}) {
        cfg.models.emplace_back(ArchSpec{0.01, a});
    }
    cfg.lambda_grid = {0.1, 0.5, 0.75, 1.0};
    cfg.n = 2000;
    cfg.reps = 10000;
    return cfg;
}

ExperimentConfig table2_config() {
    ExperimentConfig cfg;
    for (int s = 1; s <= 10; ++s) {
        MarSpec spec;
        spec.sigma2 = static_cast<double>(s);
        cfg.models.emplace_back(spec);
    }
    cfg.lambda_grid = {0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9, 1.0};
    cfg.n = 2000;
    cfg.reps = 10000;
    return cfg;
}

namespace {

ExperimentConfig apply_overrides(ExperimentConfig cfg, const PresetOverrides& o) {
    if (o.reps) cfg.reps = *o.reps;
    if (o.n) cfg.n = *o.n;
    if (o.seed) cfg.seed = *o.seed;
    if (o.level) cfg.level = *o.level;
    if (o.correction) cfg.correction = *o.correction;
    if (o.burn_in) cfg.burn_in = *o.burn_in;
    return cfg;
}

}  // namespace

ExperimentReport table1(const PresetOverrides& overrides, const RunOptions& opts) {
    return run_experiment(apply_overrides(table1_config(), overrides), opts);
}

ExperimentReport table2(const PresetOverrides& overrides, const RunOptions& opts) {
    return run_experiment(apply_overrides(table2_config(), overrides), opts);
}

}  // namespace spwn
