#pragma once

#include <atomic>
#include <chrono>
#include <cstdint>
#include <functional>
#include <optional>
#include <variant>
#include <vector>

#include "spwn/acf.hpp"
#include "spwn/simulate.hpp"

namespace spwn {

using ModelSpec = std::variant<ArchSpec, MarSpec>;

/// Everything the rejection-rate matrix depends on. Two runs with equal
/// configs produce identical reports, regardless of worker count.
struct ExperimentConfig {
    std::vector<ModelSpec> models;     ///< grid rows
    std::vector<double> lambda_grid;   ///< grid columns, each in (0, 1]
    std::size_t n = 2000;
    std::size_t reps = 10000;
    double level = 0.95;
    std::uint64_t seed = 0;
    WCorrection correction = WCorrection::n_over_n_minus_i;
    std::size_t burn_in = 500;

    void validate() const;
};

/// Execution knobs that must not influence the result.
struct RunOptions {
    unsigned workers = 0;  ///< 0 = hardware concurrency
    std::function<void(std::size_t done, std::size_t total)> progress;
    const std::atomic<bool>* cancel = nullptr;
};

/// Thrown when a run observes RunOptions::cancel.
struct Interrupted : std::exception {
    const char* what() const noexcept override { return "experiment interrupted"; }
};

struct ExperimentReport {
    ExperimentConfig config;                             ///< echoed
    std::vector<double> param_values;                    ///< per row: alpha1 or sigma2
    std::vector<std::optional<double>> theoretical_w11;  ///< per row; engaged for ARCH rows below the fourth-moment boundary
    std::vector<std::vector<double>> rejection_rate;     ///< [row][lambda]
    std::chrono::duration<double> elapsed{};             ///< wall time; not serialized
};

/**
 * @brief Monte Carlo rejection-rate matrix over (model row) x (lambda).
 *
 * For each replication r of row g: simulate one path with stream_id
 * (g << 32) | r, transform it with each lambda, and reject when
 * |rho_hat(1)| > z_{(1+level)/2} * sqrt(w_hat_11 / n). Rates are the
 * rejection fractions over reps. Replications are embarrassingly parallel;
 * the reduction is integer counting, so the report is bit-identical for a
 * given (config, seed) at any worker count.
 */
[[nodiscard]] ExperimentReport run_experiment(const ExperimentConfig& cfg,
                                              const RunOptions& opts = {});

/// Optional overrides applied on top of a preset configuration.
struct PresetOverrides {
    std::optional<std::size_t> reps;
    std::optional<std::size_t> n;
    std::optional<std::uint64_t> seed;
    std::optional<double> level;
    std::optional<WCorrection> correction;
    std::optional<std::size_t> burn_in;
};

/// ARCH(1) grid: alpha1 in {0.05, 0.15, ..., 0.95}, lambda in
/// {0.1, 0.5, 0.75, 1}, omega = 0.01, n = 2000, 10000 replications.
[[nodiscard]] ExperimentConfig table1_config();

/// Mixture-autoregressive grid: sigma2 in {1, ..., 10}, lambda in
/// {0.1, 0.2, ..., 1.0}, n = 2000, 10000 replications.
[[nodiscard]] ExperimentConfig table2_config();

[[nodiscard]] ExperimentReport table1(const PresetOverrides& overrides = {},
                                      const RunOptions& opts = {});
[[nodiscard]] ExperimentReport table2(const PresetOverrides& overrides = {},
                                      const RunOptions& opts = {});

}  // namespace spwn
