#pragma once

#include <string>
#include <vector>

#include "rsp/harness/experiment.hpp"
#include "rsp/metrics/metrics.hpp"

namespace rsp {

struct RunFailure {
    std::size_t variant = 0;
    std::uint64_t seed = 0;
    std::string message;
};

struct BatchResult {
    std::vector<RunRecord> runs; // ordered by (variant, seed position), scored
    std::vector<RunFailure> failures;
};

// Runs every (config, seed) pair on `threads` workers. Results do not depend
// on the thread count. A failing run is recorded and the batch continues.
BatchResult run_batch(const std::vector<ExperimentConfig>& configs, std::size_t threads = 1,
                      std::size_t front_resolution = default_front_resolution);

// Builds one normalization frame per (problem, dimension, noise) cell from
// the exact front and every final point of the cell, then sets delta_hv of
// every run.
void score_runs(std::vector<RunRecord>& runs, std::size_t front_resolution = default_front_resolution);

// Columns: problem,noise,algorithm,estimator,budget,confidence,seed,delta_hv,evaluations
std::string summary_csv(const std::vector<RunRecord>& runs);

struct SignificanceRow {
    std::string problem;
    std::string noise;
    std::size_t variant_a = 0;
    std::size_t variant_b = 0;
    std::string label_a;
    std::string label_b;
    std::size_t pairs = 0;
    double median_a = 0.0;
    double median_b = 0.0;
    std::optional<double> p_value; // empty with fewer than 5 common seeds
};

// Two-sided Wilcoxon signed-rank p-values between every pair of variants of
// each (problem, noise) cell, paired by seed.
std::vector<SignificanceRow> significance_table(const std::vector<RunRecord>& runs);
std::string significance_csv(const std::vector<SignificanceRow>& rows);

std::string failures_csv(const std::vector<RunFailure>& failures);

// Linear-interpolation quantile (type 7) of sorted values, p in [0, 1].
double quantile_sorted(const std::vector<double>& sorted, double p);

// Five-number summaries of delta_hv per (problem, noise, algorithm, budget,
// confidence) group of a summary CSV, groups in order of first appearance.
std::string boxplot_csv(const std::string& summary);

std::string variant_label(const ExperimentConfig& cfg);

} // namespace rsp
