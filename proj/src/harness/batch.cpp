#include "rsp/harness/batch.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <map>
#include <mutex>
#include <sstream>
#include <thread>
#include <tuple>

#include "rsp/core/error.hpp"
#include "rsp/harness/text.hpp"

namespace rsp {

namespace {

std::string confidence_field(const ExperimentConfig& cfg) {
    return is_race(cfg.algorithm) ? format_double(cfg.confidence) : "NA";
}

double median_of(std::vector<double> v) {
    std::sort(v.begin(), v.end());
    return quantile_sorted(v, 0.5);
}

} // namespace

std::string variant_label(const ExperimentConfig& cfg) {
    std::string label(to_string(cfg.algorithm));
    if (cfg.algorithm != Algorithm::Implicit) {
        label += "/b" + std::to_string(cfg.budget);
    }
    if (is_race(cfg.algorithm)) {
        label += "/c" + format_double(cfg.confidence);
    }
    return label;
}

BatchResult run_batch(const std::vector<ExperimentConfig>& configs, std::size_t threads,
                      std::size_t front_resolution) {
    if (configs.empty()) {
        throw ConfigError("empty batch");
    }
    struct Job {
        std::size_t variant;
        std::uint64_t seed;
    };
    std::vector<Job> jobs;
    for (std::size_t v = 0; v < configs.size(); ++v) {
        configs[v].validate();
        for (std::uint64_t seed : configs[v].seeds) {
            jobs.push_back({v, seed});
        }
    }

    std::vector<std::optional<RunRecord>> done(jobs.size());
    std::vector<std::string> errors(jobs.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t j = next++; j < jobs.size(); j = next++) {
            try {
                RunRecord r = run_experiment(configs[jobs[j].variant], jobs[j].seed);
                r.variant = jobs[j].variant;
                done[j] = std::move(r);
            } catch (const std::exception& e) {
                errors[j] = e.what();
            }
        }
    };
    const std::size_t workers = std::max<std::size_t>(1, std::min(threads, jobs.size()));
    if (workers == 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        for (std::size_t w = 0; w < workers; ++w) {
            pool.emplace_back(worker);
        }
    }

    BatchResult result;
    for (std::size_t j = 0; j < jobs.size(); ++j) {
        if (done[j]) {
            result.runs.push_back(std::move(*done[j]));
        } else {
            result.failures.push_back({jobs[j].variant, jobs[j].seed, errors[j]});
        }
    }
    score_runs(result.runs, front_resolution);
    return result;
}

void score_runs(std::vector<RunRecord>& runs, std::size_t front_resolution) {
    using Cell = std::tuple<ZdtId, std::size_t, NoiseKind>;
    std::map<Cell, std::vector<ObjectivePoint>> generated;
    for (const RunRecord& r : runs) {
        auto& bucket = generated[{r.config.problem, r.config.dimension, r.config.noise}];
        bucket.insert(bucket.end(), r.final_objectives.begin(), r.final_objectives.end());
    }
    std::map<Cell, NormalizationFrame> frames;
    for (const auto& [cell, points] : generated) {
        const Problem problem(std::get<0>(cell), std::get<1>(cell));
        frames.emplace(cell, NormalizationFrame::from_batch(problem.true_front(front_resolution), points));
    }
    for (RunRecord& r : runs) {
        const Problem problem(r.config.problem, r.config.dimension);
        const auto& frame = frames.at({r.config.problem, r.config.dimension, r.config.noise});
        r.delta_hv = delta_hypervolume(r.final_objectives, problem, frame, front_resolution).delta_hv;
    }
}

std::string summary_csv(const std::vector<RunRecord>& runs) {
    std::ostringstream out;
    out << "problem,noise,algorithm,estimator,budget,confidence,seed,delta_hv,evaluations\n";
    for (const RunRecord& r : runs) {
        const ExperimentConfig& c = r.config;
        out << to_string(c.problem) << ',' << to_string(c.noise) << ',' << to_string(c.algorithm) << ','
            << to_string(estimator_of(c.algorithm)) << ',' << c.budget << ',' << confidence_field(c) << ','
            << r.seed << ',' << (r.delta_hv ? format_double(*r.delta_hv) : "NA") << ',' << r.evaluations()
            << '\n';
    }
    return out.str();
}

std::vector<SignificanceRow> significance_table(const std::vector<RunRecord>& runs) {
    using Cell = std::tuple<std::string, std::size_t, std::string>;
    // cell -> variant -> seed -> delta
    std::map<Cell, std::map<std::size_t, std::map<std::uint64_t, double>>> cells;
    std::map<std::size_t, std::string> labels;
    for (const RunRecord& r : runs) {
        if (!r.delta_hv) continue;
        cells[{std::string(to_string(r.config.problem)), r.config.dimension,
               std::string(to_string(r.config.noise))}][r.variant][r.seed] = *r.delta_hv;
        labels[r.variant] = variant_label(r.config);
    }
    std::vector<SignificanceRow> rows;
    for (const auto& [cell, variants] : cells) {
        for (auto a = variants.begin(); a != variants.end(); ++a) {
            for (auto b = std::next(a); b != variants.end(); ++b) {
                std::vector<double> xa;
                std::vector<double> xb;
                for (const auto& [seed, value] : a->second) {
                    if (auto it = b->second.find(seed); it != b->second.end()) {
                        xa.push_back(value);
                        xb.push_back(it->second);
                    }
                }
                SignificanceRow row;
                row.problem = std::get<0>(cell);
                row.noise = std::get<2>(cell);
                row.variant_a = a->first;
                row.variant_b = b->first;
                row.label_a = labels[a->first];
                row.label_b = labels[b->first];
                row.pairs = xa.size();
                if (!xa.empty()) {
                    row.median_a = median_of(xa);
                    row.median_b = median_of(xb);
                }
                if (xa.size() >= 5) {
                    row.p_value = wilcoxon_signed_rank(xa, xb);
                }
                rows.push_back(std::move(row));
            }
        }
    }
    return rows;
}

std::string significance_csv(const std::vector<SignificanceRow>& rows) {
    std::ostringstream out;
    out << "problem,noise,variant_a,label_a,variant_b,label_b,pairs,median_a,median_b,p_value\n";
    for (const auto& r : rows) {
        out << r.problem << ',' << r.noise << ',' << r.variant_a << ',' << r.label_a << ',' << r.variant_b << ','
            << r.label_b << ',' << r.pairs << ',' << format_double(r.median_a) << ','
            << format_double(r.median_b) << ',' << (r.p_value ? format_double(*r.p_value) : "NA") << '\n';
    }
    return out.str();
}

std::string failures_csv(const std::vector<RunFailure>& failures) {
    std::ostringstream out;
    out << "variant,seed,message\n";
    for (const auto& f : failures) {
        std::string msg = f.message;
        std::replace(msg.begin(), msg.end(), ',', ';');
        std::replace(msg.begin(), msg.end(), '\n', ' ');
        out << f.variant << ',' << f.seed << ',' << msg << '\n';
    }
    return out.str();
}

double quantile_sorted(const std::vector<double>& sorted, double p) {
    if (sorted.empty()) {
        throw Error("invalid-argument", "quantile of an empty sample");
    }
    const double h = p * static_cast<double>(sorted.size() - 1);
    const auto lo = static_cast<std::size_t>(std::floor(h));
    const std::size_t hi = std::min(lo + 1, sorted.size() - 1);
    return sorted[lo] + (h - static_cast<double>(lo)) * (sorted[hi] - sorted[lo]);
}

std::string boxplot_csv(const std::string& summary) {
    std::istringstream in(summary);
    std::string line;
    if (!std::getline(in, line) ||
        trim(line) != "problem,noise,algorithm,estimator,budget,confidence,seed,delta_hv,evaluations") {
        throw Error("malformed-summary", "unexpected summary header");
    }
    std::vector<std::string> order;
    std::map<std::string, std::vector<double>> groups;
    while (std::getline(in, line)) {
        line = trim(line);
        if (line.empty()) continue;
        const auto f = split(line, ',');
        if (f.size() != 9) {
            throw Error("malformed-summary", "summary row needs 9 fields");
        }
        const std::string key = f[0] + ',' + f[1] + ',' + f[2] + ',' + f[4] + ',' + f[5];
        auto [it, fresh] = groups.try_emplace(key);
        if (fresh) {
            order.push_back(key);
        }
        if (auto v = parse_double(f[7]); v && !std::isnan(*v)) {
            it->second.push_back(*v);
        }
    }
    std::ostringstream out;
    out << "problem,noise,algorithm,budget,confidence,count,min,q1,median,q3,max\n";
    for (const auto& key : order) {
        auto values = groups[key];
        if (values.empty()) {
            continue;
        }
        std::sort(values.begin(), values.end());
        out << key << ',' << values.size();
        for (double p : {0.0, 0.25, 0.5, 0.75, 1.0}) {
            out << ',' << format_double(quantile_sorted(values, p));
        }
        out << '\n';
    }
    return out.str();
}

} // namespace rsp
