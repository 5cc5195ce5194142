// Command-line front end: single runs, batches, scoring and boxplot data.

#include <algorithm>
#include <filesystem>
#include <iostream>
#include <map>
#include <tuple>

#include "CLI11.hpp"
#include "rsp/core/error.hpp"
#include "rsp/harness/batch.hpp"
#include "rsp/harness/text.hpp"

namespace fs = std::filesystem;
using namespace rsp;

namespace {

std::string run_file_name(const RunRecord& r) {
    std::string name = std::to_string(r.variant) + "_" + std::string(to_string(r.config.problem)) + "_" +
                       std::string(to_string(r.config.noise)) + "_" + variant_label(r.config) + "_s" +
                       std::to_string(r.seed) + ".csv";
    std::replace(name.begin(), name.end(), '/', '_');
    return name;
}

std::vector<RunRecord> load_runs(const fs::path& dir) {
    const fs::path runs_dir = fs::is_directory(dir / "runs") ? dir / "runs" : dir;
    std::vector<fs::path> files;
    for (const auto& entry : fs::directory_iterator(runs_dir)) {
        if (entry.is_regular_file() && entry.path().extension() == ".csv") {
            files.push_back(entry.path());
        }
    }
    std::sort(files.begin(), files.end());
    std::vector<RunRecord> runs;
    for (const auto& f : files) {
        const std::string text = read_file(f.string());
        if (text.rfind("# rsp-run v1", 0) != 0) {
            continue;
        }
        runs.push_back(parse_run(text));
    }
    std::stable_sort(runs.begin(), runs.end(), [](const RunRecord& a, const RunRecord& b) {
        return std::tie(a.variant, a.seed) < std::tie(b.variant, b.seed);
    });
    return runs;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Noisy multi-objective optimization with racing selection probabilities"};
    app.require_subcommand(1);

    // run
    auto* run = app.add_subcommand("run", "Run one configuration for one or more seeds");
    std::string config_path;
    std::map<std::string, std::string> flags;
    const std::vector<std::pair<std::string, std::string>> run_flags{
        {"problem", "zdt1|zdt2|zdt3|zdt4|zdt6"},
        {"noise", "none|gaussian|cauchy|gumbel"},
        {"algo", "implicit|static-avg|static-med|rsp-i|rsp-avg|rsp-med"},
        {"budget", "Sampling budget (static samples / maximum race length)"},
        {"confidence", "Race confidence level 1 - delta"},
        {"proximity", "Race proximity threshold"},
        {"pop", "Population size"},
        {"evals", "Maximum number of evaluations"},
        {"generations", "Stop after this many generations (0: no limit)"},
        {"dimension", "Number of decision variables (0: problem default)"},
        {"seed", "Run seed"},
    };
    for (const auto& [name, help] : run_flags) {
        run->add_option("--" + name, flags[name], help);
    }
    run->add_option("--config", config_path, "key=value file; flags override it");
    std::string run_out;
    run->add_option("--out", run_out, "Run file to write")->required();

    // batch
    auto* batch = app.add_subcommand("batch", "Run a configuration grid and score it");
    std::string grid_path;
    std::string batch_out;
    std::size_t threads = 0;
    batch->add_option("--config", grid_path, "Grid file")->required()->check(CLI::ExistingFile);
    batch->add_option("--out", batch_out, "Output directory")->required();
    batch->add_option("--threads", threads, "Worker threads (overrides the grid file)");

    // score
    auto* score = app.add_subcommand("score", "Score run files with a shared normalization frame");
    std::string score_in;
    std::string score_out;
    std::string score_sig;
    score->add_option("--in", score_in, "Directory of run files")->required()->check(CLI::ExistingDirectory);
    score->add_option("--out", score_out, "Summary CSV")->required();
    score->add_option("--significance", score_sig, "Optional pairwise Wilcoxon table");

    // boxplot
    auto* box = app.add_subcommand("boxplot", "Five-number summaries of a summary CSV");
    std::string box_in;
    std::string box_out;
    box->add_option("--in", box_in, "Summary CSV")->required()->check(CLI::ExistingFile);
    box->add_option("--out", box_out, "Boxplot CSV")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*run) {
            KeyValues kv;
            if (!config_path.empty()) {
                kv = parse_key_values(read_file(config_path));
            }
            for (const auto& [name, help] : run_flags) {
                if (run->count("--" + name) > 0) {
                    if (name == "seed") {
                        kv.erase("seeds");
                        kv.erase("master_seed");
                        kv.erase("runs");
                    }
                    kv[name] = flags[name];
                }
            }
            if (!kv.count("seed") && !kv.count("seeds") && !kv.count("master_seed") && !kv.count("runs")) {
                kv["seed"] = "1";
            }
            const ExperimentConfig cfg = config_from_key_values(kv);
            if (cfg.seeds.size() != 1) {
                throw ConfigError("run takes a single seed; use batch for several");
            }
            RunRecord record = run_experiment(cfg, cfg.seeds.front());
            const Problem problem(cfg.problem, cfg.dimension);
            record.delta_hv =
                delta_hypervolume(record.final_objectives, problem, NormalizationFrame::fallback(problem)).delta_hv;
            write_file(run_out, format_run(record));
            std::cout << "evaluations=" << record.evaluations() << " generations=" << record.rows.back().generation
                      << " mean_race_length=" << format_double(record.mean_race_length())
                      << " delta_hv=" << format_double(*record.delta_hv) << '\n';
        } else if (*batch) {
            GridSpec grid = parse_grid(read_file(grid_path));
            if (threads > 0) {
                grid.threads = threads;
            }
            const BatchResult result = run_batch(grid.configs, grid.threads);
            const fs::path out(batch_out);
            fs::create_directories(out / "runs");
            for (const RunRecord& r : result.runs) {
                write_file((out / "runs" / run_file_name(r)).string(), format_run(r));
            }
            write_file((out / "summary.csv").string(), summary_csv(result.runs));
            write_file((out / "significance.csv").string(), significance_csv(significance_table(result.runs)));
            if (!result.failures.empty()) {
                write_file((out / "failures.csv").string(), failures_csv(result.failures));
                std::cerr << result.failures.size() << " run(s) failed, see failures.csv\n";
            }
            std::cout << result.runs.size() << " runs scored into " << (out / "summary.csv").string() << '\n';
        } else if (*score) {
            std::vector<RunRecord> runs = load_runs(score_in);
            if (runs.empty()) {
                throw ConfigError("no run files found in " + score_in);
            }
            score_runs(runs);
            write_file(score_out, summary_csv(runs));
            if (!score_sig.empty()) {
                write_file(score_sig, significance_csv(significance_table(runs)));
            }
            std::cout << runs.size() << " runs scored\n";
        } else if (*box) {
            write_file(box_out, boxplot_csv(read_file(box_in)));
        }
    } catch (const ConfigError& e) {
        std::cerr << "configuration error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
