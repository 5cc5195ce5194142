#include "rsp/harness/experiment.hpp"

#include <sstream>

#include "rsp/core/error.hpp"
#include "rsp/harness/text.hpp"

namespace rsp {

namespace {

constexpr std::uint64_t init_stream = 1;
constexpr std::uint64_t variation_stream = 2;
constexpr std::uint64_t selection_stream = 3;

const char* const trace_header =
    "generation,evaluations,quota_selected,quota_discarded,t_max,proximity,mean_race_length";

} // namespace

RunRecord run_experiment(const ExperimentConfig& input, std::uint64_t seed) {
    input.validate();
    RunRecord record;
    record.config = input.canonical();
    record.config.seeds = {seed};
    record.config.output.clear();
    record.seed = seed;
    const ExperimentConfig& cfg = record.config;

    const Problem problem(cfg.problem, cfg.dimension);
    NoisyProblem noisy(problem, NoiseModel{cfg.noise}, cfg.effective_max_evaluations());
    const SelectorConfig selector = cfg.selector();
    const VariationParams variation;

    const RngStream root(seed);
    RngStream init_rng = root.split(init_stream);
    RngStream variation_rng = root.split(variation_stream);
    RngStream selection_rng = root.split(selection_stream);

    const Bounds& bounds = problem.bounds();
    std::vector<Individual> population(cfg.population_size);
    for (Individual& ind : population) {
        ind.genome = DecisionVector(bounds.size());
        for (std::size_t j = 0; j < bounds.size(); ++j) {
            ind.genome[j] = bounds.lower[j] + init_rng.uniform() * (bounds.upper[j] - bounds.lower[j]);
        }
        ind.archive.append(noisy.evaluate(ind.genome, selection_rng));
    }

    GenerationRow row;
    row.evaluations = noisy.evaluations();
    record.rows.push_back(row);

    std::uint64_t race_iterations = 0;
    const std::uint64_t worst_case = selector.worst_case_evaluations(cfg.population_size);
    while ((cfg.max_generations == 0 || row.generation < cfg.max_generations) &&
           noisy.evaluations() + worst_case <= noisy.max_evaluations()) {
        GenerationReport report;
        population = nsga2_generation(std::move(population), selector, variation, noisy, variation_rng,
                                      selection_rng, &report);
        ++row.generation;
        row.evaluations = noisy.evaluations();
        ++row.stop_tally[static_cast<std::size_t>(report.selection.stop_reason)];
        race_iterations += report.selection.iterations;
        row.mean_race_length = static_cast<double>(race_iterations) / static_cast<double>(row.generation);
        record.rows.push_back(row);
    }

    record.final_objectives.reserve(population.size());
    for (const Individual& ind : population) {
        record.final_objectives.push_back(problem.evaluate(ind.genome));
    }
    return record;
}

std::string format_run(const RunRecord& record) {
    std::ostringstream out;
    out << "# rsp-run v1\n";
    std::istringstream cfg(serialize_config(record.config));
    for (std::string line; std::getline(cfg, line);) {
        out << "# " << line << '\n';
    }
    out << "# variant=" << record.variant << '\n';
    if (record.delta_hv) {
        out << "# delta_hv=" << format_double(*record.delta_hv) << '\n';
    }
    out << "[trace]\n" << trace_header << '\n';
    for (const GenerationRow& r : record.rows) {
        out << r.generation << ',' << r.evaluations;
        for (auto t : r.stop_tally) {
            out << ',' << t;
        }
        out << ',' << format_double(r.mean_race_length) << '\n';
    }
    out << "[final]\nf1,f2\n";
    for (const ObjectivePoint& p : record.final_objectives) {
        out << format_double(p[0]) << ',' << format_double(p[1]) << '\n';
    }
    return out.str();
}

namespace {

double number(const std::string& s) {
    if (auto v = parse_double(s)) return *v;
    throw Error("malformed-run", "bad number '" + s + "'");
}

std::uint64_t count(const std::string& s) {
    const double v = number(s);
    if (v < 0) throw Error("malformed-run", "negative count '" + s + "'");
    return static_cast<std::uint64_t>(v);
}

} // namespace

RunRecord parse_run(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    if (!std::getline(in, line) || trim(line) != "# rsp-run v1") {
        throw Error("malformed-run", "missing run header");
    }
    RunRecord record;
    std::string config_text;
    enum class Section { Header, Trace, Final } section = Section::Header;
    bool expect_columns = false;
    while (std::getline(in, line)) {
        line = trim(line);
        if (line.empty()) continue;
        if (line == "[trace]") { section = Section::Trace; expect_columns = true; continue; }
        if (line == "[final]") { section = Section::Final; expect_columns = true; continue; }
        if (expect_columns) { expect_columns = false; continue; }
        switch (section) {
        case Section::Header: {
            if (line.rfind("# ", 0) != 0) throw Error("malformed-run", "unexpected line '" + line + "'");
            const std::string kv = line.substr(2);
            if (kv.rfind("variant=", 0) == 0) record.variant = count(kv.substr(8));
            else if (kv.rfind("delta_hv=", 0) == 0) record.delta_hv = number(kv.substr(9));
            else config_text += kv + '\n';
            break;
        }
        case Section::Trace: {
            const auto f = split(line, ',');
            if (f.size() != 7) throw Error("malformed-run", "trace row needs 7 fields");
            GenerationRow r;
            r.generation = count(f[0]);
            r.evaluations = count(f[1]);
            for (std::size_t k = 0; k < 4; ++k) r.stop_tally[k] = count(f[2 + k]);
            r.mean_race_length = number(f[6]);
            record.rows.push_back(r);
            break;
        }
        case Section::Final: {
            const auto f = split(line, ',');
            if (f.size() != 2) throw Error("malformed-run", "final row needs 2 fields");
            record.final_objectives.push_back(ObjectivePoint{number(f[0]), number(f[1])});
            break;
        }
        }
    }
    record.config = parse_config(config_text);
    if (record.config.seeds.size() != 1) {
        throw Error("malformed-run", "a run file carries exactly one seed");
    }
    record.seed = record.config.seeds.front();
    return record;
}

} // namespace rsp
