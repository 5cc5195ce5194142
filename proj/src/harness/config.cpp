#include "rsp/harness/config.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

#include "rsp/core/error.hpp"
#include "rsp/harness/text.hpp"

namespace rsp {

namespace {

const std::vector<std::string> single_keys{"problem", "dimension", "noise",       "algo",  "budget",
                                           "confidence", "proximity", "pop",      "evals", "generations",
                                           "seeds",   "seed",      "master_seed", "runs",  "out"};

std::vector<std::string> split_list(const std::string& value) {
    std::vector<std::string> out;
    std::string item;
    std::istringstream in(value);
    while (std::getline(in, item, ',')) {
        item = trim(item);
        if (!item.empty()) {
            out.push_back(item);
        }
    }
    return out;
}

ZdtId problem_value(const std::string& v) {
    if (auto p = parse_problem(v)) return *p;
    throw ConfigError("unknown problem '" + v + "' (valid: zdt1, zdt2, zdt3, zdt4, zdt6)");
}

NoiseKind noise_value(const std::string& v) {
    if (auto n = parse_noise(v)) return *n;
    throw ConfigError("unknown noise '" + v + "' (valid: none, gaussian, cauchy, gumbel)");
}

Algorithm algorithm_value(const std::string& v) {
    if (auto a = parse_algorithm(v)) return *a;
    throw ConfigError("unknown algorithm '" + v +
                      "' (valid: implicit, static-avg, static-med, rsp-i, rsp-avg, rsp-med)");
}

std::uint64_t integer_value(const std::string& key, const std::string& v) {
    std::uint64_t out = 0;
    const auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
    if (ec != std::errc{} || ptr != v.data() + v.size()) {
        throw ConfigError("'" + key + "' expects a non-negative integer, got '" + v + "'");
    }
    return out;
}

double real_value(const std::string& key, const std::string& v) {
    if (auto d = parse_double(v)) return *d;
    throw ConfigError("'" + key + "' expects a number, got '" + v + "'");
}

} // namespace

std::vector<std::uint64_t> ExperimentConfig::consecutive_seeds(std::uint64_t master, std::size_t count) {
    std::vector<std::uint64_t> seeds(count);
    for (std::size_t i = 0; i < count; ++i) {
        seeds[i] = master + i;
    }
    return seeds;
}

std::uint64_t ExperimentConfig::effective_max_evaluations() const noexcept {
    if (max_evaluations) {
        return *max_evaluations;
    }
    return problem == ZdtId::Zdt6 ? 500000 : 100000;
}

SelectorConfig ExperimentConfig::selector() const {
    SelectorConfig s;
    s.algorithm = algorithm;
    s.budget = algorithm == Algorithm::Implicit ? 1 : budget;
    s.delta = is_race(algorithm) ? 1.0 - confidence : 0.5;
    s.proximity_threshold = proximity_threshold;
    return s;
}

ExperimentConfig ExperimentConfig::canonical() const {
    ExperimentConfig c = *this;
    if (c.algorithm == Algorithm::Implicit) {
        c.budget = 1;
    }
    if (!is_race(c.algorithm)) {
        c.confidence = 0.0;
    }
    return c;
}

void ExperimentConfig::validate() const {
    if (population_size < 2) {
        throw ConfigError("population size must be at least 2");
    }
    if (budget < 1) {
        throw ConfigError("sampling budget must be at least 1");
    }
    if (is_race(algorithm) && !(confidence > 0.0 && confidence < 1.0)) {
        throw ConfigError("race confidence must lie in (0, 1)");
    }
    if (!(proximity_threshold >= 0.0)) {
        throw ConfigError("proximity threshold must be >= 0");
    }
    if (effective_max_evaluations() < population_size) {
        throw ConfigError("evaluation budget is smaller than the initial population");
    }
    if (seeds.empty()) {
        throw ConfigError("at least one seed is required");
    }
    if (dimension == 1) {
        throw ConfigError("ZDT problems need at least 2 decision variables");
    }
}

KeyValues parse_key_values(const std::string& text) {
    KeyValues kv;
    std::istringstream in(text);
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        line = trim(line);
        if (line.empty() || line[0] == '#') {
            continue;
        }
        const auto eq = line.find('=');
        if (eq == std::string::npos) {
            throw ConfigError("line " + std::to_string(lineno) + ": expected key=value");
        }
        kv[trim(line.substr(0, eq))] = trim(line.substr(eq + 1));
    }
    return kv;
}

ExperimentConfig config_from_key_values(const KeyValues& kv) {
    ExperimentConfig cfg;
    std::optional<std::uint64_t> master;
    std::optional<std::size_t> runs;
    for (const auto& [key, value] : kv) {
        if (std::find(single_keys.begin(), single_keys.end(), key) == single_keys.end()) {
            throw ConfigError("unknown key '" + key + "'");
        }
        if (key == "problem") cfg.problem = problem_value(value);
        else if (key == "dimension") cfg.dimension = integer_value(key, value);
        else if (key == "noise") cfg.noise = noise_value(value);
        else if (key == "algo") cfg.algorithm = algorithm_value(value);
        else if (key == "budget") cfg.budget = integer_value(key, value);
        else if (key == "confidence") cfg.confidence = real_value(key, value);
        else if (key == "proximity") cfg.proximity_threshold = real_value(key, value);
        else if (key == "pop") cfg.population_size = integer_value(key, value);
        else if (key == "evals") cfg.max_evaluations = integer_value(key, value);
        else if (key == "generations") cfg.max_generations = integer_value(key, value);
        else if (key == "seed") cfg.seeds = {integer_value(key, value)};
        else if (key == "master_seed") master = integer_value(key, value);
        else if (key == "runs") runs = integer_value(key, value);
        else if (key == "out") cfg.output = value;
        else if (key == "seeds") {
            cfg.seeds.clear();
            for (const auto& s : split_list(value)) {
                cfg.seeds.push_back(integer_value(key, s));
            }
        }
    }
    if (master || runs) {
        if (kv.count("seeds") || kv.count("seed")) {
            throw ConfigError("give either seeds/seed or master_seed/runs, not both");
        }
        cfg.seeds = ExperimentConfig::consecutive_seeds(master.value_or(1), runs.value_or(25));
    }
    cfg.validate();
    return cfg;
}

std::string serialize_config(const ExperimentConfig& cfg) {
    std::ostringstream out;
    out << "problem=" << to_string(cfg.problem) << '\n';
    if (cfg.dimension != 0) {
        out << "dimension=" << cfg.dimension << '\n';
    }
    out << "noise=" << to_string(cfg.noise) << '\n';
    out << "algo=" << to_string(cfg.algorithm) << '\n';
    out << "budget=" << cfg.budget << '\n';
    out << "confidence=" << format_double(cfg.confidence) << '\n';
    out << "proximity=" << format_double(cfg.proximity_threshold) << '\n';
    out << "pop=" << cfg.population_size << '\n';
    if (cfg.max_evaluations) {
        out << "evals=" << *cfg.max_evaluations << '\n';
    }
    if (cfg.max_generations != 0) {
        out << "generations=" << cfg.max_generations << '\n';
    }
    out << "seeds=";
    for (std::size_t i = 0; i < cfg.seeds.size(); ++i) {
        out << (i ? "," : "") << cfg.seeds[i];
    }
    out << '\n';
    if (!cfg.output.empty()) {
        out << "out=" << cfg.output << '\n';
    }
    return out.str();
}

ExperimentConfig parse_config(const std::string& text) { return config_from_key_values(parse_key_values(text)); }

GridSpec parse_grid(const std::string& text) {
    KeyValues kv = parse_key_values(text);
    GridSpec grid;
    if (auto it = kv.find("threads"); it != kv.end()) {
        grid.threads = std::max<std::uint64_t>(1, integer_value("threads", it->second));
        kv.erase(it);
    }
    const std::vector<std::string> axes{"problem", "noise", "algo", "budget", "confidence", "pop", "evals",
                                        "dimension"};
    std::vector<std::vector<std::string>> values;
    for (const auto& axis : axes) {
        auto it = kv.find(axis);
        values.push_back(it == kv.end() ? std::vector<std::string>{} : split_list(it->second));
        if (it != kv.end() && values.back().empty()) {
            throw ConfigError("'" + axis + "' has no values");
        }
    }
    if (values[2].empty()) {
        throw ConfigError("grid needs at least one algo");
    }

    std::vector<std::size_t> cursor(axes.size(), 0);
    for (;;) {
        KeyValues point = kv;
        for (std::size_t a = 0; a < axes.size(); ++a) {
            if (!values[a].empty()) {
                point[axes[a]] = values[a][cursor[a]];
            }
        }
        ExperimentConfig cfg = config_from_key_values(point).canonical();
        if (std::find(grid.configs.begin(), grid.configs.end(), cfg) == grid.configs.end()) {
            grid.configs.push_back(std::move(cfg));
        }
        // odometer, last axis fastest
        std::size_t a = axes.size();
        while (a > 0) {
            --a;
            if (!values[a].empty() && ++cursor[a] < values[a].size()) {
                break;
            }
            cursor[a] = 0;
            if (a == 0) {
                return grid;
            }
        }
    }
}

} // namespace rsp
