#include "doctest.h"

#include <set>

#include "rsp/core/error.hpp"
#include "rsp/harness/batch.hpp"
#include "rsp/harness/config.hpp"
#include "rsp/harness/experiment.hpp"
#include "rsp/harness/text.hpp"

using namespace rsp;

namespace {

ExperimentConfig small(Algorithm algo, NoiseKind noise = NoiseKind::Dirac) {
    ExperimentConfig cfg;
    cfg.algorithm = algo;
    cfg.noise = noise;
    cfg.population_size = 12;
    cfg.max_evaluations = 1500;
    cfg.budget = 4;
    cfg.confidence = 0.8;
    cfg.seeds = {1, 2};
    return cfg;
}

} // namespace

TEST_CASE("text helpers") {
    CHECK(trim("  a b \t\n") == "a b");
    CHECK(split("a,,b", ',') == std::vector<std::string>{"a", "", "b"});
    for (double v : {0.1, 1.0 / 3.0, 1e-300, -2.5e17, 0.0, 5e-324}) {
        CHECK(parse_double(format_double(v)) == v);
    }
    CHECK(format_double(0.5) == "0.5");
    CHECK_FALSE(parse_double("1.5x").has_value());
    CHECK_FALSE(parse_double("").has_value());
}

TEST_CASE("config defaults") {
    const ExperimentConfig cfg;
    CHECK(cfg.population_size == 100);
    CHECK(cfg.proximity_threshold == 0.5);
    CHECK(cfg.effective_max_evaluations() == 100000);
    CHECK(cfg.seeds.size() == 25);
    CHECK(cfg.seeds.front() == 1);
    CHECK(cfg.seeds.back() == 25);
    ExperimentConfig z6;
    z6.problem = ZdtId::Zdt6;
    CHECK(z6.effective_max_evaluations() == 500000);
    z6.max_evaluations = 1000;
    CHECK(z6.effective_max_evaluations() == 1000);
}

TEST_CASE("config round trip") {
    RngStream rng(400);
    const ZdtId problems[] = {ZdtId::Zdt1, ZdtId::Zdt2, ZdtId::Zdt3, ZdtId::Zdt4, ZdtId::Zdt6};
    const NoiseKind noises[] = {NoiseKind::Dirac, NoiseKind::Gaussian, NoiseKind::Cauchy, NoiseKind::Gumbel};
    const Algorithm algos[] = {Algorithm::Implicit, Algorithm::StaticAvg, Algorithm::StaticMed,
                               Algorithm::RspI,     Algorithm::RspAvg,    Algorithm::RspMed};
    for (int i = 0; i < 200; ++i) {
        ExperimentConfig cfg;
        cfg.problem = problems[rng.index(5)];
        cfg.noise = noises[rng.index(4)];
        cfg.algorithm = algos[rng.index(6)];
        cfg.budget = 1 + rng.index(50);
        cfg.confidence = 0.01 + 0.98 * rng.uniform();
        cfg.proximity_threshold = rng.uniform();
        cfg.population_size = 2 + rng.index(200);
        if (rng.coin()) cfg.max_evaluations = cfg.population_size + rng.index(100000);
        if (rng.coin()) cfg.dimension = 2 + rng.index(40);
        cfg.max_generations = rng.index(3) * rng.index(100);
        cfg.seeds.clear();
        for (std::size_t s = 0, n = 1 + rng.index(6); s < n; ++s) cfg.seeds.push_back(rng.next() >> 1);
        if (rng.coin()) cfg.output = "out/run.csv";
        REQUIRE(parse_config(serialize_config(cfg)) == cfg);
    }
}

TEST_CASE("config parsing") {
    const auto cfg = parse_config("# comment\nproblem = zdt4\nnoise=cauchy\nalgo=rsp-med\nbudget=15\n"
                                  "confidence=0.95\npop=40\nevals=20000\nmaster_seed=7\nruns=3\n");
    CHECK(cfg.problem == ZdtId::Zdt4);
    CHECK(cfg.noise == NoiseKind::Cauchy);
    CHECK(cfg.algorithm == Algorithm::RspMed);
    CHECK(cfg.selector().race_config().delta == doctest::Approx(0.05));
    CHECK(cfg.selector().race_config().estimator == EstimatorKind::Median);
    CHECK(cfg.seeds == std::vector<std::uint64_t>{7, 8, 9});

    CHECK_THROWS_AS(parse_config("problem=zdt5\n"), ConfigError);
    CHECK_THROWS_AS(parse_config("noise=uniform\n"), ConfigError);
    CHECK_THROWS_AS(parse_config("algo=rsp\n"), ConfigError);
    CHECK_THROWS_AS(parse_config("colour=blue\n"), ConfigError);
    CHECK_THROWS_AS(parse_config("budget=abc\n"), ConfigError);
    CHECK_THROWS_AS(parse_config("budget=0\n"), ConfigError);
    CHECK_THROWS_AS(parse_config("algo=rsp-i\nconfidence=1\n"), ConfigError);
    CHECK_THROWS_AS(parse_config("pop=1\n"), ConfigError);
    CHECK_THROWS_AS(parse_config("pop=50\nevals=49\n"), ConfigError);
    CHECK_THROWS_AS(parse_config("seed=3\nruns=2\n"), ConfigError);
    CHECK_THROWS_AS(parse_config("just text\n"), ConfigError);
    try {
        parse_config("problem=zdt5\n");
    } catch (const ConfigError& e) {
        CHECK(std::string(e.what()).find("zdt6") != std::string::npos);
    }
}

TEST_CASE("grid expansion") {
    const auto grid = parse_grid("problem=zdt1,zdt2\nalgo=implicit,static-avg,rsp-avg\nbudget=5,10\n"
                                 "confidence=0.25,0.95\nseeds=1,2\nthreads=3\n");
    CHECK(grid.threads == 3);
    // implicit ignores budget and confidence, static ignores confidence
    CHECK(grid.configs.size() == 2 * (1 + 2 + 4));
    std::set<std::string> unique;
    for (const auto& c : grid.configs) {
        CHECK(c == c.canonical());
        CHECK(c.seeds == std::vector<std::uint64_t>{1, 2});
        unique.insert(serialize_config(c));
    }
    CHECK(unique.size() == grid.configs.size());
    CHECK(grid.configs.front().problem == ZdtId::Zdt1);
    CHECK(grid.configs.front().algorithm == Algorithm::Implicit);

    CHECK(parse_grid("algo=rsp-i,rsp-i\n").configs.size() == 1);
    CHECK_THROWS_AS(parse_grid("problem=zdt1\n"), ConfigError);
    CHECK_THROWS_AS(parse_grid("algo=implicit\nnoise=none,bogus\n"), ConfigError);
}

TEST_CASE("evaluation budget equal to the population gives no generations") {
    ExperimentConfig cfg = small(Algorithm::RspAvg, NoiseKind::Gaussian);
    cfg.max_evaluations = cfg.population_size;
    const auto run = run_experiment(cfg, 5);
    REQUIRE(run.rows.size() == 1);
    CHECK(run.rows[0].generation == 0);
    CHECK(run.evaluations() == cfg.population_size);
    CHECK(run.final_objectives.size() == cfg.population_size);
}

TEST_CASE("runs are deterministic and honour the evaluation cap") {
    for (auto algo : {Algorithm::Implicit, Algorithm::StaticAvg, Algorithm::StaticMed, Algorithm::RspI,
                      Algorithm::RspAvg, Algorithm::RspMed}) {
        for (auto noise : {NoiseKind::Dirac, NoiseKind::Gaussian, NoiseKind::Cauchy, NoiseKind::Gumbel}) {
            const ExperimentConfig cfg = small(algo, noise);
            const auto a = run_experiment(cfg, 11);
            const auto b = run_experiment(cfg, 11);
            REQUIRE(a == b);
            REQUIRE(format_run(a) == format_run(b));
            CHECK(a.evaluations() <= cfg.effective_max_evaluations());
            CHECK(a.rows.size() > 1);
            std::uint64_t prev = 0;
            std::uint64_t stops = 0;
            for (const auto& row : a.rows) {
                CHECK(row.evaluations >= prev);
                prev = row.evaluations;
                stops = row.stop_tally[0] + row.stop_tally[1] + row.stop_tally[2] + row.stop_tally[3];
            }
            CHECK(stops == a.rows.back().generation);
            // the loop stops only when one more worst-case generation would not fit
            CHECK(a.evaluations() + cfg.selector().worst_case_evaluations(cfg.population_size) >
                  cfg.effective_max_evaluations());
            CHECK(run_experiment(cfg, 12).final_objectives != a.final_objectives);
        }
    }
}

TEST_CASE("generation limit") {
    ExperimentConfig cfg = small(Algorithm::RspI, NoiseKind::Gaussian);
    cfg.max_evaluations = 100000;
    cfg.max_generations = 3;
    const auto run = run_experiment(cfg, 1);
    CHECK(run.rows.size() == 4);
    CHECK(run.rows.back().generation == 3);
    CHECK(run.mean_race_length() >= 1.0);
    CHECK(run.mean_race_length() <= 4.0);
}

TEST_CASE("implicit averaging converges on deterministic zdt1") {
    ExperimentConfig cfg;
    cfg.population_size = 40;
    cfg.max_evaluations = 20000;
    const auto run = run_experiment(cfg, 1);
    const Problem p(ZdtId::Zdt1);
    const auto r = delta_hypervolume(run.final_objectives, p, NormalizationFrame::fallback(p));
    MESSAGE("delta_hv = ", r.delta_hv);
    CHECK(r.delta_hv < 0.05);
    CHECK(run.evaluations() <= 20000);
    CHECK(run.evaluations() > 20000 - 40);
}

TEST_CASE("run file round trip") {
    ExperimentConfig cfg = small(Algorithm::RspMed, NoiseKind::Cauchy);
    auto run = run_experiment(cfg, 3);
    CHECK(parse_run(format_run(run)) == run);
    run.delta_hv = 0.123456789;
    run.variant = 4;
    const auto text = format_run(run);
    CHECK(text.rfind("# rsp-run v1\n", 0) == 0);
    CHECK(parse_run(text) == run);
    CHECK(format_run(parse_run(text)) == text);
    CHECK_THROWS(parse_run("not a run file\n"));
}

TEST_CASE("batch summary and significance") {
    SUBCASE("one config with two seeds") {
        const auto batch = run_batch({small(Algorithm::StaticAvg, NoiseKind::Gaussian)});
        CHECK(batch.failures.empty());
        REQUIRE(batch.runs.size() == 2);
        const auto csv = summary_csv(batch.runs);
        const auto lines = split(trim(csv), '\n');
        REQUIRE(lines.size() == 3);
        CHECK(lines[0] == "problem,noise,algorithm,estimator,budget,confidence,seed,delta_hv,evaluations");
        CHECK(lines[1].rfind("zdt1,gaussian,static-avg,mean,4,NA,1,", 0) == 0);
        for (const auto& r : batch.runs) {
            REQUIRE(r.delta_hv.has_value());
            CHECK(*r.delta_hv >= 0.0);
        }
    }
    SUBCASE("identical entries") {
        ExperimentConfig cfg = small(Algorithm::RspAvg, NoiseKind::Gaussian);
        cfg.seeds = {1, 2, 3, 4, 5};
        const auto batch = run_batch({cfg, cfg});
        const auto table = significance_table(batch.runs);
        REQUIRE(table.size() == 1);
        REQUIRE(table[0].p_value.has_value());
        CHECK(*table[0].p_value == 1.0);
        CHECK(table[0].pairs == 5);
    }
    SUBCASE("too few seeds for a p-value") {
        const auto batch = run_batch({small(Algorithm::Implicit), small(Algorithm::StaticAvg)});
        const auto table = significance_table(batch.runs);
        REQUIRE(table.size() == 1);
        CHECK_FALSE(table[0].p_value.has_value());
        CHECK(significance_csv(table).find(",NA\n") != std::string::npos);
    }
}

TEST_CASE("parallel batches match sequential ones byte for byte") {
    std::vector<ExperimentConfig> configs{small(Algorithm::RspI, NoiseKind::Cauchy),
                                          small(Algorithm::StaticMed, NoiseKind::Cauchy),
                                          small(Algorithm::Implicit, NoiseKind::Gumbel)};
    for (auto& c : configs) c.seeds = {3, 1, 4};
    const auto seq = run_batch(configs, 1);
    const auto par = run_batch(configs, 4);
    REQUIRE(seq.runs.size() == 9);
    CHECK(summary_csv(seq.runs) == summary_csv(par.runs));
    CHECK(significance_csv(significance_table(seq.runs)) == significance_csv(significance_table(par.runs)));
    for (std::size_t i = 0; i < seq.runs.size(); ++i) CHECK(format_run(seq.runs[i]) == format_run(par.runs[i]));
}

TEST_CASE("quantiles and boxplot rows") {
    const std::vector<double> v{1, 2, 3, 4, 5};
    CHECK(quantile_sorted(v, 0.25) == 2.0);
    CHECK(quantile_sorted(v, 0.5) == 3.0);
    CHECK(quantile_sorted(v, 0.75) == 4.0);
    CHECK(quantile_sorted(v, 0.0) == 1.0);
    CHECK(quantile_sorted(v, 1.0) == 5.0);
    CHECK(quantile_sorted({1, 2, 3, 4}, 0.5) == 2.5);
    CHECK(quantile_sorted({1, 2, 3, 4}, 0.25) == 1.75);

    std::string summary = "problem,noise,algorithm,estimator,budget,confidence,seed,delta_hv,evaluations\n";
    for (int i = 1; i <= 5; ++i) {
        summary += "zdt1,none,rsp-avg,mean,15,0.95," + std::to_string(i) + "," + std::to_string(i) + ",1000\n";
    }
    for (int i = 1; i <= 25; ++i) {
        summary += "zdt2,cauchy,static-med,median,5,NA," + std::to_string(i) + ",0.125,1000\n";
    }
    summary += "zdt3,none,implicit,last,1,NA,1,NA,1000\n"; // unscored only: group omitted
    const auto lines = split(trim(boxplot_csv(summary)), '\n');
    REQUIRE(lines.size() == 3);
    CHECK(lines[0] == "problem,noise,algorithm,budget,confidence,count,min,q1,median,q3,max");
    CHECK(lines[1] == "zdt1,none,rsp-avg,15,0.95,5,1,2,3,4,5");
    CHECK(lines[2] == "zdt2,cauchy,static-med,5,NA,25,0.125,0.125,0.125,0.125,0.125");
}
