#include "doctest.h"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "oracles.hpp"
#include "rsp/core/error.hpp"
#include "rsp/problems/noisy_problem.hpp"

using namespace rsp;

namespace {

const std::vector<ZdtId> all_problems{ZdtId::Zdt1, ZdtId::Zdt2, ZdtId::Zdt3, ZdtId::Zdt4, ZdtId::Zdt6};

DecisionVector random_point(const Bounds& b, RngStream& rng) {
    DecisionVector x(b.size());
    for (std::size_t j = 0; j < b.size(); ++j) {
        x[j] = b.lower[j] + rng.uniform() * (b.upper[j] - b.lower[j]);
    }
    return x;
}

oracle::Point raw(const ObjectivePoint& p) { return {p[0], p[1]}; }

} // namespace

TEST_CASE("zdt1 hand-computed values") {
    const Problem zdt1(ZdtId::Zdt1);
    REQUIRE(zdt1.dimension() == 30);
    DecisionVector x(30, 0.0);
    CHECK(zdt1.evaluate(x) == ObjectivePoint{0, 1});
    x[0] = 1.0;
    CHECK(zdt1.evaluate(x) == ObjectivePoint{1, 0});
    x[0] = 0.25;
    CHECK(zdt1.evaluate(x) == ObjectivePoint{0.25, 0.5});
}

TEST_CASE("default dimensions and bounds") {
    CHECK(Problem(ZdtId::Zdt2).dimension() == 30);
    CHECK(Problem(ZdtId::Zdt3).dimension() == 30);
    const Problem zdt4(ZdtId::Zdt4);
    CHECK(zdt4.dimension() == 10);
    CHECK(zdt4.bounds().lower[0] == 0.0);
    CHECK(zdt4.bounds().upper[0] == 1.0);
    CHECK(zdt4.bounds().lower[5] == -5.0);
    CHECK(zdt4.bounds().upper[5] == 5.0);
    CHECK(Problem(ZdtId::Zdt6).dimension() == 10);
    CHECK(Problem(ZdtId::Zdt1, 12).dimension() == 12);
}

TEST_CASE("optimal decision vectors land on the sampled front curve") {
    for (ZdtId id : all_problems) {
        const Problem p(id);
        DecisionVector x(p.dimension(), 0.0);
        for (double x1 : {0.0, 0.3, 0.7, 1.0}) {
            x[0] = x1;
            const auto f = p.evaluate(x);
            double f2 = 0.0;
            if (id == ZdtId::Zdt1 || id == ZdtId::Zdt4) f2 = 1 - std::sqrt(f[0]);
            if (id == ZdtId::Zdt2 || id == ZdtId::Zdt6) f2 = 1 - f[0] * f[0];
            if (id == ZdtId::Zdt3) f2 = 1 - std::sqrt(f[0]) - f[0] * std::sin(10 * std::numbers::pi * f[0]);
            CHECK(f[1] == doctest::Approx(f2).epsilon(1e-12));
        }
    }
}

TEST_CASE("out-of-bounds and wrong-length inputs are domain violations") {
    const Problem zdt1(ZdtId::Zdt1);
    DecisionVector x(30, 0.0);
    x[3] = 1.5;
    try {
        zdt1.evaluate(x);
        FAIL("expected domain-violation");
    } catch (const Error& e) {
        CHECK(e.code() == "domain-violation");
    }
    CHECK_THROWS_AS(zdt1.evaluate(DecisionVector(10, 0.0)), Error);
    CHECK_THROWS_AS(Problem(ZdtId::Zdt4).evaluate(DecisionVector(10, -0.5)), Error);
}

TEST_CASE("zdt evaluation is deterministic") {
    RngStream rng(2);
    for (ZdtId id : all_problems) {
        const Problem p(id);
        for (int i = 0; i < 100; ++i) {
            const auto x = random_point(p.bounds(), rng);
            CHECK(p.evaluate(x) == p.evaluate(x));
        }
    }
}

TEST_CASE("dirac noise is zero and noisy_eval reduces to zdt_eval") {
    RngStream rng(3);
    CHECK(NoiseModel{NoiseKind::Dirac}.draw(2, rng) == ObjectivePoint{0, 0});
    for (ZdtId id : all_problems) {
        NoisyProblem np(Problem(id), NoiseModel{NoiseKind::Dirac});
        for (int i = 0; i < 1000; ++i) {
            const auto x = random_point(np.problem().bounds(), rng);
            REQUIRE(np.evaluate(x, rng) == np.problem().evaluate(x));
        }
        CHECK(np.evaluations() == 1000);
    }
}

TEST_CASE("evaluation counter and cap") {
    RngStream rng(4);
    NoisyProblem np(Problem(ZdtId::Zdt1), NoiseModel{NoiseKind::Gaussian}, 3);
    const DecisionVector x(30, 0.5);
    for (std::uint64_t k = 1; k <= 3; ++k) {
        np.evaluate(x, rng);
        CHECK(np.evaluations() == k);
    }
    CHECK(np.remaining() == 0);
    CHECK_THROWS_AS(np.evaluate(x, rng), Error);
    CHECK(np.evaluations() == 3);
}

TEST_CASE("gaussian noise has sigma 0.25 and mean 0") {
    RngStream rng(5);
    const NoiseModel noise{NoiseKind::Gaussian};
    const int n = 1000000;
    double s[2] = {0, 0}, ss[2] = {0, 0};
    for (int i = 0; i < n; ++i) {
        const auto e = noise.draw(2, rng);
        for (int j = 0; j < 2; ++j) {
            s[j] += e[j];
            ss[j] += e[j] * e[j];
        }
    }
    for (int j = 0; j < 2; ++j) {
        const double mean = s[j] / n;
        const double sd = std::sqrt(ss[j] / n - mean * mean);
        CHECK(std::abs(mean) < 0.002);
        CHECK(std::abs(sd - 0.25) < 0.002);
    }
}

TEST_CASE("gumbel noise is centred on its median") {
    CHECK(NoiseModel::gumbel_median() == 0.0);
    CHECK(NoiseModel::gumbel_location() == doctest::Approx(-0.7330258411633287).epsilon(1e-12));
    RngStream rng(6);
    const NoiseModel noise{NoiseKind::Gumbel};
    std::vector<double> v0, v1;
    for (int i = 0; i < 1000000; ++i) {
        const auto e = noise.draw(2, rng);
        v0.push_back(e[0]);
        v1.push_back(e[1]);
    }
    for (auto* v : {&v0, &v1}) {
        std::nth_element(v->begin(), v->begin() + v->size() / 2, v->end());
        CHECK(std::abs((*v)[v->size() / 2]) < 0.01);
    }
}

TEST_CASE("cauchy noise has median 0 and quartiles at +-scale") {
    RngStream rng(7);
    const NoiseModel noise{NoiseKind::Cauchy};
    std::vector<double> v;
    for (int i = 0; i < 200000; ++i) v.push_back(noise.draw(1, rng)[0]);
    std::sort(v.begin(), v.end());
    CHECK(std::abs(v[v.size() / 2]) < 0.01);
    CHECK(v[v.size() / 4] == doctest::Approx(-0.25).epsilon(0.04));
    CHECK(v[3 * v.size() / 4] == doctest::Approx(0.25).epsilon(0.04));
}

TEST_CASE("noisy_eval with gaussian noise averages to the true objectives") {
    RngStream rng(8);
    NoisyProblem np(Problem(ZdtId::Zdt1), NoiseModel{NoiseKind::Gaussian});
    DecisionVector x(30, 0.1);
    x[0] = 0.4;
    const auto truth = np.problem().evaluate(x);
    const int n = 100000;
    double s[2] = {0, 0};
    for (int i = 0; i < n; ++i) {
        const auto f = np.evaluate(x, rng);
        s[0] += f[0];
        s[1] += f[1];
    }
    const double tol = 3 * 0.25 / std::sqrt(static_cast<double>(n));
    CHECK(std::abs(s[0] / n - truth[0]) < tol);
    CHECK(std::abs(s[1] / n - truth[1]) < tol);
    CHECK(np.evaluations() == static_cast<std::uint64_t>(n));
}

TEST_CASE("true_front endpoints and midpoint for zdt1") {
    const Problem zdt1(ZdtId::Zdt1);
    const auto two = zdt1.true_front(2);
    REQUIRE(two.size() == 2);
    CHECK(std::find(two.begin(), two.end(), ObjectivePoint{0, 1}) != two.end());
    CHECK(std::find(two.begin(), two.end(), ObjectivePoint{1, 0}) != two.end());
    const auto three = zdt1.true_front(3);
    REQUIRE(three.size() == 3);
    CHECK(three[1][0] == 0.5);
    CHECK(three[1][1] == doctest::Approx(1 - std::sqrt(0.5)).epsilon(1e-15));
    CHECK_THROWS_AS(zdt1.true_front(1), Error);
}

TEST_CASE("sampled fronts are mutually nondominated and have the requested size") {
    for (ZdtId id : all_problems) {
        for (std::size_t count : {2u, 7u, 100u, 1000u}) {
            const auto front = Problem(id).true_front(count);
            REQUIRE(front.size() == count);
            std::size_t violations = 0;
            for (const auto& a : front)
                for (const auto& b : front)
                    if (oracle::dominates(raw(a), raw(b))) ++violations;
            CHECK_MESSAGE(violations == 0, to_string(id), " count ", count);
        }
    }
}

TEST_CASE("no feasible point strictly dominates the sampled front") {
    RngStream rng(9);
    for (ZdtId id : all_problems) {
        const Problem p(id);
        const auto front = p.true_front(200);
        std::size_t violations = 0;
        for (int i = 0; i < 10000; ++i) {
            auto x = random_point(p.bounds(), rng);
            // half of the probes sit on the optimal manifold, where the test is sharpest
            if (i % 2 == 0) {
                for (std::size_t j = 1; j < x.size(); ++j) x[j] = 0.0;
            }
            const auto f = raw(p.evaluate(x));
            for (const auto& q : front) {
                // allow rounding-level ties on the optimal manifold
                const oracle::Point shifted{f[0] + 1e-12, f[1] + 1e-12};
                if (oracle::dominates(shifted, raw(q))) ++violations;
            }
        }
        CHECK_MESSAGE(violations == 0, to_string(id));
    }
}

TEST_CASE("zdt3 intervals and zdt6 minimum match their defining conditions") {
    const auto h = [](double f) { return 1 - std::sqrt(f) - f * std::sin(10 * std::numbers::pi * f); };
    const auto iv = zdt3_front_intervals();
    REQUIRE(iv.size() == 5);
    for (std::size_t k = 1; k < iv.size(); ++k) {
        // each interval starts where h falls back to the previous minimum
        CHECK(h(iv[k].lo) == doctest::Approx(h(iv[k - 1].hi)).epsilon(1e-8));
        CHECK(h(iv[k].hi) < h(iv[k - 1].hi));
    }
    const double m = zdt6_min_f1();
    CHECK(m == doctest::Approx(0.2807753188).epsilon(1e-9));
    for (int i = 0; i <= 100000; ++i) {
        const double x = i / 100000.0;
        REQUIRE(1 - std::exp(-4 * x) * std::pow(std::sin(6 * std::numbers::pi * x), 6) >= m - 1e-12);
    }
}

TEST_CASE("problem and noise identifiers") {
    CHECK(parse_problem("zdt6") == ZdtId::Zdt6);
    CHECK_FALSE(parse_problem("zdt5").has_value());
    CHECK(parse_noise("none") == NoiseKind::Dirac);
    CHECK(parse_noise("gumbel") == NoiseKind::Gumbel);
    CHECK_FALSE(parse_noise("uniform").has_value());
}
