#include "rsp/problems/zdt.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <string>

#include "rsp/core/error.hpp"

namespace rsp {

namespace {

constexpr double pi = std::numbers::pi;

constexpr std::array<F1Interval, 5> zdt3_intervals{{
    {0.0, 0.083001534949370},
    {0.182228728029390, 0.257762363376825},
    {0.409313674833072, 0.453882104080600},
    {0.618396794439273, 0.652511703798784},
    {0.823331798338026, 0.851832865431208},
}};

double tail_sum(const DecisionVector& x) {
    double sum = 0.0;
    for (std::size_t j = 1; j < x.size(); ++j) {
        sum += x[j];
    }
    return sum;
}

double front_f2(ZdtId id, double f1) {
    switch (id) {
    case ZdtId::Zdt1:
    case ZdtId::Zdt4: return 1.0 - std::sqrt(f1);
    case ZdtId::Zdt2:
    case ZdtId::Zdt6: return 1.0 - f1 * f1;
    case ZdtId::Zdt3: return 1.0 - std::sqrt(f1) - f1 * std::sin(10.0 * pi * f1);
    }
    return 0.0;
}

} // namespace

std::string_view to_string(ZdtId id) noexcept {
    switch (id) {
    case ZdtId::Zdt1: return "zdt1";
    case ZdtId::Zdt2: return "zdt2";
    case ZdtId::Zdt3: return "zdt3";
    case ZdtId::Zdt4: return "zdt4";
    case ZdtId::Zdt6: return "zdt6";
    }
    return "?";
}

std::optional<ZdtId> parse_problem(std::string_view name) noexcept {
    if (name == "zdt1") return ZdtId::Zdt1;
    if (name == "zdt2") return ZdtId::Zdt2;
    if (name == "zdt3") return ZdtId::Zdt3;
    if (name == "zdt4") return ZdtId::Zdt4;
    if (name == "zdt6") return ZdtId::Zdt6;
    return std::nullopt;
}

std::size_t default_dimension(ZdtId id) noexcept {
    return (id == ZdtId::Zdt4 || id == ZdtId::Zdt6) ? 10 : 30;
}

std::span<const F1Interval> zdt3_front_intervals() noexcept { return zdt3_intervals; }

double zdt6_min_f1() noexcept {
    const double x = std::atan(9.0 * pi) / (6.0 * pi);
    return 1.0 - std::exp(-4.0 * x) * std::pow(std::sin(6.0 * pi * x), 6);
}

Problem::Problem(ZdtId id, std::size_t dimension) : id_(id) {
    const std::size_t n = dimension == 0 ? default_dimension(id) : dimension;
    if (n < 2) {
        throw ConfigError("ZDT problems need at least 2 decision variables");
    }
    bounds_.lower.assign(n, 0.0);
    bounds_.upper.assign(n, 1.0);
    if (id == ZdtId::Zdt4) {
        for (std::size_t j = 1; j < n; ++j) {
            bounds_.lower[j] = -5.0;
            bounds_.upper[j] = 5.0;
        }
    }
}

ObjectivePoint Problem::evaluate(const DecisionVector& x) const {
    if (!bounds_.contains(x)) {
        throw Error("domain-violation", std::string(name()) + " point outside its decision space");
    }
    const double n = static_cast<double>(x.size());
    double f1 = x[0];
    double f2 = 0.0;
    switch (id_) {
    case ZdtId::Zdt1: {
        const double g = 1.0 + 9.0 * tail_sum(x) / (n - 1.0);
        f2 = g * (1.0 - std::sqrt(f1 / g));
        break;
    }
    case ZdtId::Zdt2: {
        const double g = 1.0 + 9.0 * tail_sum(x) / (n - 1.0);
        f2 = g * (1.0 - (f1 / g) * (f1 / g));
        break;
    }
    case ZdtId::Zdt3: {
        const double g = 1.0 + 9.0 * tail_sum(x) / (n - 1.0);
        f2 = g * (1.0 - std::sqrt(f1 / g) - (f1 / g) * std::sin(10.0 * pi * f1));
        break;
    }
    case ZdtId::Zdt4: {
        double g = 1.0 + 10.0 * (n - 1.0);
        for (std::size_t j = 1; j < x.size(); ++j) {
            g += x[j] * x[j] - 10.0 * std::cos(4.0 * pi * x[j]);
        }
        f2 = g * (1.0 - std::sqrt(f1 / g));
        break;
    }
    case ZdtId::Zdt6: {
        f1 = 1.0 - std::exp(-4.0 * x[0]) * std::pow(std::sin(6.0 * pi * x[0]), 6);
        const double g = 1.0 + 9.0 * std::pow(tail_sum(x) / (n - 1.0), 0.25);
        f2 = g * (1.0 - (f1 / g) * (f1 / g));
        break;
    }
    }
    return ObjectivePoint{f1, f2};
}

std::vector<ObjectivePoint> Problem::true_front(std::size_t count) const {
    if (count < 2) {
        throw Error("invalid-argument", "true_front needs at least 2 points");
    }
    std::vector<F1Interval> pieces;
    if (id_ == ZdtId::Zdt3) {
        pieces.assign(zdt3_intervals.begin(), zdt3_intervals.end());
    } else if (id_ == ZdtId::Zdt6) {
        pieces.push_back({zdt6_min_f1(), 1.0});
    } else {
        pieces.push_back({0.0, 1.0});
    }

    // largest-remainder split of `count` proportional to interval length
    double total = 0.0;
    for (const auto& p : pieces) {
        total += p.hi - p.lo;
    }
    std::vector<std::size_t> share(pieces.size());
    std::vector<std::pair<double, std::size_t>> remainders;
    std::size_t assigned = 0;
    for (std::size_t i = 0; i < pieces.size(); ++i) {
        const double exact = static_cast<double>(count) * (pieces[i].hi - pieces[i].lo) / total;
        share[i] = static_cast<std::size_t>(exact);
        assigned += share[i];
        remainders.emplace_back(exact - static_cast<double>(share[i]), i);
    }
    std::stable_sort(remainders.begin(), remainders.end(),
                     [](const auto& a, const auto& b) { return a.first > b.first; });
    for (std::size_t r = 0; assigned < count; ++r, ++assigned) {
        ++share[remainders[r].second];
    }

    std::vector<ObjectivePoint> front;
    front.reserve(count);
    for (std::size_t i = 0; i < pieces.size(); ++i) {
        const std::size_t m = share[i];
        // the left end of every later ZDT3 piece is dominated by the right
        // end of the previous one, so those pieces are sampled half-open
        const bool open_lo = i > 0;
        const std::size_t steps = open_lo ? m : m - 1;
        for (std::size_t p = 0; p < m; ++p) {
            const double pos = open_lo ? static_cast<double>(p + 1) : static_cast<double>(p);
            const double f1 = steps == 0 ? pieces[i].lo
                                         : pieces[i].lo + (pieces[i].hi - pieces[i].lo) * pos /
                                                              static_cast<double>(steps);
            front.push_back(ObjectivePoint{f1, front_f2(id_, f1)});
        }
    }
    return front;
}

} // namespace rsp
