#include "rsp/moea/nsga2.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "rsp/core/error.hpp"

namespace rsp {

bool dominates(const ObjectivePoint& a, const ObjectivePoint& b) {
    if (a.size() != b.size()) {
        throw Error("length-mismatch", "dominance between points of different lengths");
    }
    bool strict = false;
    for (std::size_t j = 0; j < a.size(); ++j) {
        if (a[j] > b[j]) {
            return false;
        }
        strict = strict || a[j] < b[j];
    }
    return strict;
}

FrontPartition nondominated_sort(std::span<const ObjectivePoint> points) {
    const std::size_t n = points.size();
    std::vector<std::vector<std::size_t>> dominated(n);
    std::vector<std::size_t> dom_count(n, 0);
    FrontPartition out;
    std::vector<std::size_t> current;

    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t k = i + 1; k < n; ++k) {
            if (dominates(points[i], points[k])) {
                dominated[i].push_back(k);
                ++dom_count[k];
            } else if (dominates(points[k], points[i])) {
                dominated[k].push_back(i);
                ++dom_count[i];
            }
        }
    }
    for (std::size_t i = 0; i < n; ++i) {
        if (dom_count[i] == 0) {
            current.push_back(i);
        }
    }
    while (!current.empty()) {
        std::vector<std::size_t> next;
        for (std::size_t i : current) {
            for (std::size_t k : dominated[i]) {
                if (--dom_count[k] == 0) {
                    next.push_back(k);
                }
            }
        }
        std::sort(next.begin(), next.end());
        out.fronts.push_back(std::move(current));
        current = std::move(next);
    }
    return out;
}

std::vector<double> crowding_distance(std::span<const ObjectivePoint> front) {
    constexpr double inf = std::numeric_limits<double>::infinity();
    const std::size_t n = front.size();
    std::vector<double> distance(n, 0.0);
    if (n == 0) {
        return distance;
    }
    if (n <= 2) {
        std::fill(distance.begin(), distance.end(), inf);
        return distance;
    }
    std::vector<std::size_t> order(n);
    for (std::size_t j = 0; j < front[0].size(); ++j) {
        std::iota(order.begin(), order.end(), 0);
        std::stable_sort(order.begin(), order.end(),
                         [&](std::size_t a, std::size_t b) { return front[a][j] < front[b][j]; });
        distance[order.front()] = inf;
        distance[order.back()] = inf;
        const double range = front[order.back()][j] - front[order.front()][j];
        if (!(range > 0.0)) {
            continue;
        }
        for (std::size_t r = 1; r + 1 < n; ++r) {
            distance[order[r]] += (front[order[r + 1]][j] - front[order[r - 1]][j]) / range;
        }
    }
    return distance;
}

SelectionOutcome environmental_select(std::span<const ObjectivePoint> points, std::size_t mu) {
    if (mu < 1 || mu > points.size()) {
        throw Error("invalid-argument", "environmental_select needs 1 <= mu <= population size");
    }
    SelectionOutcome out;
    out.rank.assign(points.size(), 0);
    out.crowding.assign(points.size(), 0.0);

    const FrontPartition partition = nondominated_sort(points);
    std::vector<ObjectivePoint> front_points;
    for (std::size_t r = 0; r < partition.fronts.size(); ++r) {
        const auto& front = partition.fronts[r];
        front_points.clear();
        for (std::size_t i : front) {
            front_points.push_back(points[i]);
        }
        const std::vector<double> cd = crowding_distance(front_points);
        for (std::size_t p = 0; p < front.size(); ++p) {
            out.rank[front[p]] = r;
            out.crowding[front[p]] = cd[p];
        }

        const std::size_t room = mu - out.selected.size();
        if (room == 0) {
            continue;
        }
        if (front.size() <= room) {
            out.selected.insert(out.selected.end(), front.begin(), front.end());
        } else {
            std::vector<std::size_t> order = front;
            std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
                return out.crowding[a] > out.crowding[b];
            });
            out.selected.insert(out.selected.end(), order.begin(), order.begin() + static_cast<std::ptrdiff_t>(room));
        }
    }
    std::sort(out.selected.begin(), out.selected.end());
    return out;
}

std::size_t binary_tournament(const SelectionOutcome& outcome, RngStream& rng) {
    const std::size_t n = outcome.rank.size();
    if (n == 0) {
        throw Error("invalid-argument", "tournament over an empty population");
    }
    if (n == 1) {
        return 0;
    }
    const std::size_t a = rng.index(n);
    std::size_t b = rng.index(n - 1);
    if (b >= a) {
        ++b;
    }
    if (outcome.rank[a] != outcome.rank[b]) {
        return outcome.rank[a] < outcome.rank[b] ? a : b;
    }
    if (outcome.crowding[a] != outcome.crowding[b]) {
        return outcome.crowding[a] > outcome.crowding[b] ? a : b;
    }
    return rng.coin() ? a : b;
}

double sbx_beta(double u, double eta) noexcept {
    const double e = 1.0 / (eta + 1.0);
    return u <= 0.5 ? std::pow(2.0 * u, e) : std::pow(1.0 / (2.0 * (1.0 - u)), e);
}

std::pair<DecisionVector, DecisionVector> sbx_crossover(const DecisionVector& p1, const DecisionVector& p2,
                                                        const Bounds& bounds, double eta, double pc,
                                                        RngStream& rng) {
    DecisionVector c1 = p1;
    DecisionVector c2 = p2;
    if (rng.uniform() >= pc) {
        return {c1, c2};
    }
    for (std::size_t j = 0; j < p1.size(); ++j) {
        if (rng.uniform() >= 0.5 || p1[j] == p2[j]) {
            continue;
        }
        const double beta = sbx_beta(rng.uniform(), eta);
        double a = 0.5 * ((1.0 + beta) * p1[j] + (1.0 - beta) * p2[j]);
        double b = 0.5 * ((1.0 - beta) * p1[j] + (1.0 + beta) * p2[j]);
        if (rng.uniform() < 0.5) {
            std::swap(a, b);
        }
        c1[j] = bounds.clip(j, a);
        c2[j] = bounds.clip(j, b);
    }
    return {c1, c2};
}

double polynomial_perturb(double value, double lo, double hi, double u, double eta) noexcept {
    const double width = hi - lo;
    if (!(width > 0.0)) {
        return value;
    }
    const double d1 = (value - lo) / width;
    const double d2 = (hi - value) / width;
    const double power = 1.0 / (eta + 1.0);
    double dq = 0.0;
    if (u <= 0.5) {
        const double v = 2.0 * u + (1.0 - 2.0 * u) * std::pow(1.0 - d1, eta + 1.0);
        dq = std::pow(v, power) - 1.0;
    } else {
        const double v = 2.0 * (1.0 - u) + 2.0 * (u - 0.5) * std::pow(1.0 - d2, eta + 1.0);
        dq = 1.0 - std::pow(v, power);
    }
    return std::clamp(value + dq * width, lo, hi);
}

DecisionVector polynomial_mutation(const DecisionVector& x, const Bounds& bounds, double eta, double pm,
                                   RngStream& rng) {
    DecisionVector y = x;
    for (std::size_t j = 0; j < x.size(); ++j) {
        if (rng.uniform() < pm) {
            y[j] = polynomial_perturb(x[j], bounds.lower[j], bounds.upper[j], rng.uniform(), eta);
        }
    }
    return y;
}

} // namespace rsp
