#include "rsp/metrics/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>

#include "rsp/core/error.hpp"
#include "rsp/moea/nsga2.hpp"

namespace rsp {

void NormalizationFrame::validate() const {
    if (ideal.size() != nadir.size() || ideal.empty()) {
        throw Error("degenerate-frame", "ideal and nadir differ in length");
    }
    for (std::size_t j = 0; j < ideal.size(); ++j) {
        if (!(nadir[j] > ideal[j])) {
            throw Error("degenerate-frame", "nadir must exceed ideal in every objective");
        }
    }
}

NormalizationFrame NormalizationFrame::from_batch(std::span<const ObjectivePoint> front,
                                                  std::span<const ObjectivePoint> generated) {
    if (front.empty()) {
        throw Error("degenerate-frame", "empty reference front");
    }
    NormalizationFrame frame{front[0], front[0]};
    for (const auto& p : front) {
        for (std::size_t j = 0; j < p.size(); ++j) {
            frame.ideal[j] = std::min(frame.ideal[j], p[j]);
            frame.nadir[j] = std::max(frame.nadir[j], p[j]);
        }
    }
    for (const auto& p : generated) {
        for (std::size_t j = 0; j < p.size(); ++j) {
            frame.nadir[j] = std::max(frame.nadir[j], p[j]);
        }
    }
    frame.validate();
    return frame;
}

NormalizationFrame NormalizationFrame::fallback(const Problem& problem, std::size_t front_resolution) {
    const auto front = problem.true_front(front_resolution);
    return from_batch(front, {});
}

std::vector<ObjectivePoint> normalize(std::span<const ObjectivePoint> points, const NormalizationFrame& frame) {
    frame.validate();
    std::vector<ObjectivePoint> out;
    out.reserve(points.size());
    for (const auto& p : points) {
        ObjectivePoint q(p.size());
        for (std::size_t j = 0; j < p.size(); ++j) {
            q[j] = std::min(1.0, (p[j] - frame.ideal[j]) / (frame.nadir[j] - frame.ideal[j]));
        }
        out.push_back(std::move(q));
    }
    return out;
}

double hypervolume_2d(std::span<const ObjectivePoint> points, const ObjectivePoint& ref) {
    std::vector<std::pair<double, double>> pts;
    for (const auto& p : points) {
        if (p[0] < ref[0] && p[1] < ref[1]) {
            pts.emplace_back(p[0], p[1]);
        }
    }
    // ascending f1, ties by f2; a sweep keeps only strictly improving f2
    std::sort(pts.begin(), pts.end());
    double area = 0.0;
    double best_f2 = ref[1];
    std::vector<std::pair<double, double>> staircase;
    for (const auto& [f1, f2] : pts) {
        if (f2 < best_f2) {
            staircase.emplace_back(f1, f2);
            best_f2 = f2;
        }
    }
    for (std::size_t i = 0; i < staircase.size(); ++i) {
        const double next_f1 = i + 1 < staircase.size() ? staircase[i + 1].first : ref[0];
        area += (next_f1 - staircase[i].first) * (ref[1] - staircase[i].second);
    }
    return area;
}

HvReport delta_hypervolume(std::span<const ObjectivePoint> solution, const Problem& problem,
                           const NormalizationFrame& frame, std::size_t front_resolution) {
    const ObjectivePoint ref{1.0, 1.0};
    const auto front = normalize(problem.true_front(front_resolution), frame);
    const auto sol = normalize(solution, frame);
    HvReport report;
    report.hv_front = hypervolume_2d(front, ref);
    report.hv_solution = hypervolume_2d(sol, ref);
    report.delta_hv = report.hv_front - report.hv_solution;
    return report;
}

namespace detail {

SignedRanks signed_ranks(std::span<const double> a, std::span<const double> b) {
    std::vector<double> d;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const double diff = a[i] - b[i];
        if (diff != 0.0) {
            d.push_back(diff);
        }
    }
    std::vector<std::size_t> order(d.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t x, std::size_t y) { return std::abs(d[x]) < std::abs(d[y]); });
    SignedRanks sr;
    sr.ranks.assign(d.size(), 0.0);
    sr.positive.assign(d.size(), false);
    for (std::size_t lo = 0; lo < order.size();) {
        std::size_t hi = lo;
        while (hi + 1 < order.size() && std::abs(d[order[hi + 1]]) == std::abs(d[order[lo]])) {
            ++hi;
        }
        const double avg = 0.5 * static_cast<double>(lo + hi) + 1.0;
        for (std::size_t r = lo; r <= hi; ++r) {
            sr.ranks[order[r]] = avg;
        }
        lo = hi + 1;
    }
    for (std::size_t i = 0; i < d.size(); ++i) {
        sr.positive[i] = d[i] > 0.0;
        if (sr.positive[i]) {
            sr.w_plus += sr.ranks[i];
        }
    }
    return sr;
}

namespace {

double combine(double p_le, double p_ge, Alternative alternative) {
    switch (alternative) {
    case Alternative::Greater: return std::min(1.0, p_ge);
    case Alternative::Less: return std::min(1.0, p_le);
    case Alternative::TwoSided: return std::min(1.0, 2.0 * std::min(p_le, p_ge));
    }
    return 1.0;
}

} // namespace

double wilcoxon_exact(const SignedRanks& sr, Alternative alternative) {
    // Ranks are multiples of 1/2; count sign assignments over doubled ranks.
    std::vector<std::size_t> twice;
    std::size_t total = 0;
    for (double r : sr.ranks) {
        twice.push_back(static_cast<std::size_t>(std::lround(2.0 * r)));
        total += twice.back();
    }
    std::vector<double> ways(total + 1, 0.0);
    ways[0] = 1.0;
    std::size_t reach = 0;
    for (std::size_t w : twice) {
        reach += w;
        for (std::size_t s = reach; s >= w; --s) {
            ways[s] += ways[s - w];
            if (s == w) {
                break;
            }
        }
    }
    const double all = std::ldexp(1.0, static_cast<int>(twice.size()));
    const auto observed = static_cast<std::size_t>(std::lround(2.0 * sr.w_plus));
    double le = 0.0;
    double ge = 0.0;
    for (std::size_t s = 0; s <= total; ++s) {
        if (s <= observed) le += ways[s];
        if (s >= observed) ge += ways[s];
    }
    return combine(le / all, ge / all, alternative);
}

double wilcoxon_normal(const SignedRanks& sr, Alternative alternative) {
    const double n = static_cast<double>(sr.ranks.size());
    const double mean = n * (n + 1.0) / 4.0;
    double var = n * (n + 1.0) * (2.0 * n + 1.0) / 24.0;
    std::vector<double> sorted = sr.ranks;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t lo = 0; lo < sorted.size();) {
        std::size_t hi = lo;
        while (hi + 1 < sorted.size() && sorted[hi + 1] == sorted[lo]) {
            ++hi;
        }
        const double t = static_cast<double>(hi - lo + 1);
        var -= (t * t * t - t) / 48.0;
        lo = hi + 1;
    }
    const double sd = std::sqrt(var);
    auto upper_tail = [](double z) { return 0.5 * std::erfc(z / std::sqrt(2.0)); };
    // continuity-corrected tails P(W >= w) and P(W <= w)
    const double p_ge = upper_tail((sr.w_plus - mean - 0.5) / sd);
    const double p_le = upper_tail((mean - sr.w_plus - 0.5) / sd);
    return combine(p_le, p_ge, alternative);
}

} // namespace detail

double wilcoxon_signed_rank(std::span<const double> a, std::span<const double> b, Alternative alternative) {
    if (a.size() != b.size()) {
        throw Error("invalid-argument", "Wilcoxon test needs paired samples");
    }
    if (a.size() < 5) {
        throw Error("invalid-argument", "Wilcoxon test needs at least 5 pairs");
    }
    const detail::SignedRanks sr = detail::signed_ranks(a, b);
    if (sr.ranks.empty()) {
        return 1.0;
    }
    return sr.ranks.size() <= 20 ? detail::wilcoxon_exact(sr, alternative)
                                 : detail::wilcoxon_normal(sr, alternative);
}

} // namespace rsp
