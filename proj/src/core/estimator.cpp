#include "rsp/core/estimator.hpp"

#include <algorithm>

#include "rsp/core/error.hpp"

namespace rsp {

std::string_view to_string(EstimatorKind kind) noexcept {
    switch (kind) {
    case EstimatorKind::Last: return "last";
    case EstimatorKind::Mean: return "mean";
    case EstimatorKind::Median: return "median";
    }
    return "?";
}

std::optional<EstimatorKind> parse_estimator(std::string_view name) noexcept {
    if (name == "last") return EstimatorKind::Last;
    if (name == "mean") return EstimatorKind::Mean;
    if (name == "median") return EstimatorKind::Median;
    return std::nullopt;
}

namespace {

ObjectivePoint reduce(std::span<const ObjectivePoint> samples, const ObjectivePoint* extra, EstimatorKind kind) {
    const std::size_t count = samples.size() + (extra != nullptr ? 1 : 0);
    if (count == 0) {
        throw Error("empty-archive", "estimator over no samples");
    }
    const ObjectivePoint& last = extra != nullptr ? *extra : samples.back();
    if (kind == EstimatorKind::Last) {
        return last;
    }

    const std::size_t k = last.size();
    ObjectivePoint out(k);
    std::vector<double> column(count);
    for (std::size_t j = 0; j < k; ++j) {
        for (std::size_t i = 0; i < samples.size(); ++i) {
            column[i] = samples[i][j];
        }
        if (extra != nullptr) {
            column.back() = (*extra)[j];
        }
        if (kind == EstimatorKind::Mean) {
            double sum = 0.0;
            for (double v : column) {
                sum += v;
            }
            out[j] = sum / static_cast<double>(count);
        } else {
            const std::size_t mid = count / 2;
            std::nth_element(column.begin(), column.begin() + static_cast<std::ptrdiff_t>(mid), column.end());
            double m = column[mid];
            if (count % 2 == 0) {
                const double below = *std::max_element(column.begin(), column.begin() + static_cast<std::ptrdiff_t>(mid));
                m = 0.5 * (below + m);
            }
            out[j] = m;
        }
    }
    return out;
}

} // namespace

ObjectivePoint estimator_value(const SampleArchive& archive, EstimatorKind kind) {
    return reduce(archive.samples(), nullptr, kind);
}

ObjectivePoint estimator_value(const SampleArchive& archive, const ObjectivePoint& extra, EstimatorKind kind) {
    return reduce(archive.samples(), &extra, kind);
}

} // namespace rsp
