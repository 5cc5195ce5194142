#pragma once

#include <optional>
#include <string_view>

#include "rsp/core/types.hpp"

namespace rsp {

// Statistic an individual presents to selection, computed over its samples.
enum class EstimatorKind { Last, Mean, Median };

std::string_view to_string(EstimatorKind kind) noexcept;
std::optional<EstimatorKind> parse_estimator(std::string_view name) noexcept;

// LAST: the final sample. MEAN/MEDIAN: component-wise over all samples; an
// even count takes the midpoint of the two central order statistics.
// Throws Error("empty-archive") on an empty archive.
ObjectivePoint estimator_value(const SampleArchive& archive, EstimatorKind kind);

// Same statistic over the archive extended by one extra (bootstrap) sample.
ObjectivePoint estimator_value(const SampleArchive& archive, const ObjectivePoint& extra, EstimatorKind kind);

} // namespace rsp
