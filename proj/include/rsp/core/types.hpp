#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace rsp {

// Thin strong wrapper over a real vector; the tag keeps decision-space and
// objective-space values from being mixed up.
template <class Tag>
class RealVector {
public:
    RealVector() = default;
    explicit RealVector(std::vector<double> values) : values_(std::move(values)) {}
    RealVector(std::initializer_list<double> values) : values_(values) {}
    explicit RealVector(std::size_t n, double fill = 0.0) : values_(n, fill) {}

    std::size_t size() const noexcept { return values_.size(); }
    bool empty() const noexcept { return values_.empty(); }

    double& operator[](std::size_t i) { return values_[i]; }
    double operator[](std::size_t i) const { return values_[i]; }

    auto begin() noexcept { return values_.begin(); }
    auto end() noexcept { return values_.end(); }
    auto begin() const noexcept { return values_.begin(); }
    auto end() const noexcept { return values_.end(); }

    std::span<const double> view() const noexcept { return values_; }
    const std::vector<double>& values() const noexcept { return values_; }

    friend bool operator==(const RealVector&, const RealVector&) = default;

private:
    std::vector<double> values_;
};

struct DecisionTag {};
struct ObjectiveTag {};

using DecisionVector = RealVector<DecisionTag>;
using ObjectivePoint = RealVector<ObjectiveTag>;

// Per-coordinate box constraints of a decision space.
struct Bounds {
    std::vector<double> lower;
    std::vector<double> upper;

    std::size_t size() const noexcept { return lower.size(); }
    bool contains(const DecisionVector& x) const noexcept;
    double clip(std::size_t j, double v) const noexcept;
};

// Real objective samples of one individual, in evaluation order. Only ever
// grows; bootstrap draws are never stored here.
class SampleArchive {
public:
    SampleArchive() = default;
    SampleArchive(std::initializer_list<ObjectivePoint> samples) : samples_(samples) {}

    void append(ObjectivePoint sample) { samples_.push_back(std::move(sample)); }

    std::size_t size() const noexcept { return samples_.size(); }
    bool empty() const noexcept { return samples_.empty(); }
    const ObjectivePoint& operator[](std::size_t i) const { return samples_[i]; }
    const ObjectivePoint& back() const { return samples_.back(); }
    std::span<const ObjectivePoint> samples() const noexcept { return samples_; }

private:
    std::vector<ObjectivePoint> samples_;
};

struct Individual {
    DecisionVector genome;
    SampleArchive archive;
    // Genome is identical to a parent's genome from the previous generation.
    bool unchanged = false;
};

} // namespace rsp
