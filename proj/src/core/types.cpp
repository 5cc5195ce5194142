#include "rsp/core/types.hpp"

#include <algorithm>

namespace rsp {

bool Bounds::contains(const DecisionVector& x) const noexcept {
    if (x.size() != size()) {
        return false;
    }
    for (std::size_t j = 0; j < x.size(); ++j) {
        if (!(x[j] >= lower[j] && x[j] <= upper[j])) {
            return false;
        }
    }
    return true;
}

double Bounds::clip(std::size_t j, double v) const noexcept {
    return std::clamp(v, lower[j], upper[j]);
}

} // namespace rsp
