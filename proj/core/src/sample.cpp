#include "rvar/sample.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <utility>

namespace rvar {

Sample::Sample(std::vector<double> values) : values_(std::move(values)) {
    if (values_.empty()) throw std::invalid_argument("Sample: empty");
    for (double v : values_)
        if (std::isnan(v)) throw std::invalid_argument("Sample: NaN value");
    sorted_ = values_;
    std::stable_sort(sorted_.begin(), sorted_.end());
}

}  // namespace rvar
