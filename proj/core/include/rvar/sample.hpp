#ifndef RVAR_SAMPLE_HPP
#define RVAR_SAMPLE_HPP

#include <cstddef>
#include <vector>

namespace rvar {

/// A nonempty batch of real observations with a cached sorted copy.
/// NaN is rejected at construction; every downstream statistic would
/// silently corrupt otherwise.
class Sample {
public:
    explicit Sample(std::vector<double> values);

    const std::vector<double>& values() const { return values_; }
    const std::vector<double>& sorted() const { return sorted_; }
    std::size_t size() const { return values_.size(); }

private:
    std::vector<double> values_;
    std::vector<double> sorted_;
};

}  // namespace rvar

#endif
