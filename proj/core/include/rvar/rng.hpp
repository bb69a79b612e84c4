#ifndef RVAR_RNG_HPP
#define RVAR_RNG_HPP

#include <cstdint>

#include "rvar/normal.hpp"

namespace rvar {

/// splitmix64 finalizer (Stafford mix 13).
inline std::uint64_t mix64(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

/// Independent stream seed for (seed, lane, index). Replications, the Murphy
/// run, and optimizer restarts each live in their own lane so parallel
/// execution order cannot change any draw.
inline std::uint64_t derive_stream(std::uint64_t seed, std::uint64_t lane,
                                   std::uint64_t index) {
    return mix64(mix64(seed ^ (lane * 0xd1342543de82ef95ULL)) ^
                 (index * 0x2545f4914f6cdd1dULL));
}

/// splitmix64: tiny, fast, and fully reproducible across platforms. Normal
/// variates come from the inverse CDF so the audited quantile code is the
/// only source of normality.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64() {
        state_ += 0x9e3779b97f4a7c15ULL;
        std::uint64_t z = state_;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// Uniform on the open interval (0,1); never returns an endpoint.
    double next_uniform() {
        return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53;
    }

    double next_normal() { return normal_quantile(next_uniform()); }

private:
    std::uint64_t state_;
};

}  // namespace rvar

#endif
