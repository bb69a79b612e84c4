#ifndef RVAR_TRIPLET_HPP
#define RVAR_TRIPLET_HPP

namespace rvar {

/// A candidate value for the triplet (lower quantile, upper quantile,
/// interquantile expectation). The ordering x1 <= x3 <= x2 is deliberately
/// not enforced: scoring functions must be able to evaluate forecasts that
/// violate it.
struct Triplet {
    double x1 = 0.0;  ///< quantile at the lower level
    double x2 = 0.0;  ///< quantile at the upper level
    double x3 = 0.0;  ///< interquantile expectation

    Triplet() = default;
    Triplet(double q_lo, double q_hi, double iqe) : x1(q_lo), x2(q_hi), x3(iqe) {}
};

inline Triplet operator+(const Triplet& t, double c) {
    return {t.x1 + c, t.x2 + c, t.x3 + c};
}

inline Triplet operator*(double c, const Triplet& t) {
    return {c * t.x1, c * t.x2, c * t.x3};
}

/// True iff the triplet lies in the sensible action domain x1 <= x3 <= x2.
inline bool in_sensible_domain(const Triplet& t) {
    return t.x1 <= t.x3 && t.x3 <= t.x2;
}

}  // namespace rvar

#endif
