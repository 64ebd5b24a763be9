#pragma once

#include <cmath>
#include <cstdint>
#include <limits>

#include "liquidpower/bignum.hpp"

namespace liquidpower::detail {

/// base^exp for exp >= 0 with the 0^0 = 1 convention.
template <typename T>
T int_pow(T base, long long exp) {
    T result(1);
    while (exp > 0) {
        if (exp & 1) result *= base;
        base *= base;
        exp >>= 1;
    }
    return result;
}

/// Compensated (Kahan) accumulator for the long decomposition sums.
class KahanSum {
public:
    void add(double value) {
        const double y = value - compensation_;
        const double t = sum_ + y;
        compensation_ = (t - sum_) - y;
        sum_ = t;
    }
    double value() const { return sum_; }

private:
    double sum_{0};
    double compensation_{0};
};

/// log2 of a positive big integer, accurate to double precision.
inline double log2_big(const BigInt& v) {
    const std::size_t bits = msb(v); // index of the most significant bit
    if (bits <= 960) return std::log2(v.convert_to<double>());
    const BigInt shifted = v >> (bits - 960);
    return std::log2(shifted.convert_to<double>()) + static_cast<double>(bits - 960);
}

/// count * prob with a log-space fallback when either side leaves the
/// double range (exponents beyond ~1e3).
inline double count_times_prob(const BigInt& count, double prob, double log2_prob) {
    if (count.is_zero() || !(log2_prob > -std::numeric_limits<double>::infinity())) return 0.0;
    const double count_d = count.convert_to<double>();
    if (std::isfinite(count_d) && prob > 0) return count_d * prob;
    return std::exp2(log2_big(count) + log2_prob);
}

} // namespace liquidpower::detail
