#pragma once

#include <cstdint>
#include <numeric>
#include <string>

namespace parcollect {

/**
 * Exact rational with machine-word storage, used for per-edge transition
 * probabilities. A probability's denominator divides prod(N_j), which the
 * state-count limit keeps below 2^63, so construction never overflows.
 * Always stored reduced with den > 0.
 */
struct Ratio {
    std::int64_t num = 0;
    std::int64_t den = 1;

    constexpr Ratio() = default;
    Ratio(std::int64_t n, std::int64_t d) : num(n), den(d) {
        if (den < 0) { num = -num; den = -den; }
        const std::int64_t g = std::gcd(num < 0 ? -num : num, den);
        if (g > 1) { num /= g; den /= g; }
    }

    double to_double() const { return static_cast<double>(num) / static_cast<double>(den); }

    bool is_zero() const { return num == 0; }
    bool is_one() const { return num == den; }

    friend bool operator==(const Ratio& a, const Ratio& b) = default;

    std::string str() const {
        return den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den);
    }
};

}  // namespace parcollect
