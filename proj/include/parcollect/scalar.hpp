#pragma once

#include <charconv>
#include <cmath>
#include <cstdint>
#include <string>

#include <gmpxx.h>

#include "parcollect/ratio.hpp"

namespace parcollect {

/// Arbitrary-precision exact rational. GMP keeps values canonical (reduced)
/// after every operation.
using Rational = mpq_class;

enum class ScalarMode { rational, floating };

inline const char* to_string(ScalarMode mode) {
    return mode == ScalarMode::rational ? "rational" : "float";
}

inline Rational make_rational(std::int64_t num, std::int64_t den) {
    Rational q(mpz_class(static_cast<long>(num)), mpz_class(static_cast<long>(den)));
    q.canonicalize();
    return q;
}

inline Rational to_rational(const Ratio& r) { return make_rational(r.num, r.den); }

inline double to_double(const Rational& q) { return q.get_d(); }
inline double to_double(double x) { return x; }

/// Shortest decimal that round-trips.
inline std::string scalar_str(double x) {
    char buf[32];
    auto res = std::to_chars(buf, buf + sizeof(buf), x);
    return std::string(buf, res.ptr);
}

/// Canonical fraction "p/q" ("p" when q = 1).
inline std::string scalar_str(const Rational& q) { return q.get_str(); }

// Scalar construction from small exact inputs, shared by the templated
// solver and closed-form code.
template <class S>
struct scalar_ops;

template <>
struct scalar_ops<double> {
    static double from_int(std::int64_t n) { return static_cast<double>(n); }
    static double from_ratio(const Ratio& r) { return r.to_double(); }
    static double from_ratio(std::int64_t num, std::int64_t den) {
        return static_cast<double>(num) / static_cast<double>(den);
    }
    static constexpr ScalarMode mode = ScalarMode::floating;
};

template <>
struct scalar_ops<Rational> {
    static Rational from_int(std::int64_t n) { return Rational(static_cast<long>(n)); }
    static Rational from_ratio(const Ratio& r) { return to_rational(r); }
    static Rational from_ratio(std::int64_t num, std::int64_t den) {
        return make_rational(num, den);
    }
    static constexpr ScalarMode mode = ScalarMode::rational;
};

/// Neumaier-compensated accumulator (used by all float-mode summations).
class NeumaierSum {
public:
    void add(double x) {
        const double t = sum_ + x;
        if (std::abs(sum_) >= std::abs(x)) {
            comp_ += (sum_ - t) + x;
        } else {
            comp_ += (x - t) + sum_;
        }
        sum_ = t;
    }
    double value() const { return sum_ + comp_; }

private:
    double sum_ = 0.0;
    double comp_ = 0.0;
};

/// Per-row accumulator: compensated in float mode, plain in rational mode.
template <class S>
struct RowSum {
    S total{};
    void add(const S& x) { total += x; }
    S value() const { return total; }
};

template <>
struct RowSum<double> {
    NeumaierSum acc;
    void add(double x) { acc.add(x); }
    double value() const { return acc.value(); }
};

}  // namespace parcollect
