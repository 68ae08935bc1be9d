#pragma once

#include "orbistack/errors.hpp"

#include <gmpxx.h>

#include <cstdint>
#include <numeric>
#include <string>
#include <utility>

namespace orbistack {

using Rational = mpq_class;
using BigInt = mpz_class;

inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r))
        throw ArithmeticOverflow("int64 addition overflow");
    return r;
}

inline std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_sub_overflow(a, b, &r))
        throw ArithmeticOverflow("int64 subtraction overflow");
    return r;
}

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r))
        throw ArithmeticOverflow("int64 multiplication overflow");
    return r;
}

inline std::int64_t checked_neg(std::int64_t a) { return checked_sub(0, a); }

/// Nonnegative gcd; gcd(0, 0) = 0.
inline std::int64_t gcd64(std::int64_t a, std::int64_t b) {
    if (a == INT64_MIN || b == INT64_MIN)
        throw ArithmeticOverflow("gcd of INT64_MIN");
    return std::gcd(a, b);
}

inline std::int64_t lcm64(std::int64_t a, std::int64_t b) {
    if (a == 0 || b == 0)
        return 0;
    const std::int64_t g = gcd64(a, b);
    return checked_mul(a < 0 ? -a / g : a / g, b < 0 ? -b : b);
}

/// Floor division for b > 0.
inline std::int64_t floor_div(std::int64_t a, std::int64_t b) {
    std::int64_t q = a / b;
    if ((a % b != 0) && (a < 0))
        --q;
    return q;
}

inline std::int64_t to_int64(const BigInt &v) {
    if (!v.fits_slong_p())
        throw ArithmeticOverflow("value " + v.get_str() + " exceeds int64");
    return v.get_si();
}

inline BigInt to_big(std::int64_t v) {
    static_assert(sizeof(long) == sizeof(std::int64_t));
    return BigInt(static_cast<long>(v));
}

/// int64 wrapper whose arithmetic throws ArithmeticOverflow instead of
/// wrapping. Used as the fast scalar of the templated integer algorithms,
/// which retry in BigInt when it throws.
class CheckedInt {
  public:
    constexpr CheckedInt() = default;
    constexpr CheckedInt(std::int64_t v) : v_(v) {} // NOLINT implicit

    constexpr std::int64_t value() const { return v_; }

    friend CheckedInt operator+(CheckedInt a, CheckedInt b) {
        return checked_add(a.v_, b.v_);
    }
    friend CheckedInt operator-(CheckedInt a, CheckedInt b) {
        return checked_sub(a.v_, b.v_);
    }
    friend CheckedInt operator*(CheckedInt a, CheckedInt b) {
        return checked_mul(a.v_, b.v_);
    }
    // exact division only
    friend CheckedInt operator/(CheckedInt a, CheckedInt b) {
        if (b.v_ == -1)
            return checked_neg(a.v_);
        return a.v_ / b.v_;
    }
    friend CheckedInt operator%(CheckedInt a, CheckedInt b) {
        if (b.v_ == -1)
            return 0;
        return a.v_ % b.v_;
    }
    CheckedInt operator-() const { return checked_neg(v_); }
    CheckedInt &operator+=(CheckedInt o) { return *this = *this + o; }
    CheckedInt &operator-=(CheckedInt o) { return *this = *this - o; }
    CheckedInt &operator*=(CheckedInt o) { return *this = *this * o; }

    friend bool operator==(CheckedInt a, CheckedInt b) { return a.v_ == b.v_; }
    friend auto operator<=>(CheckedInt a, CheckedInt b) { return a.v_ <=> b.v_; }

  private:
    std::int64_t v_ = 0;
};

// Uniform helpers so templates can treat CheckedInt and BigInt alike.
inline int sign(CheckedInt v) { return (v.value() > 0) - (v.value() < 0); }
inline int sign(const BigInt &v) { return sgn(v); }
inline CheckedInt abs_value(CheckedInt v) { return v.value() < 0 ? -v : v; }
inline BigInt abs_value(const BigInt &v) { return abs(v); }
inline CheckedInt gcd_value(CheckedInt a, CheckedInt b) {
    return gcd64(a.value(), b.value());
}
inline BigInt gcd_value(const BigInt &a, const BigInt &b) {
    BigInt r;
    mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}
inline std::int64_t narrow(CheckedInt v) { return v.value(); }
inline std::int64_t narrow(const BigInt &v) { return to_int64(v); }
inline BigInt widen(CheckedInt v) { return to_big(v.value()); }
inline BigInt widen(const BigInt &v) { return v; }

template <typename T> T from_int64(std::int64_t v) {
    if constexpr (std::is_same_v<T, BigInt>)
        return to_big(v);
    else
        return T(v);
}

/// Runs `f.template operator()<CheckedInt>()` and, if that overflows,
/// reruns it with BigInt scalars.
template <typename F> auto with_widening(F &&f) {
    try {
        return f.template operator()<CheckedInt>();
    } catch (const ArithmeticOverflow &) {
        return f.template operator()<BigInt>();
    }
}

} // namespace orbistack
