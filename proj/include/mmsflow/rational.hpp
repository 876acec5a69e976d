#pragma once

#include <compare>
#include <numeric>
#include <string>

#include "mmsflow/errors.hpp"

namespace mmsflow {

// Exact non-negative rational, always stored reduced; zero is 0/1. Ordering
// and equality cross-multiply in 128-bit integers, so comparisons are exact
// for any value this project produces. No floating point anywhere.
class Rational {
public:
    Rational() = default;
    Rational(long long numerator, long long denominator) {
        if (numerator < 0) {
            throw ValidationError("rational numerator must be non-negative");
        }
        if (denominator <= 0) {
            throw ValidationError("rational denominator must be positive");
        }
        const long long g = std::gcd(numerator, denominator);
        num_ = numerator / g;
        den_ = denominator / g;
    }

    long long numerator() const { return num_; }
    long long denominator() const { return den_; }

    std::string to_string() const {
        return std::to_string(num_) + "/" + std::to_string(den_);
    }

    // Reduced representations are unique, so member comparison is exact.
    friend bool operator==(const Rational&, const Rational&) = default;

    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        const __int128 lhs = static_cast<__int128>(a.num_) * b.den_;
        const __int128 rhs = static_cast<__int128>(b.num_) * a.den_;
        if (lhs < rhs) return std::strong_ordering::less;
        if (lhs > rhs) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

private:
    long long num_ = 0;
    long long den_ = 1;
};

}  // namespace mmsflow
