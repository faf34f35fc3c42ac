#pragma once

#include <cstdint>
#include <string>

namespace isolation {

/// Exact rational over 64-bit integers, always normalized (gcd 1, positive
/// denominator). Range is ample for the bound arithmetic at desk scale;
/// comparisons cross-multiply in 128 bits.
class Rational {
public:
    constexpr Rational() = default;
    Rational(long long numerator, long long denominator = 1);

    long long num() const { return num_; }
    long long den() const { return den_; }

    double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }
    bool is_integer() const { return den_ == 1; }

    Rational operator-() const;
    friend Rational operator+(const Rational& a, const Rational& b);
    friend Rational operator-(const Rational& a, const Rational& b);
    friend Rational operator*(const Rational& a, const Rational& b);

    bool operator==(const Rational&) const = default;
    friend bool operator<(const Rational& a, const Rational& b);
    friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
    friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
    friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

    std::string str() const;

private:
    long long num_ = 0;
    long long den_ = 1;
};

}  // namespace isolation
