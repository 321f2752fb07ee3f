#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>

namespace brokenstick {

using BigInt = boost::multiprecision::cpp_int;

/// Exact fraction over arbitrary-precision integers.
///
/// Canonical form is maintained after every operation:
///   - denominator > 0 (sign lives in the numerator),
///   - gcd(|numerator|, denominator) == 1,
///   - zero is always 0/1.
///
/// Equality is therefore structural. All operations are pure; values are
/// immutable once constructed and safe to share across threads.
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(long long value) : num_(value), den_(1) {}
    Rational(BigInt value) : num_(std::move(value)), den_(1) {}

    Rational(BigInt numerator, BigInt denominator)
        : num_(std::move(numerator)), den_(std::move(denominator)) {
        normalize();
    }

    const BigInt& numerator() const { return num_; }
    const BigInt& denominator() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_negative() const { return num_ < 0; }
    bool is_integer() const { return den_ == 1; }

    Rational operator-() const {
        Rational r;
        r.num_ = -num_;
        r.den_ = den_;
        return r;
    }

    Rational operator+(const Rational& rhs) const {
        return Rational(num_ * rhs.den_ + rhs.num_ * den_, den_ * rhs.den_);
    }
    Rational operator-(const Rational& rhs) const {
        return Rational(num_ * rhs.den_ - rhs.num_ * den_, den_ * rhs.den_);
    }
    Rational operator*(const Rational& rhs) const {
        return Rational(num_ * rhs.num_, den_ * rhs.den_);
    }
    Rational operator/(const Rational& rhs) const {
        if (rhs.is_zero())
            throw std::domain_error("Rational: division by zero");
        return Rational(num_ * rhs.den_, den_ * rhs.num_);
    }

    Rational& operator+=(const Rational& rhs) { return *this = *this + rhs; }
    Rational& operator-=(const Rational& rhs) { return *this = *this - rhs; }
    Rational& operator*=(const Rational& rhs) { return *this = *this * rhs; }
    Rational& operator/=(const Rational& rhs) { return *this = *this / rhs; }

    bool operator==(const Rational& rhs) const {
        return num_ == rhs.num_ && den_ == rhs.den_;
    }

    std::strong_ordering operator<=>(const Rational& rhs) const {
        // Denominators are positive, so cross multiplication preserves order.
        const BigInt lhs_scaled = num_ * rhs.den_;
        const BigInt rhs_scaled = rhs.num_ * den_;
        if (lhs_scaled < rhs_scaled) return std::strong_ordering::less;
        if (lhs_scaled > rhs_scaled) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

    /// Nonnegative integer power by repeated multiplication.
    Rational pow(unsigned exponent) const {
        Rational result(1);
        Rational base = *this;
        for (unsigned e = exponent; e > 0; e >>= 1) {
            if (e & 1u) result *= base;
            if (e > 1) base *= base;
        }
        return result;
    }

    /// Nearest double; exact rationals of any size convert without overflow.
    double to_double() const {
        boost::multiprecision::cpp_rational q(num_, den_);
        return q.convert_to<double>();
    }

    /// Exact "p/q" form, e.g. "1/4", "-3/2", "0/1".
    std::string to_string() const {
        return num_.str() + "/" + den_.str();
    }

private:
    void normalize() {
        if (den_.is_zero())
            throw std::domain_error("Rational: zero denominator");
        if (num_.is_zero()) {
            den_ = 1;
            return;
        }
        if (den_ < 0) {
            num_ = -num_;
            den_ = -den_;
        }
        BigInt g = boost::multiprecision::gcd(num_, den_);
        if (g > 1) {
            num_ /= g;
            den_ /= g;
        }
    }

    BigInt num_;
    BigInt den_;
};

inline Rational abs(const Rational& r) { return r.is_negative() ? -r : r; }

inline std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.to_string();
}

}  // namespace brokenstick
