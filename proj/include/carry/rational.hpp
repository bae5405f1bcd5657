#pragma once

#include <compare>
#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace carry {

using BigInt = mpz_class;

/// Exact rational number, always held in lowest terms with a positive
/// denominator. Zero is 0/1.
class Rational {
public:
    Rational() = default;
    Rational(long v) : v_(v) {}                  // NOLINT(google-explicit-constructor)
    Rational(int v) : v_(static_cast<long>(v)) {} // NOLINT(google-explicit-constructor)
    Rational(const BigInt& v) : v_(v) {}         // NOLINT(google-explicit-constructor)
    Rational(const BigInt& num, const BigInt& den);
    Rational(long num, long den) : Rational(BigInt(num), BigInt(den)) {}

    /// Parses "p", "-p" or "p/q".
    static Rational parse(const std::string& text);

    BigInt num() const { return v_.get_num(); }
    BigInt den() const { return v_.get_den(); }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }

    /// Integer value; throws std::domain_error unless the denominator is 1.
    BigInt to_integer() const;

    /// "p" when the denominator is 1, otherwise "p/q".
    std::string str() const;

    Rational operator-() const { return Rational(mpq_class(-v_)); }
    Rational abs() const { return Rational(mpq_class(::abs(v_))); }
    Rational inverse() const;
    Rational pow(long exponent) const;

    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) == 0; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        const int c = cmp(a.v_, b.v_);
        return c < 0 ? std::strong_ordering::less
             : c > 0 ? std::strong_ordering::greater
                     : std::strong_ordering::equal;
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

    const mpq_class& raw() const { return v_; }

private:
    explicit Rational(mpq_class v) : v_(std::move(v)) {}
    mpq_class v_{0};
};

/// base^exponent for a non-negative exponent.
BigInt ipow(const BigInt& base, unsigned long exponent);

/// Decimal rendering of a big integer.
std::string to_string(const BigInt& v);

}  // namespace carry
