#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>

namespace amorph {

using BigInt = mpz_class;

// Arbitrary-precision rational, always stored in lowest terms with a positive
// denominator.
class Rational {
public:
    Rational() = default;
    Rational(long long value) : v_(static_cast<long>(value)) {}  // NOLINT(implicit)
    Rational(const BigInt& value) : v_(value) {}                  // NOLINT(implicit)
    Rational(const BigInt& num, const BigInt& den);
    Rational(long long num, long long den) : Rational(BigInt(static_cast<long>(num)), BigInt(static_cast<long>(den))) {}

    // Accepts "p" or "p/q".
    static Rational parse(std::string_view text);

    BigInt numerator() const { return v_.get_num(); }
    BigInt denominator() const { return v_.get_den(); }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }
    double to_double() const { return v_.get_d(); }
    long double to_long_double() const;

    // Returns the value as a 64-bit integer if it is integral and fits.
    std::optional<std::int64_t> to_int64() const;

    Rational abs() const;
    Rational inverse() const;

    // Exact square root if this is the square of a rational.
    std::optional<Rational> exact_sqrt() const;

    std::string to_string() const;

    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    friend Rational operator-(const Rational& a) { Rational r; r.v_ = -a.v_; return r; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        int c = cmp(a.v_, b.v_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

private:
    mpq_class v_;
};

// Largest-square decomposition: value = factor^2 * core with core square-free
// (sign carried by core). Throws TooLarge when |value| exceeds trial-division
// reach.
struct SquareFreeSplit {
    BigInt factor;
    std::int64_t core;
};
SquareFreeSplit square_free_split(const BigInt& value);

}  // namespace amorph
