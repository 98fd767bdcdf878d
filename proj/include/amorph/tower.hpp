#pragma once

#include "amorph/rational.hpp"

#include <complex>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>

namespace amorph {

// a + b*sqrt(d) where the radicand d is owned by the enclosing TowerNumber.
struct QuadraticPart {
    Rational a;
    Rational b;

    bool is_zero() const { return a.is_zero() && b.is_zero(); }
    bool is_rational() const { return b.is_zero(); }
    friend bool operator==(const QuadraticPart&, const QuadraticPart&) = default;
};

// Exact algebraic number in a tower of at most two quadratic extensions:
//   level 0: a rational
//   level 1: a + b*sqrt(d1), d1 square-free, d1 != 0, 1
//   level 2: u + v*sqrt(theta), u, v, theta in Q(sqrt(d1)), theta not a square there
//
// sqrt always denotes the principal branch of the complex square root, so
// sqrt(-7) = i*sqrt(7). Values are kept canonical: a level is dropped whenever
// its radical coefficient vanishes or the radical collapses into the level
// below. A rational theta (biquadratic tower) is stored as a square-free
// integer with d1 the smallest and theta the middle of the field's three
// radicands, so each biquadratic value has exactly one representation.
class TowerNumber {
public:
    TowerNumber() = default;
    TowerNumber(const Rational& value);  // NOLINT(implicit)
    TowerNumber(long long value) : TowerNumber(Rational(value)) {}  // NOLINT(implicit)
    TowerNumber(int value) : TowerNumber(Rational(value)) {}        // NOLINT(implicit)

    // a + b*sqrt(radicand) for any nonzero integer radicand.
    static TowerNumber quadratic(const Rational& a, const Rational& b, std::int64_t radicand);

    // Principal square root. Level-2 arguments exceed the tower depth and throw
    // IncompatibleTower.
    static TowerNumber sqrt(const TowerNumber& x);

    // Parses the rendering grammar: integers, + - * /, parentheses and sqrt(...).
    static TowerNumber parse(std::string_view text);

    int level() const;
    std::int64_t radicand() const { return d1_; }
    bool has_theta() const { return has_theta_; }
    const QuadraticPart& u() const { return u_; }
    const QuadraticPart& v() const { return v_; }
    const QuadraticPart& theta() const { return theta_; }

    bool is_zero() const { return level() == 0 && u_.a.is_zero(); }
    std::optional<Rational> as_rational() const;
    bool is_real() const;

    // Sign of a real value; exact for levels 0 and 1. Throws for nonreal values.
    int real_sign() const;

    std::complex<double> to_complex() const;
    std::complex<long double> to_complex_ld() const;

    // Flips the radical at the given level (a field automorphism).
    TowerNumber conjugate(int level) const;
    // Complex conjugate. Throws IncompatibleTower in the rare case where the
    // conjugate leaves every tower this value can be lifted into.
    TowerNumber complex_conjugate() const;

    std::string to_string() const;

    TowerNumber& operator+=(const TowerNumber& o);
    TowerNumber& operator-=(const TowerNumber& o);
    TowerNumber& operator*=(const TowerNumber& o);
    TowerNumber& operator/=(const TowerNumber& o);

    friend TowerNumber operator+(TowerNumber a, const TowerNumber& b) { return a += b; }
    friend TowerNumber operator-(TowerNumber a, const TowerNumber& b) { return a -= b; }
    friend TowerNumber operator*(TowerNumber a, const TowerNumber& b) { return a *= b; }
    friend TowerNumber operator/(TowerNumber a, const TowerNumber& b) { return a /= b; }
    friend TowerNumber operator-(const TowerNumber& a);

    // Exact equality. Values living in towers that cannot be unified are unequal.
    friend bool operator==(const TowerNumber& a, const TowerNumber& b);

    friend std::ostream& operator<<(std::ostream& os, const TowerNumber& x) { return os << x.to_string(); }

    // Exposed for tests: true when the stored form is already canonical.
    bool is_canonical() const;

private:
    struct Tower {
        std::int64_t d1 = 0;
        bool has_theta = false;
        QuadraticPart theta;
        friend bool operator==(const Tower&, const Tower&) = default;
    };

    Tower tower() const { return {d1_, has_theta_, theta_}; }
    static Tower common_tower(const TowerNumber& x, const TowerNumber& y);
    std::pair<QuadraticPart, QuadraticPart> lift(const Tower& t) const;
    static TowerNumber assemble(const Tower& t, QuadraticPart u, QuadraticPart v);
    void canonicalize();

    std::int64_t d1_ = 0;
    bool has_theta_ = false;
    QuadraticPart u_;
    QuadraticPart v_;
    QuadraticPart theta_;
};

}  // namespace amorph
