#include "amorph/rational.hpp"

#include "amorph/errors.hpp"

#include <cctype>
#include <limits>

namespace amorph {

Rational::Rational(const BigInt& num, const BigInt& den) : v_(num, den) {
    if (den == 0) throw DivisionByZero();
    v_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
    auto parse_int = [&](std::string_view s, std::size_t offset) {
        std::size_t i = 0;
        if (!s.empty() && (s[0] == '-' || s[0] == '+')) ++i;
        if (i == s.size()) throw ParseError("expected integer", offset + i);
        for (std::size_t j = i; j < s.size(); ++j) {
            if (!std::isdigit(static_cast<unsigned char>(s[j]))) throw ParseError("unexpected character", offset + j);
        }
        std::string buf(s[0] == '+' ? s.substr(1) : s);
        return BigInt(buf);
    };
    auto slash = text.find('/');
    if (slash == std::string_view::npos) return Rational(parse_int(text, 0));
    BigInt den = parse_int(text.substr(slash + 1), slash + 1);
    if (den == 0) throw DivisionByZero();
    return Rational(parse_int(text.substr(0, slash), 0), den);
}

long double Rational::to_long_double() const {
    // mpq -> double loses little for the magnitudes seen here; refine via num/den.
    mpf_class num(v_.get_num(), 128), den(v_.get_den(), 128);
    mpf_class q = num / den;
    return static_cast<long double>(q.get_d());
}

std::optional<std::int64_t> Rational::to_int64() const {
    if (!is_integer()) return std::nullopt;
    const BigInt& n = v_.get_num();
    if (!n.fits_slong_p()) return std::nullopt;
    return static_cast<std::int64_t>(n.get_si());
}

Rational Rational::abs() const {
    Rational r;
    r.v_ = ::abs(v_);
    return r;
}

Rational Rational::inverse() const {
    if (is_zero()) throw DivisionByZero();
    Rational r;
    r.v_ = 1 / v_;
    return r;
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw DivisionByZero();
    v_ /= o.v_;
    return *this;
}

std::optional<Rational> Rational::exact_sqrt() const {
    if (sign() < 0) return std::nullopt;
    BigInt n = v_.get_num(), d = v_.get_den();
    if (!mpz_perfect_square_p(n.get_mpz_t()) || !mpz_perfect_square_p(d.get_mpz_t())) return std::nullopt;
    return Rational(sqrt(n), sqrt(d));
}

std::string Rational::to_string() const {
    if (is_integer()) return v_.get_num().get_str();
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

SquareFreeSplit square_free_split(const BigInt& value) {
    if (value == 0) throw Error("square-free split of zero");
    BigInt rest = ::abs(value);
    BigInt factor = 1;
    BigInt core = 1;
    constexpr unsigned long kTrialLimit = 2'000'000;
    for (unsigned long p = 2; BigInt(p) * p <= rest; ++p) {
        if (p > kTrialLimit) throw TooLarge("radicand too large to factor: " + value.get_str());
        if (mpz_divisible_ui_p(rest.get_mpz_t(), p) == 0) continue;
        int e = 0;
        while (mpz_divisible_ui_p(rest.get_mpz_t(), p) != 0) {
            rest /= p;
            ++e;
        }
        for (int i = 0; i < e / 2; ++i) factor *= p;
        if (e % 2 == 1) core *= p;
    }
    core *= rest;
    if (value < 0) core = -core;
    if (!core.fits_slong_p()) throw TooLarge("square-free core does not fit in 64 bits");
    return {factor, static_cast<std::int64_t>(core.get_si())};
}

}  // namespace amorph
