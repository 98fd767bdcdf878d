#include "amorph/tower.hpp"

#include "amorph/errors.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <map>
#include <sstream>

namespace amorph {

namespace {

using Quad = QuadraticPart;

Quad qadd(const Quad& x, const Quad& y) { return {x.a + y.a, x.b + y.b}; }
Quad qsub(const Quad& x, const Quad& y) { return {x.a - y.a, x.b - y.b}; }
Quad qneg(const Quad& x) { return {-x.a, -x.b}; }
Quad qconj(const Quad& x) { return {x.a, -x.b}; }
Quad qscale(const Quad& x, const Rational& r) { return {x.a * r, x.b * r}; }

Quad qmul(const Quad& x, const Quad& y, std::int64_t d) {
    return {x.a * y.a + Rational(d) * x.b * y.b, x.a * y.b + x.b * y.a};
}

Quad qinv(const Quad& x, std::int64_t d) {
    Rational norm = x.a * x.a - Rational(d) * x.b * x.b;
    if (norm.is_zero()) throw DivisionByZero();
    return {x.a / norm, -x.b / norm};
}

// Sign of a + b*sqrt(d) for d > 0.
int exact_sign(const Rational& a, const Rational& b, std::int64_t d) {
    int sa = a.sign(), sb = b.sign();
    if (sb == 0 || d == 0) return sa;
    if (sa == 0) return sb;
    if (sa == sb) return sa;
    Rational lhs = a * a, rhs = b * b * Rational(d);
    if (lhs > rhs) return sa;
    if (lhs < rhs) return sb;
    return 0;
}

std::complex<long double> quad_value(const Quad& x, std::int64_t d) {
    long double a = x.a.to_long_double();
    if (x.b.is_zero() || d == 0) return {a, 0.0L};
    long double b = x.b.to_long_double();
    long double root = std::sqrt(static_cast<long double>(d < 0 ? -d : d));
    if (d > 0) return {a + b * root, 0.0L};
    return {a, b * root};
}

// sqrt(x)*sqrt(y) = coeff*sqrt(core) under the principal branch; core 1 means
// the product is rational.
struct RadicalProduct {
    Rational coeff;
    std::int64_t core;
};

RadicalProduct radical_product(std::int64_t x, std::int64_t y) {
    auto split = square_free_split(BigInt(static_cast<long>(x)) * BigInt(static_cast<long>(y)));
    Rational coeff(split.factor);
    if (x < 0 && y < 0) coeff = -coeff;
    return {coeff, split.core};
}

// Square root of t inside Q(sqrt(d)), if one exists.
std::optional<Quad> sqrt_in_quad(const Quad& t, std::int64_t d) {
    if (t.b.is_zero() || d == 0) {
        if (auto r = t.a.exact_sqrt()) return Quad{*r, 0};
        if (d != 0) {
            if (auto r = (t.a / Rational(d)).exact_sqrt()) return Quad{0, *r};
        }
        return std::nullopt;
    }
    Rational norm = t.a * t.a - Rational(d) * t.b * t.b;
    auto w = norm.exact_sqrt();
    if (!w) return std::nullopt;
    for (int s : {1, -1}) {
        Rational x2 = (t.a + Rational(s) * *w) / Rational(2);
        auto x = x2.exact_sqrt();
        if (!x || x->is_zero()) continue;
        Rational y = t.b / (Rational(2) * *x);
        if (*x * *x + Rational(d) * y * y == t.a) return Quad{*x, y};
    }
    return std::nullopt;
}

// +1 when alpha is the principal square root of alpha^2, else -1.
int principal_sign(const Quad& alpha, std::int64_t d) {
    if (alpha.b.is_zero() || d == 0) return alpha.a.sign() >= 0 ? 1 : -1;
    if (d > 0) return exact_sign(alpha.a, alpha.b, d) >= 0 ? 1 : -1;
    if (!alpha.a.is_zero()) return alpha.a.sign();
    return alpha.b.sign();
}

BigInt lcm_big(const BigInt& x, const BigInt& y) {
    BigInt r;
    mpz_lcm(r.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t());
    return r;
}

std::string render_quad(const Quad& x, std::int64_t d) {
    if (x.b.is_zero() || d == 0) return x.a.to_string();
    BigInt den = lcm_big(x.a.denominator(), x.b.denominator());
    BigInt p = x.a.numerator() * (den / x.a.denominator());
    BigInt q = x.b.numerator() * (den / x.b.denominator());
    std::ostringstream os;
    os << '(' << p.get_str() << (q < 0 ? '-' : '+') << BigInt(abs(q)).get_str() << "*sqrt(" << d << "))";
    if (den != 1) os << '/' << den.get_str();
    return os.str();
}

}  // namespace

TowerNumber::TowerNumber(const Rational& value) { u_.a = value; }

TowerNumber TowerNumber::quadratic(const Rational& a, const Rational& b, std::int64_t radicand) {
    if (radicand == 0) throw Error("radicand must be nonzero");
    auto split = square_free_split(BigInt(static_cast<long>(radicand)));
    TowerNumber r;
    if (split.core == 1) {
        r.u_.a = a + b * Rational(split.factor);
        return r;
    }
    r.d1_ = split.core;
    r.u_ = {a, b * Rational(split.factor)};
    r.canonicalize();
    return r;
}

TowerNumber TowerNumber::sqrt(const TowerNumber& x) {
    switch (x.level()) {
        case 0: {
            const Rational& c = x.u_.a;
            if (c.is_zero()) return TowerNumber();
            auto split = square_free_split(c.numerator() * c.denominator());
            Rational coeff(split.factor, c.denominator());
            if (split.core == 1) return TowerNumber(coeff);
            TowerNumber r;
            r.d1_ = split.core;
            r.u_ = {0, coeff};
            return r;
        }
        case 1: {
            TowerNumber r;
            r.d1_ = x.d1_;
            r.has_theta_ = true;
            r.theta_ = x.u_;
            r.v_ = {1, 0};
            r.canonicalize();
            return r;
        }
        default:
            throw IncompatibleTower("square root of a level-2 value exceeds the tower depth");
    }
}

int TowerNumber::level() const {
    if (has_theta_) return 2;
    if (!u_.b.is_zero()) return 1;
    return 0;
}

std::optional<Rational> TowerNumber::as_rational() const {
    if (level() != 0) return std::nullopt;
    return u_.a;
}

bool TowerNumber::is_real() const {
    switch (level()) {
        case 0: return true;
        case 1: return d1_ > 0;
        default: {
            try {
                return complex_conjugate() == *this;
            } catch (const IncompatibleTower&) {
                return false;
            }
        }
    }
}

int TowerNumber::real_sign() const {
    switch (level()) {
        case 0: return u_.a.sign();
        case 1:
            if (d1_ < 0) throw Error("sign of a nonreal value");
            return exact_sign(u_.a, u_.b, d1_);
        default: {
            if (!is_real()) throw Error("sign of a nonreal value");
            long double re = to_complex_ld().real();
            return re > 0 ? 1 : (re < 0 ? -1 : 0);
        }
    }
}

std::complex<long double> TowerNumber::to_complex_ld() const {
    std::complex<long double> base = quad_value(u_, d1_);
    if (!has_theta_) return base;
    std::complex<long double> th = quad_value(theta_, d1_);
    return base + quad_value(v_, d1_) * std::sqrt(th);
}

std::complex<double> TowerNumber::to_complex() const {
    auto z = to_complex_ld();
    return {static_cast<double>(z.real()), static_cast<double>(z.imag())};
}

TowerNumber TowerNumber::conjugate(int lvl) const {
    if (lvl < 1 || lvl > 2 || level() < lvl) {
        throw LevelAbsent("value " + to_string() + " has no radical at level " + std::to_string(lvl));
    }
    if (lvl == 2) {
        TowerNumber r = *this;
        r.v_ = qneg(v_);
        return r;
    }
    Tower t = tower();
    t.theta = qconj(theta_);
    return assemble(t, qconj(u_), qconj(v_));
}

TowerNumber TowerNumber::complex_conjugate() const {
    auto cc = [&](const Quad& q) { return d1_ < 0 ? qconj(q) : q; };
    if (!has_theta_) return assemble(tower(), cc(u_), v_);
    if (theta_.b.is_zero()) {
        Quad v = cc(v_);
        if (theta_.a.sign() < 0) v = qneg(v);
        return assemble(tower(), cc(u_), v);
    }
    if (d1_ > 0) {
        Quad v = v_;
        if (exact_sign(theta_.a, theta_.b, d1_) < 0) v = qneg(v);
        return assemble(tower(), u_, v);
    }
    // Nonreal theta: conj(sqrt(theta)) = sqrt(conj(theta)) off the branch cut.
    Tower t = tower();
    t.theta = qconj(theta_);
    return assemble(t, qconj(u_), qconj(v_));
}

std::string TowerNumber::to_string() const {
    if (!has_theta_) return render_quad(u_, d1_);
    return "(" + render_quad(u_, d1_) + " + (" + render_quad(v_, d1_) + ")*sqrt(" + render_quad(theta_, d1_) + "))";
}

bool TowerNumber::is_canonical() const {
    TowerNumber copy = *this;
    copy.canonicalize();
    return copy.d1_ == d1_ && copy.has_theta_ == has_theta_ && copy.u_ == u_ && copy.v_ == v_ &&
           copy.theta_ == theta_;
}

void TowerNumber::canonicalize() {
    if (!has_theta_ || v_.is_zero() || theta_.is_zero()) {
        has_theta_ = false;
        v_ = {};
        theta_ = {};
        if (u_.b.is_zero()) d1_ = 0;
        return;
    }

    if (d1_ == 0 || theta_.b.is_zero()) {
        // Rational theta: expand over the radicals of a biquadratic field.
        const Rational th = theta_.a;
        auto split = square_free_split(th.numerator() * th.denominator());
        const Rational scale(split.factor, th.denominator());
        const std::int64_t e = split.core;

        Rational c0 = u_.a;
        std::map<std::int64_t, Rational> coeffs;
        auto add = [&](std::int64_t radicand, const Rational& c) {
            if (c.is_zero()) return;
            if (radicand == 1) c0 += c;
            else coeffs[radicand] += c;
        };
        if (d1_ != 0) add(d1_, u_.b);
        add(e, v_.a * scale);
        if (!v_.b.is_zero()) {
            auto rp = radical_product(d1_, e);
            add(rp.core, v_.b * scale * rp.coeff);
        }
        std::erase_if(coeffs, [](const auto& kv) { return kv.second.is_zero(); });

        *this = TowerNumber(c0);
        if (coeffs.empty()) return;
        if (coeffs.size() == 1) {
            d1_ = coeffs.begin()->first;
            u_.b = coeffs.begin()->second;
            return;
        }
        auto it = coeffs.begin();
        const std::int64_t x = it->first;
        const std::int64_t y = std::next(it)->first;
        std::array<std::int64_t, 3> radicals{x, y, radical_product(x, y).core};
        for (const auto& [r, c] : coeffs) {
            if (std::find(radicals.begin(), radicals.end(), r) == radicals.end()) {
                throw IncompatibleTower("value needs more than two quadratic extensions");
            }
        }
        std::sort(radicals.begin(), radicals.end());
        auto coeff = [&](std::int64_t r) {
            auto f = coeffs.find(r);
            return f == coeffs.end() ? Rational(0) : f->second;
        };
        const auto rp = radical_product(radicals[0], radicals[1]);
        d1_ = radicals[0];
        has_theta_ = true;
        theta_ = {Rational(radicals[1]), 0};
        u_ = {c0, coeff(radicals[0])};
        v_ = {coeff(radicals[1]), coeff(radicals[2]) / rp.coeff};
        return;
    }

    // Irrational theta in Q(sqrt(d1)): strip rational square factors.
    const BigInt den = lcm_big(theta_.a.denominator(), theta_.b.denominator());
    const BigInt ia = theta_.a.numerator() * (den / theta_.a.denominator());
    const BigInt ib = theta_.b.numerator() * (den / theta_.b.denominator());
    BigInt g;
    mpz_gcd(g.get_mpz_t(), ia.get_mpz_t(), ib.get_mpz_t());
    const BigInt h = square_free_split(g).factor;
    // sqrt(theta) = (h/den) * sqrt(theta * den^2 / h^2)
    const Rational to_new(den * den, h * h);
    theta_ = qscale(theta_, to_new);
    v_ = qscale(v_, Rational(h, den));

    if (auto alpha = sqrt_in_quad(theta_, d1_)) {
        Quad root = principal_sign(*alpha, d1_) > 0 ? *alpha : qneg(*alpha);
        u_ = qadd(u_, qmul(v_, root, d1_));
        has_theta_ = false;
        canonicalize();
    }
}

TowerNumber TowerNumber::assemble(const Tower& t, QuadraticPart u, QuadraticPart v) {
    TowerNumber r;
    r.d1_ = t.d1;
    r.has_theta_ = t.has_theta;
    r.theta_ = t.theta;
    r.u_ = std::move(u);
    r.v_ = std::move(v);
    if (!r.has_theta_) r.v_ = {};
    r.canonicalize();
    return r;
}

std::pair<QuadraticPart, QuadraticPart> TowerNumber::lift(const Tower& t) const {
    const int lvl = level();
    if (lvl == 0) return {u_, {}};
    if (lvl == 1) {
        if (d1_ == t.d1) return {u_, {}};
        if (t.has_theta && t.theta.b.is_zero() && t.d1 != 0) {
            if (auto theta_core = t.theta.a.to_int64()) {
                if (d1_ == *theta_core) return {Quad{u_.a, 0}, Quad{u_.b, 0}};
                auto rp = radical_product(t.d1, *theta_core);
                if (d1_ == rp.core) return {Quad{u_.a, 0}, Quad{0, u_.b / rp.coeff}};
            }
        }
        throw IncompatibleTower("radicand " + std::to_string(d1_) + " does not embed in the tower over " +
                                std::to_string(t.d1));
    }
    if (tower() == t) return {u_, v_};
    if (t.has_theta && d1_ == t.d1 && !theta_.b.is_zero() && !t.theta.b.is_zero()) {
        // sqrt(theta) = +-alpha*sqrt(t.theta) when theta / t.theta = alpha^2.
        Quad ratio = qmul(theta_, qinv(t.theta, d1_), d1_);
        if (auto alpha = sqrt_in_quad(ratio, d1_)) {
            auto lhs = std::sqrt(quad_value(theta_, d1_));
            auto rhs = quad_value(*alpha, d1_) * std::sqrt(quad_value(t.theta, d1_));
            Quad a = std::abs(lhs - rhs) <= std::abs(lhs + rhs) ? *alpha : qneg(*alpha);
            return {u_, qmul(v_, a, d1_)};
        }
    }
    throw IncompatibleTower("towers over sqrt(" + render_quad(theta_, d1_) + ") and sqrt(" +
                            render_quad(t.theta, t.d1) + ") cannot be unified");
}

TowerNumber::Tower TowerNumber::common_tower(const TowerNumber& x, const TowerNumber& y) {
    if (x.has_theta_) {
        try {
            (void)y.lift(x.tower());
            return x.tower();
        } catch (const IncompatibleTower&) {
            if (!y.has_theta_) throw;
            (void)x.lift(y.tower());
            return y.tower();
        }
    }
    if (y.has_theta_) return y.tower();
    const std::int64_t dx = x.d1_, dy = y.d1_;
    if (dx == 0) return {dy, false, {}};
    if (dy == 0 || dx == dy) return {dx, false, {}};
    std::array<std::int64_t, 3> radicals{dx, dy, radical_product(dx, dy).core};
    std::sort(radicals.begin(), radicals.end());
    return {radicals[0], true, {Rational(radicals[1]), 0}};
}

TowerNumber operator-(const TowerNumber& a) {
    TowerNumber r = a;
    r.u_ = qneg(a.u_);
    r.v_ = qneg(a.v_);
    return r;
}

TowerNumber& TowerNumber::operator+=(const TowerNumber& o) {
    Tower t = common_tower(*this, o);
    auto [ux, vx] = lift(t);
    auto [uy, vy] = o.lift(t);
    *this = assemble(t, qadd(ux, uy), qadd(vx, vy));
    return *this;
}

TowerNumber& TowerNumber::operator-=(const TowerNumber& o) { return *this += -o; }

TowerNumber& TowerNumber::operator*=(const TowerNumber& o) {
    Tower t = common_tower(*this, o);
    auto [ux, vx] = lift(t);
    auto [uy, vy] = o.lift(t);
    const std::int64_t d = t.d1;
    Quad u = qmul(ux, uy, d);
    Quad v;
    if (t.has_theta) {
        u = qadd(u, qmul(qmul(vx, vy, d), t.theta, d));
        v = qadd(qmul(ux, vy, d), qmul(vx, uy, d));
    }
    *this = assemble(t, u, v);
    return *this;
}

TowerNumber& TowerNumber::operator/=(const TowerNumber& o) {
    if (o.is_zero()) throw DivisionByZero();
    const Tower t = o.tower();
    const std::int64_t d = t.d1;
    TowerNumber inv;
    if (!t.has_theta) {
        inv = assemble(t, qinv(o.u_, d), {});
    } else {
        // 1/(u + v sqrt(theta)) = (u - v sqrt(theta)) / (u^2 - v^2 theta)
        Quad norm = qsub(qmul(o.u_, o.u_, d), qmul(qmul(o.v_, o.v_, d), t.theta, d));
        Quad ninv = qinv(norm, d);
        inv = assemble(t, qmul(o.u_, ninv, d), qneg(qmul(o.v_, ninv, d)));
    }
    return *this *= inv;
}

bool operator==(const TowerNumber& a, const TowerNumber& b) {
    if (a.tower() == b.tower()) return a.u_ == b.u_ && a.v_ == b.v_;
    if (a.level() < 2 && b.level() < 2) return false;
    try {
        return (a - b).is_zero();
    } catch (const IncompatibleTower&) {
        return false;
    }
}

namespace {

class ExpressionParser {
public:
    explicit ExpressionParser(std::string_view text) : text_(text) {}

    TowerNumber parse() {
        TowerNumber value = expression();
        skip_space();
        if (pos_ != text_.size()) throw ParseError("trailing characters", pos_);
        return value;
    }

private:
    void skip_space() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool accept(char c) {
        skip_space();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    void expect(char c) {
        if (!accept(c)) throw ParseError(std::string("expected '") + c + "'", pos_);
    }

    TowerNumber expression() {
        TowerNumber value = term();
        for (;;) {
            if (accept('+')) value += term();
            else if (accept('-')) value -= term();
            else return value;
        }
    }

    TowerNumber term() {
        TowerNumber value = unary();
        for (;;) {
            if (accept('*')) {
                value *= unary();
            } else if (accept('/')) {
                std::size_t at = pos_;
                TowerNumber den = unary();
                if (den.is_zero()) throw ParseError("division by zero", at);
                value /= den;
            } else {
                return value;
            }
        }
    }

    TowerNumber unary() {
        if (accept('-')) return -unary();
        if (accept('+')) return unary();
        return primary();
    }

    TowerNumber primary() {
        skip_space();
        if (accept('(')) {
            TowerNumber value = expression();
            expect(')');
            return value;
        }
        if (text_.substr(pos_, 4) == "sqrt") {
            pos_ += 4;
            expect('(');
            std::size_t at = pos_;
            TowerNumber arg = expression();
            expect(')');
            try {
                return TowerNumber::sqrt(arg);
            } catch (const IncompatibleTower& e) {
                throw ParseError(e.what(), at);
            }
        }
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (start == pos_) throw ParseError("expected number", pos_);
        return TowerNumber(Rational(BigInt(std::string(text_.substr(start, pos_ - start)))));
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

}  // namespace

TowerNumber TowerNumber::parse(std::string_view text) { return ExpressionParser(text).parse(); }

}  // namespace amorph
