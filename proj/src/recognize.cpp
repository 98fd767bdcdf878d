#include "amorph/recognize.hpp"

#include "amorph/errors.hpp"

#include <cmath>
#include <set>
#include <vector>

namespace amorph {

namespace {

void add_match(std::vector<TowerNumber>& matches, TowerNumber value) {
    for (const auto& m : matches) {
        if (m == value) return;
    }
    matches.push_back(std::move(value));
}

}  // namespace

std::optional<TowerNumber> recognize(std::complex<double> x, std::span<const std::int64_t> candidates,
                                     const RecognizeOptions& options) {
    if (!(options.tol > 0)) throw OutOfRange("recognize tolerance must be positive");
    const double tol = options.tol;
    const double re = x.real(), im = x.imag();
    const std::int64_t max_num = options.max_numerator;
    const std::int64_t max_den = options.max_denominator;
    std::vector<TowerNumber> matches;

    auto within = [&](double vr, double vi) { return std::hypot(vr - re, vi - im) <= tol; };

    if (std::abs(im) <= tol) {
        for (std::int64_t den = 1; den <= max_den; ++den) {
            double p = std::round(re * static_cast<double>(den));
            if (std::abs(p) > static_cast<double>(max_num)) continue;
            if (within(p / static_cast<double>(den), 0.0)) {
                add_match(matches, TowerNumber(Rational(static_cast<long long>(p), den)));
            }
        }
    }

    std::set<std::int64_t> radicands;
    for (std::int64_t c : candidates) {
        if (c == 0) continue;
        auto split = square_free_split(BigInt(static_cast<long>(c)));
        if (split.core != 1) radicands.insert(split.core);
    }

    for (std::int64_t d : radicands) {
        const double root = std::sqrt(static_cast<double>(d < 0 ? -d : d));
        for (std::int64_t den = 1; den <= max_den; ++den) {
            const double fden = static_cast<double>(den);
            if (d < 0) {
                double p = std::round(re * fden);
                double q = std::round(im * fden / root);
                if (q == 0 || std::abs(p) > static_cast<double>(max_num) || std::abs(q) > static_cast<double>(max_num)) {
                    continue;
                }
                if (within(p / fden, q * root / fden)) {
                    add_match(matches, TowerNumber::quadratic(Rational(static_cast<long long>(p), den),
                                                              Rational(static_cast<long long>(q), den), d));
                }
                continue;
            }
            if (std::abs(im) > tol) break;
            for (std::int64_t q = -max_num; q <= max_num; ++q) {
                if (q == 0) continue;
                double p = std::round(re * fden - static_cast<double>(q) * root);
                if (std::abs(p) > static_cast<double>(max_num)) continue;
                if (within((p + static_cast<double>(q) * root) / fden, 0.0)) {
                    add_match(matches, TowerNumber::quadratic(Rational(static_cast<long long>(p), den),
                                                              Rational(q, den), d));
                }
            }
        }
    }

    if (matches.empty()) return std::nullopt;
    if (matches.size() > 1) {
        throw AmbiguousMatch("values " + matches[0].to_string() + " and " + matches[1].to_string() +
                             " both lie within tolerance");
    }
    auto back = matches.front().to_complex_ld();
    long double err = std::hypot(back.real() - static_cast<long double>(re), back.imag() - static_cast<long double>(im));
    if (err > static_cast<long double>(tol) / 10) return std::nullopt;
    return matches.front();
}

}  // namespace amorph
