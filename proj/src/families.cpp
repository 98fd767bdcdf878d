#include "amorph/families.hpp"

#include "amorph/errors.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace amorph {

namespace {

struct IrreduciblePoly {
    int p;
    int degree;
    std::vector<int> low;  // x^degree + sum low[i] x^i
};

const std::map<int, IrreduciblePoly>& poly_table() {
    static const std::map<int, IrreduciblePoly> table = {
        {4, {2, 2, {1, 1}}},     {8, {2, 3, {1, 1, 0}}},  {16, {2, 4, {1, 1, 0, 0}}},
        {9, {3, 2, {1, 0}}},     {27, {3, 3, {1, 2, 0}}}, {25, {5, 2, {2, 0}}},
    };
    return table;
}

std::vector<int> digits(int a, int p, int degree) {
    std::vector<int> out(static_cast<std::size_t>(degree));
    for (int i = 0; i < degree; ++i) {
        out[static_cast<std::size_t>(i)] = a % p;
        a /= p;
    }
    return out;
}

int encode(const std::vector<int>& ds, int p) {
    int a = 0;
    for (auto it = ds.rbegin(); it != ds.rend(); ++it) a = a * p + *it;
    return a;
}

}  // namespace

bool is_prime(long long n) {
    if (n < 2) return false;
    for (long long f = 2; f * f <= n; ++f) {
        if (n % f == 0) return false;
    }
    return true;
}

FiniteField::FiniteField(int q) : q_(q), p_(q), degree_(1) {
    if (q < 2) throw UnsupportedField("field order must be at least 2");
    if (is_prime(q)) {
        if (q > 65536) throw UnsupportedField("prime field order above 2^16");
    } else {
        auto it = poly_table().find(q);
        if (it == poly_table().end()) throw UnsupportedField("no built-in field of order " + std::to_string(q));
        const auto& poly = it->second;
        p_ = poly.p;
        degree_ = poly.degree;
        const auto uq = static_cast<std::size_t>(q);
        add_table_.resize(uq * uq);
        mul_table_.resize(uq * uq);
        for (int a = 0; a < q; ++a) {
            auto da = digits(a, p_, degree_);
            for (int b = 0; b < q; ++b) {
                auto db = digits(b, p_, degree_);
                std::vector<int> sum(static_cast<std::size_t>(degree_));
                for (int i = 0; i < degree_; ++i) {
                    sum[static_cast<std::size_t>(i)] = (da[static_cast<std::size_t>(i)] + db[static_cast<std::size_t>(i)]) % p_;
                }
                add_table_[static_cast<std::size_t>(a) * uq + static_cast<std::size_t>(b)] = encode(sum, p_);

                std::vector<int> prod(static_cast<std::size_t>(2 * degree_), 0);
                for (int i = 0; i < degree_; ++i) {
                    for (int j = 0; j < degree_; ++j) {
                        auto& slot = prod[static_cast<std::size_t>(i + j)];
                        slot = (slot + da[static_cast<std::size_t>(i)] * db[static_cast<std::size_t>(j)]) % p_;
                    }
                }
                // reduce by x^degree = -sum low[i] x^i
                for (int k = 2 * degree_ - 1; k >= degree_; --k) {
                    int c = prod[static_cast<std::size_t>(k)];
                    if (c == 0) continue;
                    prod[static_cast<std::size_t>(k)] = 0;
                    for (int i = 0; i < degree_; ++i) {
                        auto& slot = prod[static_cast<std::size_t>(k - degree_ + i)];
                        slot = ((slot - c * poly.low[static_cast<std::size_t>(i)]) % p_ + p_) % p_;
                    }
                }
                prod.resize(static_cast<std::size_t>(degree_));
                mul_table_[static_cast<std::size_t>(a) * uq + static_cast<std::size_t>(b)] = encode(prod, p_);
            }
        }
    }
    if (degree_ > 1) neg_.resize(static_cast<std::size_t>(q));
    for (int a = 0; a < q && degree_ > 1; ++a) {
        for (int b = 0; b < q; ++b) {
            if (add(a, b) == 0) {
                neg_[static_cast<std::size_t>(a)] = b;
                break;
            }
        }
    }
    log_.assign(static_cast<std::size_t>(q), -1);
    for (int g = 1; g < q && generator_ == 0; ++g) {
        std::fill(log_.begin(), log_.end(), -1);
        int x = 1;
        bool primitive = true;
        for (int e = 0; e < q - 1; ++e) {
            if (log_[static_cast<std::size_t>(x)] != -1) {
                primitive = false;
                break;
            }
            log_[static_cast<std::size_t>(x)] = e;
            x = mul(x, g);
        }
        if (primitive && x == 1) generator_ = g;
    }
    if (generator_ == 0 && q > 2) throw UnsupportedField("no primitive element found; table polynomial is reducible");
    if (q == 2) {
        generator_ = 1;
        log_[1] = 0;
    }
}

int FiniteField::add(int a, int b) const {
    if (degree_ == 1) return (a + b) % q_;
    return add_table_[static_cast<std::size_t>(a) * static_cast<std::size_t>(q_) + static_cast<std::size_t>(b)];
}

int FiniteField::sub(int a, int b) const { return add(a, neg_.empty() ? (q_ - b) % q_ : neg_[static_cast<std::size_t>(b)]); }

int FiniteField::mul(int a, int b) const {
    if (degree_ == 1) return static_cast<int>(static_cast<long long>(a) * b % q_);
    return mul_table_[static_cast<std::size_t>(a) * static_cast<std::size_t>(q_) + static_cast<std::size_t>(b)];
}

int FiniteField::log(int a) const {
    if (a <= 0 || a >= q_) throw OutOfRange("discrete log of zero or out-of-range element");
    return log_[static_cast<std::size_t>(a)];
}

AssociationScheme cyclotomic_scheme(const FiniteField& field, int e) {
    const int q = field.q();
    if (e < 1 || (q - 1) % e != 0) {
        throw IndexDoesNotDivide("index " + std::to_string(e) + " does not divide q-1 = " + std::to_string(q - 1));
    }
    if (q > kMaxPoints) throw TooLarge("cyclotomic scheme on " + std::to_string(q) + " points");
    std::vector<int> colors(static_cast<std::size_t>(q) * static_cast<std::size_t>(q), 0);
    for (int x = 0; x < q; ++x) {
        for (int y = 0; y < q; ++y) {
            if (x != y) colors[static_cast<std::size_t>(x) * q + y] = 1 + field.log(field.sub(y, x)) % e;
        }
    }
    return build_scheme(ColorMatrix(q, e, std::move(colors)));
}

AssociationScheme paley(int p) {
    if (p < 3 || !is_prime(p)) throw NotOddPrime(std::to_string(p) + " is not an odd prime");
    return cyclotomic_scheme(FiniteField(p), 2);
}

ColorMatrix abelian_group_colors(const std::vector<int>& orders) {
    if (orders.empty()) throw OutOfRange("group needs at least one cyclic factor");
    long long size = 1;
    for (int o : orders) {
        if (o < 2) throw OutOfRange("cyclic factor orders must be at least 2");
        size *= o;
        if (size > 4096) throw TooLarge("group order exceeds 4096");
    }
    const int n = static_cast<int>(size);
    // mixed radix, first factor least significant
    auto diff_index = [&](int x, int y) {
        int idx = 0, radix = 1;
        for (int o : orders) {
            int dx = x % o, dy = y % o;
            x /= o;
            y /= o;
            idx += ((dy - dx) % o + o) % o * radix;
            radix *= o;
        }
        return idx;
    };
    std::vector<int> colors(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
    for (int x = 0; x < n; ++x) {
        for (int y = 0; y < n; ++y) colors[static_cast<std::size_t>(x) * n + y] = diff_index(x, y);
    }
    return ColorMatrix(n, n - 1, std::move(colors));
}

AssociationScheme abelian_group_scheme(const std::vector<int>& orders) { return build_scheme(abelian_group_colors(orders)); }

LatinSquare cyclic_latin_square(int v) {
    if (v < 1) throw OutOfRange("Latin square order must be positive");
    LatinSquare sq(static_cast<std::size_t>(v), std::vector<int>(static_cast<std::size_t>(v)));
    for (int r = 0; r < v; ++r) {
        for (int c = 0; c < v; ++c) sq[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = (r + c) % v;
    }
    return sq;
}

AssociationScheme latin_net_scheme(const LatinSquare& square) {
    const int v = static_cast<int>(square.size());
    for (const auto& row : square) {
        if (static_cast<int>(row.size()) != v) throw NotLatin("Latin square must be square");
    }
    auto check_line = [&](auto&& at, const std::string& what, int idx) {
        std::vector<bool> seen(static_cast<std::size_t>(v), false);
        for (int j = 0; j < v; ++j) {
            int s = at(j);
            if (s < 0 || s >= v || seen[static_cast<std::size_t>(s)]) {
                throw NotLatin(what + " " + std::to_string(idx) + " repeats or misses a symbol");
            }
            seen[static_cast<std::size_t>(s)] = true;
        }
    };
    for (int i = 0; i < v; ++i) {
        check_line([&](int j) { return square[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]; }, "row", i);
        check_line([&](int j) { return square[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)]; }, "column", i);
    }
    if (v < 3) throw OrderTooSmall("Latin net schemes need order at least 3");

    const int n = v * v;
    std::vector<int> colors(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
    for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b) {
            int ra = a / v, ca = a % v, rb = b / v, cb = b % v;
            int color = 4;
            if (a == b) color = 0;
            else if (ra == rb) color = 1;
            else if (ca == cb) color = 2;
            else if (square[static_cast<std::size_t>(ra)][static_cast<std::size_t>(ca)] ==
                     square[static_cast<std::size_t>(rb)][static_cast<std::size_t>(cb)]) color = 3;
            colors[static_cast<std::size_t>(a) * n + b] = color;
        }
    }
    return build_scheme(ColorMatrix(n, 4, std::move(colors)));
}

}  // namespace amorph
