#include "amorph/srg.hpp"

#include "amorph/errors.hpp"

#include <array>

namespace amorph {

namespace {

std::optional<long long> integer_of(const TowerNumber& x) {
    auto r = x.as_rational();
    if (!r) return std::nullopt;
    return r->to_int64();
}

// (n, k, lambda, mu) by the displayed L / NL formulas
std::array<long long, 4> type_parameters(const SrgTag& tag) {
    const long long g = tag.g, v = tag.v;
    if (tag.kind == SrgKind::LatinSquare) return {v * v, g * (v - 1), (g - 1) * (g - 2) + v - 2, g * (g - 1)};
    return {v * v, g * (v + 1), (g + 1) * (g + 2) - v - 2, g * (g + 1)};
}

SrgParams params_or_infeasible(long long n, long long k, long long lambda, long long mu, const std::string& what) {
    if (lambda < 0 || mu < 0 || k < 1 || k > n - 2) {
        throw InfeasibleParameters(what + " gives (" + std::to_string(n) + "," + std::to_string(k) + "," +
                                   std::to_string(lambda) + "," + std::to_string(mu) + ")");
    }
    try {
        return make_srg_params(n, k, lambda, mu);
    } catch (const InconsistentSrg& e) {
        throw InfeasibleParameters(what + ": " + e.what());
    }
}

}  // namespace

SrgTag latin_tag(long long g, long long v) { return {SrgKind::LatinSquare, g, v, 0, {}}; }
SrgTag negative_latin_tag(long long g, long long v) { return {SrgKind::NegativeLatinSquare, g, v, 0, {}}; }

std::string SrgTag::to_string() const {
    switch (kind) {
        case SrgKind::LatinSquare:
            return "L_" + std::to_string(g) + "(" + std::to_string(v) + ")";
        case SrgKind::NegativeLatinSquare:
            return "NL_" + std::to_string(g) + "(" + std::to_string(v) + ")";
        case SrgKind::Conference: {
            std::string out = "Conference(" + std::to_string(n) + ")";
            for (const auto& a : aliases) out += " = " + a.to_string();
            return out;
        }
        case SrgKind::Other:
            break;
    }
    return "Other";
}

std::string SrgParams::to_string() const {
    return "(" + std::to_string(n) + "," + std::to_string(k) + "," + std::to_string(lambda) + "," + std::to_string(mu) +
           ") r=" + r.to_string() + " s=" + s.to_string() + " m1=" + std::to_string(m1) + " m2=" + std::to_string(m2) +
           " " + tag.to_string();
}

SrgParams make_srg_params(long long n, long long k, long long lambda, long long mu) {
    const std::string label = "(" + std::to_string(n) + "," + std::to_string(k) + "," + std::to_string(lambda) + "," +
                              std::to_string(mu) + ")";
    if (n < 3 || k < 1 || k > n - 2 || lambda < 0 || mu < 0 || lambda > k - 1 || mu > k) {
        throw InconsistentSrg(label + " is out of range for a non-trivial strongly regular graph");
    }
    if (k * (k - lambda - 1) != (n - k - 1) * mu) throw InconsistentSrg(label + " fails k(k-lambda-1) = (n-k-1)mu");

    SrgParams p;
    p.n = n;
    p.k = k;
    p.lambda = lambda;
    p.mu = mu;
    const Rational half(1, 2);
    const TowerNumber root = TowerNumber::sqrt(TowerNumber((lambda - mu) * (lambda - mu) + 4 * (k - mu)));
    p.r = (TowerNumber(lambda - mu) + root) * TowerNumber(half);
    p.s = (TowerNumber(lambda - mu) - root) * TowerNumber(half);
    p.t = -p.r - TowerNumber(1);
    p.u = -p.s - TowerNumber(1);
    if (p.r.real_sign() < 0 || p.s.real_sign() >= 0) throw InconsistentSrg(label + " has no eigenvalues r >= 0 > s");

    const auto m1 = integer_of((TowerNumber(n - 1) * (-p.s) - TowerNumber(k)) / (p.r - p.s));
    if (!m1 || *m1 < 1 || *m1 > n - 2) throw InconsistentSrg(label + " has non-integral multiplicities");
    p.m1 = *m1;
    p.m2 = n - 1 - p.m1;
    p.tag = classify(p);
    return p;
}

SrgParams srg_from_graph(const std::vector<std::vector<int>>& adj) {
    const int n = static_cast<int>(adj.size());
    for (int x = 0; x < n; ++x) {
        if (static_cast<int>(adj[static_cast<std::size_t>(x)].size()) != n) {
            throw NotStronglyRegular("adjacency matrix is not square", x, x);
        }
    }
    auto a = [&](int x, int y) { return adj[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)]; };
    std::vector<long long> degree(static_cast<std::size_t>(n), 0);
    for (int x = 0; x < n; ++x) {
        if (a(x, x) != 0) throw NotStronglyRegular("loop at vertex " + std::to_string(x), x, x);
        for (int y = 0; y < n; ++y) {
            if (a(x, y) != 0 && a(x, y) != 1) throw NotStronglyRegular("entries must be 0 or 1", x, y);
            if (a(x, y) != a(y, x)) throw NotStronglyRegular("adjacency is not symmetric", x, y);
            degree[static_cast<std::size_t>(x)] += a(x, y);
        }
        if (degree[static_cast<std::size_t>(x)] != degree[0]) {
            throw NotStronglyRegular("vertex " + std::to_string(x) + " has a different degree from vertex 0", x, x);
        }
    }
    long long lambda = -1, mu = -1;
    for (int x = 0; x < n; ++x) {
        for (int y = x + 1; y < n; ++y) {
            long long common = 0;
            for (int z = 0; z < n; ++z) common += a(x, z) * a(y, z);
            long long& slot = a(x, y) ? lambda : mu;
            if (slot == -1) slot = common;
            if (slot != common) {
                throw NotStronglyRegular(std::string(a(x, y) ? "lambda" : "mu") + " is not constant at pair (" +
                                             std::to_string(x) + "," + std::to_string(y) + ")",
                                         x, y);
            }
        }
    }
    if (lambda == -1 || mu == -1) throw NotStronglyRegular("complete and edgeless graphs are excluded", 0, 0);
    try {
        return make_srg_params(n, degree[0], lambda, mu);
    } catch (const InconsistentSrg& e) {
        throw NotStronglyRegular(e.what(), 0, 0);
    }
}

SrgTag classify(const SrgParams& p) {
    if (p.m1 == p.m2) {
        SrgTag tag{SrgKind::Conference, 0, 0, p.n, {}};
        // the odd-v coincidence of L_{(v+1)/2}(v) and NL_{(v-1)/2}(v)
        for (long long v = 3; v * v <= p.n; v += 2) {
            if (v * v != p.n) continue;
            for (const auto& alias : {latin_tag((v + 1) / 2, v), negative_latin_tag((v - 1) / 2, v)}) {
                if (type_parameters(alias) == std::array<long long, 4>{p.n, p.k, p.lambda, p.mu}) {
                    tag.aliases.push_back(alias);
                }
            }
        }
        return tag;
    }
    const auto r = integer_of(p.r), s = integer_of(p.s);
    if (r && s) {
        if (p.k == p.m1) return latin_tag(-*s, *r - *s);
        if (p.k == p.m2) return negative_latin_tag(*r, *r - *s);
    }
    return {};
}

SrgParams params_from_type(const SrgTag& tag) {
    const long long g = tag.g, v = tag.v;
    if (tag.kind != SrgKind::LatinSquare && tag.kind != SrgKind::NegativeLatinSquare) {
        throw OutOfRange("only Latin and negative Latin square types have parameter formulas");
    }
    if (g < 1 || v < 2) throw InfeasibleParameters(tag.to_string() + " needs g >= 1 and v >= 2");
    const auto [n, k, lambda, mu] = type_parameters(tag);
    return params_or_infeasible(n, k, lambda, mu, tag.to_string());
}

SrgParams complement(const SrgParams& p) {
    return make_srg_params(p.n, p.n - p.k - 1, p.n - 2 * p.k + p.mu - 2, p.n - 2 * p.k + p.lambda);
}

Eigenmatrix srg_scheme_eigenmatrix(const SrgParams& p) {
    Eigenmatrix e;
    e.mode = EigenMode::Exact;
    e.exact = Matrix<TowerNumber>{{1, p.k, p.n - p.k - 1}, {1, p.r, p.t}, {1, p.s, p.u}};
    e.numeric = Matrix<std::complex<double>>(3, 3);
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) e.numeric(i, j) = e.exact(i, j).to_complex();
    e.multiplicities = {1, p.m1, p.m2};
    return e;
}

}  // namespace amorph
