#include "amorph/spectral.hpp"

#include "amorph/errors.hpp"
#include "amorph/recognize.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <numeric>

namespace amorph {

namespace {

using ld = long double;
using cld = std::complex<ld>;
using RealMat = Eigen::Matrix<ld, Eigen::Dynamic, Eigen::Dynamic>;

std::size_t idx(int i) { return static_cast<std::size_t>(i); }

std::vector<long long> first_primes(std::size_t count) {
    std::vector<long long> out;
    for (long long c = 2; out.size() < count; ++c) {
        bool prime = true;
        for (long long q : out) {
            if (q * q > c) break;
            if (c % q == 0) { prime = false; break; }
        }
        if (prime) out.push_back(c);
    }
    return out;
}

Rational rational_or_throw(const TowerNumber& x, const char* what) {
    auto r = x.as_rational();
    if (!r) throw NotRational(std::string(what) + " is not rational: " + x.to_string());
    return *r;
}

std::vector<Rational> valencies_of(const Matrix<TowerNumber>& p) {
    std::vector<Rational> k;
    for (std::size_t i = 0; i < p.cols(); ++i) k.push_back(rational_or_throw(p(0, i), "valency"));
    return k;
}

Rational total(const std::vector<Rational>& k) {
    Rational n;
    for (const auto& x : k) n += x;
    return n;
}

void require_exact(const Eigenmatrix& p) {
    if (p.mode != EigenMode::Exact) throw ModeMismatch("operation needs an exact-mode eigenmatrix");
}

TowerNumber eq3_tower(const Matrix<TowerNumber>& p, const std::vector<Rational>& m, int i, int j, int l) {
    const auto k = valencies_of(p);
    const Rational n = total(k);
    TowerNumber sum;
    for (std::size_t h = 0; h < p.rows(); ++h) {
        sum += TowerNumber(m[h]) * p(h, idx(i)) * p(h, idx(j)) * p(h, idx(l)).complex_conjugate();
    }
    return sum / TowerNumber(n * k[idx(l)]);
}

Rational eq3(const Matrix<TowerNumber>& p, const std::vector<Rational>& m, int i, int j, int l) {
    return rational_or_throw(eq3_tower(p, m, i, j, l), "intersection number");
}

// Lexicographic (real desc, imag desc) comparison of rows from column 1 on.
bool row_before(const std::vector<cld>& a, const std::vector<cld>& b) {
    constexpr ld tol = 1e-9L;
    for (std::size_t c = 1; c < a.size(); ++c) {
        if (std::abs(a[c].real() - b[c].real()) > tol) return a[c].real() > b[c].real();
        if (std::abs(a[c].imag() - b[c].imag()) > tol) return a[c].imag() > b[c].imag();
    }
    return false;
}

// Rows of P read off as eigenvectors of a generic combination of the B_j.
std::vector<std::vector<cld>> numeric_rows(const AssociationScheme& s, const EigenOptions& options) {
    const int m = s.d() + 1;
    std::vector<RealMat> b;
    for (int i = 0; i < m; ++i) {
        RealMat bi(m, m);
        for (int j = 0; j < m; ++j)
            for (int l = 0; l < m; ++l) bi(j, l) = static_cast<ld>(s.p(i, j, l));
        b.push_back(std::move(bi));
    }
    const auto primes = first_primes(idx(m + options.max_retries + 1));
    const ld scale = static_cast<ld>(s.n());

    for (int attempt = 0; attempt <= options.max_retries; ++attempt) {
        RealMat mix = RealMat::Zero(m, m);
        for (int i = 1; i < m; ++i) mix += static_cast<ld>(primes[idx(i - 1 + attempt)]) * b[idx(i)];
        Eigen::EigenSolver<RealMat> solver(mix, true);
        if (solver.info() != Eigen::Success) continue;
        const auto values = solver.eigenvalues();
        const auto vectors = solver.eigenvectors();

        bool simple = true;
        ld spread = 1;
        for (int a = 0; a < m; ++a) spread = std::max(spread, std::abs(values(a)));
        for (int a = 0; a < m && simple; ++a)
            for (int c = a + 1; c < m && simple; ++c) simple = std::abs(values(a) - values(c)) > 1e-7L * spread;
        if (!simple) continue;

        std::vector<std::vector<cld>> rows;
        bool consistent = true;
        for (int a = 0; a < m && consistent; ++a) {
            const cld lead = vectors(0, a);
            if (std::abs(lead) < 1e-12L) { consistent = false; break; }
            std::vector<cld> u(idx(m));
            for (int j = 0; j < m; ++j) u[idx(j)] = vectors(j, a) / lead;
            // B_j u = u_j u for every class j
            for (int j = 1; j < m && consistent; ++j) {
                for (int r = 0; r < m && consistent; ++r) {
                    cld acc = 0;
                    for (int c = 0; c < m; ++c) acc += b[idx(j)](r, c) * u[idx(c)];
                    consistent = std::abs(acc - u[idx(j)] * u[idx(r)]) <= 1e-9L * scale * scale;
                }
            }
            rows.push_back(std::move(u));
        }
        if (!consistent) continue;

        // the valency row first, exact
        std::size_t principal = 0;
        ld best = -1;
        for (std::size_t r = 0; r < rows.size(); ++r) {
            ld dist = 0;
            for (int j = 0; j < m; ++j) dist += std::abs(rows[r][idx(j)] - static_cast<ld>(s.valency(j)));
            if (best < 0 || dist < best) { best = dist; principal = r; }
        }
        std::swap(rows[0], rows[principal]);
        for (int j = 0; j < m; ++j) rows[0][idx(j)] = static_cast<ld>(s.valency(j));
        std::sort(rows.begin() + 1, rows.end(), row_before);
        return rows;
    }
    throw EigenspaceCollision("could not split the eigenspaces after " + std::to_string(options.max_retries) +
                              " retries");
}

std::vector<long long> round_multiplicities(const std::vector<double>& m, long long n) {
    std::vector<long long> out;
    long long sum = 0;
    for (std::size_t j = 0; j < m.size(); ++j) {
        const double r = std::round(m[j]);
        if (!(r >= 1) || std::abs(m[j] - r) > 1e-6) {
            throw MultiplicityNotIntegral("multiplicity of row " + std::to_string(j) + " is " + std::to_string(m[j]));
        }
        out.push_back(static_cast<long long>(r));
        sum += out.back();
    }
    if (sum != n) throw MultiplicityNotIntegral("multiplicities sum to " + std::to_string(sum) + ", not n");
    return out;
}

std::optional<Matrix<TowerNumber>> recognize_rows(const AssociationScheme& s, const Matrix<std::complex<double>>& p,
                                                  const std::vector<long long>& mult) {
    const int m = s.d() + 1;
    const long long n = s.n();
    std::vector<std::int64_t> candidates = {n, -n};
    for (int a = 1; a < m; ++a) {
        for (int c = 1; c < m; ++c) {
            const long long v = n * s.valency(a) * mult[idx(c)];
            candidates.push_back(v);
            candidates.push_back(-v);
        }
    }
    std::sort(candidates.begin(), candidates.end());
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());

    RecognizeOptions opts;
    opts.max_denominator = 2;  // eigenvalues are algebraic integers
    opts.max_numerator = 2 * n + 2;

    Matrix<TowerNumber> exact(idx(m), idx(m));
    for (int j = 0; j < m; ++j) exact(0, idx(j)) = TowerNumber(s.valency(j));
    for (int h = 1; h < m; ++h) {
        exact(idx(h), 0) = TowerNumber(1);
        for (int j = 1; j < m; ++j) {
            std::optional<TowerNumber> v;
            try {
                v = recognize(p(idx(h), idx(j)), candidates, opts);
            } catch (const AmbiguousMatch&) {
                return std::nullopt;
            }
            if (!v) return std::nullopt;
            exact(idx(h), idx(j)) = *v;
        }
    }
    return exact;
}

}  // namespace

std::string to_string(EigenMode mode) { return mode == EigenMode::Exact ? "exact" : "numeric"; }

long long Eigenmatrix::n() const {
    double sum = 0;
    for (int j = 0; j < size(); ++j) sum += value(0, j).real();
    return std::llround(sum);
}

IntersectionMatrix intersection_matrix(const AssociationScheme& s, int i) {
    if (!s.commutative()) throw NonCommutative("intersection matrices need a commutative scheme");
    if (i < 0 || i > s.d()) throw OutOfRange("class index " + std::to_string(i) + " out of range");
    const auto m = idx(s.d() + 1);
    IntersectionMatrix out{i, Matrix<long long>(m, m)};
    for (int j = 0; j <= s.d(); ++j)
        for (int l = 0; l <= s.d(); ++l) out.entries(idx(j), idx(l)) = s.p(i, j, l);
    return out;
}

Eigenmatrix make_exact_eigenmatrix(Matrix<TowerNumber> p) {
    Eigenmatrix out;
    out.mode = EigenMode::Exact;
    out.numeric = Matrix<std::complex<double>>(p.rows(), p.cols());
    for (std::size_t i = 0; i < p.rows(); ++i)
        for (std::size_t j = 0; j < p.cols(); ++j) out.numeric(i, j) = p(i, j).to_complex();
    for (const auto& m : multiplicities_from_P(p)) {
        auto v = m.to_int64();
        if (!v || *v <= 0) throw MultiplicityNotIntegral("multiplicity " + m.to_string() + " is not a positive integer");
        out.multiplicities.push_back(*v);
    }
    out.exact = std::move(p);
    return out;
}

Eigenmatrix eigenmatrix(const AssociationScheme& s, const EigenOptions& options) {
    if (!s.commutative()) throw NonCommutative("eigenmatrix needs a commutative scheme");
    const auto rows = numeric_rows(s, options);
    const int m = s.d() + 1;

    Eigenmatrix out;
    out.mode = EigenMode::Numeric;
    out.numeric = Matrix<std::complex<double>>(idx(m), idx(m));
    for (int h = 0; h < m; ++h)
        for (int j = 0; j < m; ++j) {
            const cld v = rows[idx(h)][idx(j)];
            out.numeric(idx(h), idx(j)) = {static_cast<double>(v.real()), static_cast<double>(v.imag())};
        }
    out.multiplicities = round_multiplicities(multiplicities_numeric(out), s.n());

    auto exact = recognize_rows(s, out.numeric, out.multiplicities);
    if (!exact) return out;
    try {
        Eigenmatrix candidate = make_exact_eigenmatrix(std::move(*exact));
        if (candidate.multiplicities != out.multiplicities) return out;
        if (!verify_orthogonality(candidate).ok) return out;
        return candidate;
    } catch (const Error&) {
        return out;
    }
}

std::vector<Rational> multiplicities_from_P(const Matrix<TowerNumber>& p) {
    const auto k = valencies_of(p);
    const Rational n = total(k);
    std::vector<Rational> out;
    for (std::size_t j = 0; j < p.rows(); ++j) {
        TowerNumber sum;
        for (std::size_t i = 0; i < p.cols(); ++i) {
            if (k[i].is_zero()) throw ZeroDenominator("valency " + std::to_string(i) + " is zero");
            sum += p(j, i) * p(j, i).complex_conjugate() / TowerNumber(k[i]);
        }
        const Rational denom = rational_or_throw(sum, "multiplicity denominator");
        if (denom.is_zero()) throw ZeroDenominator("row " + std::to_string(j) + " has zero norm");
        out.push_back(n / denom);
    }
    return out;
}

std::vector<Rational> multiplicities_from_P(const Eigenmatrix& p) {
    require_exact(p);
    return multiplicities_from_P(p.exact);
}

std::vector<double> multiplicities_numeric(const Eigenmatrix& p) {
    const double n = static_cast<double>(p.n());
    std::vector<double> out;
    for (int j = 0; j < p.size(); ++j) {
        double sum = 0;
        for (int i = 0; i < p.size(); ++i) sum += std::norm(p.value(j, i)) / p.value(0, i).real();
        if (sum == 0) throw ZeroDenominator("row " + std::to_string(j) + " has zero norm");
        out.push_back(n / sum);
    }
    return out;
}

Rational p_from_eigenmatrix(const Matrix<TowerNumber>& p, int i, int j, int l) {
    return eq3(p, multiplicities_from_P(p), i, j, l);
}

TowerNumber p_from_eigenmatrix_tower(const Matrix<TowerNumber>& p, int i, int j, int l) {
    return eq3_tower(p, multiplicities_from_P(p), i, j, l);
}

Rational p_from_eigenmatrix(const Eigenmatrix& p, int i, int j, int l) {
    require_exact(p);
    std::vector<Rational> m(p.multiplicities.begin(), p.multiplicities.end());
    return eq3(p.exact, m, i, j, l);
}

std::complex<double> p_from_eigenmatrix_numeric(const Eigenmatrix& p, int i, int j, int l) {
    std::complex<double> sum = 0;
    for (int h = 0; h < p.size(); ++h) {
        sum += static_cast<double>(p.multiplicities[idx(h)]) * p.value(h, i) * p.value(h, j) * std::conj(p.value(h, l));
    }
    return sum / (static_cast<double>(p.n()) * p.value(0, l).real());
}

OrthogonalityReport verify_orthogonality(const Eigenmatrix& p, double tol) {
    OrthogonalityReport report;
    const int m = p.size();
    const long long n = p.n();
    using Rel = OrthogonalityViolation::Relation;
    auto record = [&](Rel rel, int i, int j, double err) {
        report.ok = false;
        report.violations.push_back({rel, i, j, err});
    };

    if (p.mode == EigenMode::Exact) {
        Matrix<TowerNumber> conj(idx(m), idx(m));
        for (int h = 0; h < m; ++h)
            for (int j = 0; j < m; ++j) conj(idx(h), idx(j)) = p.exact(idx(h), idx(j)).complex_conjugate();
        for (int i = 0; i < m; ++i) {
            for (int j = 0; j < m; ++j) {
                TowerNumber row, col;
                for (int l = 0; l < m; ++l) {
                    row += p.exact(idx(i), idx(l)) * conj(idx(j), idx(l)) / p.exact(0, idx(l));
                    col += TowerNumber(p.multiplicities[idx(l)]) * p.exact(idx(l), idx(i)) * conj(idx(l), idx(j));
                }
                const TowerNumber row_rhs = i == j ? TowerNumber(Rational(n, p.multiplicities[idx(i)])) : TowerNumber(0);
                const TowerNumber col_rhs = i == j ? TowerNumber(p.exact(0, idx(i)) * TowerNumber(n)) : TowerNumber(0);
                if (!(row == row_rhs)) record(Rel::Row, i, j, std::abs((row - row_rhs).to_complex()));
                if (!(col == col_rhs)) record(Rel::Column, i, j, std::abs((col - col_rhs).to_complex()));
            }
        }
        return report;
    }

    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < m; ++j) {
            std::complex<double> row = 0, col = 0;
            for (int l = 0; l < m; ++l) {
                row += p.value(i, l) * std::conj(p.value(j, l)) / p.value(0, l).real();
                col += static_cast<double>(p.multiplicities[idx(l)]) * p.value(l, i) * std::conj(p.value(l, j));
            }
            const double row_rhs = i == j ? static_cast<double>(n) / static_cast<double>(p.multiplicities[idx(i)]) : 0;
            const double col_rhs = i == j ? static_cast<double>(n) * p.value(0, i).real() : 0;
            // relative to the size of the right-hand side of the diagonal
            const double row_err = std::abs(row - row_rhs), col_err = std::abs(col - col_rhs);
            if (row_err > tol * std::max(1.0, static_cast<double>(n))) record(Rel::Row, i, j, row_err);
            if (col_err > tol * std::max(1.0, static_cast<double>(n * n))) record(Rel::Column, i, j, col_err);
        }
    }
    return report;
}

ConjugationReport verify_conjugation_structure(const Eigenmatrix& p, const std::vector<int>& pairing, double tol) {
    ConjugationReport report;
    const int m = p.size();
    for (int i = 0; i < m; ++i) {
        const int ip = pairing[idx(i)];
        bool conjugate = true;
        bool has_nonreal = false;
        for (int h = 0; h < m; ++h) {
            if (p.mode == EigenMode::Exact) {
                const auto& x = p.exact(idx(h), idx(i));
                conjugate = conjugate && x == p.exact(idx(h), idx(ip)).complex_conjugate();
                has_nonreal = has_nonreal || !x.is_real();
            } else {
                const auto x = p.value(h, i);
                conjugate = conjugate && std::abs(x - std::conj(p.value(h, ip))) <= tol;
                has_nonreal = has_nonreal || std::abs(x.imag()) > tol;
            }
        }
        if (!conjugate) report.unconjugate_columns.push_back(i);
        if (ip != i && !has_nonreal) report.real_columns.push_back(i);
    }
    report.ok = report.unconjugate_columns.empty() && report.real_columns.empty();
    return report;
}

}  // namespace amorph
