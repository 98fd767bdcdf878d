#pragma once

#include "amorph/matrix.hpp"
#include "amorph/rational.hpp"
#include "amorph/scheme.hpp"
#include "amorph/tower.hpp"

#include <complex>
#include <string>
#include <vector>

namespace amorph {

// B_i with entry (j, l) = p^l_{ij}.
struct IntersectionMatrix {
    int i = 0;
    Matrix<long long> entries;
};

// Throws NonCommutative for non-commutative schemes and OutOfRange for a bad i.
IntersectionMatrix intersection_matrix(const AssociationScheme& s, int i);

enum class EigenMode { Exact, Numeric };
std::string to_string(EigenMode mode);

// P with P_{0i} = k_i and P_{i0} = 1. `numeric` is always populated; `exact`
// only in exact mode.
struct Eigenmatrix {
    EigenMode mode = EigenMode::Exact;
    Matrix<TowerNumber> exact;
    Matrix<std::complex<double>> numeric;
    std::vector<long long> multiplicities;

    int size() const { return static_cast<int>(numeric.rows()); }
    long long n() const;
    std::complex<double> value(int i, int j) const { return numeric(static_cast<std::size_t>(i), static_cast<std::size_t>(j)); }
};

// Wraps an exact matrix, computing multiplicities from the entries. Throws
// MultiplicityNotIntegral when they are not positive integers.
Eigenmatrix make_exact_eigenmatrix(Matrix<TowerNumber> p);

struct EigenOptions {
    int max_retries = 8;
    double tol = 1e-8;
};

// Rows after row 0 are sorted by the column-1 entry (real part, then imaginary
// part) descending, later columns breaking ties. Exact mode when every entry is
// recognized at tower level <= 1 and the result reproduces the intersection
// numbers exactly; numeric mode otherwise.
Eigenmatrix eigenmatrix(const AssociationScheme& s, const EigenOptions& options = {});

// m_j = n / sum_i |P_ji|^2 / k_i, exactly. Throws ZeroDenominator.
std::vector<Rational> multiplicities_from_P(const Matrix<TowerNumber>& p);
// Exact mode only (ModeMismatch otherwise).
std::vector<Rational> multiplicities_from_P(const Eigenmatrix& p);
std::vector<double> multiplicities_numeric(const Eigenmatrix& p);

// p^l_{ij} = (1/(n k_l)) sum_h m_h P_hi P_hj conj(P_hl), with m from the entries.
Rational p_from_eigenmatrix(const Matrix<TowerNumber>& p, int i, int j, int l);
// Same sum without requiring a rational result; for hypothetical matrices.
TowerNumber p_from_eigenmatrix_tower(const Matrix<TowerNumber>& p, int i, int j, int l);
// Exact mode only, using the stored multiplicities.
Rational p_from_eigenmatrix(const Eigenmatrix& p, int i, int j, int l);
std::complex<double> p_from_eigenmatrix_numeric(const Eigenmatrix& p, int i, int j, int l);

struct OrthogonalityViolation {
    enum class Relation { Row, Column } relation;
    int i = 0;
    int j = 0;
    double error = 0;  // |lhs - rhs| evaluated numerically
};

struct OrthogonalityReport {
    bool ok = true;
    std::vector<OrthogonalityViolation> violations;
};

// Row relation:    sum_l P_il conj(P_jl) / k_l = delta_ij n / m_i
// Column relation: sum_h m_h P_hi conj(P_hj)  = delta_ij n k_i
// Exact in exact mode, within tol otherwise.
OrthogonalityReport verify_orthogonality(const Eigenmatrix& p, double tol = 1e-8);

struct ConjugationReport {
    bool ok = true;
    std::vector<int> unconjugate_columns;  // class i whose column is not conj(column i')
    std::vector<int> real_columns;         // non-self-paired class with an all-real column
};

// Columns of paired classes are entrywise conjugate and every non-self-paired
// column has a nonreal entry.
ConjugationReport verify_conjugation_structure(const Eigenmatrix& p, const std::vector<int>& pairing,
                                               double tol = 1e-8);

}  // namespace amorph
