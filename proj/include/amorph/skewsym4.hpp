#pragma once

#include "amorph/fusion.hpp"
#include "amorph/srg.hpp"

#include <complex>
#include <optional>
#include <string>
#include <vector>

namespace amorph {

// A skew-symmetric 4-class scheme whose symmetrization is the given strongly
// regular graph (class 1 merged with 4, 2 with 3; k1 = k, k2 = n - k - 1) has
// one of three eigenmatrix shapes.
enum class SkewCase { I, II, III };
std::string to_string(SkewCase c);

struct Case3Point {
    Rational y, z, b, c;
};

struct SkewCandidate {
    SrgParams srg;
    SkewCase kase = SkewCase::I;
    // cases I and II only; case III is the family sampled by case3_family
    TowerNumber rho, sigma, tau, omega;

    // [1, k1/2, k2/2, k2/2, k1/2], [1, rho, tau, conj tau, conj rho],
    // [1, sigma, omega, conj omega, conj sigma] and the two conjugate rows.
    Matrix<TowerNumber> matrix() const;
    // (1, m1/2, m2/2, m2/2, m1/2)
    std::vector<long long> multiplicities() const;
};

struct CandidateSet {
    std::vector<SkewCandidate> candidates;  // cases I and II that survive the filters
    bool case3_family = false;              // case III is open for sampling
    std::vector<std::string> rejected;      // reasons, one per filtered case
};

// The case-I or case-II entries without any feasibility filter. Throws
// InconsistentSrg, OutOfRange for case III, IncompatibleTower when the
// entries need more than two nested square roots.
SkewCandidate make_candidate(const SrgParams& srg, SkewCase kase);

// Filters: k1, k2, m1, m2 even and multiplicities from the eigenmatrix equal to (1, m1/2, m2/2, m2/2,
// m1/2). Throws InconsistentSrg when the parameters disagree with their
// eigenvalues.
CandidateSet feasible_candidates(const SrgParams& srg);

// Solves the case-III constraints for a given y: z from the first equation,
// then c = n k2^2 y / (m2 (k1 z + k2 y)) and b = n k1^2 z / (m2 (k1 z + k2 y)).
// Throws OutOfRange for y <= 0; nullopt once z is no longer positive.
std::optional<Case3Point> case3_family(const SrgParams& srg, const Rational& y);

// The case-III matrix at a sample point, in floating point.
Matrix<std::complex<double>> case3_numeric_matrix(const SrgParams& srg, const Case3Point& point);

// The closed form of B_1 (entry (j, l) = p^l_{1j}) for case I; case II swaps
// r with s and t with u. Throws NotRational for irrational eigenvalues and
// OutOfRange for case III.
Matrix<Rational> b1_closed_form(const SrgParams& srg, SkewCase kase);
// The same display evaluated in the tower, so irrational (conference)
// eigenvalues are allowed.
Matrix<TowerNumber> b1_closed_form_tower(const SrgParams& srg, SkewCase kase);

enum class StepKind {
    ForcedMultiplicity,
    TypeForced,
    ParityFact,
    IntegralityViolation,
    RadicalContradiction,
    ForcedMultiplicityFails,
};
std::string to_string(StepKind kind);

struct CertificateStep {
    StepKind kind = StepKind::ForcedMultiplicity;
    std::string claim;
    bool holds = true;                      // whether the parameters satisfy the claim
    std::string entry;                      // B_1 expression such as "p_11^1" or "p_12^2-p_12^3"
    std::optional<Rational> value;          // value of the entry
    std::string quantity;                   // eigenvalue named by a parity fact
    std::optional<Rational> quantity_value;
    bool even = true;                       // parity the argument requires
    std::optional<SrgTag> type;             // TypeForced
};

struct Certificate {
    SrgParams srg;
    SkewCase kase = SkewCase::I;
    std::vector<CertificateStep> steps;

    // ends in a contradiction or in the forced conditions failing
    bool terminal() const;
    std::string conclusion() const { return terminal() ? "NoAmorphousScheme" : "Open"; }
};

// One certificate per case, in case order. Every parity and integrality fact
// the argument uses is recorded even after the first contradiction.
std::vector<Certificate> nonexistence_certificate(const SrgParams& srg);

// Recomputes every step from the parameters alone.
bool replay(const Certificate& cert);

struct SweepEntry {
    SrgTag tag;
    std::optional<SrgParams> srg;  // absent when the type formulas give no graph
    bool feasible = false;         // k1, k2, m1, m2 all even
    std::string reason;            // why it was rejected
    std::vector<Certificate> certificates;
    bool certified = false;        // feasible and every case terminal and replayable
};

struct SweepReport {
    long long vmax = 0;
    std::vector<SweepEntry> entries;  // ordered by (type, g, v); conference keyed by n
    int feasible = 0;
    int certified = 0;
    int survivors = 0;
    std::string reduction_note;
};

// All L_g(v) (1 <= g <= v) and NL_g(v) (1 <= g <= v - 2) with 2 <= v <= vmax,
// and conference parameters with 5 <= n <= vmax^2. Throws OutOfRange for
// vmax < 2.
SweepReport parameter_sweep(long long vmax);

// For a skew-symmetric scheme with theta >= 2 pairs: {0}, {a1}, {a2..}, and
// their pairs, the 4-class fusion an amorphous scheme would have to admit.
// Throws OutOfRange when the pairing is not skew or has fewer than 2 pairs.
AdmissiblePartition skew_four_class_partition(const std::vector<int>& pairing);

}  // namespace amorph
