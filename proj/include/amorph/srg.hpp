#pragma once

#include "amorph/spectral.hpp"
#include "amorph/tower.hpp"

#include <string>
#include <vector>

namespace amorph {

enum class SrgKind { LatinSquare, NegativeLatinSquare, Conference, Other };

struct SrgTag {
    SrgKind kind = SrgKind::Other;
    long long g = 0;  // Latin / negative Latin only
    long long v = 0;
    long long n = 0;  // Conference only
    // L/NL descriptions that coincide with a Conference classification
    std::vector<SrgTag> aliases;

    std::string to_string() const;
    friend bool operator==(const SrgTag&, const SrgTag&) = default;
};

SrgTag latin_tag(long long g, long long v);
SrgTag negative_latin_tag(long long g, long long v);

// Parameters of a strongly regular graph with eigenvalues r >= 0 > s,
// t = -r-1, u = -s-1 and multiplicities m1 (of r) and m2 (of s).
struct SrgParams {
    long long n = 0, k = 0, lambda = 0, mu = 0;
    TowerNumber r, s, t, u;
    long long m1 = 0, m2 = 0;
    SrgTag tag;

    std::string to_string() const;
};

// Completes (n, k, lambda, mu): eigenvalues exactly, multiplicities from
// k + m1 r + m2 s = 0 and 1 + m1 + m2 = n, tag from classify. Throws
// InconsistentSrg when the counting identity fails, the graph is complete or
// edgeless, or the multiplicities are not positive integers.
SrgParams make_srg_params(long long n, long long k, long long lambda, long long mu);

// Throws NotStronglyRegular with a witness pair: (x, x) for a loop or a
// degree mismatch against vertex 0, (x, y) for asymmetry or a count that
// differs from the first pair of the same kind.
SrgParams srg_from_graph(const std::vector<std::vector<int>>& adjacency);

// Conference when m1 = m2 (with coinciding L/NL aliases), L_g(v) with g = -s,
// v = r - s when k = m1, NL_g(v) with g = r, v = r - s when k = m2, else Other.
SrgTag classify(const SrgParams& params);

// Throws InfeasibleParameters when the formulas give no strongly regular
// graph, and OutOfRange for a Conference or Other tag.
SrgParams params_from_type(const SrgTag& tag);

SrgParams complement(const SrgParams& params);

// [[1, k, n-k-1], [1, r, t], [1, s, u]] with multiplicities 1, m1, m2.
Eigenmatrix srg_scheme_eigenmatrix(const SrgParams& params);

}  // namespace amorph
