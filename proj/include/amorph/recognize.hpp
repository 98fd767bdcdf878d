#pragma once

#include "amorph/tower.hpp"

#include <complex>
#include <cstdint>
#include <optional>
#include <span>

namespace amorph {

struct RecognizeOptions {
    double tol = 1e-9;
    // Height bounds on the (p + q*sqrt(d))/D form.
    std::int64_t max_numerator = 1000;
    std::int64_t max_denominator = 1000;
};

// Default height for eigenvalues of a scheme on n points.
inline std::int64_t default_height(std::int64_t n) { return 4 * n * n; }

// Finds the unique value (p + q*sqrt(d))/D, d drawn from `candidates` (q = 0
// allowed), within the height bounds and within tol of x. Returns nullopt when
// nothing matches or when the only match is farther than tol/10 after exact
// back-substitution. Throws AmbiguousMatch when two distinct values lie within
// tol.
std::optional<TowerNumber> recognize(std::complex<double> x, std::span<const std::int64_t> candidates,
                                     const RecognizeOptions& options = {});

}  // namespace amorph
