#pragma once

#include "amorph/errors.hpp"
#include "amorph/scheme.hpp"
#include "amorph/spectral.hpp"

#include <optional>
#include <string>
#include <vector>

namespace amorph {

// Inverse-closed partition of 0..d. blocks[0] is {0}; every block is sorted
// and blocks are ordered by their minima.
struct AdmissiblePartition {
    std::vector<std::vector<int>> blocks;

    int classes() const { return static_cast<int>(blocks.size()) - 1; }
    // class index -> block index
    std::vector<int> class_map(int d) const;
    std::string to_string() const;
    friend bool operator==(const AdmissiblePartition&, const AdmissiblePartition&) = default;
};

inline constexpr int kMaxEnumerationClasses = 12;

// All admissible partitions, each once, ordered lexicographically by the
// restricted-growth string of classes 1..d. Throws TooLarge for d > 12 and
// OutOfRange if pairing is not an involution fixing 0.
std::vector<AdmissiblePartition> enumerate_admissible(int d, const std::vector<int>& pairing);

// Throws FusionInvalid unless part is an admissible partition of 0..d.
void check_admissible(const AdmissiblePartition& part, const std::vector<int>& pairing);

// Blocks merging each class with its pair.
AdmissiblePartition symmetrization_partition(const std::vector<int>& pairing);

struct FusionResult {
    bool accepted = false;
    std::optional<Eigenmatrix> fused;          // rows grouped by signature, row 0 first
    std::vector<std::vector<int>> dual;        // row groups of P, aligned with fused rows
    int signatures = 0;                        // distinct block row-sum signatures
    bool row0_isolated = true;
    std::string witness;                       // why it was rejected
};

// Bannai-Muzychuk test: accept iff the block row sums take exactly e+1
// distinct values across the rows of P and row 0's value is its own.
FusionResult check_fusion_spectral(const Eigenmatrix& p, const AdmissiblePartition& part, double tol = 1e-8);

struct CombinatorialFusion {
    bool accepted = false;
    std::optional<AssociationScheme> scheme;
    std::optional<AxiomIIIWitness> witness;
};

// Recolors by block and rebuilds; exact regardless of spectral mode.
CombinatorialFusion fuse_combinatorial(const AssociationScheme& s, const AdmissiblePartition& part);

struct PartitionVerdict {
    AdmissiblePartition partition;
    bool accepted = false;
    std::optional<AxiomIIIWitness> witness;
};

struct AmorphousReport {
    bool amorphous = true;
    // enumeration order; stops after the first rejection unless full
    std::vector<PartitionVerdict> verdicts;
};

AmorphousReport is_amorphous(const AssociationScheme& s, bool full = false);

}  // namespace amorph
