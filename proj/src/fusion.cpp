#include "amorph/fusion.hpp"

#include "amorph/parallel.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <numeric>

namespace amorph {

namespace {

std::size_t idx(int i) { return static_cast<std::size_t>(i); }

void check_pairing(int d, const std::vector<int>& pairing) {
    if (static_cast<int>(pairing.size()) != d + 1 || pairing[0] != 0) {
        throw OutOfRange("pairing must list d+1 classes and fix 0");
    }
    for (int i = 0; i <= d; ++i) {
        const int j = pairing[idx(i)];
        if (j < 0 || j > d || pairing[idx(j)] != i) throw OutOfRange("pairing is not an involution");
    }
}

struct Enumerator {
    int d;
    const std::vector<int>& pairing;
    std::vector<int> block;    // block of class x (1-based classes, 0-based blocks)
    std::vector<int> partner;  // block -> paired block, -1 if not yet fixed
    int used = 0;
    std::vector<AdmissiblePartition> out;

    void emit() {
        AdmissiblePartition part;
        part.blocks.assign(idx(used + 1), {});
        part.blocks[0] = {0};
        for (int x = 1; x <= d; ++x) part.blocks[idx(block[idx(x)] + 1)].push_back(x);
        out.push_back(std::move(part));
    }

    void place(int x) {
        if (x > d) {
            emit();
            return;
        }
        const int xp = pairing[idx(x)];
        for (int b = 0; b <= used; ++b) {
            const bool fresh = b == used;
            if (fresh) partner.push_back(-1);
            block[idx(x)] = b;
            // blocks of x and x' must be paired consistently
            bool ok = true;
            std::vector<std::pair<int, int>> set;
            if (xp <= x) {
                const int bp = block[idx(xp)];
                auto bind = [&](int from, int to) {
                    if (partner[idx(from)] == -1) {
                        partner[idx(from)] = to;
                        set.emplace_back(from, to);
                    } else if (partner[idx(from)] != to) {
                        ok = false;
                    }
                };
                bind(b, bp);
                if (ok) bind(bp, b);
            }
            if (ok) {
                if (fresh) ++used;
                place(x + 1);
                if (fresh) --used;
            }
            for (const auto& [from, to] : set) partner[idx(from)] = -1;
            if (fresh) partner.pop_back();
        }
        block[idx(x)] = -1;
    }
};

bool row_before(const std::vector<std::complex<double>>& a, const std::vector<std::complex<double>>& b) {
    constexpr double tol = 1e-9;
    for (std::size_t c = 1; c < a.size(); ++c) {
        if (std::abs(a[c].real() - b[c].real()) > tol) return a[c].real() > b[c].real();
        if (std::abs(a[c].imag() - b[c].imag()) > tol) return a[c].imag() > b[c].imag();
    }
    return false;
}

}  // namespace

std::vector<int> AdmissiblePartition::class_map(int d) const {
    std::vector<int> map(idx(d + 1), -1);
    for (std::size_t b = 0; b < blocks.size(); ++b)
        for (int c : blocks[b]) map[idx(c)] = static_cast<int>(b);
    return map;
}

std::string AdmissiblePartition::to_string() const {
    std::string out = "{";
    for (std::size_t b = 0; b < blocks.size(); ++b) {
        if (b) out += ",";
        out += "{";
        for (std::size_t i = 0; i < blocks[b].size(); ++i) {
            if (i) out += ",";
            out += std::to_string(blocks[b][i]);
        }
        out += "}";
    }
    return out + "}";
}

std::vector<AdmissiblePartition> enumerate_admissible(int d, const std::vector<int>& pairing) {
    if (d > kMaxEnumerationClasses) {
        throw TooLarge("partition enumeration is limited to " + std::to_string(kMaxEnumerationClasses) + " classes");
    }
    if (d < 1) throw OutOfRange("need at least one class");
    check_pairing(d, pairing);
    Enumerator e{d, pairing, std::vector<int>(idx(d + 1), -1), {}, 0, {}};
    e.place(1);
    return std::move(e.out);
}

void check_admissible(const AdmissiblePartition& part, const std::vector<int>& pairing) {
    const int d = static_cast<int>(pairing.size()) - 1;
    if (part.blocks.empty() || part.blocks[0] != std::vector<int>{0}) {
        throw FusionInvalid("first block must be {0}");
    }
    const auto map = part.class_map(d);
    std::vector<int> seen(idx(d + 1), 0);
    for (const auto& block : part.blocks) {
        if (block.empty()) throw FusionInvalid("empty block");
        for (int c : block) {
            if (c < 0 || c > d) throw FusionInvalid("class " + std::to_string(c) + " out of range");
            if (seen[idx(c)]++) throw FusionInvalid("class " + std::to_string(c) + " appears twice");
        }
    }
    for (int c = 0; c <= d; ++c) {
        if (!seen[idx(c)]) throw FusionInvalid("class " + std::to_string(c) + " missing");
    }
    for (const auto& block : part.blocks) {
        const int target = map[idx(pairing[idx(block[0])])];
        for (int c : block) {
            if (map[idx(pairing[idx(c)])] != target) throw FusionInvalid("partition is not closed under pairing");
        }
        if (part.blocks[idx(target)].size() != block.size()) throw FusionInvalid("partition is not closed under pairing");
    }
}

AdmissiblePartition symmetrization_partition(const std::vector<int>& pairing) {
    AdmissiblePartition part;
    for (int c = 0; c < static_cast<int>(pairing.size()); ++c) {
        const int cp = pairing[idx(c)];
        if (cp < c) continue;
        part.blocks.push_back(cp == c ? std::vector<int>{c} : std::vector<int>{c, cp});
    }
    return part;
}

FusionResult check_fusion_spectral(const Eigenmatrix& p, const AdmissiblePartition& part, double tol) {
    const int m = p.size();
    const int blocks = static_cast<int>(part.blocks.size());
    const bool exact = p.mode == EigenMode::Exact;

    std::vector<std::vector<TowerNumber>> exact_sig(idx(m));
    std::vector<std::vector<std::complex<double>>> num_sig(idx(m));
    for (int h = 0; h < m; ++h) {
        for (const auto& block : part.blocks) {
            TowerNumber e;
            std::complex<double> v = 0;
            for (int c : block) {
                if (exact) e += p.exact(idx(h), idx(c));
                v += p.value(h, c);
            }
            exact_sig[idx(h)].push_back(e);
            num_sig[idx(h)].push_back(v);
        }
    }
    auto same = [&](int a, int b) {
        if (exact) return exact_sig[idx(a)] == exact_sig[idx(b)];
        for (int j = 0; j < blocks; ++j) {
            if (std::abs(num_sig[idx(a)][idx(j)] - num_sig[idx(b)][idx(j)]) > tol) return false;
        }
        return true;
    };

    FusionResult result;
    for (int h = 0; h < m; ++h) {
        auto it = std::find_if(result.dual.begin(), result.dual.end(), [&](const auto& g) { return same(g[0], h); });
        if (it == result.dual.end()) {
            result.dual.push_back({h});
        } else {
            it->push_back(h);
        }
    }
    result.signatures = static_cast<int>(result.dual.size());
    result.row0_isolated = result.dual[0].size() == 1;
    if (result.signatures != blocks || !result.row0_isolated) {
        result.witness = std::to_string(result.signatures) + " distinct row signatures for " + std::to_string(blocks) +
                         " blocks" + (result.row0_isolated ? "" : "; row 0 shares its signature");
        result.dual.clear();
        return result;
    }

    std::sort(result.dual.begin() + 1, result.dual.end(),
              [&](const auto& a, const auto& b) { return row_before(num_sig[idx(a[0])], num_sig[idx(b[0])]); });
    Eigenmatrix fused;
    fused.mode = p.mode;
    fused.numeric = Matrix<std::complex<double>>(idx(blocks), idx(blocks));
    if (exact) fused.exact = Matrix<TowerNumber>(idx(blocks), idx(blocks));
    for (int g = 0; g < blocks; ++g) {
        const int rep = result.dual[idx(g)][0];
        long long mult = 0;
        for (int h : result.dual[idx(g)]) mult += p.multiplicities[idx(h)];
        fused.multiplicities.push_back(mult);
        for (int j = 0; j < blocks; ++j) {
            fused.numeric(idx(g), idx(j)) = num_sig[idx(rep)][idx(j)];
            if (exact) fused.exact(idx(g), idx(j)) = exact_sig[idx(rep)][idx(j)];
        }
    }
    result.fused = std::move(fused);
    result.accepted = true;
    return result;
}

CombinatorialFusion fuse_combinatorial(const AssociationScheme& s, const AdmissiblePartition& part) {
    check_admissible(part, s.pairing());
    CombinatorialFusion out;
    try {
        out.scheme = build_scheme(recolor(s.matrix(), part.class_map(s.d()), part.classes()));
        out.accepted = true;
    } catch (const AxiomIIIViolation& e) {
        out.witness = e.witness();
    }
    return out;
}

AmorphousReport is_amorphous(const AssociationScheme& s, bool full) {
    if (!s.commutative()) throw NonCommutative("amorphousness is tested on commutative schemes");
    const auto partitions = enumerate_admissible(s.d(), s.pairing());
    std::vector<PartitionVerdict> verdicts(partitions.size());
    std::atomic<std::size_t> first_reject{std::numeric_limits<std::size_t>::max()};

    parallel_for(partitions.size(), [&](std::size_t i) {
        if (!full && i > first_reject.load()) return;
        auto fused = fuse_combinatorial(s, partitions[i]);
        verdicts[i] = {partitions[i], fused.accepted, fused.witness};
        if (!fused.accepted) {
            std::size_t cur = first_reject.load();
            while (i < cur && !first_reject.compare_exchange_weak(cur, i)) {
            }
        }
    });

    AmorphousReport report;
    report.amorphous = first_reject.load() == std::numeric_limits<std::size_t>::max();
    const std::size_t keep = full || report.amorphous ? partitions.size() : first_reject.load() + 1;
    verdicts.resize(keep);
    report.verdicts = std::move(verdicts);
    return report;
}

}  // namespace amorph
