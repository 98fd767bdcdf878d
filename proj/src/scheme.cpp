#include "amorph/scheme.hpp"

#include "amorph/errors.hpp"

#include <algorithm>

namespace amorph {

ColorMatrix::ColorMatrix(int n, int d, std::vector<int> colors) : n_(n), d_(d), colors_(std::move(colors)) {
    if (n < 2) throw InvalidColorMatrix("a scheme needs at least 2 points");
    if (d < 1) throw InvalidColorMatrix("class count must be at least 1");
    if (colors_.size() != static_cast<std::size_t>(n) * static_cast<std::size_t>(n)) {
        throw InvalidColorMatrix("color array has " + std::to_string(colors_.size()) + " entries, expected n*n");
    }
    std::vector<bool> seen(static_cast<std::size_t>(d) + 1, false);
    for (int x = 0; x < n; ++x) {
        for (int y = 0; y < n; ++y) {
            int c = (*this)(x, y);
            if (c < 0 || c > d) {
                throw InvalidColorMatrix("color " + std::to_string(c) + " at (" + std::to_string(x) + "," +
                                         std::to_string(y) + ") outside 0.." + std::to_string(d));
            }
            if ((x == y) != (c == 0)) {
                throw InvalidColorMatrix("class 0 must be exactly the diagonal; violated at (" + std::to_string(x) +
                                         "," + std::to_string(y) + ")");
            }
            seen[static_cast<std::size_t>(c)] = true;
        }
    }
    for (int c = 0; c <= d; ++c) {
        if (!seen[static_cast<std::size_t>(c)]) throw InvalidColorMatrix("class " + std::to_string(c) + " is empty");
    }
}

AssociationScheme build_scheme(ColorMatrix m) {
    const int n = m.n();
    const int d = m.d();
    if (n > kMaxPoints) throw TooLarge("scheme on " + std::to_string(n) + " points exceeds " + std::to_string(kMaxPoints));
    if (d > kMaxClasses) throw TooLarge("scheme with " + std::to_string(d) + " classes exceeds " + std::to_string(kMaxClasses));

    AssociationScheme s(std::move(m));
    const ColorMatrix& c = s.matrix_;
    const auto m1 = static_cast<std::size_t>(d + 1);

    // axiom (ii)
    s.pairing_.assign(m1, -1);
    for (int x = 0; x < n; ++x) {
        for (int y = 0; y < n; ++y) {
            int i = c(x, y);
            int t = c(y, x);
            int& slot = s.pairing_[static_cast<std::size_t>(i)];
            if (slot == -1) slot = t;
            else if (slot != t) throw AxiomIIViolation(i);
        }
    }

    // axiom (iii): histogram of (c(x,z), c(z,y)) per ordered pair, compared
    // against the first pair seen in the same class.
    s.p_.assign(m1 * m1 * m1, 0);
    std::vector<std::pair<int, int>> first(m1, {-1, -1});
    std::vector<long long> hist(m1 * m1, 0);
    std::vector<std::size_t> touched;
    touched.reserve(static_cast<std::size_t>(n));

    for (int x = 0; x < n; ++x) {
        for (int y = 0; y < n; ++y) {
            const int k = c(x, y);
            touched.clear();
            for (int z = 0; z < n; ++z) {
                std::size_t e = static_cast<std::size_t>(c(x, z)) * m1 + static_cast<std::size_t>(c(z, y));
                if (hist[e]++ == 0) touched.push_back(e);
            }
            auto& ref = first[static_cast<std::size_t>(k)];
            auto ref_p = [&](std::size_t e) -> long long& { return s.p_[e * m1 + static_cast<std::size_t>(k)]; };
            if (ref.first == -1) {
                ref = {x, y};
                for (std::size_t e : touched) ref_p(e) = hist[e];
            } else {
                // Both histograms sum to n, so agreement on the touched cells
                // forces agreement everywhere.
                for (std::size_t e : touched) {
                    if (hist[e] != ref_p(e)) {
                        AxiomIIIWitness w;
                        w.i = static_cast<int>(e / m1);
                        w.j = static_cast<int>(e % m1);
                        w.k = k;
                        w.x = x;
                        w.y = y;
                        w.count = hist[e];
                        w.x2 = ref.first;
                        w.y2 = ref.second;
                        w.count2 = ref_p(e);
                        throw AxiomIIIViolation(w);
                    }
                }
            }
            for (std::size_t e : touched) hist[e] = 0;
        }
    }

    s.valencies_.resize(m1);
    for (int i = 0; i <= d; ++i) s.valencies_[static_cast<std::size_t>(i)] = s.p(i, s.pair(i), 0);

    for (int i = 0; i <= d && s.commutative_; ++i) {
        for (int j = i + 1; j <= d && s.commutative_; ++j) {
            for (int k = 0; k <= d; ++k) {
                if (s.p(i, j, k) != s.p(j, i, k)) {
                    s.commutative_ = false;
                    break;
                }
            }
        }
    }

    // row-sum identity: sum_i p^k_ij = k_j
    for (int j = 0; j <= d; ++j) {
        for (int k = 0; k <= d; ++k) {
            long long sum = 0;
            for (int i = 0; i <= d; ++i) sum += s.p(i, j, k);
            if (sum != s.valency(j)) throw Error("internal: row-sum identity failed");
        }
    }
    return s;
}

long long intersection_number(const AssociationScheme& s, int i, int j, int k) {
    if (i < 0 || j < 0 || k < 0 || i > s.d() || j > s.d() || k > s.d()) throw OutOfRange("class index out of range");
    return s.p(i, j, k);
}

std::string to_string(SymmetryKind kind) {
    switch (kind) {
        case SymmetryKind::Symmetric: return "symmetric";
        case SymmetryKind::SkewSymmetric: return "skew-symmetric";
        case SymmetryKind::Mixed: return "mixed";
    }
    return "?";
}

SymmetryProfile classify_symmetry(const AssociationScheme& s) {
    SymmetryProfile prof;
    for (int i = 1; i <= s.d(); ++i) {
        if (s.pair(i) == i) ++prof.phi;
        else if (i < s.pair(i)) ++prof.theta;
    }
    if (prof.theta == 0) prof.kind = SymmetryKind::Symmetric;
    else if (prof.phi == 0) prof.kind = SymmetryKind::SkewSymmetric;
    else prof.kind = SymmetryKind::Mixed;
    return prof;
}

CommutativityReport is_commutative(const AssociationScheme& s) {
    for (int i = 0; i <= s.d(); ++i) {
        for (int j = i + 1; j <= s.d(); ++j) {
            for (int k = 0; k <= s.d(); ++k) {
                if (s.p(i, j, k) != s.p(j, i, k)) return {false, std::array<int, 3>{i, j, k}};
            }
        }
    }
    return {};
}

ColorMatrix recolor(const ColorMatrix& m, const std::vector<int>& class_map, int new_d) {
    if (class_map.size() != static_cast<std::size_t>(m.d()) + 1 || class_map[0] != 0) {
        throw InvalidColorMatrix("class map must cover 0..d and fix 0");
    }
    std::vector<int> colors(m.data().size());
    std::transform(m.data().begin(), m.data().end(), colors.begin(),
                   [&](int c) { return class_map[static_cast<std::size_t>(c)]; });
    return ColorMatrix(m.n(), new_d, std::move(colors));
}

AssociationScheme symmetrize(const AssociationScheme& s) {
    std::vector<int> class_map(static_cast<std::size_t>(s.d()) + 1, 0);
    int next = 0;
    for (int i = 1; i <= s.d(); ++i) {
        int j = s.pair(i);
        if (j < i) class_map[static_cast<std::size_t>(i)] = class_map[static_cast<std::size_t>(j)];
        else class_map[static_cast<std::size_t>(i)] = ++next;
    }
    try {
        return build_scheme(recolor(s.matrix(), class_map, next));
    } catch (const AxiomIIIViolation& e) {
        throw FusionInvalid(std::string("symmetrization is not a scheme: ") + e.what());
    }
}

bool satisfies_valency_identity(const AssociationScheme& s) {
    for (int i = 0; i <= s.d(); ++i) {
        for (int j = 0; j <= s.d(); ++j) {
            for (int l = 0; l <= s.d(); ++l) {
                if (s.valency(l) * s.p(i, j, l) != s.valency(i) * s.p(l, s.pair(j), i)) return false;
            }
        }
    }
    return true;
}

}  // namespace amorph
