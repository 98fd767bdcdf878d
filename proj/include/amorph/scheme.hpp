#pragma once

#include "amorph/matrix.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace amorph {

// n x n relation partition. colors(x,y) is the class of the ordered pair.
class ColorMatrix {
public:
    // Validates: n >= 2, entries in 0..d, diagonal exactly class 0, every class
    // used. Throws InvalidColorMatrix.
    ColorMatrix(int n, int d, std::vector<int> colors);

    int n() const { return n_; }
    int d() const { return d_; }
    int operator()(int x, int y) const { return colors_[static_cast<std::size_t>(x) * n_ + y]; }
    const std::vector<int>& data() const { return colors_; }

    friend bool operator==(const ColorMatrix&, const ColorMatrix&) = default;

private:
    int n_;
    int d_;
    std::vector<int> colors_;
};

// Refuses schemes whose direct counting would not fit desk-scale resources.
inline constexpr int kMaxPoints = 1024;
inline constexpr int kMaxClasses = 255;

class AssociationScheme {
public:
    const ColorMatrix& matrix() const { return matrix_; }
    int n() const { return matrix_.n(); }
    int d() const { return matrix_.d(); }

    // Index of the paired (transposed) class.
    int pair(int i) const { return pairing_[static_cast<std::size_t>(i)]; }
    const std::vector<int>& pairing() const { return pairing_; }

    // p^k_{ij}
    long long p(int i, int j, int k) const {
        const auto m = static_cast<std::size_t>(d() + 1);
        return p_[(static_cast<std::size_t>(i) * m + static_cast<std::size_t>(j)) * m + static_cast<std::size_t>(k)];
    }
    long long valency(int i) const { return valencies_[static_cast<std::size_t>(i)]; }
    const std::vector<long long>& valencies() const { return valencies_; }

    bool commutative() const { return commutative_; }

private:
    friend AssociationScheme build_scheme(ColorMatrix m);
    explicit AssociationScheme(ColorMatrix m) : matrix_(std::move(m)) {}

    ColorMatrix matrix_;
    std::vector<int> pairing_;
    std::vector<long long> p_;
    std::vector<long long> valencies_;
    bool commutative_ = true;
};

// Verifies axioms (ii) and (iii) by full counting and computes the
// intersection tensor. Throws AxiomIIViolation / AxiomIIIViolation, or TooLarge
// beyond kMaxPoints / kMaxClasses.
AssociationScheme build_scheme(ColorMatrix m);

long long intersection_number(const AssociationScheme& s, int i, int j, int k);

enum class SymmetryKind { Symmetric, SkewSymmetric, Mixed };
std::string to_string(SymmetryKind kind);

struct SymmetryProfile {
    int theta = 0;  // non-symmetric pairs {i, i'}
    int phi = 0;    // non-diagonal symmetric classes
    SymmetryKind kind = SymmetryKind::Symmetric;
};

SymmetryProfile classify_symmetry(const AssociationScheme& s);

struct CommutativityReport {
    bool commutative = true;
    std::optional<std::array<int, 3>> violation;  // (i, j, k) with p^k_ij != p^k_ji
};

CommutativityReport is_commutative(const AssociationScheme& s);

// Merges each class with its transpose. Classes of the result are numbered by
// the smallest member of each pairing orbit.
AssociationScheme symmetrize(const AssociationScheme& s);

// Replaces each class c by class_map[c]; class_map[0] must be 0 and the image
// must be 0..new_d.
ColorMatrix recolor(const ColorMatrix& m, const std::vector<int>& class_map, int new_d);

// k_l p^l_ij = k_i p^i_{l j'} for all triples.
bool satisfies_valency_identity(const AssociationScheme& s);

}  // namespace amorph
