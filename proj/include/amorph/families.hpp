#pragma once

#include "amorph/scheme.hpp"

#include <vector>

namespace amorph {

// GF(q) for q prime (q <= 65536) or q in {4, 8, 9, 16, 25, 27}. Elements are
// encoded as integers 0..q-1 (base-p digits of the polynomial coefficients for
// prime powers). The generator is the least primitive element under that
// encoding, verified at construction.
class FiniteField {
public:
    explicit FiniteField(int q);

    int q() const { return q_; }
    int characteristic() const { return p_; }
    int generator() const { return generator_; }

    int add(int a, int b) const;
    int sub(int a, int b) const;
    int mul(int a, int b) const;
    // Discrete log base generator(); a != 0.
    int log(int a) const;

private:
    int q_;
    int p_;
    int degree_;
    std::vector<int> add_table_;  // prime powers only
    std::vector<int> mul_table_;  // prime powers only
    std::vector<int> neg_;
    std::vector<int> log_;
    int generator_ = 0;
};

// Classes C_i = g^i <g^e>, i = 0..e-1; (x,y) gets color 1 + (log(y - x) mod e).
AssociationScheme cyclotomic_scheme(const FiniteField& field, int e);

// Cyclotomic scheme of index 2 over GF(p): a doubly regular tournament when
// p = 3 mod 4, the Paley graph scheme when p = 1 mod 4.
AssociationScheme paley(int p);

// Color matrix of the group scheme of Z_{o1} x ... x Z_{ok}: (x,y) gets the
// index of y - x. Throws TooLarge beyond 4096 elements.
ColorMatrix abelian_group_colors(const std::vector<int>& orders);
AssociationScheme abelian_group_scheme(const std::vector<int>& orders);

using LatinSquare = std::vector<std::vector<int>>;

// L[r][c] = (r + c) mod v
LatinSquare cyclic_latin_square(int v);

// Cells of a v x v Latin square with classes same-row (1), same-column (2),
// same-symbol (3) and the rest (4). Throws NotLatin or OrderTooSmall (v < 3).
AssociationScheme latin_net_scheme(const LatinSquare& square);

bool is_prime(long long n);

}  // namespace amorph
