#pragma once

#include <map>
#include <vector>

#include "freelie/magnus.hpp"
#include "freelie/tensor.hpp"

namespace freelie {

/// mu_Sigma: sums, over ordered set partitions of the factor positions with
/// increasing elements inside each block, the tensor of Magnus-commutator
/// values with coefficient 1/s!. Lands in the symmetric subspace; identity in
/// tensor degree 0.
TensorPolynomial mu_sigma(const TensorPolynomial& t, MagnusTable& mu, const BasisRegistry& reg);

/// Descent of mu_Sigma to the enveloping algebra: lifts each word to the
/// tensor word of its degree-1 letters and applies mu_Sigma. The inverse of
/// m_eval on polynomials.
TensorPolynomial bold_mu_sigma(const NcPolynomial& u, MagnusTable& mu, const BasisRegistry& reg);

/// Ordered set partition of {1..n} with blocks ordered by maxima and each
/// block carrying a sequence ending in its maximum.
struct LiePermutation {
    std::vector<std::vector<int>> blocks;

    bool valid(int n) const;
    /// Concatenates the blocks last-to-first; a bijection onto S_n.
    std::vector<int> to_permutation() const;
    static LiePermutation from_permutation(const std::vector<int>& sigma);

    bool operator==(const LiePermutation& o) const { return blocks == o.blocks; }
    bool operator<(const LiePermutation& o) const { return blocks < o.blocks; }
};

/// All Lie-permutations of {1..n}; there are n! of them.
std::vector<LiePermutation> lie_permutations(int n);

/// Unique decomposition of a multilinear polynomial in 1..n over the basis
/// of symmetrized products of left-normed brackets indexed by
/// Lie-permutations. SingularSystem if the n! x n! matrix degenerates
/// (cannot happen).
std::map<LiePermutation, Rational> lie_perm_decompose(const NcPolynomial& p, int n);

/// Decomposition of the single word X_1..X_n; its single-block part is the
/// section-4 definition of mu_n.
std::map<LiePermutation, Rational> b_coefficients(int n);

/// Associative evaluation of the basis element attached to a Lie-permutation:
/// the symmetrized product of the left-normed brackets of its blocks.
NcPolynomial lie_perm_basis_eval(const LiePermutation& lp);

/// Rewrites u as an ordered tensor polynomial (factors non-decreasing in
/// basis-id order) with m_eval(t) = u, swapping out-of-order adjacent factors
/// at the cost of lower tensor degree bracket terms.
TensorPolynomial basic_rearrangement(const NcPolynomial& u, const BasisRegistry& reg);

}  // namespace freelie
