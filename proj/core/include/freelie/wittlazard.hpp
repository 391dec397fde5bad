#pragma once

#include <vector>

#include "freelie/report.hpp"
#include "freelie/tensor.hpp"

namespace freelie {

/// sigma * (v_1 (x) .. (x) v_n) = v_{sigma^{-1}(1)} (x) .. ; identity outside
/// tensor degree n (n = sigma's size).
TensorPolynomial act_star(const std::vector<int>& sigma, const TensorPolynomial& t);

/// Lie bracket between positions k and k+1 of the degree-n component,
/// re-expressed over the basis; the zero map outside degree n.
TensorPolynomial act_bullet(int k, const TensorPolynomial& t, int n, const BasisRegistry& reg);

/// W_{k,n} diamond = W_{k,n} star + W_{k,n} bullet (extended sense: identity
/// outside degree n).
TensorPolynomial act_diamond(int k, const TensorPolynomial& t, int n, const BasisRegistry& reg);

/// Composition (W_{a_1,n} d)...(W_{a_s,n} d), rightmost generator acting first.
TensorPolynomial act_diamond_word(const std::vector<int>& gens, const TensorPolynomial& t, int n,
                                  const BasisRegistry& reg);

/// Fixed decomposition of sigma into adjacent transpositions: bubble sort,
/// leftmost descent first. Product (left to right, rightmost acting first)
/// recovers sigma.
std::vector<int> transposition_word(const std::vector<int>& sigma);

enum class EtaMode { Ordered, Symmetric };

/// The idempotent e o eta per tensor degree: Ordered sorts the factors
/// stably, Symmetric symmetrizes. Returns (image, complement); the parts sum
/// back to t.
std::pair<TensorPolynomial, TensorPolynomial> eta_split(const TensorPolynomial& t, EtaMode mode);

/// ee^n o eta_n: eta as above but evaluated through the diamond word of the
/// sorting permutation (resp. averaged over all of Sigma_n).
TensorPolynomial ee_eta(const TensorPolynomial& t, int n, EtaMode mode, const BasisRegistry& reg);

/// Exact operator identities (P1'), (P2'), (P3') on a degree-n sample,
/// including the correction terms on the right-hand sides.
VerificationReport check_braid_identities(int n, const TensorPolynomial& sample, const BasisRegistry& reg);

struct KeyLemmaResult {
    bool pass = false;
    bool degree_n_matches = false;  // top-degree parts agree on the nose
    bool difference_in_j = false;   // rest lies in J^{n-1}
    std::string detail;
};

/// Lemma check: v - W_{k,n} d v == (id - ee^n o eta_n)(v - W_{k,n} * v)
/// modulo J^{n-1}, certified by exact rank over the relevant multigrades.
KeyLemmaResult key_lemma_check(int n, int k, const TensorWord& v, EtaMode mode, const BasisRegistry& reg);

/// CLI-facing suite: braid identities, idempotence, key lemma at desk scale.
VerificationReport wittlazard_suite(int degree, EtaMode mode, std::uint64_t seed = 1);

}  // namespace freelie
