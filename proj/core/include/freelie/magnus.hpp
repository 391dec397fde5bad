#pragma once

#include <map>
#include <mutex>
#include <vector>

#include "freelie/liepoly.hpp"
#include "freelie/ncpoly.hpp"

namespace freelie {

enum class MuFlavor { L, R, C };

/// Number of descents / ascents of a permutation in one-line notation.
int descents(const std::vector<int>& sigma);
int ascents(const std::vector<int>& sigma);

/// Solomon coefficient mu_sigma = (-1)^des des! asc! / n!.
Rational solomon_coefficient(const std::vector<int>& sigma);

/// Direct expansion sum_sigma mu_sigma X_{sigma(1)}..X_{sigma(n)} in the
/// generators 1..n.
NcPolynomial mu_closed(int n);

/// Cache of Magnus commutators mu_1..mu_n in generators 1..n, built by the
/// partition recursions and kept both as bracket-tree Lie polynomials and as
/// associative expansions. Safe for concurrent use; at most one builder runs
/// per (n, flavor).
class MagnusTable {
public:
    /// mu_n as a formal bracket combination, per the chosen recursion.
    const LiePolynomial& lie(int n, MuFlavor flavor = MuFlavor::L);
    /// Commutator expansion of lie(n, flavor).
    const NcPolynomial& expansion(int n, MuFlavor flavor = MuFlavor::L);
    /// Expansion by the closed Solomon-coefficient formula.
    const NcPolynomial& closed(int n);

private:
    struct Entry {
        LiePolynomial lie;
        NcPolynomial expansion;
    };
    const Entry& entry(int n, MuFlavor flavor);
    LiePolynomial build(int n, MuFlavor flavor);

    std::recursive_mutex mutex_;
    std::map<std::pair<int, int>, Entry> cache_;
    std::map<int, NcPolynomial> closed_;
};

struct SwapWitness {
    bool equal = false;
    NcPolynomial difference;  // LHS - RHS of eq. (muid)
};

/// Checks mu_n(..,X_{k-1},X_k,..) - mu_n(..,X_k,X_{k-1},..) =
/// mu_{n-1}(..,[X_{k-1},X_k],..) for 1 < k <= n, in the associative algebra.
SwapWitness check_mu_swap_identity(MagnusTable& table, int n, int k);

enum class RebracketMode { FixedLast, Summed, Weighted, Double };

/// The re-bracketing identities: FixedLast (with position k) rebuilds mu_n
/// from the permutations ending at k; Summed gives n*mu_n; Weighted gives
/// (w_1+..+w_n)*mu_n; Double gives n(n-1)*mu_n. All evaluated associatively.
NcPolynomial mu_rebracket(MagnusTable& table, int n, RebracketMode mode, int k = 0,
                          const std::vector<Rational>& weights = {});

}  // namespace freelie
