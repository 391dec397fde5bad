#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "freelie/ncpoly.hpp"

namespace freelie {

/// Bracket monomial: a full binary tree whose leaves are generators. Stored
/// as a preorder code (negative sentinel = internal node) so that value
/// comparison, hashing into maps and substitution stay cheap.
class LieMonomial {
public:
    static LieMonomial leaf(GeneratorId g);
    static LieMonomial bracket(const LieMonomial& a, const LieMonomial& b);

    bool is_leaf() const { return code_.size() == 1; }
    GeneratorId leaf_generator() const;
    std::pair<LieMonomial, LieMonomial> children() const;

    /// Number of leaves (the bracket length).
    int degree() const { return static_cast<int>((code_.size() + 1) / 2); }
    Multidegree multidegree() const;

    /// Grafts trees onto leaves; unassigned generators stay leaves.
    LieMonomial substitute(const std::map<GeneratorId, LieMonomial>& assignment) const;
    LieMonomial relabel(const std::map<GeneratorId, GeneratorId>& m) const;

    NcPolynomial commutator_eval() const;

    std::string str() const;

    bool operator==(const LieMonomial& o) const { return code_ == o.code_; }
    bool operator!=(const LieMonomial& o) const { return code_ != o.code_; }
    bool operator<(const LieMonomial& o) const {
        if (code_.size() != o.code_.size()) return code_.size() < o.code_.size();
        return code_ < o.code_;
    }

private:
    std::vector<std::int64_t> code_;
};

/// Formal combination of bracket monomials (no Lie normalization applied),
/// optionally carrying its canonical coordinates over the primitive-word
/// basis (set by BasisRegistry::to_canonical).
class LiePolynomial {
public:
    LiePolynomial() = default;
    static LiePolynomial monomial(LieMonomial m, const Rational& c);
    static LiePolynomial generator(GeneratorId g);

    const std::map<LieMonomial, Rational>& terms() const { return terms_; }
    bool has_terms() const { return !terms_.empty(); }
    void add_term(const LieMonomial& m, const Rational& c);

    LiePolynomial& operator+=(const LiePolynomial& o);
    LiePolynomial& operator-=(const LiePolynomial& o);
    LiePolynomial& operator*=(const Rational& c);
    friend LiePolynomial operator+(LiePolynomial a, const LiePolynomial& b) { return a += b; }
    friend LiePolynomial operator-(LiePolynomial a, const LiePolynomial& b) { return a -= b; }
    friend LiePolynomial operator*(LiePolynomial a, const Rational& c) { return a *= c; }
    friend LiePolynomial operator*(const Rational& c, LiePolynomial a) { return a *= c; }

    NcPolynomial commutator_eval() const;

    /// Canonical basis coordinates, keyed by primitive word. Present only
    /// after canonicalization; empty map = zero element.
    const std::optional<std::map<Word, Rational>>& canonical() const { return canonical_; }
    void set_canonical(std::map<Word, Rational> coords) { canonical_ = std::move(coords); }
    bool is_canonical_zero() const { return canonical_ && canonical_->empty(); }

private:
    std::map<LieMonomial, Rational> terms_;
    std::optional<std::map<Word, Rational>> canonical_;
};

/// Bilinear bracket of formal combinations.
LiePolynomial lie_bracket(const LiePolynomial& a, const LiePolynomial& b);

/// [a_1,...,a_n]_L = [a_1,[a_2,...,[a_{n-1},a_n]...]]
LiePolynomial left_normed(std::span<const LiePolynomial> args);
/// [a_1,...,a_n]_R = [[...[a_1,a_2],...],a_n]
LiePolynomial right_normed(std::span<const LiePolynomial> args);
LiePolynomial left_normed_gens(std::span<const GeneratorId> gens);
LieMonomial left_normed_tree(std::span<const GeneratorId> gens);

/// Substitutes Lie polynomials into the leaves, multilinearly.
LiePolynomial substitute(const LiePolynomial& p, const std::map<GeneratorId, LiePolynomial>& assignment);

/// Dynkin-Specht-Wever bracketing: p = sum a_s w_s homogeneous of degree n
/// maps to sum a_s [w_s]_L. Fixes Lie elements up to the factor n.
NcPolynomial dsw_left(const NcPolynomial& p, int n);

/// Weighted variant: the last letter of each word is scaled by its weight;
/// acts on Lie elements of multigrade X_1^{m_1}..X_s^{m_s} as multiplication
/// by m_1 w_1 + ... + m_s w_s. Missing weights count as zero.
NcPolynomial dsw_weighted(const NcPolynomial& p, const std::map<GeneratorId, Rational>& weights);

/// Mixed-bracket variant sum_s sum_{p=1}^{n-1} a_s [[w_{s,<=p}]_L, [w_{s,>p}]_R];
/// acts as n(n-1) on Lie elements of degree n >= 2.
NcPolynomial dsw_double(const NcPolynomial& p, int n);

/// Degree-wise DSW membership test: dsw_left(p_n) == n * p_n for every
/// homogeneous component.
bool is_lie_element(const NcPolynomial& p);

/// All bracket monomials of a multigrade: every full binary tree over every
/// arrangement of the multiset. Grows factorially; desk scale only.
std::vector<LieMonomial> all_bracket_monomials(const Multidegree& grade);

}  // namespace freelie
