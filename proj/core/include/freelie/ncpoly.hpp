#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "freelie/rational.hpp"

namespace freelie {

/// Index naming a formal variable X_lambda; totally ordered by integer order.
using GeneratorId = std::uint32_t;

/// Multiset of generator multiplicities; zero entries are never stored.
using Multidegree = std::map<GeneratorId, int>;

/// Monomial of the free associative algebra: a finite generator sequence.
/// The empty word is the unit. Comparison is the canonical term order:
/// length first, then lexicographic by generator id.
class Word {
public:
    Word() = default;
    explicit Word(std::vector<GeneratorId> letters) : letters_(std::move(letters)) {}
    static Word single(GeneratorId g) { return Word({g}); }

    const std::vector<GeneratorId>& letters() const { return letters_; }
    std::size_t size() const { return letters_.size(); }
    bool empty() const { return letters_.empty(); }
    GeneratorId operator[](std::size_t i) const { return letters_[i]; }

    Word concat(const Word& o) const;
    Multidegree multidegree() const;

    bool operator==(const Word& o) const { return letters_ == o.letters_; }
    bool operator!=(const Word& o) const { return letters_ != o.letters_; }
    bool operator<(const Word& o) const {
        if (letters_.size() != o.letters_.size()) return letters_.size() < o.letters_.size();
        return letters_ < o.letters_;
    }

private:
    std::vector<GeneratorId> letters_;
};

/// Element of F_Q[X_lambda]: sparse map word -> coefficient, no stored zeros.
/// Term iteration order is the canonical serialization order.
class NcPolynomial {
public:
    NcPolynomial() = default;
    explicit NcPolynomial(const Rational& c);
    static NcPolynomial one() { return NcPolynomial(Rational(1)); }
    static NcPolynomial generator(GeneratorId g);
    static NcPolynomial monomial(Word w, const Rational& c);

    const std::map<Word, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    Rational coeff(const Word& w) const;
    Rational constant_term() const { return coeff(Word()); }
    /// Length of the longest word; 0 for the zero polynomial.
    int max_degree() const;

    void add_term(const Word& w, const Rational& c);

    NcPolynomial& operator+=(const NcPolynomial& o);
    NcPolynomial& operator-=(const NcPolynomial& o);
    NcPolynomial& operator*=(const Rational& c);
    friend NcPolynomial operator+(NcPolynomial a, const NcPolynomial& b) { return a += b; }
    friend NcPolynomial operator-(NcPolynomial a, const NcPolynomial& b) { return a -= b; }
    friend NcPolynomial operator*(NcPolynomial a, const Rational& c) { return a *= c; }
    friend NcPolynomial operator*(const Rational& c, NcPolynomial a) { return a *= c; }
    NcPolynomial operator-() const;

    /// Concatenation product, bilinear over terms.
    friend NcPolynomial operator*(const NcPolynomial& a, const NcPolynomial& b);

    bool operator==(const NcPolynomial& o) const { return terms_ == o.terms_; }
    bool operator!=(const NcPolynomial& o) const { return terms_ != o.terms_; }

private:
    std::map<Word, Rational> terms_;
};

/// pq - qp
NcPolynomial commutator(const NcPolynomial& p, const NcPolynomial& q);

/// Drops every word longer than max_len.
NcPolynomial truncate(const NcPolynomial& p, int max_len);

/// Component of homogeneous word length n.
NcPolynomial degree_part(const NcPolynomial& p, int n);

/// Partition of the terms by word multidegree; the parts sum back to p.
std::map<Multidegree, NcPolynomial> multidegree_split(const NcPolynomial& p);

/// exp truncated at word length N; requires zero constant term.
NcPolynomial truncated_exp(const NcPolynomial& p, int order);
/// log truncated at word length N; requires constant term exactly 1.
NcPolynomial truncated_log(const NcPolynomial& u, int order);

/// Algebra homomorphism extending the assignment; unassigned generators map
/// to themselves.
NcPolynomial substitute(const NcPolynomial& p, const std::map<GeneratorId, NcPolynomial>& assignment);

/// Terms whose word is a permutation of vars: each listed generator exactly
/// once, nothing else. The empty set selects the constant term.
NcPolynomial multilinear_part(const NcPolynomial& p, const std::set<GeneratorId>& vars);

/// Associative expansion of the left-normed commutator [X_{w_1},...,X_{w_n}]_L.
NcPolynomial nc_left_normed(std::span<const GeneratorId> word);
/// Right-normed mirror [[..[X_1,X_2],..],X_n].
NcPolynomial nc_right_normed(std::span<const GeneratorId> word);

/// Alphabet split for the elimination map: one distinguished letter X and a
/// set of letters E.
struct AlphabetSplit {
    GeneratorId x;
    std::set<GeneratorId> e;
};

/// Sends each monomial E..E X .. E..E X E..E to the product of left-normed
/// commutators [E..,X]_L followed by the trailing E-block. Multidegree
/// preserving and bijective per multigrade.
NcPolynomial theta(const NcPolynomial& p, const AlphabetSplit& split);
/// Exact two-sided inverse of theta, by triangular back-substitution.
NcPolynomial theta_inverse(const NcPolynomial& p, const AlphabetSplit& split);

std::string to_string(const Word& w);
std::string to_string(const NcPolynomial& p);

}  // namespace freelie

template <>
struct std::hash<freelie::Word> {
    std::size_t operator()(const freelie::Word& w) const noexcept {
        std::size_t h = 0xcbf29ce484222325ull;
        for (auto g : w.letters()) h = (h ^ (g + 1)) * 0x100000001b3ull;
        return h;
    }
};
