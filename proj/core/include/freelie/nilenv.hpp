#pragma once

#include <map>
#include <mutex>
#include <vector>

#include "freelie/magnus.hpp"
#include "freelie/report.hpp"
#include "freelie/wordbasis.hpp"

namespace freelie {

/// Free k-nilpotent Lie algebra on num_gens generators: the primitive-word
/// basis up to degree k, with brackets truncated by nilpotency. Structure
/// constants are cached; access is guarded.
class NilAlgebra {
public:
    /// Coordinates over the basis; absent ids are zero.
    using Element = std::map<std::uint32_t, Rational>;

    NilAlgebra(int nil_class, int num_gens);

    int nil_class() const { return k_; }
    int num_gens() const { return gens_; }
    const BasisRegistry& registry() const { return reg_; }
    int degree_of(std::uint32_t id) const { return reg_.element(id).degree; }

    Element generator(GeneratorId g) const;
    /// Brackets with total degree beyond the class vanish.
    Element bracket(const Element& a, const Element& b) const;

    /// Evaluates a bracket-tree polynomial at the assigned elements, inside
    /// the nilpotent algebra.
    Element evaluate(const LiePolynomial& p, const std::map<GeneratorId, Element>& assignment) const;

private:
    int k_, gens_;
    BasisRegistry reg_;
    mutable std::mutex mutex_;
    mutable std::map<std::pair<std::uint32_t, std::uint32_t>, Element> bracket_cache_;
};

/// Commutative monomial of the symmetric power: a sorted multiset of basis ids.
using SymWord = std::vector<std::uint32_t>;

/// Polynomial in the symmetric algebra over the nilpotent Lie algebra.
class SymPolynomial {
public:
    SymPolynomial() = default;
    static SymPolynomial unit(const Rational& c = Rational(1));
    static SymPolynomial monomial(SymWord w, const Rational& c);
    static SymPolynomial from_element(const NilAlgebra::Element& e, const Rational& scale = Rational(1));

    const std::map<SymWord, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    void add_term(SymWord w, const Rational& c);

    SymPolynomial& operator+=(const SymPolynomial& o);
    SymPolynomial& operator-=(const SymPolynomial& o);
    friend SymPolynomial operator+(SymPolynomial a, const SymPolynomial& b) { return a += b; }
    friend SymPolynomial operator-(SymPolynomial a, const SymPolynomial& b) { return a -= b; }

    bool operator==(const SymPolynomial& o) const { return terms_ == o.terms_; }
    bool operator!=(const SymPolynomial& o) const { return terms_ != o.terms_; }

private:
    std::map<SymWord, Rational> terms_;
};

/// bch_{n,m}: the 1/(n! m!) double symmetrization of mu_{n+m} over the two
/// argument groups, evaluated in the nilpotent algebra; identically zero once
/// n + m exceeds the class.
NilAlgebra::Element bch_nm(const NilAlgebra& alg, MagnusTable& mu, const std::vector<NilAlgebra::Element>& a,
                           const std::vector<NilAlgebra::Element>& b);

/// The direct enveloping product: sums over set partitions of the combined
/// factor positions (each block split into its increasing a-part and b-part,
/// blocks ordered by minima), evaluating each block by bch and multiplying
/// the results in the symmetric algebra.
SymPolynomial u_dir_mul(const NilAlgebra& alg, MagnusTable& mu, const SymPolynomial& p, const SymPolynomial& q);

/// Exhaustive associativity and unit checks on triples of sym-monomials of
/// combined degree <= k+2, plus the enveloping relation a.b - b.a = [a,b] and
/// the Z[1/k!] integrality of every structure constant encountered.
VerificationReport nilenv_suite(int nil_class, int num_gens);

/// Structure constants of the direct product on sym-monomial pairs up to
/// combined degree k+2, serialized for audit.
std::string structure_constant_table_json(int nil_class, int num_gens);

}  // namespace freelie
