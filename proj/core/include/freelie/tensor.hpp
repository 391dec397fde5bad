#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "freelie/rational.hpp"
#include "freelie/wordbasis.hpp"

namespace freelie {

/// Tensor monomial: a sequence of basis ids from a BasisRegistry. The empty
/// word is the unit of tensor degree 0.
using TensorWord = std::vector<std::uint32_t>;

/// Element of the tensor algebra over the free Lie algebra, graded by tensor
/// degree (= factor count). No stored zeros.
class TensorPolynomial {
public:
    TensorPolynomial() = default;
    static TensorPolynomial unit(const Rational& c = Rational(1));
    static TensorPolynomial monomial(TensorWord w, const Rational& c);

    const std::map<TensorWord, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    Rational coeff(const TensorWord& w) const;
    void add_term(const TensorWord& w, const Rational& c);

    /// Component of pure tensor degree n.
    TensorPolynomial degree_part(int n) const;
    int max_tensor_degree() const;

    TensorPolynomial& operator+=(const TensorPolynomial& o);
    TensorPolynomial& operator-=(const TensorPolynomial& o);
    TensorPolynomial& operator*=(const Rational& c);
    friend TensorPolynomial operator+(TensorPolynomial a, const TensorPolynomial& b) { return a += b; }
    friend TensorPolynomial operator-(TensorPolynomial a, const TensorPolynomial& b) { return a -= b; }
    friend TensorPolynomial operator*(const Rational& c, TensorPolynomial a) { return a *= c; }

    /// Concatenation of tensor words, bilinear.
    friend TensorPolynomial operator*(const TensorPolynomial& a, const TensorPolynomial& b);

    bool operator==(const TensorPolynomial& o) const { return terms_ == o.terms_; }
    bool operator!=(const TensorPolynomial& o) const { return terms_ != o.terms_; }

private:
    std::map<TensorWord, Rational> terms_;
};

/// Canonical evaluation into the enveloping algebra (here: the noncommutative
/// polynomial algebra): each factor maps to its commutator expansion, factors
/// multiply.
NcPolynomial m_eval(const TensorPolynomial& t, const BasisRegistry& reg);

/// Average over all permutations of the factors, per tensor degree; the
/// idempotent projector onto the symmetric subspace.
TensorPolynomial symmetrize(const TensorPolynomial& t);

std::string to_string(const TensorWord& w, const BasisRegistry& reg);

}  // namespace freelie
