#pragma once

#include <map>

#include "freelie/magnus.hpp"
#include "freelie/ncpoly.hpp"

namespace freelie {

/// Generators of the two-letter BCH series.
inline constexpr GeneratorId kBchX = 1;
inline constexpr GeneratorId kBchY = 2;

/// Homogeneous components of log(exp X exp Y) up to a degree bound; each
/// component is a Lie element.
class BchSeries {
public:
    explicit BchSeries(int max_degree) : max_degree_(max_degree) {}

    int max_degree() const { return max_degree_; }
    const NcPolynomial& degree(int n) const;
    void set_degree(int n, NcPolynomial p);

    bool operator==(const BchSeries& o) const { return max_degree_ == o.max_degree_ && parts_ == o.parts_; }

private:
    int max_degree_;
    std::map<int, NcPolynomial> parts_;
};

/// BCH_n = sum_r 1/(r!(n-r)!) mu_n(X..X, Y..Y), substituting into the Magnus
/// commutators.
BchSeries bch_magnus(int max_degree, MagnusTable& mu);

/// The independent reference route: truncated log of the truncated product of
/// exponentials, split by total degree.
BchSeries bch_logexp_oracle(int max_degree);

/// Dynkin's left-normed bracket formula with denominators
/// (p_1+..+q_k) p_1!..q_k!.
BchSeries bch_dynkin(int max_degree);

/// The Y-leading variant with trailing X and denominators (p_1+..+p_k+1) p_1!..q_k!.
BchSeries bch_dynkin_variant(int max_degree);

/// Multilinear projection route: the multiplicity-one part of
/// log(exp X_1 .. exp X_n); equals mu_closed(n).
NcPolynomial mu_by_projection(int n);

}  // namespace freelie
