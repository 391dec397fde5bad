#pragma once

#include <map>
#include <utility>
#include <vector>

#include "freelie/rational.hpp"

namespace freelie {

/// Truncated formal power series in one variable: coefficients of x^0..x^N,
/// exact rationals, explicit truncation order everywhere.
class Series1 {
public:
    explicit Series1(int order);
    static Series1 one(int order);
    static Series1 monomial(int k, const Rational& c, int order);
    /// sum_{k=0..N} x^k / k!
    static Series1 exp_series(int order);

    int order() const { return static_cast<int>(coeffs_.size()) - 1; }
    const Rational& coeff(int k) const;
    void set_coeff(int k, const Rational& c);

    /// Index of the lowest nonzero coefficient, or order()+1 for the zero series.
    int valuation() const;
    /// Divides out x^k; the dropped low coefficients must be zero.
    Series1 shift_down(int k) const;

    Series1& operator+=(const Series1& o);
    Series1& operator-=(const Series1& o);
    friend Series1 operator+(Series1 a, const Series1& b) { return a += b; }
    friend Series1 operator-(Series1 a, const Series1& b) { return a -= b; }
    friend Series1 operator*(const Series1& a, const Series1& b);

    /// Long division truncated at the common order. When the divisor has zero
    /// constant term the quotient is formed only if a's valuation covers b's;
    /// otherwise DivisionByNonUnit.
    friend Series1 operator/(const Series1& a, const Series1& b);

    bool operator==(const Series1& o) const { return coeffs_ == o.coeffs_; }

private:
    std::vector<Rational> coeffs_;  // size order+1
};

/// Truncated series in two variables; stores coefficients of x^i y^j for
/// i + j <= N, zeros omitted.
class Series2 {
public:
    explicit Series2(int order) : order_(order) {}

    int order() const { return order_; }
    Rational coeff(int i, int j) const;
    void add_coeff(int i, int j, const Rational& c);
    const std::map<std::pair<int, int>, Rational>& terms() const { return terms_; }

    Series2& operator+=(const Series2& o);
    Series2& operator-=(const Series2& o);
    friend Series2 operator+(Series2 a, const Series2& b) { return a += b; }
    friend Series2 operator-(Series2 a, const Series2& b) { return a -= b; }
    friend Series2 operator*(const Series2& a, const Series2& b);

    /// Every stored coefficient with i == 0 must vanish; strips one x power.
    Series2 shift_down_x() const;
    /// Mirror of shift_down_x for y.
    Series2 shift_down_y() const;

    bool operator==(const Series2& o) const;

private:
    int order_;
    std::map<std::pair<int, int>, Rational> terms_;
};

/// Coefficients beta_0..beta_{n_max} of x/(e^x - 1); s! * beta_s is the s-th
/// Bernoulli number.
std::vector<Rational> beta_coeffs(int n_max);

/// Coefficients of beta(-x) = -x/(e^{-x} - 1); equals (-1)^r beta_r.
std::vector<Rational> beta_tilde_coeffs(int n_max);

/// Coefficients alpha_{s,r} (s = x-power, r = y-power, s + r <= n_max) of
///   alpha(x,y) = (beta(-x-y) - beta(-y))/x * beta(x).
/// Also evaluates the mirrored closed form -(beta(x+y) - beta(x))/y * beta(-y)
/// and throws InternalMismatch if the two disagree.
Series2 alpha_coeffs(int n_max);

}  // namespace freelie
