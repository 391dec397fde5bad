#include "freelie/series.hpp"

#include "freelie/errors.hpp"

namespace freelie {

Series1::Series1(int order) {
    if (order < 0) throw Error("Series1: negative order");
    coeffs_.assign(static_cast<size_t>(order) + 1, Rational());
}

Series1 Series1::one(int order) {
    Series1 s(order);
    s.coeffs_[0] = Rational(1);
    return s;
}

Series1 Series1::monomial(int k, const Rational& c, int order) {
    Series1 s(order);
    if (k <= order) s.coeffs_[static_cast<size_t>(k)] = c;
    return s;
}

Series1 Series1::exp_series(int order) {
    Series1 s(order);
    for (int k = 0; k <= order; ++k) s.coeffs_[static_cast<size_t>(k)] = Rational::inv_factorial(static_cast<unsigned>(k));
    return s;
}

const Rational& Series1::coeff(int k) const {
    if (k < 0 || k > order()) throw Error("Series1: coefficient index out of range");
    return coeffs_[static_cast<size_t>(k)];
}

void Series1::set_coeff(int k, const Rational& c) {
    if (k < 0 || k > order()) throw Error("Series1: coefficient index out of range");
    coeffs_[static_cast<size_t>(k)] = c;
}

int Series1::valuation() const {
    for (int k = 0; k <= order(); ++k)
        if (!coeffs_[static_cast<size_t>(k)].is_zero()) return k;
    return order() + 1;
}

Series1 Series1::shift_down(int k) const {
    for (int i = 0; i < k; ++i)
        if (!coeffs_[static_cast<size_t>(i)].is_zero())
            throw Error("Series1: shift_down drops a nonzero coefficient");
    Series1 s(order() - k);
    for (int i = k; i <= order(); ++i) s.coeffs_[static_cast<size_t>(i - k)] = coeffs_[static_cast<size_t>(i)];
    return s;
}

static void require_same_order(int a, int b) {
    if (a != b) throw Error("series: mismatched truncation orders");
}

Series1& Series1::operator+=(const Series1& o) {
    require_same_order(order(), o.order());
    for (int k = 0; k <= order(); ++k) coeffs_[static_cast<size_t>(k)] += o.coeffs_[static_cast<size_t>(k)];
    return *this;
}

Series1& Series1::operator-=(const Series1& o) {
    require_same_order(order(), o.order());
    for (int k = 0; k <= order(); ++k) coeffs_[static_cast<size_t>(k)] -= o.coeffs_[static_cast<size_t>(k)];
    return *this;
}

Series1 operator*(const Series1& a, const Series1& b) {
    require_same_order(a.order(), b.order());
    Series1 r(a.order());
    for (int i = 0; i <= a.order(); ++i) {
        if (a.coeff(i).is_zero()) continue;
        for (int j = 0; i + j <= a.order(); ++j) {
            if (b.coeff(j).is_zero()) continue;
            r.set_coeff(i + j, r.coeff(i + j) + a.coeff(i) * b.coeff(j));
        }
    }
    return r;
}

Series1 operator/(const Series1& a, const Series1& b) {
    require_same_order(a.order(), b.order());
    const int N = a.order();
    Series1 num = a, den = b;
    if (den.coeff(0).is_zero()) {
        int v = den.valuation();
        if (v > N) throw DivisionByNonUnit("series division by zero series");
        if (a.valuation() < v)
            throw DivisionByNonUnit("series division: dividend valuation below divisor valuation");
        // Treat both operands as polynomial data: the dropped tail is zero.
        Series1 ns(N), ds(N);
        for (int k = v; k <= N; ++k) {
            ds.set_coeff(k - v, den.coeff(k));
            ns.set_coeff(k - v, num.coeff(k));
        }
        for (int k = N - v + 1; k <= N; ++k) {
            ds.set_coeff(k, Rational());
            ns.set_coeff(k, Rational());
        }
        num = ns;
        den = ds;
    }
    Series1 q(N);
    for (int k = 0; k <= N; ++k) {
        Rational acc = num.coeff(k);
        for (int j = 0; j < k; ++j) acc -= q.coeff(j) * den.coeff(k - j);
        q.set_coeff(k, acc / den.coeff(0));
    }
    return q;
}

Rational Series2::coeff(int i, int j) const {
    auto it = terms_.find({i, j});
    return it == terms_.end() ? Rational() : it->second;
}

void Series2::add_coeff(int i, int j, const Rational& c) {
    if (i < 0 || j < 0 || i + j > order_) throw Error("Series2: index outside truncation");
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace({i, j}, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

Series2& Series2::operator+=(const Series2& o) {
    require_same_order(order_, o.order_);
    for (const auto& [ij, c] : o.terms_) add_coeff(ij.first, ij.second, c);
    return *this;
}

Series2& Series2::operator-=(const Series2& o) {
    require_same_order(order_, o.order_);
    for (const auto& [ij, c] : o.terms_) add_coeff(ij.first, ij.second, -c);
    return *this;
}

Series2 operator*(const Series2& a, const Series2& b) {
    require_same_order(a.order(), b.order());
    Series2 r(a.order());
    for (const auto& [ij, c] : a.terms())
        for (const auto& [kl, d] : b.terms()) {
            int i = ij.first + kl.first, j = ij.second + kl.second;
            if (i + j <= a.order()) r.add_coeff(i, j, c * d);
        }
    return r;
}

Series2 Series2::shift_down_x() const {
    Series2 r(order_ - 1);
    for (const auto& [ij, c] : terms_) {
        if (ij.first == 0)
            throw Error("Series2: shift_down_x with nonzero x^0 coefficient");
        r.add_coeff(ij.first - 1, ij.second, c);
    }
    return r;
}

Series2 Series2::shift_down_y() const {
    Series2 r(order_ - 1);
    for (const auto& [ij, c] : terms_) {
        if (ij.second == 0)
            throw Error("Series2: shift_down_y with nonzero y^0 coefficient");
        r.add_coeff(ij.first, ij.second - 1, c);
    }
    return r;
}

bool Series2::operator==(const Series2& o) const {
    return order_ == o.order_ && terms_ == o.terms_;
}

std::vector<Rational> beta_coeffs(int n_max) {
    if (n_max < 0) throw Error("beta_coeffs: negative order");
    // x/(e^x-1) is the reciprocal of sum_k x^k/(k+1)!.
    Series1 g(n_max);
    for (int k = 0; k <= n_max; ++k) g.set_coeff(k, Rational::inv_factorial(static_cast<unsigned>(k) + 1));
    Series1 q = Series1::one(n_max) / g;
    std::vector<Rational> out;
    out.reserve(static_cast<size_t>(n_max) + 1);
    for (int k = 0; k <= n_max; ++k) out.push_back(q.coeff(k));
    return out;
}

std::vector<Rational> beta_tilde_coeffs(int n_max) {
    auto b = beta_coeffs(n_max);
    for (size_t r = 1; r < b.size(); r += 2) b[r] = -b[r];
    return b;
}

namespace {

// sum_s beta_s (ax + by)^s truncated at total order N, as a bivariate series.
Series2 beta_of_linear(const std::vector<Rational>& beta, int a, int b, int N) {
    Series2 acc(N);
    // powers of (ax + by) by repeated multiplication
    Series2 lin(N);
    lin.add_coeff(1, 0, Rational(a));
    lin.add_coeff(0, 1, Rational(b));
    Series2 pw(N);
    pw.add_coeff(0, 0, Rational(1));
    for (int s = 0; s <= N; ++s) {
        if (!beta[static_cast<size_t>(s)].is_zero()) {
            for (const auto& [ij, c] : pw.terms())
                acc.add_coeff(ij.first, ij.second, c * beta[static_cast<size_t>(s)]);
        }
        if (s < N) pw = pw * lin;
    }
    return acc;
}

}  // namespace

Series2 alpha_coeffs(int n_max) {
    if (n_max < 0) throw Error("alpha_coeffs: negative order");
    const int N = n_max + 1;  // one extra order to survive the division by x (resp. y)
    auto beta = beta_coeffs(N);

    // (beta(-x-y) - beta(-y)) / x * beta(x)
    Series2 num = beta_of_linear(beta, -1, -1, N) - beta_of_linear(beta, 0, -1, N);
    Series2 lhs = num.shift_down_x() * beta_of_linear(beta, 1, 0, n_max);

    // -(beta(x+y) - beta(x)) / y * beta(-y)
    Series2 num2 = beta_of_linear(beta, 1, 1, N) - beta_of_linear(beta, 1, 0, N);
    Series2 zero(N);
    Series2 rhs = (zero - num2).shift_down_y() * beta_of_linear(beta, 0, -1, n_max);

    if (!(lhs == rhs))
        throw InternalMismatch("alpha_coeffs: the two closed forms of alpha(x,y) disagree");
    return lhs;
}

}  // namespace freelie
