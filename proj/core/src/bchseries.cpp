#include "freelie/bchseries.hpp"

#include <functional>
#include <set>

#include "freelie/errors.hpp"

namespace freelie {

const NcPolynomial& BchSeries::degree(int n) const {
    static const NcPolynomial zero;
    auto it = parts_.find(n);
    return it == parts_.end() ? zero : it->second;
}

void BchSeries::set_degree(int n, NcPolynomial p) {
    if (n < 1 || n > max_degree_) throw Error("BchSeries: degree out of range");
    if (p.is_zero())
        parts_.erase(n);
    else
        parts_[n] = std::move(p);
}

BchSeries bch_magnus(int max_degree, MagnusTable& mu) {
    if (max_degree < 1) throw Error("bch_magnus: degree must be positive");
    BchSeries s(max_degree);
    NcPolynomial x = NcPolynomial::generator(kBchX), y = NcPolynomial::generator(kBchY);
    for (int n = 1; n <= max_degree; ++n) {
        const NcPolynomial& mu_n = mu.expansion(n);
        NcPolynomial acc;
        for (int r = 0; r <= n; ++r) {
            std::map<GeneratorId, NcPolynomial> sub;
            for (int j = 1; j <= n; ++j) sub.emplace(static_cast<GeneratorId>(j), j <= r ? x : y);
            acc += (Rational::inv_factorial(static_cast<unsigned>(r)) *
                    Rational::inv_factorial(static_cast<unsigned>(n - r))) *
                   substitute(mu_n, sub);
        }
        s.set_degree(n, std::move(acc));
    }
    return s;
}

BchSeries bch_logexp_oracle(int max_degree) {
    if (max_degree < 1) throw Error("bch_logexp_oracle: degree must be positive");
    NcPolynomial prod = truncate(truncated_exp(NcPolynomial::generator(kBchX), max_degree) *
                                     truncated_exp(NcPolynomial::generator(kBchY), max_degree),
                                 max_degree);
    NcPolynomial log = truncated_log(prod, max_degree);
    BchSeries s(max_degree);
    for (int n = 1; n <= max_degree; ++n) s.set_degree(n, degree_part(log, n));
    return s;
}

namespace {

// Walks every (p_1,q_1,..,p_k,q_k) with p_i + q_i >= 1 and total degree d.
void for_each_block_sequence(int d, const std::function<void(const std::vector<std::pair<int, int>>&)>& visit) {
    std::vector<std::pair<int, int>> blocks;
    std::function<void(int)> go = [&](int remaining) {
        if (remaining == 0) {
            if (!blocks.empty()) visit(blocks);
            return;
        }
        for (int total = 1; total <= remaining; ++total)
            for (int p = 0; p <= total; ++p) {
                blocks.emplace_back(p, total - p);
                go(remaining - total);
                blocks.pop_back();
            }
    };
    go(d);
}

std::vector<GeneratorId> block_letters(const std::vector<std::pair<int, int>>& blocks, bool trailing_x) {
    std::vector<GeneratorId> w;
    for (const auto& [p, q] : blocks) {
        w.insert(w.end(), static_cast<std::size_t>(p), kBchX);
        w.insert(w.end(), static_cast<std::size_t>(q), kBchY);
    }
    if (trailing_x) w.push_back(kBchX);
    return w;
}

Rational factorials_product(const std::vector<std::pair<int, int>>& blocks) {
    Rational f(1);
    for (const auto& [p, q] : blocks)
        f *= Rational::factorial(static_cast<unsigned>(p)) * Rational::factorial(static_cast<unsigned>(q));
    return f;
}

}  // namespace

BchSeries bch_dynkin(int max_degree) {
    if (max_degree < 1) throw Error("bch_dynkin: degree must be positive");
    BchSeries s(max_degree);
    for (int d = 1; d <= max_degree; ++d) {
        NcPolynomial acc;
        for_each_block_sequence(d, [&](const std::vector<std::pair<int, int>>& blocks) {
            auto w = block_letters(blocks, false);
            if (w.size() >= 2 && w[w.size() - 1] == w[w.size() - 2]) return;  // innermost bracket vanishes
            const int k = static_cast<int>(blocks.size());
            Rational coeff = Rational(1, d) / factorials_product(blocks) * Rational(1, k);
            if (k % 2 == 0) coeff = -coeff;
            acc += coeff * nc_left_normed(w);
        });
        s.set_degree(d, std::move(acc));
    }
    return s;
}

BchSeries bch_dynkin_variant(int max_degree) {
    if (max_degree < 1) throw Error("bch_dynkin_variant: degree must be positive");
    BchSeries s(max_degree);
    // degree 1: the standalone Y plus the empty-product term [X]
    {
        NcPolynomial d1 = NcPolynomial::generator(kBchY) + NcPolynomial::generator(kBchX);
        s.set_degree(1, std::move(d1));
    }
    for (int d = 2; d <= max_degree; ++d) {
        NcPolynomial acc;
        for_each_block_sequence(d - 1, [&](const std::vector<std::pair<int, int>>& blocks) {
            auto w = block_letters(blocks, true);
            if (w.size() >= 2 && w[w.size() - 1] == w[w.size() - 2]) return;
            const int k = static_cast<int>(blocks.size());
            int psum = 0;
            for (const auto& [p, q] : blocks) psum += p;
            Rational coeff = Rational(1, psum + 1) / factorials_product(blocks) * Rational(1, k + 1);
            if (k % 2 == 1) coeff = -coeff;
            acc += coeff * nc_left_normed(w);
        });
        s.set_degree(d, std::move(acc));
    }
    return s;
}

NcPolynomial mu_by_projection(int n) {
    if (n < 1) throw Error("mu_by_projection: n must be positive");
    NcPolynomial prod = NcPolynomial::one();
    for (int i = 1; i <= n; ++i)
        prod = truncate(prod * truncated_exp(NcPolynomial::generator(static_cast<GeneratorId>(i)), n), n);
    NcPolynomial log = truncated_log(prod, n);
    std::set<GeneratorId> vars;
    for (int i = 1; i <= n; ++i) vars.insert(static_cast<GeneratorId>(i));
    return multilinear_part(log, vars);
}

}  // namespace freelie
