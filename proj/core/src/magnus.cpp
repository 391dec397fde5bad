#include "freelie/magnus.hpp"

#include <numeric>

#include "freelie/combinatorics.hpp"
#include "freelie/errors.hpp"
#include "freelie/series.hpp"

namespace freelie {

int descents(const std::vector<int>& sigma) {
    int d = 0;
    for (std::size_t i = 0; i + 1 < sigma.size(); ++i)
        if (sigma[i] > sigma[i + 1]) ++d;
    return d;
}

int ascents(const std::vector<int>& sigma) {
    return static_cast<int>(sigma.size()) - 1 - descents(sigma);
}

Rational solomon_coefficient(const std::vector<int>& sigma) {
    if (sigma.empty()) throw Error("solomon_coefficient: empty permutation");
    int des = descents(sigma), asc = ascents(sigma);
    Rational c = Rational::factorial(static_cast<unsigned>(des)) *
                 Rational::factorial(static_cast<unsigned>(asc)) /
                 Rational::factorial(static_cast<unsigned>(sigma.size()));
    return des % 2 ? -c : c;
}

NcPolynomial mu_closed(int n) {
    if (n < 1) throw Error("mu_closed: n must be positive");
    NcPolynomial r;
    for (const auto& sigma : permutations_of(n)) {
        std::vector<GeneratorId> w(sigma.size());
        for (std::size_t i = 0; i < sigma.size(); ++i) w[i] = static_cast<GeneratorId>(sigma[i]);
        r.add_term(Word(std::move(w)), solomon_coefficient(sigma));
    }
    return r;
}

namespace {

// mu_p with arguments relabeled to the given index list.
LiePolynomial relabeled_mu(const LiePolynomial& mu_p, const std::vector<int>& args) {
    std::map<GeneratorId, GeneratorId> m;
    for (std::size_t j = 0; j < args.size(); ++j)
        m.emplace(static_cast<GeneratorId>(j + 1), static_cast<GeneratorId>(args[j]));
    LiePolynomial out;
    for (const auto& [mono, c] : mu_p.terms()) out.add_term(mono.relabel(m), c);
    return out;
}

std::vector<int> range_vec(int lo, int hi) {  // inclusive bounds
    std::vector<int> v;
    for (int i = lo; i <= hi; ++i) v.push_back(i);
    return v;
}

}  // namespace

LiePolynomial MagnusTable::build(int n, MuFlavor flavor) {
    if (n == 1 && flavor == MuFlavor::C) return LiePolynomial::generator(1);

    if (flavor == MuFlavor::L || flavor == MuFlavor::R) {
        const bool left = flavor == MuFlavor::L;
        auto betas = left ? beta_coeffs(n - 1) : beta_tilde_coeffs(n - 1);
        // (L): partitions of {2..n}, pivot X_1 last; (R): partitions of
        // {1..n-1}, pivot X_n last.
        auto elems = left ? range_vec(2, n) : range_vec(1, n - 1);
        const GeneratorId pivot = left ? 1 : static_cast<GeneratorId>(n);
        LiePolynomial acc;
        for_each_ordered_set_partition<int>(elems, [&](const std::vector<std::vector<int>>& blocks) {
            const Rational& coeff = betas[blocks.size()];
            std::vector<LiePolynomial> factors;
            factors.reserve(blocks.size() + 1);
            for (const auto& block : blocks)
                factors.push_back(relabeled_mu(lie(static_cast<int>(block.size()), flavor), block));
            factors.push_back(LiePolynomial::generator(pivot));
            LiePolynomial term = left_normed(factors);
            term *= coeff;
            acc += term;
        });
        return acc;
    }

    // (C): split partitions of {2..n-1} between the X_1 side and the X_n side.
    Series2 alpha = alpha_coeffs(std::max(0, n - 2));
    auto inner = range_vec(2, n - 1);
    LiePolynomial acc;
    const std::size_t m = inner.size();
    for (std::uint64_t mask = 0; mask < (1ull << m); ++mask) {
        std::vector<int> left_side, right_side;
        for (std::size_t i = 0; i < m; ++i)
            (mask & (1ull << i) ? left_side : right_side).push_back(inner[i]);
        for_each_ordered_set_partition<int>(left_side, [&](const std::vector<std::vector<int>>& iblocks) {
            std::vector<LiePolynomial> lf;
            lf.reserve(iblocks.size() + 1);
            for (const auto& b : iblocks) lf.push_back(relabeled_mu(lie(static_cast<int>(b.size()), flavor), b));
            lf.push_back(LiePolynomial::generator(1));
            LiePolynomial lbr = left_normed(lf);
            for_each_ordered_set_partition<int>(right_side, [&](const std::vector<std::vector<int>>& jblocks) {
                const Rational coeff =
                    alpha.coeff(static_cast<int>(iblocks.size()), static_cast<int>(jblocks.size()));
                if (coeff.is_zero()) return;
                std::vector<LiePolynomial> rf;
                rf.reserve(jblocks.size() + 1);
                for (const auto& b : jblocks)
                    rf.push_back(relabeled_mu(lie(static_cast<int>(b.size()), flavor), b));
                rf.push_back(LiePolynomial::generator(static_cast<GeneratorId>(n)));
                LiePolynomial term = lie_bracket(lbr, left_normed(rf));
                term *= coeff;
                acc += term;
            });
        });
    }
    return acc;
}

const MagnusTable::Entry& MagnusTable::entry(int n, MuFlavor flavor) {
    if (n < 1) throw Error("MagnusTable: n must be positive");
    std::lock_guard<std::recursive_mutex> lock(mutex_);
    auto key = std::make_pair(n, static_cast<int>(flavor));
    auto it = cache_.find(key);
    if (it != cache_.end()) return it->second;
    Entry e;
    e.lie = build(n, flavor);
    e.expansion = e.lie.commutator_eval();
    auto [pos, inserted] = cache_.emplace(key, std::move(e));
    return pos->second;
}

const LiePolynomial& MagnusTable::lie(int n, MuFlavor flavor) {
    return entry(n, flavor).lie;
}

const NcPolynomial& MagnusTable::expansion(int n, MuFlavor flavor) {
    return entry(n, flavor).expansion;
}

const NcPolynomial& MagnusTable::closed(int n) {
    if (n < 1) throw Error("MagnusTable: n must be positive");
    std::lock_guard<std::recursive_mutex> lock(mutex_);
    auto it = closed_.find(n);
    if (it != closed_.end()) return it->second;
    auto [pos, inserted] = closed_.emplace(n, mu_closed(n));
    return pos->second;
}

SwapWitness check_mu_swap_identity(MagnusTable& table, int n, int k) {
    if (n < 2 || k <= 1 || k > n) throw InvalidPosition("check_mu_swap_identity: need n >= 2, 1 < k <= n");
    const NcPolynomial& mu_n = table.expansion(n);

    std::map<GeneratorId, NcPolynomial> swap_kk1 = {
        {static_cast<GeneratorId>(k - 1), NcPolynomial::generator(static_cast<GeneratorId>(k))},
        {static_cast<GeneratorId>(k), NcPolynomial::generator(static_cast<GeneratorId>(k - 1))}};
    NcPolynomial lhs = mu_n - substitute(mu_n, swap_kk1);

    // mu_{n-1} with argument slots .._1, [X_{k-1},X_k], .._2
    std::map<GeneratorId, NcPolynomial> fill;
    for (int j = 1; j <= n - 1; ++j) {
        if (j < k - 1)
            fill.emplace(static_cast<GeneratorId>(j), NcPolynomial::generator(static_cast<GeneratorId>(j)));
        else if (j == k - 1)
            fill.emplace(static_cast<GeneratorId>(j),
                         commutator(NcPolynomial::generator(static_cast<GeneratorId>(k - 1)),
                                    NcPolynomial::generator(static_cast<GeneratorId>(k))));
        else
            fill.emplace(static_cast<GeneratorId>(j), NcPolynomial::generator(static_cast<GeneratorId>(j + 1)));
    }
    NcPolynomial rhs = substitute(table.expansion(n - 1), fill);

    SwapWitness w;
    w.difference = lhs - rhs;
    w.equal = w.difference.is_zero();
    return w;
}

NcPolynomial mu_rebracket(MagnusTable& table, int n, RebracketMode mode, int k,
                          const std::vector<Rational>& weights) {
    if (n < 1) throw Error("mu_rebracket: n must be positive");
    if (mode == RebracketMode::FixedLast && (k < 1 || k > n))
        throw InvalidPosition("mu_rebracket: fixed position outside 1..n");
    if (mode == RebracketMode::Weighted && static_cast<int>(weights.size()) != n)
        throw Error("mu_rebracket: weighted mode needs n weights");
    if (mode == RebracketMode::Double && n < 2)
        throw Error("mu_rebracket: double mode needs n >= 2");

    NcPolynomial acc;
    for (const auto& sigma : permutations_of(n)) {
        Rational c = solomon_coefficient(sigma);
        std::vector<GeneratorId> w(sigma.size());
        for (std::size_t i = 0; i < sigma.size(); ++i) w[i] = static_cast<GeneratorId>(sigma[i]);
        switch (mode) {
            case RebracketMode::FixedLast:
                if (sigma.back() != k) break;
                acc += c * nc_left_normed(w);
                break;
            case RebracketMode::Summed:
                acc += c * nc_left_normed(w);
                break;
            case RebracketMode::Weighted: {
                const Rational& wt = weights[static_cast<std::size_t>(sigma.back() - 1)];
                if (!wt.is_zero()) acc += (c * wt) * nc_left_normed(w);
                break;
            }
            case RebracketMode::Double:
                for (int p = 1; p < n; ++p) {
                    std::span<const GeneratorId> all(w);
                    acc += c * commutator(nc_left_normed(all.subspan(0, static_cast<std::size_t>(p))),
                                          nc_right_normed(all.subspan(static_cast<std::size_t>(p))));
                }
                break;
        }
    }
    return acc;
}

}  // namespace freelie
