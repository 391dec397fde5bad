#include "freelie/pbwmaps.hpp"

#include <algorithm>
#include <functional>

#include "freelie/combinatorics.hpp"
#include "freelie/errors.hpp"
#include "freelie/linalg.hpp"

namespace freelie {

namespace {

// mu_p evaluated at basis elements, as canonical coordinates over basis ids.
std::map<std::uint32_t, Rational> mu_at_basis(MagnusTable& mu, const BasisRegistry& reg,
                                              const std::vector<std::uint32_t>& args) {
    if (args.size() == 1) return {{args[0], Rational(1)}};
    std::map<GeneratorId, LiePolynomial> assignment;
    for (std::size_t j = 0; j < args.size(); ++j)
        assignment.emplace(static_cast<GeneratorId>(j + 1),
                           LiePolynomial::monomial(reg.element(args[j]).lie, Rational(1)));
    LiePolynomial value = substitute(mu.lie(static_cast<int>(args.size())), assignment);
    return reg.canonical_ids(value.commutator_eval());
}

}  // namespace

TensorPolynomial mu_sigma(const TensorPolynomial& t, MagnusTable& mu, const BasisRegistry& reg) {
    TensorPolynomial out;
    for (const auto& [w, c] : t.terms()) {
        if (w.empty()) {
            out.add_term(w, c);
            continue;
        }
        std::vector<int> positions(w.size());
        for (std::size_t i = 0; i < w.size(); ++i) positions[i] = static_cast<int>(i);
        for_each_ordered_set_partition<int>(positions, [&](const std::vector<std::vector<int>>& blocks) {
            Rational coeff = c * Rational::inv_factorial(static_cast<unsigned>(blocks.size()));
            // tensor product of the per-block mu values
            std::map<TensorWord, Rational> acc{{TensorWord{}, coeff}};
            for (const auto& block : blocks) {
                std::vector<std::uint32_t> args;
                args.reserve(block.size());
                for (int pos : block) args.push_back(w[static_cast<std::size_t>(pos)]);
                auto combo = mu_at_basis(mu, reg, args);
                std::map<TensorWord, Rational> next;
                for (const auto& [tw, tc] : acc)
                    for (const auto& [id, bc] : combo) {
                        TensorWord ext = tw;
                        ext.push_back(id);
                        auto [it, inserted] = next.try_emplace(std::move(ext), tc * bc);
                        if (!inserted) it->second += tc * bc;
                    }
                acc = std::move(next);
            }
            for (const auto& [tw, tc] : acc) out.add_term(tw, tc);
        });
    }
    return out;
}

TensorPolynomial bold_mu_sigma(const NcPolynomial& u, MagnusTable& mu, const BasisRegistry& reg) {
    TensorPolynomial lift;
    for (const auto& [w, c] : u.terms()) {
        TensorWord tw;
        tw.reserve(w.size());
        for (auto g : w.letters()) {
            auto id = reg.id_of_word(Word::single(g));
            if (!id) throw Error("bold_mu_sigma: generator X" + std::to_string(g) + " not in the registry");
            tw.push_back(*id);
        }
        lift.add_term(tw, c);
    }
    return mu_sigma(lift, mu, reg);
}

bool LiePermutation::valid(int n) const {
    std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
    int prev_max = 0, count = 0;
    for (const auto& b : blocks) {
        if (b.empty()) return false;
        int mx = *std::max_element(b.begin(), b.end());
        if (b.back() != mx || mx <= prev_max) return false;
        prev_max = mx;
        for (int x : b) {
            if (x < 1 || x > n || seen[static_cast<std::size_t>(x)]) return false;
            seen[static_cast<std::size_t>(x)] = true;
            ++count;
        }
    }
    return count == n;
}

std::vector<int> LiePermutation::to_permutation() const {
    std::vector<int> seq;
    for (auto it = blocks.rbegin(); it != blocks.rend(); ++it) seq.insert(seq.end(), it->begin(), it->end());
    return seq;
}

LiePermutation LiePermutation::from_permutation(const std::vector<int>& sigma) {
    LiePermutation lp;
    std::size_t start = 0;
    while (start < sigma.size()) {
        auto mx = std::max_element(sigma.begin() + static_cast<std::ptrdiff_t>(start), sigma.end());
        std::size_t end = static_cast<std::size_t>(mx - sigma.begin());
        lp.blocks.emplace_back(sigma.begin() + static_cast<std::ptrdiff_t>(start),
                               sigma.begin() + static_cast<std::ptrdiff_t>(end) + 1);
        start = end + 1;
    }
    std::reverse(lp.blocks.begin(), lp.blocks.end());
    return lp;
}

std::vector<LiePermutation> lie_permutations(int n) {
    if (n < 0) throw Error("lie_permutations: negative n");
    std::vector<int> elems(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) elems[static_cast<std::size_t>(i)] = i + 1;
    std::vector<LiePermutation> out;
    for_each_set_partition<int>(elems, [&](const std::vector<std::vector<int>>& blocks) {
        // reorder by maxima, then expand every arrangement of each block's
        // non-maximal elements
        std::vector<std::vector<int>> sorted = blocks;
        std::sort(sorted.begin(), sorted.end(),
                  [](const auto& a, const auto& b) { return a.back() < b.back(); });
        std::vector<std::vector<std::vector<int>>> per_block;
        for (const auto& b : sorted) {
            std::vector<int> rest(b.begin(), b.end() - 1);
            std::sort(rest.begin(), rest.end());
            std::vector<std::vector<int>> arrangements;
            do {
                std::vector<int> seq = rest;
                seq.push_back(b.back());
                arrangements.push_back(std::move(seq));
            } while (std::next_permutation(rest.begin(), rest.end()));
            per_block.push_back(std::move(arrangements));
        }
        std::vector<std::size_t> pick(per_block.size(), 0);
        while (true) {
            LiePermutation lp;
            for (std::size_t k = 0; k < per_block.size(); ++k) lp.blocks.push_back(per_block[k][pick[k]]);
            out.push_back(std::move(lp));
            std::size_t i = 0;
            for (; i < per_block.size(); ++i) {
                if (++pick[i] < per_block[i].size()) break;
                pick[i] = 0;
            }
            if (i == per_block.size()) break;
        }
    });
    std::sort(out.begin(), out.end());
    return out;
}

NcPolynomial lie_perm_basis_eval(const LiePermutation& lp) {
    std::vector<NcPolynomial> factors;
    factors.reserve(lp.blocks.size());
    for (const auto& b : lp.blocks) {
        std::vector<GeneratorId> gens;
        gens.reserve(b.size());
        for (int x : b) gens.push_back(static_cast<GeneratorId>(x));
        factors.push_back(nc_left_normed(gens));
    }
    if (factors.empty()) return NcPolynomial::one();
    // symmetrized product: average over all factor orders
    std::vector<std::size_t> order(factors.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    NcPolynomial acc;
    std::size_t count = 0;
    do {
        NcPolynomial prod = NcPolynomial::one();
        for (auto i : order) prod = prod * factors[i];
        acc += prod;
        ++count;
    } while (std::next_permutation(order.begin(), order.end()));
    acc *= Rational(1) / Rational(static_cast<long>(count));
    return acc;
}

std::map<LiePermutation, Rational> lie_perm_decompose(const NcPolynomial& p, int n) {
    auto perms = permutations_of(n);
    std::map<Word, int> row_of;
    for (std::size_t i = 0; i < perms.size(); ++i) {
        std::vector<GeneratorId> w(perms[i].begin(), perms[i].end());
        row_of.emplace(Word(std::move(w)), static_cast<int>(i));
    }
    for (const auto& [w, c] : p.terms())
        if (!row_of.count(w))
            throw Error("lie_perm_decompose: polynomial is not multilinear in 1.." + std::to_string(n));

    auto lps = lie_permutations(n);
    std::vector<std::vector<Rational>> a(perms.size(), std::vector<Rational>(lps.size()));
    for (std::size_t j = 0; j < lps.size(); ++j)
        for (const auto& [w, c] : lie_perm_basis_eval(lps[j]).terms())
            a[static_cast<std::size_t>(row_of.at(w))][j] = c;
    LinearSolver solver(std::move(a));
    if (!solver.full_column_rank())
        throw SingularSystem("lie_perm_decompose: decomposition matrix is singular");

    std::vector<Rational> v(perms.size());
    for (const auto& [w, c] : p.terms()) v[static_cast<std::size_t>(row_of.at(w))] = c;
    auto sol = solver.solve(v);
    if (!sol) throw SolveFailure("lie_perm_decompose: inconsistent system");
    std::map<LiePermutation, Rational> out;
    for (std::size_t j = 0; j < lps.size(); ++j)
        if (!(*sol)[j].is_zero()) out.emplace(lps[j], (*sol)[j]);
    return out;
}

std::map<LiePermutation, Rational> b_coefficients(int n) {
    if (n < 1) throw Error("b_coefficients: n must be positive");
    std::vector<GeneratorId> letters;
    for (int i = 1; i <= n; ++i) letters.push_back(static_cast<GeneratorId>(i));
    return lie_perm_decompose(NcPolynomial::monomial(Word(std::move(letters)), Rational(1)), n);
}

TensorPolynomial basic_rearrangement(const NcPolynomial& u, const BasisRegistry& reg) {
    TensorPolynomial pending;
    for (const auto& [w, c] : u.terms()) {
        TensorWord tw;
        tw.reserve(w.size());
        for (auto g : w.letters()) {
            auto id = reg.id_of_word(Word::single(g));
            if (!id) throw Error("basic_rearrangement: generator X" + std::to_string(g) + " not in the registry");
            tw.push_back(*id);
        }
        pending.add_term(tw, c);
    }

    std::map<std::pair<std::uint32_t, std::uint32_t>, std::map<std::uint32_t, Rational>> bracket_cache;
    auto bracket_of = [&](std::uint32_t a, std::uint32_t b) -> const std::map<std::uint32_t, Rational>& {
        auto key = std::make_pair(a, b);
        auto it = bracket_cache.find(key);
        if (it != bracket_cache.end()) return it->second;
        NcPolynomial expanded = commutator(reg.element(a).expansion, reg.element(b).expansion);
        auto [pos, inserted] = bracket_cache.emplace(key, reg.canonical_ids(expanded));
        return pos->second;
    };

    TensorPolynomial result;
    for (int d = pending.max_tensor_degree(); d >= 0; --d) {
        // settle this tensor degree; swaps emit strictly lower degrees
        while (true) {
            bool touched = false;
            TensorPolynomial part = pending.degree_part(d);
            for (const auto& [w, c] : part.terms()) {
                std::size_t i = 0;
                for (; i + 1 < w.size(); ++i)
                    if (w[i] > w[i + 1]) break;
                if (i + 1 >= w.size()) continue;
                // swap the leftmost out-of-order pair, paying a bracket term
                pending.add_term(w, -c);
                TensorWord swapped = w;
                std::swap(swapped[i], swapped[i + 1]);
                pending.add_term(swapped, c);
                TensorWord shorter = w;
                shorter.erase(shorter.begin() + static_cast<std::ptrdiff_t>(i + 1));
                for (const auto& [id, bc] : bracket_of(w[i], w[i + 1])) {
                    TensorWord bw = shorter;
                    bw[i] = id;
                    pending.add_term(bw, c * bc);
                }
                touched = true;
                break;
            }
            if (!touched) break;
        }
        for (const auto& [w, c] : pending.degree_part(d).terms()) {
            result.add_term(w, c);
            pending.add_term(w, -c);
        }
    }
    return result;
}

}  // namespace freelie
