#include "freelie/wittlazard.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "freelie/combinatorics.hpp"
#include "freelie/errors.hpp"
#include "freelie/linalg.hpp"
#include "freelie/seededrng.hpp"

namespace freelie {

TensorPolynomial act_star(const std::vector<int>& sigma, const TensorPolynomial& t) {
    const std::size_t n = sigma.size();
    std::vector<std::size_t> inv(n);
    for (std::size_t i = 0; i < n; ++i) inv[static_cast<std::size_t>(sigma[i] - 1)] = i;
    TensorPolynomial out;
    for (const auto& [w, c] : t.terms()) {
        if (w.size() != n) {
            out.add_term(w, c);
            continue;
        }
        TensorWord p(n);
        for (std::size_t i = 0; i < n; ++i) p[i] = w[inv[i]];
        out.add_term(p, c);
    }
    return out;
}

TensorPolynomial act_bullet(int k, const TensorPolynomial& t, int n, const BasisRegistry& reg) {
    if (k < 1 || k >= n) throw InvalidPosition("act_bullet: position outside 1..n-1");
    TensorPolynomial out;
    for (const auto& [w, c] : t.terms()) {
        if (static_cast<int>(w.size()) != n) continue;  // zero map outside degree n
        const std::uint32_t a = w[static_cast<std::size_t>(k - 1)], b = w[static_cast<std::size_t>(k)];
        LieMonomial br = LieMonomial::bracket(reg.element(a).lie, reg.element(b).lie);
        auto combo = reg.canonical_ids(br.commutator_eval());
        TensorWord shorter = w;
        shorter.erase(shorter.begin() + k);
        for (const auto& [id, bc] : combo) {
            TensorWord bw = shorter;
            bw[static_cast<std::size_t>(k - 1)] = id;
            out.add_term(bw, c * bc);
        }
    }
    return out;
}

namespace {
std::vector<int> adjacent_transposition(int k, int n) {
    std::vector<int> sigma(static_cast<std::size_t>(n));
    std::iota(sigma.begin(), sigma.end(), 1);
    std::swap(sigma[static_cast<std::size_t>(k - 1)], sigma[static_cast<std::size_t>(k)]);
    return sigma;
}
}  // namespace

TensorPolynomial act_diamond(int k, const TensorPolynomial& t, int n, const BasisRegistry& reg) {
    if (k < 1 || k >= n) throw InvalidPosition("act_diamond: position outside 1..n-1");
    return act_star(adjacent_transposition(k, n), t) + act_bullet(k, t, n, reg);
}

TensorPolynomial act_diamond_word(const std::vector<int>& gens, const TensorPolynomial& t, int n,
                                  const BasisRegistry& reg) {
    TensorPolynomial acc = t;
    for (auto it = gens.rbegin(); it != gens.rend(); ++it) acc = act_diamond(*it, acc, n, reg);
    return acc;
}

std::vector<int> transposition_word(const std::vector<int>& sigma) {
    std::vector<int> v = sigma;
    std::vector<int> swaps;
    while (true) {
        std::size_t k = 0;
        for (; k + 1 < v.size(); ++k)
            if (v[k] > v[k + 1]) break;
        if (k + 1 >= v.size()) break;
        std::swap(v[k], v[k + 1]);
        swaps.push_back(static_cast<int>(k) + 1);
    }
    // sigma * W_{b_1} * ... * W_{b_m} = id, so sigma = W_{b_m} ... W_{b_1}.
    std::reverse(swaps.begin(), swaps.end());
    return swaps;
}

std::pair<TensorPolynomial, TensorPolynomial> eta_split(const TensorPolynomial& t, EtaMode mode) {
    TensorPolynomial image;
    if (mode == EtaMode::Symmetric) {
        image = symmetrize(t);
    } else {
        for (const auto& [w, c] : t.terms()) {
            TensorWord sorted = w;
            std::stable_sort(sorted.begin(), sorted.end());
            image.add_term(sorted, c);
        }
    }
    return {image, t - image};
}

TensorPolynomial ee_eta(const TensorPolynomial& t, int n, EtaMode mode, const BasisRegistry& reg) {
    TensorPolynomial out;
    for (const auto& [w, c] : t.terms()) {
        if (static_cast<int>(w.size()) != n)
            throw Error("ee_eta: argument must be pure tensor degree n");
        TensorPolynomial mono = TensorPolynomial::monomial(w, c);
        if (mode == EtaMode::Ordered) {
            // stable sorting permutation: sigma(i) = final position of slot i
            std::vector<std::size_t> idx(w.size());
            std::iota(idx.begin(), idx.end(), 0);
            std::stable_sort(idx.begin(), idx.end(),
                             [&](std::size_t a, std::size_t b) { return w[a] < w[b]; });
            std::vector<int> sigma(w.size());
            for (std::size_t j = 0; j < idx.size(); ++j) sigma[idx[j]] = static_cast<int>(j) + 1;
            out += act_diamond_word(transposition_word(sigma), mono, n, reg);
        } else {
            TensorPolynomial sum;
            std::uint64_t count = 0;
            for (const auto& sigma : permutations_of(n)) {
                sum += act_diamond_word(transposition_word(sigma), mono, n, reg);
                ++count;
            }
            sum *= Rational(1) / Rational(static_cast<long>(count));
            out += sum;
        }
    }
    return out;
}

VerificationReport check_braid_identities(int n, const TensorPolynomial& sample, const BasisRegistry& reg) {
    if (n < 2) throw Error("check_braid_identities: n must be at least 2");
    for (const auto& [w, c] : sample.terms())
        if (static_cast<int>(w.size()) != n) throw Error("check_braid_identities: sample not pure degree n");

    VerificationReport rep("wittlazard.braid(n=" + std::to_string(n) + ")");
    auto D = [&](int k, const TensorPolynomial& t) { return act_diamond(k, t, n, reg); };
    auto Dlow = [&](int k, const TensorPolynomial& t) { return act_diamond(k, t, n - 1, reg); };
    auto B = [&](int k, const TensorPolynomial& t) { return act_bullet(k, t, n, reg); };
    auto S = [&](int k, const TensorPolynomial& t) { return act_star(adjacent_transposition(k, n), t); };

    for (int k = 1; k <= n - 1; ++k) {
        Stopwatch sw;
        TensorPolynomial lhs = D(k, D(k, sample)) - sample;
        rep.add("P1'(k=" + std::to_string(k) + ")", lhs.is_zero(), "", sw.millis());
    }
    for (int k = 1; k <= n - 1; ++k)
        for (int l = k + 2; l <= n - 1; ++l) {
            Stopwatch sw;
            TensorPolynomial lhs = D(k, D(l, sample)) - D(l, D(k, sample));
            TensorPolynomial bl = B(l, sample), bk = B(k, sample);
            TensorPolynomial rhs = (bl - Dlow(k, bl)) - (bk - Dlow(l - 1, bk));
            rep.add("P2'(k=" + std::to_string(k) + ",l=" + std::to_string(l) + ")", lhs == rhs, "", sw.millis());
        }
    for (int k = 1; k <= n - 2; ++k) {
        Stopwatch sw;
        TensorPolynomial lhs = D(k, D(k + 1, D(k, sample))) - D(k + 1, D(k, D(k + 1, sample)));
        TensorPolynomial t1 = B(k, sample);
        TensorPolynomial t2 = B(k + 1, S(k + 1, sample));
        TensorPolynomial t3 = B(k + 1, sample);
        TensorPolynomial rhs = (t1 - Dlow(k, t1)) + (t2 - Dlow(k, t2)) - (t3 - Dlow(k, t3));
        rep.add("P3'(k=" + std::to_string(k) + ")", lhs == rhs, "", sw.millis());
    }
    return rep;
}

namespace {

Multidegree tensor_word_grade(const TensorWord& w, const BasisRegistry& reg) {
    Multidegree g;
    for (auto id : w)
        for (const auto& [gen, m] : reg.element(id).grade) g[gen] += m;
    return g;
}

// All tensor words of the given degree whose factor grades sum to `grade`.
void tensor_words_of_grade(const BasisRegistry& reg, int degree, const Multidegree& grade,
                           std::vector<TensorWord>& out) {
    TensorWord current;
    std::function<void(const Multidegree&)> go = [&](const Multidegree& remaining) {
        if (static_cast<int>(current.size()) == degree) {
            if (remaining.empty()) out.push_back(current);
            return;
        }
        for (const auto& e : reg.elements()) {
            bool fits = true;
            for (const auto& [gen, m] : e.grade) {
                auto it = remaining.find(gen);
                if (it == remaining.end() || it->second < m) {
                    fits = false;
                    break;
                }
            }
            if (!fits) continue;
            Multidegree next = remaining;
            for (const auto& [gen, m] : e.grade) {
                next[gen] -= m;
                if (next[gen] == 0) next.erase(gen);
            }
            current.push_back(e.id);
            go(next);
            current.pop_back();
        }
    };
    go(grade);
}

}  // namespace

KeyLemmaResult key_lemma_check(int n, int k, const TensorWord& v, EtaMode mode, const BasisRegistry& reg) {
    if (static_cast<int>(v.size()) != n) throw Error("key_lemma_check: v must have tensor degree n");
    if (n > 4) throw DeskScaleExceeded("key_lemma_check: desk scale is n <= 4");
    if (k < 1 || k >= n) throw InvalidPosition("key_lemma_check: position outside 1..n-1");

    TensorPolynomial mono = TensorPolynomial::monomial(v, Rational(1));
    TensorPolynomial lhs = mono - act_diamond(k, mono, n, reg);
    TensorPolynomial star_diff = mono - act_star(adjacent_transposition(k, n), mono);
    TensorPolynomial rhs = star_diff - ee_eta(star_diff, n, mode, reg);
    TensorPolynomial diff = lhs - rhs;

    KeyLemmaResult res;
    res.degree_n_matches = diff.degree_part(n).is_zero();

    TensorPolynomial lower = diff - diff.degree_part(n);
    if (lower.is_zero()) {
        res.difference_in_j = true;
    } else if (n >= 3) {
        // span of the J^{n-1} generators restricted to the relevant multigrade
        Multidegree grade = tensor_word_grade(v, reg);
        std::vector<TensorWord> us;
        tensor_words_of_grade(reg, n - 1, grade, us);
        SparseSpan<TensorWord> span;
        for (const auto& u : us) {
            TensorPolynomial um = TensorPolynomial::monomial(u, Rational(1));
            for (int j = 1; j <= n - 2; ++j) {
                TensorPolynomial gen = um - act_diamond(j, um, n - 1, reg);
                span.add(gen.terms());
            }
        }
        res.difference_in_j = span.contains(lower.terms());
    } else {
        res.difference_in_j = false;  // J^1 = 0: nonzero difference fails
    }
    res.pass = res.degree_n_matches && res.difference_in_j;
    if (!res.pass) res.detail = "difference outside J^{n-1}";
    return res;
}

VerificationReport wittlazard_suite(int degree, EtaMode mode, std::uint64_t seed) {
    if (degree < 2 || degree > 4)
        throw DeskScaleExceeded("wittlazard_suite: degree must be between 2 and 4");
    const char* mode_name = mode == EtaMode::Ordered ? "ordered" : "symmetric";
    VerificationReport rep(std::string("wittlazard(") + mode_name + ", degree=" + std::to_string(degree) + ")");
    SeededRng rng(seed);

    BasisRegistry reg = BasisRegistry::build_grades(all_multidegrees(3, 2 * degree));
    std::vector<std::uint32_t> low_ids;
    for (const auto& e : reg.elements())
        if (e.degree <= 2) low_ids.push_back(e.id);

    auto random_sample = [&](int n) {
        TensorPolynomial t;
        for (int trial = 0; trial < 3; ++trial) {
            TensorWord w;
            for (int i = 0; i < n; ++i) w.push_back(low_ids[rng.below(static_cast<std::uint32_t>(low_ids.size()))]);
            t.add_term(w, rng.coefficient());
        }
        return t;
    };

    for (int n = 2; n <= degree; ++n) {
        auto braid = check_braid_identities(n, random_sample(n), reg);
        for (const auto& c : braid.checks()) rep.add("n=" + std::to_string(n) + " " + c.id, c.pass, c.detail, c.millis);
    }

    // e o eta idempotence, both the requested mode and per-term sanity
    for (int n = 2; n <= degree; ++n) {
        Stopwatch sw;
        TensorPolynomial t = random_sample(n);
        auto [img, zero] = eta_split(t, mode);
        auto [img2, zero2] = eta_split(img, mode);
        bool ok = img2 == img && (img + zero) == t;
        rep.add("eta-idempotent(n=" + std::to_string(n) + ")", ok, "", sw.millis());
    }

    // key lemma on every pure tensor word of degree <= min(degree,3) over the
    // degree-1 and degree-2 basis elements of two generators
    std::vector<std::uint32_t> two_gen_ids;
    for (const auto& e : reg.elements()) {
        bool two_gen = true;
        for (const auto& [g, m] : e.grade)
            if (g > 1) two_gen = false;
        if (two_gen && e.degree <= 2) two_gen_ids.push_back(e.id);
    }
    int key_degree = std::min(degree, 3);
    for (int n = 2; n <= key_degree; ++n) {
        std::vector<TensorWord> words;
        std::function<void(TensorWord&)> gen = [&](TensorWord& w) {
            if (static_cast<int>(w.size()) == n) {
                words.push_back(w);
                return;
            }
            for (auto id : two_gen_ids) {
                w.push_back(id);
                gen(w);
                w.pop_back();
            }
        };
        TensorWord scratch;
        gen(scratch);
        bool all_ok = true;
        Stopwatch sw;
        for (const auto& w : words)
            for (int k = 1; k <= n - 1; ++k) {
                auto res = key_lemma_check(n, k, w, mode, reg);
                if (!res.pass) all_ok = false;
            }
        rep.add("key-lemma(n=" + std::to_string(n) + ", " + std::to_string(words.size()) + " words)", all_ok, "",
                sw.millis());
    }
    return rep;
}

}  // namespace freelie
