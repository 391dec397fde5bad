#include "freelie/verifysuites.hpp"

#include <algorithm>
#include <functional>

#include "freelie/combinatorics.hpp"
#include "freelie/errors.hpp"
#include "freelie/linalg.hpp"
#include "freelie/magnus.hpp"
#include "freelie/pbwmaps.hpp"
#include "freelie/seededrng.hpp"
#include "freelie/tensor.hpp"
#include "freelie/wittlazard.hpp"
#include "freelie/wordbasis.hpp"

namespace freelie {

namespace {

void require_desk_scale(int generators, int max_degree) {
    if (generators < 1 || generators > 3 || max_degree < 1 || max_degree > 4)
        throw DeskScaleExceeded("verify suites: desk scale is generators <= 3, degree <= 4");
}

// Multisets of basis ids whose grades sum to `grade`; each multiset indexes a
// spanning symmetric tensor of the grade.
std::vector<TensorWord> basis_multisets_of_grade(const BasisRegistry& reg, const Multidegree& grade) {
    std::vector<TensorWord> out;
    TensorWord current;
    std::function<void(std::uint32_t, const Multidegree&)> go = [&](std::uint32_t next, const Multidegree& remaining) {
        if (remaining.empty()) {
            out.push_back(current);
            return;
        }
        for (std::uint32_t id = next; id < reg.elements().size(); ++id) {
            const auto& e = reg.element(id);
            bool fits = true;
            for (const auto& [g, m] : e.grade) {
                auto it = remaining.find(g);
                if (it == remaining.end() || it->second < m) {
                    fits = false;
                    break;
                }
            }
            if (!fits) continue;
            Multidegree rest = remaining;
            for (const auto& [g, m] : e.grade) {
                rest[g] -= m;
                if (rest[g] == 0) rest.erase(g);
            }
            current.push_back(id);
            go(id, rest);
            current.pop_back();
        }
    };
    go(0, grade);
    return out;
}

// Polarization round-trip on a raw tensor word of Lie monomials: every slot of
// a repeated generator gets a fresh variable, averaged over assignments; the
// back-substitution must reproduce the original.
bool polarization_roundtrip(const std::vector<LieMonomial>& factors) {
    Multidegree grade;
    for (const auto& f : factors)
        for (const auto& [g, m] : f.multidegree()) grade[g] += m;
    int n = 0;
    for (const auto& [g, m] : grade) n += m;

    // fresh variables: slot j of the whole word gets id base + j under sigma
    GeneratorId base = 1000;
    using RawTensor = std::map<std::vector<LieMonomial>, Rational>;
    RawTensor polarized;
    auto perms = permutations_of(n);
    for (const auto& sigma : perms) {
        // relabel leaves slot by slot, scanning factors left to right
        int slot = 0;
        std::vector<LieMonomial> relabeled;
        std::function<LieMonomial(const LieMonomial&)> go = [&](const LieMonomial& m) -> LieMonomial {
            if (m.is_leaf()) {
                GeneratorId fresh = base + static_cast<GeneratorId>(sigma[static_cast<std::size_t>(slot)]);
                ++slot;
                std::map<GeneratorId, LieMonomial> one{{m.leaf_generator(), LieMonomial::leaf(fresh)}};
                return m.substitute(one);
            }
            auto [l, r] = m.children();
            return LieMonomial::bracket(go(l), go(r));
        };
        for (const auto& f : factors) relabeled.push_back(go(f));
        Rational w = Rational(1) / Rational(static_cast<long>(perms.size()));
        auto [it, inserted] = polarized.try_emplace(relabeled, w);
        if (!inserted) it->second += w;
    }
    if (polarized.empty()) return false;  // must be nonzero

    // depolarize: fresh variable base+t maps back to the generator that owned
    // slot t in the original left-to-right scan
    std::vector<GeneratorId> slot_owner;
    {
        std::function<void(const LieMonomial&)> scan = [&](const LieMonomial& m) {
            if (m.is_leaf()) {
                slot_owner.push_back(m.leaf_generator());
                return;
            }
            auto [l, r] = m.children();
            scan(l);
            scan(r);
        };
        for (const auto& f : factors) scan(f);
    }
    std::map<GeneratorId, LieMonomial> back;
    for (int t = 1; t <= n; ++t)
        back.emplace(base + static_cast<GeneratorId>(t), LieMonomial::leaf(slot_owner[static_cast<std::size_t>(t - 1)]));

    RawTensor depolarized;
    for (const auto& [word, c] : polarized) {
        std::vector<LieMonomial> orig;
        orig.reserve(word.size());
        for (const auto& f : word) orig.push_back(f.substitute(back));
        auto [it, inserted] = depolarized.try_emplace(orig, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) depolarized.erase(it);
        }
    }
    RawTensor expected{{factors, Rational(1)}};
    return depolarized == expected;
}

}  // namespace

VerificationReport pbw_symmetric_suite(int generators, int max_degree) {
    require_desk_scale(generators, max_degree);
    VerificationReport rep("pbw-sym(gens=" + std::to_string(generators) + ", degree=" + std::to_string(max_degree) + ")");
    BasisRegistry reg = BasisRegistry::build_grades(all_multidegrees(generators, max_degree));

    for (const auto& grade : all_multidegrees(generators, max_degree)) {
        Stopwatch sw;
        auto multisets = basis_multisets_of_grade(reg, grade);
        SparseSpan<Word> span;
        bool injective = true;
        for (const auto& ms : multisets) {
            TensorPolynomial sym = symmetrize(TensorPolynomial::monomial(ms, Rational(1)));
            if (!span.add(m_eval(sym, reg).terms())) injective = false;
        }
        std::string grade_name;
        for (const auto& [g, m] : grade)
            grade_name += "X" + std::to_string(g) + "^" + std::to_string(m);
        rep.add("injective(" + grade_name + ")", injective,
                "rank " + std::to_string(span.rank()) + " of " + std::to_string(multisets.size()), sw.millis());
    }

    // polarization on repeated-variable grades
    {
        Stopwatch sw;
        bool ok = polarization_roundtrip({LieMonomial::leaf(0), LieMonomial::leaf(0)});
        rep.add("polarization(X0 (x) X0)", ok, "", sw.millis());
    }
    if (generators >= 2) {
        Stopwatch sw;
        LieMonomial br = LieMonomial::bracket(LieMonomial::leaf(0), LieMonomial::leaf(1));
        bool ok = polarization_roundtrip({br, LieMonomial::leaf(0)});
        rep.add("polarization([X0,X1] (x) X0)", ok, "", sw.millis());
    }
    return rep;
}

VerificationReport pbw_basic_suite(int generators, int max_degree, std::uint64_t seed) {
    require_desk_scale(generators, max_degree);
    VerificationReport rep("pbw-basic(gens=" + std::to_string(generators) + ", degree=" + std::to_string(max_degree) + ")");
    BasisRegistry reg = BasisRegistry::build_grades(all_multidegrees(generators, max_degree));

    // ordered products P_{w_1}..P_{w_s}, w_1 >= .. >= w_s, per multigrade:
    // independent and as many as the words of the grade
    for (const auto& grade : all_multidegrees(generators, max_degree)) {
        Stopwatch sw;
        auto words = words_of_grade(grade);
        SparseSpan<Word> span;
        bool ok = true;
        for (const auto& w : words) {
            // the unique non-increasing factorization gives the ordered product
            NcPolynomial pw = evaluate_word(zword_of(w));
            if (!span.add(pw.terms())) ok = false;
        }
        std::string grade_name;
        for (const auto& [g, m] : grade) grade_name += "X" + std::to_string(g) + "^" + std::to_string(m);
        rep.add("ordered-products(" + grade_name + ")", ok && span.rank() == static_cast<int>(words.size()),
                "rank " + std::to_string(span.rank()) + " of " + std::to_string(words.size()), sw.millis());
    }

    // basic rearrangement round-trips on seeded random polynomials
    SeededRng rng(seed);
    for (int trial = 0; trial < 3; ++trial) {
        Stopwatch sw;
        NcPolynomial u;
        for (int t = 0; t < 4; ++t) {
            std::vector<GeneratorId> letters;
            int len = 1 + static_cast<int>(rng.below(static_cast<std::uint32_t>(max_degree)));
            for (int i = 0; i < len; ++i)
                letters.push_back(static_cast<GeneratorId>(rng.below(static_cast<std::uint32_t>(generators))));
            u.add_term(Word(std::move(letters)), rng.coefficient());
        }
        TensorPolynomial t = basic_rearrangement(u, reg);
        bool ordered = true;
        for (const auto& [w, c] : t.terms())
            for (std::size_t i = 0; i + 1 < w.size(); ++i)
                if (w[i] > w[i + 1]) ordered = false;
        bool round = m_eval(t, reg) == u;
        rep.add("rearrangement-roundtrip(trial " + std::to_string(trial) + ")", ordered && round, "", sw.millis());
    }
    return rep;
}

VerificationReport magnus_representability_suite(int generators, int max_degree) {
    require_desk_scale(generators, max_degree);
    VerificationReport rep("magnus-repr(gens=" + std::to_string(generators) + ", degree=" + std::to_string(max_degree) + ")");
    BasisRegistry reg = BasisRegistry::build_grades(all_multidegrees(generators, max_degree));

    for (const auto& grade : all_multidegrees(generators, max_degree)) {
        Stopwatch sw;
        auto ids = reg.ids_of_grade(grade);
        auto monomials = all_bracket_monomials(grade);
        SparseSpan<Word> span;
        for (auto id : ids) span.add(reg.element(id).expansion.terms());
        bool rank_ok = span.rank() == static_cast<int>(ids.size());
        bool integral = true;
        bool spanned = true;
        for (const auto& m : monomials) {
            NcPolynomial ev = m.commutator_eval();
            if (ev.is_zero()) continue;
            if (!span.contains(ev.terms())) {
                spanned = false;
                continue;
            }
            for (const auto& [w, c] : reg.canonical_coords(ev))
                if (!c.is_integer()) integral = false;
        }
        std::string grade_name;
        for (const auto& [g, m] : grade) grade_name += "X" + std::to_string(g) + "^" + std::to_string(m);
        rep.add("embedding(" + grade_name + ")", rank_ok && spanned,
                "dim " + std::to_string(span.rank()) + ", " + std::to_string(monomials.size()) + " monomials",
                sw.millis());
        rep.add("z-form(" + grade_name + ")", integral, "", sw.millis());
    }
    return rep;
}

}  // namespace freelie
