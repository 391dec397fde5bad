#include "freelie/wordbasis.hpp"

#include <algorithm>
#include <functional>

#include "freelie/errors.hpp"

namespace freelie {

bool box_less(const ZWord& a, const ZWord& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
}

ZWord condense(const std::vector<ZWord>& segments) {
    if (segments.empty()) throw Error("condense: no segments");
    std::vector<ZWord> sorted = segments;
    std::sort(sorted.begin(), sorted.end(), box_less);
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    ZWord out;
    out.reserve(segments.size());
    for (const auto& s : segments) {
        auto it = std::lower_bound(sorted.begin(), sorted.end(), s, box_less);
        out.push_back(static_cast<int>(it - sorted.begin()) + 1);
    }
    return out;
}

namespace {

struct MaxSplit {
    int max_letter;
    std::vector<ZWord> segments;  // letters before each occurrence of the max
    ZWord tail;                   // letters after the last occurrence
};

MaxSplit split_at_max(const ZWord& w) {
    MaxSplit sp;
    sp.max_letter = *std::max_element(w.begin(), w.end());
    ZWord current;
    for (int letter : w) {
        if (letter == sp.max_letter) {
            sp.segments.push_back(current);
            current.clear();
        } else {
            current.push_back(letter);
        }
    }
    sp.tail = current;
    return sp;
}

bool all_equal(const ZWord& w) {
    return std::all_of(w.begin(), w.end(), [&](int x) { return x == w.front(); });
}

}  // namespace

std::vector<ZWord> break_word(const ZWord& w) {
    if (w.empty()) throw Error("break_word: empty word");
    if (all_equal(w)) {
        // a power of the maximal letter breaks completely into letters
        return std::vector<ZWord>(w.size(), ZWord{w.front()});
    }
    MaxSplit sp = split_at_max(w);
    const std::size_t s = sp.segments.size();

    // Cut points among the max-terminated chunks come from breaking the
    // condensation of the pre-max segments.
    ZWord condensed = condense(sp.segments);
    std::vector<ZWord> cfactors = break_word(condensed);

    std::vector<ZWord> factors;
    std::size_t chunk = 0;
    for (const auto& cf : cfactors) {
        ZWord factor;
        for (std::size_t t = 0; t < cf.size(); ++t, ++chunk) {
            factor.insert(factor.end(), sp.segments[chunk].begin(), sp.segments[chunk].end());
            factor.push_back(sp.max_letter);
        }
        factors.push_back(std::move(factor));
    }
    if (chunk != s) throw Error("break_word: internal chunk accounting error");
    if (!sp.tail.empty()) {
        auto tail_factors = break_word(sp.tail);
        factors.insert(factors.end(), tail_factors.begin(), tail_factors.end());
    }
    return factors;
}

bool is_primitive(const ZWord& w) {
    return break_word(w).size() == 1;
}

int primitive_compare(const ZWord& a, const ZWord& b) {
    if (a == b) return 0;
    if (a.back() != b.back()) return a.back() < b.back() ? -1 : 1;
    // Same maximal letter: condense both segment sequences against the merged
    // segment set so the rank words are comparable, then recurse.
    MaxSplit sa = split_at_max(a), sb = split_at_max(b);
    std::vector<ZWord> merged = sa.segments;
    merged.insert(merged.end(), sb.segments.begin(), sb.segments.end());
    std::sort(merged.begin(), merged.end(), box_less);
    merged.erase(std::unique(merged.begin(), merged.end()), merged.end());
    auto ranks = [&](const std::vector<ZWord>& segs) {
        ZWord out;
        out.reserve(segs.size());
        for (const auto& s : segs) {
            auto it = std::lower_bound(merged.begin(), merged.end(), s, box_less);
            out.push_back(static_cast<int>(it - merged.begin()) + 1);
        }
        return out;
    };
    return primitive_compare(ranks(sa.segments), ranks(sb.segments));
}

NcPolynomial evaluate_word(const ZWord& w) {
    if (w.empty()) return NcPolynomial::one();
    for (int letter : w)
        if (letter < 0) throw Error("evaluate_word: negative letter cannot name a generator");
    if (all_equal(w))
        return NcPolynomial::monomial(Word(std::vector<GeneratorId>(w.size(), static_cast<GeneratorId>(w.front()))),
                                      Rational(1));
    MaxSplit sp = split_at_max(w);
    ZWord condensed = condense(sp.segments);

    // Evaluate the condensation over the rank alphabet, then substitute the
    // left-normed bracket of (segment, max) for each rank letter.
    NcPolynomial head = evaluate_word(condensed);
    std::map<GeneratorId, NcPolynomial> assignment;
    for (std::size_t t = 0; t < sp.segments.size(); ++t) {
        GeneratorId rank = static_cast<GeneratorId>(condensed[t]);
        if (assignment.count(rank)) continue;
        std::vector<GeneratorId> gens;
        for (int letter : sp.segments[t]) gens.push_back(static_cast<GeneratorId>(letter));
        gens.push_back(static_cast<GeneratorId>(sp.max_letter));
        assignment.emplace(rank, nc_left_normed(gens));
    }
    NcPolynomial result = substitute(head, assignment);
    if (!sp.tail.empty()) result = result * evaluate_word(sp.tail);
    return result;
}

LieMonomial evaluate_primitive(const ZWord& w) {
    if (w.empty()) throw Error("evaluate_primitive: empty word");
    for (int letter : w)
        if (letter < 0) throw Error("evaluate_primitive: negative letter cannot name a generator");
    if (w.size() == 1) return LieMonomial::leaf(static_cast<GeneratorId>(w.front()));
    if (all_equal(w)) throw Error("evaluate_primitive: power words of length > 1 are not primitive");
    MaxSplit sp = split_at_max(w);
    if (!sp.tail.empty()) throw Error("evaluate_primitive: word has a tail, not primitive");
    ZWord condensed = condense(sp.segments);
    LieMonomial head = evaluate_primitive(condensed);
    std::map<GeneratorId, LieMonomial> assignment;
    for (std::size_t t = 0; t < sp.segments.size(); ++t) {
        GeneratorId rank = static_cast<GeneratorId>(condensed[t]);
        if (assignment.count(rank)) continue;
        std::vector<GeneratorId> gens;
        for (int letter : sp.segments[t]) gens.push_back(static_cast<GeneratorId>(letter));
        gens.push_back(static_cast<GeneratorId>(sp.max_letter));
        assignment.emplace(rank, left_normed_tree(gens));
    }
    return head.substitute(assignment);
}

ZWord zword_of(const Word& w) {
    ZWord z;
    z.reserve(w.size());
    for (auto g : w.letters()) z.push_back(static_cast<int>(g));
    return z;
}

Word word_of(const ZWord& z) {
    std::vector<GeneratorId> v;
    v.reserve(z.size());
    for (int x : z) {
        if (x < 0) throw Error("word_of: negative letter");
        v.push_back(static_cast<GeneratorId>(x));
    }
    return Word(std::move(v));
}

std::vector<Multidegree> all_multidegrees(int alphabet_size, int max_degree) {
    std::vector<Multidegree> out;
    std::function<void(Multidegree&, int, int)> go = [&](Multidegree& g, GeneratorId next, int remaining) {
        if (!g.empty()) out.push_back(g);
        if (remaining == 0) return;
        for (GeneratorId v = next; v < static_cast<GeneratorId>(alphabet_size); ++v) {
            for (int m = 1; m <= remaining; ++m) {
                g[v] = m;
                go(g, v + 1, remaining - m);
                g.erase(v);
            }
        }
    };
    Multidegree g;
    go(g, 0, max_degree);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<Word> words_of_grade(const Multidegree& g) {
    std::vector<GeneratorId> letters;
    for (const auto& [gen, mult] : g) letters.insert(letters.end(), static_cast<std::size_t>(mult), gen);
    std::vector<Word> out;
    std::sort(letters.begin(), letters.end());
    do {
        out.emplace_back(letters);
    } while (std::next_permutation(letters.begin(), letters.end()));
    return out;
}

namespace {

std::vector<BasisElement> collect_primitives(const std::vector<Multidegree>& grades) {
    std::vector<BasisElement> elems;
    for (const auto& grade : grades) {
        for (const auto& w : words_of_grade(grade)) {
            ZWord z = zword_of(w);
            if (!is_primitive(z)) continue;
            BasisElement e;
            e.word = w;
            e.lie = evaluate_primitive(z);
            e.expansion = e.lie.commutator_eval();
            e.grade = grade;
            e.degree = static_cast<int>(w.size());
            elems.push_back(std::move(e));
        }
    }
    std::sort(elems.begin(), elems.end(), [](const BasisElement& a, const BasisElement& b) {
        return primitive_compare(zword_of(a.word), zword_of(b.word)) < 0;
    });
    return elems;
}

}  // namespace

void BasisRegistry::index_elements(std::vector<BasisElement> elems) {
    elements_ = std::move(elems);
    for (std::uint32_t i = 0; i < elements_.size(); ++i) {
        elements_[i].id = i;
        by_grade_[elements_[i].grade].push_back(i);
        by_word_.emplace(elements_[i].word, i);
    }
}

BasisRegistry BasisRegistry::build_grades(const std::vector<Multidegree>& grades) {
    BasisRegistry reg;
    int max_gen = -1, max_deg = 0;
    for (const auto& g : grades) {
        int total = 0;
        for (const auto& [gen, m] : g) {
            max_gen = std::max(max_gen, static_cast<int>(gen));
            total += m;
        }
        max_deg = std::max(max_deg, total);
    }
    reg.alphabet_size_ = max_gen + 1;
    reg.max_degree_ = max_deg;
    reg.index_elements(collect_primitives(grades));
    return reg;
}

BasisRegistry BasisRegistry::build(int alphabet_size, int max_degree) {
    if (alphabet_size < 1 || alphabet_size > 3 || max_degree < 1 || max_degree > 6)
        throw DeskScaleExceeded("registry_build: checked build is limited to alphabets <= 3, degree <= 6");
    auto grades = all_multidegrees(alphabet_size, max_degree);
    BasisRegistry reg;
    reg.alphabet_size_ = alphabet_size;
    reg.max_degree_ = max_degree;
    reg.index_elements(collect_primitives(grades));

    // --- (A4): unique non-increasing factorization for every word in range.
    for (const auto& grade : grades) {
        for (const auto& w : words_of_grade(grade)) {
            ZWord z = zword_of(w);
            auto factors = break_word(z);
            ZWord flat;
            for (const auto& f : factors) {
                if (!is_primitive(f))
                    throw AxiomViolation("(A4): non-primitive factor for word " + to_string(w));
                flat.insert(flat.end(), f.begin(), f.end());
            }
            if (flat != z) throw AxiomViolation("(A4): factors do not concatenate to " + to_string(w));
            for (std::size_t i = 0; i + 1 < factors.size(); ++i)
                if (primitive_compare(factors[i], factors[i + 1]) < 0)
                    throw AxiomViolation("(A4): factorization not non-increasing for " + to_string(w));
            // uniqueness among all non-increasing primitive factorizations
            int count = 0;
            std::function<void(std::size_t, const ZWord*)> enumerate = [&](std::size_t pos, const ZWord* prev) {
                if (pos == z.size()) {
                    ++count;
                    return;
                }
                for (std::size_t end = pos + 1; end <= z.size(); ++end) {
                    ZWord piece(z.begin() + static_cast<std::ptrdiff_t>(pos),
                                z.begin() + static_cast<std::ptrdiff_t>(end));
                    if (!is_primitive(piece)) continue;
                    if (prev && primitive_compare(*prev, piece) < 0) continue;
                    enumerate(end, &piece);
                }
            };
            enumerate(0, nullptr);
            if (count != 1)
                throw AxiomViolation("(A4): " + std::to_string(count) + " non-increasing factorizations for " +
                                     to_string(w));
        }
    }

    // --- consistency: P_w^Lie evaluates to P_w on primitives.
    for (const auto& e : reg.elements_)
        if (e.expansion != evaluate_word(zword_of(e.word)))
            throw AxiomViolation("(A2)/(A5): Lie monomial of " + to_string(e.word) +
                                 " does not match the evaluation pattern");

    // --- (A6): per multigrade the P_w span has rank = number of words.
    for (const auto& grade : grades) {
        auto words = words_of_grade(grade);
        SparseSpan<Word> span;
        for (const auto& w : words) {
            NcPolynomial pw = evaluate_word(zword_of(w));
            if (!span.add(pw.terms()))
                throw AxiomViolation("(A6): P_w dependent at word " + to_string(w));
        }
    }

    // --- (A3): primitives are independent and span every bracket monomial.
    for (const auto& grade : grades) {
        SparseSpan<Word> span;
        for (auto id : reg.ids_of_grade(grade))
            if (!span.add(reg.elements_[id].expansion.terms()))
                throw AxiomViolation("(A3)/(A6): dependent primitive " + to_string(reg.elements_[id].word));
        for (const auto& m : all_bracket_monomials(grade))
            if (!span.contains(m.commutator_eval().terms()))
                throw AxiomViolation("(A3): bracket monomial " + m.str() + " outside the primitive span");
    }

    return reg;
}

const BasisElement& BasisRegistry::element(std::uint32_t id) const {
    if (id >= elements_.size()) throw Error("BasisRegistry: unknown basis id " + std::to_string(id));
    return elements_[id];
}

std::optional<std::uint32_t> BasisRegistry::id_of_word(const Word& w) const {
    auto it = by_word_.find(w);
    if (it == by_word_.end()) return std::nullopt;
    return it->second;
}

std::vector<std::uint32_t> BasisRegistry::ids_of_grade(const Multidegree& g) const {
    auto it = by_grade_.find(g);
    return it == by_grade_.end() ? std::vector<std::uint32_t>{} : it->second;
}

std::map<int, int> BasisRegistry::dimension_by_degree() const {
    std::map<int, int> d;
    for (const auto& e : elements_) ++d[e.degree];
    return d;
}

std::map<Multidegree, int> BasisRegistry::dimension_by_grade() const {
    std::map<Multidegree, int> d;
    for (const auto& [g, ids] : by_grade_) d[g] = static_cast<int>(ids.size());
    return d;
}

const LinearSolver& BasisRegistry::grade_solver(const Multidegree& g) const {
    std::lock_guard<std::mutex> lock(cache_->mutex);
    auto it = cache_->solvers.find(g);
    if (it != cache_->solvers.end()) return *it->second;
    if (!has_grade(g))
        throw Error("BasisRegistry: multigrade not covered by this registry");
    auto words = words_of_grade(g);
    std::map<Word, int> row_of;
    for (std::size_t i = 0; i < words.size(); ++i) row_of.emplace(words[i], static_cast<int>(i));
    auto ids = ids_of_grade(g);
    std::vector<std::vector<Rational>> a(words.size(), std::vector<Rational>(ids.size()));
    for (std::size_t j = 0; j < ids.size(); ++j)
        for (const auto& [w, c] : elements_[ids[j]].expansion.terms())
            a[static_cast<std::size_t>(row_of.at(w))][j] = c;
    auto solver = std::make_unique<LinearSolver>(std::move(a));
    if (!solver->full_column_rank())
        throw SolveFailure("BasisRegistry: primitive expansions dependent in a multigrade");
    auto [pos, inserted] = cache_->solvers.emplace(g, std::move(solver));
    return *pos->second;
}

std::map<Word, Rational> BasisRegistry::canonical_coords(const NcPolynomial& p) const {
    std::map<Word, Rational> coords;
    if (p.is_zero()) return coords;
    for (const auto& [grade, part] : multidegree_split(p)) {
        const LinearSolver& solver = grade_solver(grade);
        auto words = words_of_grade(grade);
        std::vector<Rational> v(words.size());
        for (std::size_t i = 0; i < words.size(); ++i) v[i] = part.coeff(words[i]);
        auto sol = solver.solve(v);
        if (!sol) throw SolveFailure("canonical_coords: polynomial is not in the Lie span of its multigrade");
        auto ids = ids_of_grade(grade);
        for (std::size_t j = 0; j < ids.size(); ++j)
            if (!(*sol)[j].is_zero()) coords.emplace(elements_[ids[j]].word, (*sol)[j]);
    }
    return coords;
}

std::map<std::uint32_t, Rational> BasisRegistry::canonical_ids(const NcPolynomial& p) const {
    std::map<std::uint32_t, Rational> out;
    for (const auto& [w, c] : canonical_coords(p)) out.emplace(by_word_.at(w), c);
    return out;
}

LiePolynomial BasisRegistry::to_canonical(const LiePolynomial& L) const {
    LiePolynomial out = L;
    out.set_canonical(canonical_coords(L.commutator_eval()));
    return out;
}

}  // namespace freelie
