#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "freelie/linalg.hpp"
#include "freelie/liepoly.hpp"
#include "freelie/ncpoly.hpp"

namespace freelie {

/// Word over the integer alphabet; breaking depends only on its internal
/// order pattern.
using ZWord = std::vector<int>;

/// Box order on integer words driving the condensation: length first, then
/// lexicographic.
bool box_less(const ZWord& a, const ZWord& b);

/// Replaces a sequence of segments by integers 1..m with the same relative
/// order pattern under the box order.
ZWord condense(const std::vector<ZWord>& segments);

/// Factors w into primitive words by the recursive breaking pattern: split
/// off the tail after the last occurrence of the maximal letter, break the
/// tail recursively, and decide the remaining cut points by breaking the
/// condensation of the pre-maximum segments.
std::vector<ZWord> break_word(const ZWord& w);

bool is_primitive(const ZWord& w);

/// Total order on primitive words: by last (maximal) letter, ties resolved by
/// comparing the simultaneous condensations recursively. Returns -1, 0, 1.
int primitive_compare(const ZWord& a, const ZWord& b);

/// Evaluation pattern P_w: the product of the commutator monomials of the
/// primitive factors; built by the same recursion as the breaking. Letters
/// must be nonnegative (they name generators).
NcPolynomial evaluate_word(const ZWord& w);

/// The bracket monomial P_w^Lie of a primitive word.
LieMonomial evaluate_primitive(const ZWord& w);

/// Breaking of a word over an arbitrary totally ordered alphabet, via an
/// order-pattern-preserving replacement into Z.
template <class T, class Less = std::less<T>>
std::vector<std::vector<T>> break_word_general(const std::vector<T>& w, Less less = Less{}) {
    std::vector<T> sorted = w;
    std::sort(sorted.begin(), sorted.end(), less);
    sorted.erase(std::unique(sorted.begin(), sorted.end(),
                             [&](const T& a, const T& b) { return !less(a, b) && !less(b, a); }),
                 sorted.end());
    ZWord z;
    z.reserve(w.size());
    for (const auto& x : w) {
        auto it = std::lower_bound(sorted.begin(), sorted.end(), x, less);
        z.push_back(static_cast<int>(it - sorted.begin()) + 1);
    }
    auto zfactors = break_word(z);
    std::vector<std::vector<T>> out;
    std::size_t pos = 0;
    for (const auto& f : zfactors) {
        out.emplace_back(w.begin() + static_cast<std::ptrdiff_t>(pos),
                         w.begin() + static_cast<std::ptrdiff_t>(pos + f.size()));
        pos += f.size();
    }
    return out;
}

ZWord zword_of(const Word& w);
Word word_of(const ZWord& z);

/// One primitive word of the registry together with its Lie monomial and
/// associative expansion.
struct BasisElement {
    std::uint32_t id = 0;
    Word word;
    LieMonomial lie = LieMonomial::leaf(0);
    NcPolynomial expansion;
    Multidegree grade;
    int degree = 0;
};

/// All multidegrees over generators 0..alphabet-1 with total degree 1..max_degree.
std::vector<Multidegree> all_multidegrees(int alphabet_size, int max_degree);

/// The primitive-word basis of the free Lie algebra, per multigrade, with
/// exact-solve canonicalization. Immutable after construction; safe for
/// concurrent reads.
class BasisRegistry {
public:
    /// Desk-scale builder (alphabet <= 3, degree <= 6): enumerates every word
    /// of the range and verifies (A4) unique non-increasing factorization,
    /// (A6) independence with rank = word count per multigrade, and (A3)
    /// primitive span = brute-force Lie span. Throws AxiomViolation with a
    /// witness if any check fails (must never happen).
    static BasisRegistry build(int alphabet_size, int max_degree);

    /// Grade-targeted builder without the axiom sweep, for callers that need
    /// specific multigrades outside the desk-scale envelope.
    static BasisRegistry build_grades(const std::vector<Multidegree>& grades);

    const std::vector<BasisElement>& elements() const { return elements_; }
    const BasisElement& element(std::uint32_t id) const;
    std::optional<std::uint32_t> id_of_word(const Word& w) const;
    bool has_grade(const Multidegree& g) const { return by_grade_.count(g) > 0; }
    /// Ids of the primitives of a multigrade, in basis order.
    std::vector<std::uint32_t> ids_of_grade(const Multidegree& g) const;

    int alphabet_size() const { return alphabet_size_; }
    int max_degree() const { return max_degree_; }

    /// Number of primitive words per total degree (the free-Lie dimension table).
    std::map<int, int> dimension_by_degree() const;
    std::map<Multidegree, int> dimension_by_grade() const;

    /// Exact coordinates of a multigrade-homogeneous polynomial over the
    /// primitive basis of that grade; SolveFailure when the polynomial is not
    /// in the span (cannot happen for genuine Lie elements).
    std::map<Word, Rational> canonical_coords(const NcPolynomial& p) const;

    /// Canonical form over the primitive-word basis, per multigrade of L.
    LiePolynomial to_canonical(const LiePolynomial& L) const;

    /// Coordinates keyed by basis id instead of primitive word.
    std::map<std::uint32_t, Rational> canonical_ids(const NcPolynomial& p) const;

private:
    void index_elements(std::vector<BasisElement> elems);
    const LinearSolver& grade_solver(const Multidegree& g) const;

    int alphabet_size_ = 0;
    int max_degree_ = 0;
    std::vector<BasisElement> elements_;
    std::map<Multidegree, std::vector<std::uint32_t>> by_grade_;
    std::map<Word, std::uint32_t> by_word_;

    struct SolverCache {
        std::mutex mutex;
        std::map<Multidegree, std::unique_ptr<LinearSolver>> solvers;
    };
    std::unique_ptr<SolverCache> cache_ = std::make_unique<SolverCache>();
};

/// Sorted words of one multigrade, in canonical (lexicographic) order.
std::vector<Word> words_of_grade(const Multidegree& g);

}  // namespace freelie
