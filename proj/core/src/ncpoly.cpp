#include "freelie/ncpoly.hpp"

#include <algorithm>

#include "freelie/errors.hpp"

namespace freelie {

Word Word::concat(const Word& o) const {
    std::vector<GeneratorId> v;
    v.reserve(letters_.size() + o.letters_.size());
    v.insert(v.end(), letters_.begin(), letters_.end());
    v.insert(v.end(), o.letters_.begin(), o.letters_.end());
    return Word(std::move(v));
}

Multidegree Word::multidegree() const {
    Multidegree d;
    for (auto g : letters_) ++d[g];
    return d;
}

NcPolynomial::NcPolynomial(const Rational& c) {
    if (!c.is_zero()) terms_.emplace(Word(), c);
}

NcPolynomial NcPolynomial::generator(GeneratorId g) {
    return monomial(Word::single(g), Rational(1));
}

NcPolynomial NcPolynomial::monomial(Word w, const Rational& c) {
    NcPolynomial p;
    if (!c.is_zero()) p.terms_.emplace(std::move(w), c);
    return p;
}

Rational NcPolynomial::coeff(const Word& w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? Rational() : it->second;
}

int NcPolynomial::max_degree() const {
    return terms_.empty() ? 0 : static_cast<int>(terms_.rbegin()->first.size());
}

void NcPolynomial::add_term(const Word& w, const Rational& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(w, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

NcPolynomial& NcPolynomial::operator+=(const NcPolynomial& o) {
    for (const auto& [w, c] : o.terms_) add_term(w, c);
    return *this;
}

NcPolynomial& NcPolynomial::operator-=(const NcPolynomial& o) {
    for (const auto& [w, c] : o.terms_) add_term(w, -c);
    return *this;
}

NcPolynomial& NcPolynomial::operator*=(const Rational& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [w, v] : terms_) v *= c;
    return *this;
}

NcPolynomial NcPolynomial::operator-() const {
    NcPolynomial r = *this;
    for (auto& [w, v] : r.terms_) v = -v;
    return r;
}

NcPolynomial operator*(const NcPolynomial& a, const NcPolynomial& b) {
    NcPolynomial r;
    for (const auto& [wa, ca] : a.terms())
        for (const auto& [wb, cb] : b.terms()) r.add_term(wa.concat(wb), ca * cb);
    return r;
}

NcPolynomial commutator(const NcPolynomial& p, const NcPolynomial& q) {
    return p * q - q * p;
}

NcPolynomial truncate(const NcPolynomial& p, int max_len) {
    NcPolynomial r;
    for (const auto& [w, c] : p.terms()) {
        if (static_cast<int>(w.size()) <= max_len) r.add_term(w, c);
    }
    return r;
}

NcPolynomial degree_part(const NcPolynomial& p, int n) {
    NcPolynomial r;
    for (const auto& [w, c] : p.terms())
        if (static_cast<int>(w.size()) == n) r.add_term(w, c);
    return r;
}

std::map<Multidegree, NcPolynomial> multidegree_split(const NcPolynomial& p) {
    std::map<Multidegree, NcPolynomial> parts;
    for (const auto& [w, c] : p.terms()) parts[w.multidegree()].add_term(w, c);
    return parts;
}

NcPolynomial truncated_exp(const NcPolynomial& p, int order) {
    if (!p.constant_term().is_zero())
        throw BadConstantTerm("truncated_exp: argument has nonzero constant term");
    NcPolynomial q = truncate(p, order);
    NcPolynomial result = NcPolynomial::one();
    NcPolynomial power = NcPolynomial::one();
    for (int k = 1; k <= order; ++k) {
        power = truncate(power * q, order);
        if (power.is_zero()) break;
        result += Rational::inv_factorial(static_cast<unsigned>(k)) * power;
    }
    return result;
}

NcPolynomial truncated_log(const NcPolynomial& u, int order) {
    if (!u.constant_term().is_one())
        throw BadConstantTerm("truncated_log: constant term is not 1");
    NcPolynomial v = truncate(u, order) - NcPolynomial::one();
    NcPolynomial result;
    NcPolynomial power = NcPolynomial::one();
    for (int k = 1; k <= order; ++k) {
        power = truncate(power * v, order);
        if (power.is_zero()) break;
        Rational c(1, k);
        if (k % 2 == 0) c = -c;
        result += c * power;
    }
    return result;
}

NcPolynomial substitute(const NcPolynomial& p, const std::map<GeneratorId, NcPolynomial>& assignment) {
    NcPolynomial r;
    for (const auto& [w, c] : p.terms()) {
        NcPolynomial img(c);
        for (auto g : w.letters()) {
            auto it = assignment.find(g);
            img = it == assignment.end() ? img * NcPolynomial::generator(g) : img * it->second;
        }
        r += img;
    }
    return r;
}

NcPolynomial multilinear_part(const NcPolynomial& p, const std::set<GeneratorId>& vars) {
    NcPolynomial r;
    for (const auto& [w, c] : p.terms()) {
        if (w.size() != vars.size()) continue;
        std::set<GeneratorId> seen(w.letters().begin(), w.letters().end());
        if (seen.size() == w.size() && seen == vars) r.add_term(w, c);
    }
    return r;
}

NcPolynomial nc_left_normed(std::span<const GeneratorId> word) {
    if (word.empty()) throw Error("nc_left_normed: empty word");
    NcPolynomial acc = NcPolynomial::generator(word.back());
    for (std::size_t i = word.size() - 1; i-- > 0;)
        acc = commutator(NcPolynomial::generator(word[i]), acc);
    return acc;
}

NcPolynomial nc_right_normed(std::span<const GeneratorId> word) {
    if (word.empty()) throw Error("nc_right_normed: empty word");
    NcPolynomial acc = NcPolynomial::generator(word.front());
    for (std::size_t i = 1; i < word.size(); ++i)
        acc = commutator(acc, NcPolynomial::generator(word[i]));
    return acc;
}

namespace {

// E-segments of a word over {X} u E: s+1 blocks around the s occurrences of X.
std::vector<std::vector<GeneratorId>> x_segments(const Word& w, const AlphabetSplit& split) {
    std::vector<std::vector<GeneratorId>> segs(1);
    for (auto g : w.letters()) {
        if (g == split.x) {
            segs.emplace_back();
        } else if (split.e.count(g)) {
            segs.back().push_back(g);
        } else {
            throw AlphabetViolation("theta: letter X" + std::to_string(g) +
                                    " outside the declared alphabet split");
        }
    }
    return segs;
}

NcPolynomial theta_of_word(const Word& w, const AlphabetSplit& split) {
    auto segs = x_segments(w, split);
    NcPolynomial r = NcPolynomial::one();
    for (std::size_t t = 0; t + 1 < segs.size(); ++t) {
        std::vector<GeneratorId> bracket = segs[t];
        bracket.push_back(split.x);
        r = r * nc_left_normed(bracket);
    }
    r = r * NcPolynomial::monomial(Word(segs.back()), Rational(1));
    return r;
}

// Word order used in the triangularity argument: the sequence of E-segments
// compared by mlex-of-mlex (longer greater, ties lexicographic).
bool theta_word_less(const Word& a, const Word& b, const AlphabetSplit& split) {
    auto sa = x_segments(a, split), sb = x_segments(b, split);
    if (sa.size() != sb.size()) return sa.size() < sb.size();
    for (std::size_t i = 0; i < sa.size(); ++i) {
        if (sa[i].size() != sb[i].size()) return sa[i].size() < sb[i].size();
        if (sa[i] != sb[i]) return sa[i] < sb[i];
    }
    return false;
}

}  // namespace

NcPolynomial theta(const NcPolynomial& p, const AlphabetSplit& split) {
    NcPolynomial r;
    for (const auto& [w, c] : p.terms()) r += c * theta_of_word(w, split);
    return r;
}

NcPolynomial theta_inverse(const NcPolynomial& p, const AlphabetSplit& split) {
    // theta(w) = w + strictly smaller words in the segment order, so peel the
    // greatest remaining word and back-substitute.
    NcPolynomial rest = p;
    NcPolynomial result;
    while (!rest.is_zero()) {
        auto greatest = rest.terms().begin();
        for (auto it = std::next(rest.terms().begin()); it != rest.terms().end(); ++it)
            if (theta_word_less(greatest->first, it->first, split)) greatest = it;
        Word w = greatest->first;
        Rational c = greatest->second;
        result.add_term(w, c);
        rest -= c * theta_of_word(w, split);
        if (!rest.coeff(w).is_zero())
            throw InternalMismatch("theta_inverse: triangularity violated");
    }
    return result;
}

std::string to_string(const Word& w) {
    if (w.empty()) return "1";
    std::string s;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i) s += "*";
        s += "X" + std::to_string(w[i]);
    }
    return s;
}

std::string to_string(const NcPolynomial& p) {
    if (p.is_zero()) return "0";
    std::string s;
    bool first = true;
    for (const auto& [w, c] : p.terms()) {
        Rational a = c;
        if (first) {
            if (a.sign() < 0) {
                s += "-";
                a = -a;
            }
        } else {
            s += a.sign() < 0 ? " - " : " + ";
            if (a.sign() < 0) a = -a;
        }
        first = false;
        if (w.empty()) {
            s += a.str();
        } else if (a.is_one()) {
            s += to_string(w);
        } else {
            s += a.str() + "*" + to_string(w);
        }
    }
    return s;
}

}  // namespace freelie
