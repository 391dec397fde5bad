#include "freelie/liepoly.hpp"

#include <algorithm>
#include <functional>

#include "freelie/errors.hpp"

namespace freelie {

namespace {
constexpr std::int64_t kNode = -1;
}

LieMonomial LieMonomial::leaf(GeneratorId g) {
    LieMonomial m;
    m.code_ = {static_cast<std::int64_t>(g)};
    return m;
}

LieMonomial LieMonomial::bracket(const LieMonomial& a, const LieMonomial& b) {
    LieMonomial m;
    m.code_.reserve(1 + a.code_.size() + b.code_.size());
    m.code_.push_back(kNode);
    m.code_.insert(m.code_.end(), a.code_.begin(), a.code_.end());
    m.code_.insert(m.code_.end(), b.code_.begin(), b.code_.end());
    return m;
}

GeneratorId LieMonomial::leaf_generator() const {
    if (!is_leaf()) throw Error("LieMonomial: not a leaf");
    return static_cast<GeneratorId>(code_[0]);
}

namespace {
// Length of the subtree code starting at position i.
std::size_t subtree_len(const std::vector<std::int64_t>& code, std::size_t i) {
    std::size_t open = 1, j = i;
    while (open > 0) {
        if (code[j] == kNode)
            ++open;
        else
            --open;
        ++j;
    }
    return j - i;
}
}  // namespace

std::pair<LieMonomial, LieMonomial> LieMonomial::children() const {
    if (is_leaf()) throw Error("LieMonomial: leaf has no children");
    std::size_t llen = subtree_len(code_, 1);
    LieMonomial l, r;
    l.code_.assign(code_.begin() + 1, code_.begin() + 1 + static_cast<std::ptrdiff_t>(llen));
    r.code_.assign(code_.begin() + 1 + static_cast<std::ptrdiff_t>(llen), code_.end());
    return {std::move(l), std::move(r)};
}

Multidegree LieMonomial::multidegree() const {
    Multidegree d;
    for (auto c : code_)
        if (c != kNode) ++d[static_cast<GeneratorId>(c)];
    return d;
}

LieMonomial LieMonomial::substitute(const std::map<GeneratorId, LieMonomial>& assignment) const {
    LieMonomial out;
    out.code_.reserve(code_.size());
    for (auto c : code_) {
        if (c == kNode) {
            out.code_.push_back(kNode);
            continue;
        }
        auto it = assignment.find(static_cast<GeneratorId>(c));
        if (it == assignment.end()) {
            out.code_.push_back(c);
        } else {
            out.code_.insert(out.code_.end(), it->second.code_.begin(), it->second.code_.end());
        }
    }
    return out;
}

LieMonomial LieMonomial::relabel(const std::map<GeneratorId, GeneratorId>& m) const {
    LieMonomial out;
    out.code_.reserve(code_.size());
    for (auto c : code_) {
        if (c == kNode) {
            out.code_.push_back(kNode);
            continue;
        }
        auto it = m.find(static_cast<GeneratorId>(c));
        out.code_.push_back(it == m.end() ? c : static_cast<std::int64_t>(it->second));
    }
    return out;
}

NcPolynomial LieMonomial::commutator_eval() const {
    if (is_leaf()) return NcPolynomial::generator(leaf_generator());
    auto [l, r] = children();
    return commutator(l.commutator_eval(), r.commutator_eval());
}

std::string LieMonomial::str() const {
    if (is_leaf()) return "X" + std::to_string(leaf_generator());
    auto [l, r] = children();
    return "[" + l.str() + "," + r.str() + "]";
}

LiePolynomial LiePolynomial::monomial(LieMonomial m, const Rational& c) {
    LiePolynomial p;
    p.add_term(m, c);
    return p;
}

LiePolynomial LiePolynomial::generator(GeneratorId g) {
    return monomial(LieMonomial::leaf(g), Rational(1));
}

void LiePolynomial::add_term(const LieMonomial& m, const Rational& c) {
    if (c.is_zero()) return;
    canonical_.reset();
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

LiePolynomial& LiePolynomial::operator+=(const LiePolynomial& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

LiePolynomial& LiePolynomial::operator-=(const LiePolynomial& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

LiePolynomial& LiePolynomial::operator*=(const Rational& c) {
    canonical_.reset();
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, v] : terms_) v *= c;
    return *this;
}

NcPolynomial LiePolynomial::commutator_eval() const {
    NcPolynomial r;
    for (const auto& [m, c] : terms_) r += c * m.commutator_eval();
    return r;
}

LiePolynomial lie_bracket(const LiePolynomial& a, const LiePolynomial& b) {
    LiePolynomial r;
    for (const auto& [ma, ca] : a.terms())
        for (const auto& [mb, cb] : b.terms()) r.add_term(LieMonomial::bracket(ma, mb), ca * cb);
    return r;
}

LiePolynomial left_normed(std::span<const LiePolynomial> args) {
    if (args.empty()) throw Error("left_normed: no arguments");
    LiePolynomial acc = args.back();
    for (std::size_t i = args.size() - 1; i-- > 0;) acc = lie_bracket(args[i], acc);
    return acc;
}

LiePolynomial right_normed(std::span<const LiePolynomial> args) {
    if (args.empty()) throw Error("right_normed: no arguments");
    LiePolynomial acc = args.front();
    for (std::size_t i = 1; i < args.size(); ++i) acc = lie_bracket(acc, args[i]);
    return acc;
}

LiePolynomial left_normed_gens(std::span<const GeneratorId> gens) {
    std::vector<LiePolynomial> args;
    args.reserve(gens.size());
    for (auto g : gens) args.push_back(LiePolynomial::generator(g));
    return left_normed(args);
}

LieMonomial left_normed_tree(std::span<const GeneratorId> gens) {
    if (gens.empty()) throw Error("left_normed_tree: no arguments");
    LieMonomial acc = LieMonomial::leaf(gens.back());
    for (std::size_t i = gens.size() - 1; i-- > 0;)
        acc = LieMonomial::bracket(LieMonomial::leaf(gens[i]), acc);
    return acc;
}

LiePolynomial substitute(const LiePolynomial& p, const std::map<GeneratorId, LiePolynomial>& assignment) {
    // Expand each tree multilinearly: a leaf hit by the assignment branches
    // into one copy per monomial of its image.
    std::function<LiePolynomial(const LieMonomial&)> go = [&](const LieMonomial& m) -> LiePolynomial {
        if (m.is_leaf()) {
            auto it = assignment.find(m.leaf_generator());
            if (it == assignment.end()) return LiePolynomial::monomial(m, Rational(1));
            return it->second;
        }
        auto [l, r] = m.children();
        return lie_bracket(go(l), go(r));
    };
    LiePolynomial out;
    for (const auto& [m, c] : p.terms()) {
        LiePolynomial part = go(m);
        part *= c;
        out += part;
    }
    return out;
}

NcPolynomial dsw_left(const NcPolynomial& p, int n) {
    NcPolynomial r;
    for (const auto& [w, c] : p.terms()) {
        if (static_cast<int>(w.size()) != n)
            throw Error("dsw_left: polynomial not homogeneous of the stated degree");
        r += c * nc_left_normed(w.letters());
    }
    return r;
}

NcPolynomial dsw_weighted(const NcPolynomial& p, const std::map<GeneratorId, Rational>& weights) {
    NcPolynomial r;
    for (const auto& [w, c] : p.terms()) {
        if (w.empty()) throw Error("dsw_weighted: constant term has no last letter");
        auto it = weights.find(w.letters().back());
        Rational wt = it == weights.end() ? Rational() : it->second;
        if (wt.is_zero()) continue;
        r += (c * wt) * nc_left_normed(w.letters());
    }
    return r;
}

NcPolynomial dsw_double(const NcPolynomial& p, int n) {
    if (n < 2) throw Error("dsw_double: degree must be at least 2");
    NcPolynomial r;
    for (const auto& [w, c] : p.terms()) {
        if (static_cast<int>(w.size()) != n)
            throw Error("dsw_double: polynomial not homogeneous of the stated degree");
        const auto& ls = w.letters();
        for (int cut = 1; cut < n; ++cut) {
            auto left = std::span<const GeneratorId>(ls.data(), static_cast<std::size_t>(cut));
            auto right = std::span<const GeneratorId>(ls.data() + cut, ls.size() - static_cast<std::size_t>(cut));
            r += c * commutator(nc_left_normed(left), nc_right_normed(right));
        }
    }
    return r;
}

bool is_lie_element(const NcPolynomial& p) {
    if (!p.constant_term().is_zero()) return false;
    for (int n = 1; n <= p.max_degree(); ++n) {
        NcPolynomial part = degree_part(p, n);
        if (part.is_zero()) continue;
        if (dsw_left(part, n) != Rational(n) * part) return false;
    }
    return true;
}

std::vector<LieMonomial> all_bracket_monomials(const Multidegree& grade) {
    int total = 0;
    for (const auto& [g, m] : grade) total += m;
    if (total == 0) return {};
    if (total == 1) return {LieMonomial::leaf(grade.begin()->first)};
    std::vector<LieMonomial> out;
    // All ordered splittings of the multiset into two nonempty halves.
    std::vector<std::pair<GeneratorId, int>> entries(grade.begin(), grade.end());
    std::vector<int> pick(entries.size(), 0);
    while (true) {
        // advance odometer
        std::size_t i = 0;
        for (; i < entries.size(); ++i) {
            if (pick[i] < entries[i].second) {
                ++pick[i];
                break;
            }
            pick[i] = 0;
        }
        if (i == entries.size()) break;
        Multidegree left, right;
        int lsize = 0;
        for (std::size_t k = 0; k < entries.size(); ++k) {
            if (pick[k] > 0) left[entries[k].first] = pick[k];
            if (entries[k].second - pick[k] > 0) right[entries[k].first] = entries[k].second - pick[k];
            lsize += pick[k];
        }
        if (lsize == 0 || lsize == total) continue;
        auto ltrees = all_bracket_monomials(left);
        auto rtrees = all_bracket_monomials(right);
        for (const auto& lt : ltrees)
            for (const auto& rt : rtrees) out.push_back(LieMonomial::bracket(lt, rt));
    }
    return out;
}

}  // namespace freelie
