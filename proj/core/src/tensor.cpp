#include "freelie/tensor.hpp"

#include <algorithm>

#include "freelie/errors.hpp"

namespace freelie {

TensorPolynomial TensorPolynomial::unit(const Rational& c) {
    TensorPolynomial t;
    t.add_term({}, c);
    return t;
}

TensorPolynomial TensorPolynomial::monomial(TensorWord w, const Rational& c) {
    TensorPolynomial t;
    t.add_term(w, c);
    return t;
}

Rational TensorPolynomial::coeff(const TensorWord& w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? Rational() : it->second;
}

void TensorPolynomial::add_term(const TensorWord& w, const Rational& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(w, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

TensorPolynomial TensorPolynomial::degree_part(int n) const {
    TensorPolynomial out;
    for (const auto& [w, c] : terms_)
        if (static_cast<int>(w.size()) == n) out.add_term(w, c);
    return out;
}

int TensorPolynomial::max_tensor_degree() const {
    int d = 0;
    for (const auto& [w, c] : terms_) d = std::max(d, static_cast<int>(w.size()));
    return d;
}

TensorPolynomial& TensorPolynomial::operator+=(const TensorPolynomial& o) {
    for (const auto& [w, c] : o.terms_) add_term(w, c);
    return *this;
}

TensorPolynomial& TensorPolynomial::operator-=(const TensorPolynomial& o) {
    for (const auto& [w, c] : o.terms_) add_term(w, -c);
    return *this;
}

TensorPolynomial& TensorPolynomial::operator*=(const Rational& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [w, v] : terms_) v *= c;
    return *this;
}

TensorPolynomial operator*(const TensorPolynomial& a, const TensorPolynomial& b) {
    TensorPolynomial r;
    for (const auto& [wa, ca] : a.terms())
        for (const auto& [wb, cb] : b.terms()) {
            TensorWord w = wa;
            w.insert(w.end(), wb.begin(), wb.end());
            r.add_term(w, ca * cb);
        }
    return r;
}

NcPolynomial m_eval(const TensorPolynomial& t, const BasisRegistry& reg) {
    NcPolynomial out;
    for (const auto& [w, c] : t.terms()) {
        NcPolynomial prod(c);
        for (auto id : w) prod = prod * reg.element(id).expansion;
        out += prod;
    }
    return out;
}

TensorPolynomial symmetrize(const TensorPolynomial& t) {
    TensorPolynomial out;
    for (const auto& [w, c] : t.terms()) {
        if (w.size() <= 1) {
            out.add_term(w, c);
            continue;
        }
        TensorWord sorted = w;
        std::sort(sorted.begin(), sorted.end());
        // next_permutation walks distinct arrangements, so weight by their count
        long distinct = 0;
        TensorWord probe = sorted;
        do {
            ++distinct;
        } while (std::next_permutation(probe.begin(), probe.end()));
        Rational avg = c / Rational(distinct);
        do {
            out.add_term(sorted, avg);
        } while (std::next_permutation(sorted.begin(), sorted.end()));
    }
    return out;
}

std::string to_string(const TensorWord& w, const BasisRegistry& reg) {
    if (w.empty()) return "1";
    std::string s;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i) s += " (x) ";
        s += reg.element(w[i]).lie.str();
    }
    return s;
}

}  // namespace freelie
