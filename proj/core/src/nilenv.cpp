#include "freelie/nilenv.hpp"

#include <algorithm>
#include <functional>

#include <json.hpp>

#include "freelie/combinatorics.hpp"
#include "freelie/errors.hpp"

namespace freelie {

NilAlgebra::NilAlgebra(int nil_class, int num_gens) : k_(nil_class), gens_(num_gens) {
    if (nil_class < 1 || nil_class > 4 || num_gens < 1 || num_gens > 3)
        throw DeskScaleExceeded("NilAlgebra: desk scale is class <= 4, generators <= 3");
    reg_ = BasisRegistry::build_grades(all_multidegrees(num_gens, nil_class));
}

NilAlgebra::Element NilAlgebra::generator(GeneratorId g) const {
    auto id = reg_.id_of_word(Word::single(g));
    if (!id) throw Error("NilAlgebra: unknown generator X" + std::to_string(g));
    return {{*id, Rational(1)}};
}

NilAlgebra::Element NilAlgebra::bracket(const Element& a, const Element& b) const {
    Element out;
    for (const auto& [ia, ca] : a)
        for (const auto& [ib, cb] : b) {
            const Element* basic;
            {
                std::lock_guard<std::mutex> lock(mutex_);
                auto key = std::make_pair(ia, ib);
                auto it = bracket_cache_.find(key);
                if (it == bracket_cache_.end()) {
                    Element e;
                    if (reg_.element(ia).degree + reg_.element(ib).degree <= k_) {
                        LieMonomial br = LieMonomial::bracket(reg_.element(ia).lie, reg_.element(ib).lie);
                        for (const auto& [id, c] : reg_.canonical_ids(br.commutator_eval())) e.emplace(id, c);
                    }
                    it = bracket_cache_.emplace(key, std::move(e)).first;
                }
                basic = &it->second;
            }
            for (const auto& [id, c] : *basic) {
                auto [pos, inserted] = out.try_emplace(id, ca * cb * c);
                if (!inserted) {
                    pos->second += ca * cb * c;
                    if (pos->second.is_zero()) out.erase(pos);
                }
            }
        }
    return out;
}

NilAlgebra::Element NilAlgebra::evaluate(const LiePolynomial& p,
                                         const std::map<GeneratorId, Element>& assignment) const {
    std::function<Element(const LieMonomial&)> go = [&](const LieMonomial& m) -> Element {
        if (m.is_leaf()) {
            auto it = assignment.find(m.leaf_generator());
            if (it == assignment.end())
                throw Error("NilAlgebra::evaluate: unassigned generator X" + std::to_string(m.leaf_generator()));
            return it->second;
        }
        auto [l, r] = m.children();
        return bracket(go(l), go(r));
    };
    Element out;
    for (const auto& [m, c] : p.terms()) {
        for (const auto& [id, v] : go(m)) {
            auto [pos, inserted] = out.try_emplace(id, c * v);
            if (!inserted) {
                pos->second += c * v;
                if (pos->second.is_zero()) out.erase(pos);
            }
        }
    }
    return out;
}

SymPolynomial SymPolynomial::unit(const Rational& c) {
    SymPolynomial p;
    p.add_term({}, c);
    return p;
}

SymPolynomial SymPolynomial::monomial(SymWord w, const Rational& c) {
    SymPolynomial p;
    p.add_term(std::move(w), c);
    return p;
}

SymPolynomial SymPolynomial::from_element(const NilAlgebra::Element& e, const Rational& scale) {
    SymPolynomial p;
    for (const auto& [id, c] : e) p.add_term({id}, c * scale);
    return p;
}

void SymPolynomial::add_term(SymWord w, const Rational& c) {
    if (c.is_zero()) return;
    std::sort(w.begin(), w.end());
    auto [it, inserted] = terms_.try_emplace(std::move(w), c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

SymPolynomial& SymPolynomial::operator+=(const SymPolynomial& o) {
    for (const auto& [w, c] : o.terms_) add_term(w, c);
    return *this;
}

SymPolynomial& SymPolynomial::operator-=(const SymPolynomial& o) {
    for (const auto& [w, c] : o.terms_) add_term(w, -c);
    return *this;
}

NilAlgebra::Element bch_nm(const NilAlgebra& alg, MagnusTable& mu, const std::vector<NilAlgebra::Element>& a,
                           const std::vector<NilAlgebra::Element>& b) {
    const int n = static_cast<int>(a.size()), m = static_cast<int>(b.size());
    if (n + m < 1) throw Error("bch_nm: n + m must be at least 1");
    if (n + m > alg.nil_class()) return {};  // identically zero past the class

    const LiePolynomial& mu_nm = mu.lie(n + m);
    NilAlgebra::Element acc;
    auto add_scaled = [&](const NilAlgebra::Element& e, const Rational& s) {
        for (const auto& [id, c] : e) {
            auto [pos, inserted] = acc.try_emplace(id, c * s);
            if (!inserted) {
                pos->second += c * s;
                if (pos->second.is_zero()) acc.erase(pos);
            }
        }
    };
    Rational norm = Rational::inv_factorial(static_cast<unsigned>(n)) *
                    Rational::inv_factorial(static_cast<unsigned>(m));
    for (const auto& sa : permutations_of(n)) {
        for (const auto& sb : permutations_of(m)) {
            std::map<GeneratorId, NilAlgebra::Element> assignment;
            for (int i = 0; i < n; ++i)
                assignment.emplace(static_cast<GeneratorId>(i + 1), a[static_cast<std::size_t>(sa[static_cast<std::size_t>(i)] - 1)]);
            for (int j = 0; j < m; ++j)
                assignment.emplace(static_cast<GeneratorId>(n + j + 1), b[static_cast<std::size_t>(sb[static_cast<std::size_t>(j)] - 1)]);
            add_scaled(alg.evaluate(mu_nm, assignment), norm);
        }
    }
    return acc;
}

SymPolynomial u_dir_mul(const NilAlgebra& alg, MagnusTable& mu, const SymPolynomial& p, const SymPolynomial& q) {
    SymPolynomial out;
    for (const auto& [wp, cp] : p.terms()) {
        for (const auto& [wq, cq] : q.terms()) {
            const int n = static_cast<int>(wp.size()), m = static_cast<int>(wq.size());
            std::vector<int> positions(static_cast<std::size_t>(n + m));
            for (int i = 0; i < n + m; ++i) positions[static_cast<std::size_t>(i)] = i + 1;
            Rational scale = cp * cq;
            for_each_set_partition<int>(positions, [&](const std::vector<std::vector<int>>& blocks) {
                // each block evaluates by bch on its increasing a- and b-parts
                std::vector<NilAlgebra::Element> values;
                values.reserve(blocks.size());
                bool dead = false;
                for (const auto& block : blocks) {
                    std::vector<NilAlgebra::Element> aa, bb;
                    for (int pos : block) {
                        if (pos <= n)
                            aa.push_back({{wp[static_cast<std::size_t>(pos - 1)], Rational(1)}});
                        else
                            bb.push_back({{wq[static_cast<std::size_t>(pos - n - 1)], Rational(1)}});
                    }
                    NilAlgebra::Element v = bch_nm(alg, mu, aa, bb);
                    if (v.empty()) {
                        dead = true;
                        break;
                    }
                    values.push_back(std::move(v));
                }
                if (dead) return;
                // distribute the sym-product of the block values
                std::map<SymWord, Rational> acc{{SymWord{}, scale}};
                for (const auto& v : values) {
                    std::map<SymWord, Rational> next;
                    for (const auto& [w, c] : acc)
                        for (const auto& [id, vc] : v) {
                            SymWord ext = w;
                            ext.push_back(id);
                            std::sort(ext.begin(), ext.end());
                            auto [it, inserted] = next.try_emplace(std::move(ext), c * vc);
                            if (!inserted) it->second += c * vc;
                        }
                    acc = std::move(next);
                }
                for (const auto& [w, c] : acc) out.add_term(w, c);
            });
        }
    }
    return out;
}

namespace {

int sym_degree(const NilAlgebra& alg, const SymWord& w) {
    int d = 0;
    for (auto id : w) d += alg.degree_of(id);
    return d;
}

// sym-monomials of the exact combined degree d
std::vector<SymWord> sym_monomials_of_degree(const NilAlgebra& alg, int d) {
    std::vector<SymWord> out;
    const auto& elems = alg.registry().elements();
    std::function<void(SymWord&, std::uint32_t, int)> go = [&](SymWord& w, std::uint32_t next, int remaining) {
        if (remaining == 0) {
            out.push_back(w);
            return;
        }
        for (std::uint32_t id = next; id < elems.size(); ++id) {
            if (elems[id].degree > remaining) continue;
            w.push_back(id);
            go(w, id, remaining - elems[id].degree);
            w.pop_back();
        }
    };
    SymWord scratch;
    go(scratch, 0, d);
    return out;
}

unsigned long factorial_ul(int n) {
    unsigned long f = 1;
    for (int i = 2; i <= n; ++i) f *= static_cast<unsigned long>(i);
    return f;
}

}  // namespace

VerificationReport nilenv_suite(int nil_class, int num_gens) {
    NilAlgebra alg(nil_class, num_gens);
    MagnusTable mu;
    VerificationReport rep("nilenv(k=" + std::to_string(nil_class) + ", gens=" + std::to_string(num_gens) + ")");
    const int cap = nil_class + 2;
    const unsigned long kfact = factorial_ul(nil_class);

    std::vector<SymWord> monomials;
    for (int d = 1; d <= cap; ++d)
        for (auto& w : sym_monomials_of_degree(alg, d)) monomials.push_back(std::move(w));

    // unit laws
    {
        Stopwatch sw;
        bool ok = true;
        for (const auto& w : monomials) {
            SymPolynomial x = SymPolynomial::monomial(w, Rational(1));
            if (u_dir_mul(alg, mu, SymPolynomial::unit(), x) != x) ok = false;
            if (u_dir_mul(alg, mu, x, SymPolynomial::unit()) != x) ok = false;
        }
        rep.add("unit-laws(" + std::to_string(monomials.size()) + " monomials)", ok, "", sw.millis());
    }

    // enveloping relation on degree-1 factors: a.b - b.a = [a,b]
    {
        Stopwatch sw;
        bool ok = true;
        for (int g1 = 0; g1 < num_gens && ok; ++g1)
            for (int g2 = 0; g2 < num_gens && ok; ++g2) {
                auto a = alg.generator(static_cast<GeneratorId>(g1));
                auto b = alg.generator(static_cast<GeneratorId>(g2));
                SymPolynomial lhs = u_dir_mul(alg, mu, SymPolynomial::from_element(a), SymPolynomial::from_element(b)) -
                                    u_dir_mul(alg, mu, SymPolynomial::from_element(b), SymPolynomial::from_element(a));
                SymPolynomial rhs = SymPolynomial::from_element(alg.bracket(a, b));
                if (lhs != rhs) ok = false;
            }
        rep.add("enveloping-relation", ok, "", sw.millis());
    }

    // Z[1/k!] integrality of structure constants on all pairs within the cap
    {
        Stopwatch sw;
        bool ok = true;
        std::string witness;
        for (const auto& x : monomials)
            for (const auto& y : monomials) {
                if (sym_degree(alg, x) + sym_degree(alg, y) > cap) continue;
                auto prod = u_dir_mul(alg, mu, SymPolynomial::monomial(x, Rational(1)),
                                      SymPolynomial::monomial(y, Rational(1)));
                for (const auto& [w, c] : prod.terms()) {
                    if (!in_z_inverted(c, kfact)) {
                        ok = false;
                        if (witness.empty()) witness = "coefficient " + c.str() + " outside Z[1/k!]";
                    }
                }
            }
        rep.add("structure-constants-Z[1/k!]", ok, witness, sw.millis());
    }

    // exhaustive associativity on triples of combined degree <= k+2
    {
        Stopwatch sw;
        bool ok = true;
        long triples = 0;
        for (const auto& x : monomials) {
            int dx = sym_degree(alg, x);
            for (const auto& y : monomials) {
                int dy = sym_degree(alg, y);
                if (dx + dy >= cap) continue;
                for (const auto& z : monomials) {
                    if (dx + dy + sym_degree(alg, z) > cap) continue;
                    ++triples;
                    SymPolynomial xp = SymPolynomial::monomial(x, Rational(1));
                    SymPolynomial yp = SymPolynomial::monomial(y, Rational(1));
                    SymPolynomial zp = SymPolynomial::monomial(z, Rational(1));
                    SymPolynomial lhs = u_dir_mul(alg, mu, u_dir_mul(alg, mu, xp, yp), zp);
                    SymPolynomial rhs = u_dir_mul(alg, mu, xp, u_dir_mul(alg, mu, yp, zp));
                    if (lhs != rhs) ok = false;
                }
            }
        }
        rep.add("associativity(" + std::to_string(triples) + " triples)", ok, "", sw.millis());
    }

    return rep;
}

std::string structure_constant_table_json(int nil_class, int num_gens) {
    NilAlgebra alg(nil_class, num_gens);
    MagnusTable mu;
    const int cap = nil_class + 2;
    std::vector<SymWord> monomials;
    for (int d = 1; d <= cap; ++d)
        for (auto& w : sym_monomials_of_degree(alg, d)) monomials.push_back(std::move(w));

    auto word_name = [&](const SymWord& w) {
        std::string s;
        for (std::size_t i = 0; i < w.size(); ++i) {
            if (i) s += "*";
            s += alg.registry().element(w[i]).lie.str();
        }
        return s.empty() ? std::string("1") : s;
    };

    nlohmann::ordered_json j;
    j["class"] = nil_class;
    j["generators"] = num_gens;
    j["basis"] = nlohmann::ordered_json::array();
    for (const auto& e : alg.registry().elements())
        j["basis"].push_back({{"id", e.id}, {"lie", e.lie.str()}, {"degree", e.degree}});
    j["products"] = nlohmann::ordered_json::array();
    for (const auto& x : monomials)
        for (const auto& y : monomials) {
            if (sym_degree(alg, x) + sym_degree(alg, y) > cap) continue;
            auto prod =
                u_dir_mul(alg, mu, SymPolynomial::monomial(x, Rational(1)), SymPolynomial::monomial(y, Rational(1)));
            nlohmann::ordered_json terms = nlohmann::ordered_json::array();
            for (const auto& [w, c] : prod.terms())
                terms.push_back({{"monomial", word_name(w)}, {"coeff", c.str()}});
            j["products"].push_back({{"lhs", word_name(x)}, {"rhs", word_name(y)}, {"terms", terms}});
        }
    return j.dump(2);
}

}  // namespace freelie
