#include "freelie/jsonio.hpp"

#include <json.hpp>

#include "freelie/errors.hpp"

namespace freelie {

using nlohmann::ordered_json;

std::string poly_to_json(const NcPolynomial& p) {
    ordered_json j;
    j["terms"] = ordered_json::array();
    for (const auto& [w, c] : p.terms()) {
        ordered_json t;
        t["word"] = w.letters();
        t["coeff"] = c.str();
        j["terms"].push_back(t);
    }
    return j.dump();
}

NcPolynomial poly_from_json(const std::string& text) {
    auto j = nlohmann::json::parse(text);
    NcPolynomial p;
    for (const auto& t : j.at("terms")) {
        std::vector<GeneratorId> letters = t.at("word").get<std::vector<GeneratorId>>();
        p.add_term(Word(std::move(letters)), Rational::from_string(t.at("coeff").get<std::string>()));
    }
    return p;
}

std::string tensor_to_json(const TensorPolynomial& t) {
    ordered_json j;
    j["terms"] = ordered_json::array();
    for (const auto& [w, c] : t.terms()) {
        ordered_json term;
        term["factors"] = w;
        term["coeff"] = c.str();
        j["terms"].push_back(term);
    }
    return j.dump();
}

TensorPolynomial tensor_from_json(const std::string& text) {
    auto j = nlohmann::json::parse(text);
    TensorPolynomial t;
    for (const auto& term : j.at("terms")) {
        TensorWord w = term.at("factors").get<TensorWord>();
        t.add_term(w, Rational::from_string(term.at("coeff").get<std::string>()));
    }
    return t;
}

std::string registry_to_json(const BasisRegistry& reg) {
    ordered_json j;
    j["alphabet_size"] = reg.alphabet_size();
    j["max_degree"] = reg.max_degree();
    j["basis"] = ordered_json::array();
    for (const auto& e : reg.elements()) {
        ordered_json el;
        el["id"] = e.id;
        el["word"] = e.word.letters();
        el["degree"] = e.degree;
        ordered_json grade = ordered_json::object();
        for (const auto& [g, m] : e.grade) grade[std::to_string(g)] = m;
        el["grade"] = grade;
        el["lie"] = e.lie.str();
        el["expansion"] = nlohmann::json::parse(poly_to_json(e.expansion));
        j["basis"].push_back(el);
    }
    ordered_json dims = ordered_json::object();
    for (const auto& [deg, count] : reg.dimension_by_degree()) dims[std::to_string(deg)] = count;
    j["dimension_by_degree"] = dims;
    return j.dump(2);
}

}  // namespace freelie
