// freelie: exact computations in free Lie algebras -- Magnus commutators,
// PBW bases, BCH series, and the verification suites behind them.

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "freelie/bchseries.hpp"
#include "freelie/errors.hpp"
#include "freelie/expr.hpp"
#include "freelie/jsonio.hpp"
#include "freelie/magnus.hpp"
#include "freelie/nilenv.hpp"
#include "freelie/report.hpp"
#include "freelie/verifysuites.hpp"
#include "freelie/wittlazard.hpp"
#include "freelie/wordbasis.hpp"

namespace {

using namespace freelie;

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text << "\n";
    } else {
        std::ofstream f(out_path);
        if (!f) throw UsageError("cannot open output file " + out_path);
        f << text << "\n";
    }
}

std::string lie_canonical_text(const LiePolynomial& p) {
    if (!p.canonical()) return "(no canonical form)";
    if (p.canonical()->empty()) return "0";
    std::string s;
    bool first = true;
    for (const auto& [w, c] : *p.canonical()) {
        if (!first) s += " + ";
        first = false;
        ZWord z = zword_of(w);
        s += c.str() + " * " + (z.size() == 1 ? "X" + std::to_string(z[0]) : evaluate_primitive(z).str());
    }
    return s;
}

std::string lie_canonical_json(const LiePolynomial& p) {
    nlohmann::ordered_json j;
    j["terms"] = nlohmann::ordered_json::array();
    if (p.canonical()) {
        for (const auto& [w, c] : *p.canonical()) {
            nlohmann::ordered_json t;
            t["word"] = w.letters();
            ZWord z = zword_of(w);
            t["lie"] = z.size() == 1 ? "X" + std::to_string(z[0]) : evaluate_primitive(z).str();
            t["coeff"] = c.str();
            j["terms"].push_back(t);
        }
    }
    return j.dump();
}

int cmd_mu(int n, const std::string& flavor, const std::string& format, const std::string& out) {
    MagnusTable table;
    NcPolynomial expansion;
    if (flavor == "closed") {
        expansion = table.closed(n);
    } else {
        MuFlavor f = flavor == "L" ? MuFlavor::L : flavor == "R" ? MuFlavor::R : MuFlavor::C;
        expansion = table.expansion(n, f);
    }
    if (format == "json") {
        emit(poly_to_json(expansion), out);
    } else if (format == "lie") {
        std::vector<Multidegree> grades;
        for (const auto& [g, part] : multidegree_split(expansion)) grades.push_back(g);
        BasisRegistry reg = BasisRegistry::build_grades(grades);
        LiePolynomial lp;
        lp.set_canonical(reg.canonical_coords(expansion));
        emit(lie_canonical_text(lp), out);
    } else {
        emit(to_string(expansion), out);
    }
    return 0;
}

int cmd_bch(int degree, const std::string& formula, const std::string& format, const std::string& out) {
    MagnusTable table;
    if (formula != "all") {
        BchSeries s = formula == "magnus"   ? bch_magnus(degree, table)
                      : formula == "logexp" ? bch_logexp_oracle(degree)
                      : formula == "dynkin" ? bch_dynkin(degree)
                                            : bch_dynkin_variant(degree);
        if (format == "json") {
            nlohmann::ordered_json j;
            j["formula"] = formula;
            j["degrees"] = nlohmann::ordered_json::array();
            for (int n = 1; n <= degree; ++n)
                j["degrees"].push_back(nlohmann::json::parse(poly_to_json(s.degree(n))));
            emit(j.dump(), out);
        } else {
            std::string text;
            for (int n = 1; n <= degree; ++n)
                text += "degree " + std::to_string(n) + ": " + to_string(s.degree(n)) + "\n";
            text.pop_back();
            emit(text, out);
        }
        return 0;
    }

    // all formulas: per-degree agreement report with per-formula timings
    Stopwatch t_magnus;
    BchSeries magnus = bch_magnus(degree, table);
    double ms_magnus = t_magnus.millis();
    Stopwatch t_oracle;
    BchSeries oracle = bch_logexp_oracle(degree);
    double ms_oracle = t_oracle.millis();
    Stopwatch t_dynkin;
    BchSeries dynkin = bch_dynkin(degree);
    double ms_dynkin = t_dynkin.millis();
    Stopwatch t_variant;
    BchSeries variant = bch_dynkin_variant(degree);
    double ms_variant = t_variant.millis();

    bool all_ok = true;
    nlohmann::ordered_json degrees = nlohmann::ordered_json::array();
    std::string text;
    for (int n = 1; n <= degree; ++n) {
        bool m = magnus.degree(n) == oracle.degree(n);
        bool d = dynkin.degree(n) == oracle.degree(n);
        bool v = variant.degree(n) == oracle.degree(n);
        bool lie = dsw_left(oracle.degree(n), n) == Rational(n) * oracle.degree(n);
        all_ok = all_ok && m && d && v && lie;
        degrees.push_back({{"degree", n},
                           {"magnus_eq_logexp", m},
                           {"dynkin_eq_logexp", d},
                           {"dynkin_variant_eq_logexp", v},
                           {"lie_element", lie}});
        text += "degree " + std::to_string(n) + ": magnus=" + (m ? "ok" : "MISMATCH") +
                " dynkin=" + (d ? "ok" : "MISMATCH") + " variant=" + (v ? "ok" : "MISMATCH") +
                " lie=" + (lie ? "ok" : "FAIL") + "\n";
    }
    if (format == "json") {
        nlohmann::ordered_json j;
        j["agreement"] = all_ok;
        j["degrees"] = degrees;
        j["timing_ms"] = {{"magnus", ms_magnus},
                          {"logexp", ms_oracle},
                          {"dynkin", ms_dynkin},
                          {"dynkin_variant", ms_variant}};
        emit(j.dump(2), out);
    } else {
        text += std::string("agreement: ") + (all_ok ? "all formulas agree" : "MISMATCH");
        text += "\ntiming: magnus " + std::to_string(ms_magnus) + " ms, logexp " + std::to_string(ms_oracle) +
                " ms, dynkin " + std::to_string(ms_dynkin) + " ms, variant " + std::to_string(ms_variant) + " ms";
        emit(text, out);
    }
    return all_ok ? 0 : 1;
}

int cmd_basis(int alphabet, int degree, const std::string& grade_arg, const std::string& format,
              const std::string& out) {
    BasisRegistry reg = BasisRegistry::build(alphabet, degree);
    if (format == "json") {
        emit(registry_to_json(reg), out);
        return 0;
    }
    std::string text;
    std::optional<Multidegree> filter;
    if (!grade_arg.empty()) {
        Multidegree g;
        GeneratorId gen = 0;
        std::size_t pos = 0;
        while (pos < grade_arg.size()) {
            auto comma = grade_arg.find(',', pos);
            int m = std::stoi(grade_arg.substr(pos, comma - pos));
            if (m > 0) g[gen] = m;
            ++gen;
            if (comma == std::string::npos) break;
            pos = comma + 1;
        }
        filter = g;
    }
    for (const auto& e : reg.elements()) {
        if (filter && e.grade != *filter) continue;
        text += std::to_string(e.id) + ": " + to_string(e.word) + "  ->  " + e.lie.str() + "\n";
    }
    text += "dimensions by degree: ";
    bool first = true;
    for (const auto& [deg, count] : reg.dimension_by_degree()) {
        if (!first) text += ",";
        first = false;
        text += std::to_string(count);
    }
    emit(text, out);
    return 0;
}

int cmd_dims(int alphabet, int degree, const std::string& format, const std::string& out) {
    BasisRegistry reg = BasisRegistry::build(alphabet, degree);
    auto dims = reg.dimension_by_degree();
    if (format == "json") {
        nlohmann::ordered_json j;
        nlohmann::ordered_json per_degree = nlohmann::ordered_json::array();
        for (int d = 1; d <= degree; ++d) per_degree.push_back(dims.count(d) ? dims[d] : 0);
        j["by_degree"] = per_degree;
        nlohmann::ordered_json per_grade = nlohmann::ordered_json::array();
        for (const auto& [g, count] : reg.dimension_by_grade()) {
            nlohmann::ordered_json grade = nlohmann::ordered_json::object();
            for (const auto& [gen, m] : g) grade[std::to_string(gen)] = m;
            per_grade.push_back({{"grade", grade}, {"dimension", count}});
        }
        j["by_grade"] = per_grade;
        emit(j.dump(), out);
    } else {
        std::string text;
        for (int d = 1; d <= degree; ++d) {
            if (d > 1) text += ",";
            text += std::to_string(dims.count(d) ? dims[d] : 0);
        }
        emit(text, out);
    }
    return 0;
}

int cmd_eval(const std::string& expression, bool as_lie, const std::string& format, const std::string& out) {
    auto ast = expr::parse(expression);
    if (as_lie) {
        LiePolynomial lp = expr::evaluate_as_lie(ast);
        emit(format == "json" ? lie_canonical_json(lp) : lie_canonical_text(lp), out);
        return 0;
    }
    NcPolynomial p = expr::evaluate(ast);
    emit(format == "json" ? poly_to_json(p) : to_string(p), out);
    return 0;
}

int cmd_verify(const std::string& suite, int gens, int degree, int nil_class, std::uint64_t seed,
               const std::string& mode_arg, const std::string& format, const std::string& out) {
    std::vector<VerificationReport> reports;
    EtaMode mode = mode_arg == "symmetric" ? EtaMode::Symmetric : EtaMode::Ordered;
    if (suite == "pbw-sym" || suite == "all") reports.push_back(pbw_symmetric_suite(gens, degree));
    if (suite == "pbw-basic" || suite == "all") reports.push_back(pbw_basic_suite(gens, degree, seed));
    if (suite == "magnus" || suite == "all") reports.push_back(magnus_representability_suite(gens, degree));
    if (suite == "wittlazard" || suite == "all") {
        reports.push_back(wittlazard_suite(std::min(degree, 4) < 2 ? 2 : std::min(degree, 4), mode, seed));
        if (suite == "wittlazard" && mode_arg.empty()) {
            reports.push_back(wittlazard_suite(std::min(degree, 4) < 2 ? 2 : std::min(degree, 4),
                                               EtaMode::Symmetric, seed));
        }
    }
    if (suite == "nilenv" || suite == "all") reports.push_back(nilenv_suite(nil_class, std::min(gens, 2)));
    if (reports.empty()) throw UsageError("unknown suite '" + suite + "'");

    bool all_ok = true;
    for (const auto& r : reports) all_ok = all_ok && r.all_passed();
    if (format == "json") {
        nlohmann::ordered_json j = nlohmann::ordered_json::array();
        for (const auto& r : reports) j.push_back(nlohmann::json::parse(r.to_json_string()));
        emit(j.dump(2), out);
    } else {
        std::string text;
        for (const auto& r : reports) {
            std::ostringstream os;
            r.print(os);
            text += os.str();
        }
        if (!text.empty() && text.back() == '\n') text.pop_back();
        emit(text, out);
    }
    return all_ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact free Lie algebra toolkit: Magnus commutators, PBW bases, BCH series"};
    app.require_subcommand(1);

    std::string format = "text", out, flavor = "L", formula = "all", grade_arg, expression, suite = "all",
                mode_arg;
    int n = 3, degree = 4, alphabet = 2, gens = 3, nil_class = 3;
    std::uint64_t seed = 1;
    bool as_lie = false;

    auto* mu = app.add_subcommand("mu", "Magnus commutator mu_n");
    mu->add_option("n", n, "arity")->required()->check(CLI::Range(1, 8));
    mu->add_option("--flavor", flavor, "L, R, C or closed")
        ->check(CLI::IsMember({"L", "R", "C", "closed"}));
    mu->add_option("--format", format)->check(CLI::IsMember({"json", "text", "lie"}));
    mu->add_option("--out", out, "write to file instead of stdout");

    auto* bch = app.add_subcommand("bch", "Baker-Campbell-Hausdorff series");
    bch->add_option("--degree", degree, "total degree bound")->required()->check(CLI::Range(1, 10));
    bch->add_option("--formula", formula)
        ->check(CLI::IsMember({"magnus", "logexp", "dynkin", "dynkin-variant", "all"}));
    bch->add_option("--format", format)->check(CLI::IsMember({"json", "text"}));
    bch->add_option("--out", out);

    auto* basis = app.add_subcommand("basis", "primitive-word PBW basis listing");
    basis->add_option("--alphabet", alphabet, "number of generators")->required();
    basis->add_option("--degree", degree, "maximal total degree")->required();
    basis->add_option("--grade", grade_arg, "restrict to one multigrade m0,m1,...");
    basis->add_option("--format", format)->check(CLI::IsMember({"json", "text"}));
    basis->add_option("--out", out);

    auto* dims = app.add_subcommand("dims", "free-Lie dimensions from the registry");
    dims->add_option("--alphabet", alphabet)->required();
    dims->add_option("--degree", degree)->required();
    dims->add_option("--format", format)->check(CLI::IsMember({"json", "text"}));
    dims->add_option("--out", out);

    auto* ev = app.add_subcommand("eval", "evaluate an expression");
    ev->add_option("expression", expression, "e.g. \"1/2*[X1,X2] + X3\"")->required();
    ev->add_flag("--as-lie,--lie", as_lie, "canonicalize as a Lie element");
    ev->add_option("--format", format)->check(CLI::IsMember({"json", "text"}));
    ev->add_option("--out", out);

    auto* verify = app.add_subcommand("verify", "run a verification suite");
    verify->add_option("suite", suite, "pbw-sym, pbw-basic, magnus, wittlazard, nilenv or all")
        ->check(CLI::IsMember({"pbw-sym", "pbw-basic", "magnus", "wittlazard", "nilenv", "all"}));
    verify->add_option("--gens", gens, "generators")->check(CLI::Range(1, 3));
    verify->add_option("--degree", degree, "maximal degree")->check(CLI::Range(1, 4));
    verify->add_option("--class", nil_class, "nilpotency class for nilenv")->check(CLI::Range(1, 4));
    verify->add_option("--mode", mode_arg, "eta mode for wittlazard")
        ->check(CLI::IsMember({"ordered", "symmetric"}));
    verify->add_option("--seed", seed, "seed for random elements");
    verify->add_option("--format", format)->check(CLI::IsMember({"json", "text"}));
    verify->add_option("--out", out, "write the JSON report to a file");

    try {
        app.parse(argc, argv);
        if (mu->parsed()) return cmd_mu(n, flavor, format, out);
        if (bch->parsed()) return cmd_bch(degree, formula, format, out);
        if (basis->parsed()) return cmd_basis(alphabet, degree, grade_arg, format, out);
        if (dims->parsed()) return cmd_dims(alphabet, degree, format, out);
        if (ev->parsed()) return cmd_eval(expression, as_lie, format, out);
        if (verify->parsed()) return cmd_verify(suite, gens, degree, nil_class, seed, mode_arg, format, out);
        return 2;
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const freelie::SyntaxError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const freelie::UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const freelie::NotLieElement& e) {
        std::cerr << "not a Lie element: " << e.what() << "\n";
        return 1;
    } catch (const freelie::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
