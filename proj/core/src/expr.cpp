#include "freelie/expr.hpp"

#include <cctype>
#include <functional>
#include <set>

#include "freelie/errors.hpp"

namespace freelie::expr {

namespace {

struct Token {
    enum class Type { Number, Ident, Plus, Minus, Star, Slash, LParen, RParen, LBracket, RBracket, Comma, Semi, End };
    Type type;
    std::string text;
    int line, column;
};

class Lexer {
public:
    explicit Lexer(std::string_view src) : src_(src) {}

    std::vector<Token> run() {
        std::vector<Token> out;
        while (true) {
            skip_space();
            int l = line_, c = col_;
            if (pos_ >= src_.size()) {
                out.push_back({Token::Type::End, "", l, c});
                break;
            }
            char ch = src_[pos_];
            if (std::isdigit(static_cast<unsigned char>(ch))) {
                std::string num;
                while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) num += advance();
                out.push_back({Token::Type::Number, num, l, c});
                continue;
            }
            if (std::isalpha(static_cast<unsigned char>(ch))) {
                std::string id;
                while (pos_ < src_.size() &&
                       (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_'))
                    id += advance();
                out.push_back({Token::Type::Ident, id, l, c});
                continue;
            }
            Token::Type t;
            switch (ch) {
                case '+': t = Token::Type::Plus; break;
                case '-': t = Token::Type::Minus; break;
                case '*': t = Token::Type::Star; break;
                case '/': t = Token::Type::Slash; break;
                case '(': t = Token::Type::LParen; break;
                case ')': t = Token::Type::RParen; break;
                case '[': t = Token::Type::LBracket; break;
                case ']': t = Token::Type::RBracket; break;
                case ',': t = Token::Type::Comma; break;
                case ';': t = Token::Type::Semi; break;
                default:
                    throw SyntaxError(std::string("unexpected character '") + ch + "'", line_, col_);
            }
            advance();
            out.push_back({t, std::string(1, ch), l, c});
        }
        return out;
    }

private:
    char advance() {
        char ch = src_[pos_++];
        if (ch == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        return ch;
    }
    void skip_space() {
        while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) advance();
    }

    std::string_view src_;
    std::size_t pos_ = 0;
    int line_ = 1, col_ = 1;
};

class Parser {
public:
    explicit Parser(std::vector<Token> tokens) : tokens_(std::move(tokens)) {}

    NodePtr run() {
        NodePtr e = expression();
        expect(Token::Type::End, "end of input");
        return e;
    }

private:
    const Token& peek() const { return tokens_[pos_]; }
    const Token& advance() { return tokens_[pos_++]; }
    bool match(Token::Type t) {
        if (peek().type == t) {
            ++pos_;
            return true;
        }
        return false;
    }
    const Token& expect(Token::Type t, const std::string& what) {
        if (peek().type != t)
            throw SyntaxError("expected " + what + ", found '" + peek().text + "'", peek().line, peek().column);
        return advance();
    }

    static NodePtr make(Node::Kind kind, std::vector<NodePtr> children = {}) {
        auto n = std::make_shared<Node>();
        n->kind = kind;
        n->children = std::move(children);
        return n;
    }

    NodePtr expression() {
        NodePtr lhs = term();
        while (true) {
            if (match(Token::Type::Plus))
                lhs = make(Node::Kind::Sum, {lhs, term()});
            else if (match(Token::Type::Minus))
                lhs = make(Node::Kind::Difference, {lhs, term()});
            else
                return lhs;
        }
    }

    NodePtr term() {
        NodePtr lhs = factor();
        while (match(Token::Type::Star)) lhs = make(Node::Kind::Product, {lhs, factor()});
        return lhs;
    }

    NodePtr factor() {
        if (match(Token::Type::Minus)) return make(Node::Kind::Negate, {factor()});
        return primary();
    }

    int integer_token(const std::string& what) {
        const Token& t = expect(Token::Type::Number, what);
        return std::stoi(t.text);
    }

    NodePtr primary() {
        const Token& t = peek();
        switch (t.type) {
            case Token::Type::Number: {
                advance();
                std::string text = t.text;
                if (match(Token::Type::Slash)) {
                    const Token& den = expect(Token::Type::Number, "denominator");
                    text += "/" + den.text;
                }
                auto n = std::make_shared<Node>();
                n->kind = Node::Kind::Literal;
                n->literal = Rational::from_string(text);
                return n;
            }
            case Token::Type::LParen: {
                advance();
                NodePtr e = expression();
                expect(Token::Type::RParen, "')'");
                return e;
            }
            case Token::Type::LBracket: {
                advance();
                NodePtr a = expression();
                expect(Token::Type::Comma, "',' in bracket");
                NodePtr b = expression();
                expect(Token::Type::RBracket, "']'");
                return make(Node::Kind::Bracket, {a, b});
            }
            case Token::Type::Ident: {
                advance();
                if (t.text == "exp" || t.text == "log") {
                    expect(Token::Type::LParen, "'(' after " + t.text);
                    NodePtr arg = expression();
                    if (peek().type != Token::Type::Semi)
                        throw TruncationMissing(t.text + " needs an explicit truncation order (use " + t.text +
                                                    "(a;N))",
                                                peek().line, peek().column);
                    advance();
                    int order = integer_token("truncation order");
                    expect(Token::Type::RParen, "')'");
                    auto n = std::make_shared<Node>();
                    n->kind = t.text == "exp" ? Node::Kind::Exp : Node::Kind::Log;
                    n->truncation = order;
                    n->children = {arg};
                    return n;
                }
                if (t.text.size() >= 2 && t.text[0] == 'X') {
                    bool digits = true;
                    for (std::size_t i = 1; i < t.text.size(); ++i)
                        if (!std::isdigit(static_cast<unsigned char>(t.text[i]))) digits = false;
                    if (digits) {
                        auto n = std::make_shared<Node>();
                        n->kind = Node::Kind::Generator;
                        n->generator = static_cast<GeneratorId>(std::stoul(t.text.substr(1)));
                        return n;
                    }
                }
                throw UnknownGenerator("unknown name '" + t.text + "' (generators are X0, X1, ...)", t.line,
                                       t.column);
            }
            default:
                throw SyntaxError("unexpected token '" + t.text + "'", t.line, t.column);
        }
    }

    std::vector<Token> tokens_;
    std::size_t pos_ = 0;
};

}  // namespace

NodePtr parse(std::string_view text) {
    return Parser(Lexer(text).run()).run();
}

NcPolynomial evaluate(const NodePtr& e) {
    switch (e->kind) {
        case Node::Kind::Generator:
            return NcPolynomial::generator(e->generator);
        case Node::Kind::Literal:
            return NcPolynomial(e->literal);
        case Node::Kind::Sum:
            return evaluate(e->children[0]) + evaluate(e->children[1]);
        case Node::Kind::Difference:
            return evaluate(e->children[0]) - evaluate(e->children[1]);
        case Node::Kind::Product:
            return evaluate(e->children[0]) * evaluate(e->children[1]);
        case Node::Kind::Negate:
            return -evaluate(e->children[0]);
        case Node::Kind::Bracket:
            return commutator(evaluate(e->children[0]), evaluate(e->children[1]));
        case Node::Kind::Exp:
            return truncated_exp(evaluate(e->children[0]), e->truncation);
        case Node::Kind::Log:
            return truncated_log(evaluate(e->children[0]), e->truncation);
    }
    throw Error("evaluate: corrupt expression tree");
}

std::vector<GeneratorId> generators_of(const NodePtr& e) {
    std::set<GeneratorId> s;
    std::function<void(const NodePtr&)> go = [&](const NodePtr& n) {
        if (n->kind == Node::Kind::Generator) s.insert(n->generator);
        for (const auto& c : n->children) go(c);
    };
    go(e);
    return {s.begin(), s.end()};
}

LiePolynomial evaluate_as_lie(const NodePtr& e) {
    NcPolynomial p = evaluate(e);
    if (!p.constant_term().is_zero())
        throw NotLieElement("constant term " + p.constant_term().str() + " obstructs a Lie representation");
    for (int n = 1; n <= p.max_degree(); ++n) {
        NcPolynomial part = degree_part(p, n);
        if (part.is_zero()) continue;
        NcPolynomial witness = dsw_left(part, n) - Rational(n) * part;
        if (!witness.is_zero())
            throw NotLieElement("degree-" + std::to_string(n) +
                                " part fails the bracketing test; discrepancy: " + to_string(witness));
    }
    std::vector<Multidegree> grades;
    for (const auto& [g, part] : multidegree_split(p)) grades.push_back(g);
    BasisRegistry reg = BasisRegistry::build_grades(grades);
    LiePolynomial out;
    out.set_canonical(reg.canonical_coords(p));
    return out;
}

}  // namespace freelie::expr
