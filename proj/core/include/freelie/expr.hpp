#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "freelie/liepoly.hpp"
#include "freelie/ncpoly.hpp"
#include "freelie/wordbasis.hpp"

namespace freelie::expr {

/// Parsed expression node. Brackets are binary; exp/log carry an explicit
/// truncation order.
struct Node {
    enum class Kind { Generator, Literal, Sum, Difference, Product, Negate, Bracket, Exp, Log };

    Kind kind;
    GeneratorId generator = 0;       // Generator
    Rational literal;                // Literal
    int truncation = 0;              // Exp / Log
    std::vector<std::shared_ptr<const Node>> children;
};

using NodePtr = std::shared_ptr<const Node>;

/// Grammar: generators X<digits>, rationals p/q, operators + - *, brackets
/// [a,b], calls exp(a;N) and log(a;N); whitespace insensitive. Throws
/// SyntaxError / UnknownGenerator / TruncationMissing with positions.
NodePtr parse(std::string_view text);

/// Interprets the tree over the free associative algebra.
NcPolynomial evaluate(const NodePtr& e);

/// Generators appearing in the expression.
std::vector<GeneratorId> generators_of(const NodePtr& e);

/// Canonicalizes an evaluated polynomial as a Lie element; NotLieElement
/// (with the DSW discrepancy as witness) when it is not one.
LiePolynomial evaluate_as_lie(const NodePtr& e);

}  // namespace freelie::expr
