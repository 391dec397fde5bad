#pragma once

#include <string>

#include "freelie/ncpoly.hpp"
#include "freelie/tensor.hpp"
#include "freelie/wordbasis.hpp"

namespace freelie {

/// {"terms":[{"word":[..],"coeff":"p/q"},..]} with terms in canonical order.
std::string poly_to_json(const NcPolynomial& p);
NcPolynomial poly_from_json(const std::string& text);

/// {"terms":[{"factors":[..],"coeff":"p/q"},..]}
std::string tensor_to_json(const TensorPolynomial& t);
TensorPolynomial tensor_from_json(const std::string& text);

/// Registry dump: basis elements with id, word, multidegree, Lie monomial and
/// expansion, plus the dimension tables.
std::string registry_to_json(const BasisRegistry& reg);

}  // namespace freelie
