#pragma once

#include <cstdint>
#include <string_view>
#include <utility>
#include <vector>

#include "fva/freeva.hpp"
#include "fva/signature.hpp"

namespace fva {

/// One summand of a parsed element: coefficient times vertex monomial.
struct ParsedTerm {
  Scalar coeff;
  VertexExpr expr;
};

/// Parses a single monomial: "vac", "a(-2)a(-1)vac", "(a [1] b)". A bare generator name
/// stands for the monomial a(-1)vac.
VertexExpr parse_expr(const Signature& sig, std::string_view text);

/// Parses "m1 - 2 * m2 + 1/2 * m3".
std::vector<ParsedTerm> parse_terms(const Signature& sig, std::string_view text);

/// parse_terms followed by evaluation in the free algebra.
FreeElement parse_element(const Signature& sig, std::string_view text);

/// Parses an inclusive integer range "4..12", or a single integer "7".
std::pair<std::int64_t, std::int64_t> parse_range(std::string_view text);

/// Parses one integer, accepting a leading sign.
std::int64_t parse_integer(std::string_view text);

}  // namespace fva
