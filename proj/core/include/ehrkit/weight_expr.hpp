#pragma once

#include <map>
#include <string>
#include <vector>

#include "ehrkit/weight.hpp"

namespace ehrkit {

// AST for weight expressions. Grammar:
//   expr    := sign? term (('+'|'-') term)*
//   term    := factor ('*' factor)*
//   factor  := base ('^' uint)?
//   base    := rational | var | '(' expr ')'
// with vars x1..xd and the height symbol n; whitespace is insignificant;
// rational literals are "p" or "p/q" without inner spaces.
struct WeightExpr {
  enum class Kind { Sum, Product, Power, Variable, Height, Literal };

  Kind kind = Kind::Literal;
  std::vector<WeightExpr> children;  // Sum, Product; Power keeps base at [0]
  std::vector<int> signs;            // Sum: +1 / -1 per child
  unsigned exponent = 0;             // Power
  std::size_t var_index = 0;         // Variable, 0-based
  Rat literal = Rat(0);              // Literal

  friend bool operator==(const WeightExpr&, const WeightExpr&) = default;
};

// Throws Error with a character position on bad input or variable index > d.
WeightExpr parse_weight(const std::string& src, std::size_t ambient_dim);

std::string to_string(const WeightExpr& e);

// Multivariate polynomial in x_1..x_d and the height variable: exponent
// vector of length d+1 -> coefficient.
using MultiPoly = std::map<std::vector<unsigned>, Rat>;

MultiPoly expand(const WeightExpr& e, std::size_t ambient_dim);

// Splits a polynomial into homogeneous parts; each monomial becomes a term
// whose factors are repeated coordinate forms (the height variable maps to
// the (d+1)-th coordinate form). Parts are sorted by degree.
std::vector<std::pair<unsigned, Weight>> homogenize_weight(
    const MultiPoly& p, std::size_t ambient_dim);

// Lowers an expression to homogeneous parts, keeping products of linear-form
// powers as structured terms (so squares certify as squares); anything else
// falls back to monomial expansion of that summand.
std::vector<std::pair<unsigned, Weight>> weight_parts(const WeightExpr& e,
                                                      std::size_t ambient_dim);

}  // namespace ehrkit
