#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "fva/linear_combination.hpp"
#include "fva/signature.hpp"

namespace fva {

/// One letter a(n) of a right-normed word.
struct Letter {
  std::size_t gen = 0;
  std::int64_t mode = 0;

  friend auto operator<=>(const Letter&, const Letter&) = default;
};

/// Right-normed monomial a1(n1)...ak(nk).1; the empty word is the vacuum.
using Word = std::vector<Letter>;

/// Element of the free vertex algebra, a finite combination of words.
using FreeElement = LinearCombination<Word>;

struct Grade {
  Weight weight;
  std::int64_t deg2 = 0;
  int parity = 0;
};

Weight word_weight(const Signature& sig, const Word& w);
std::int64_t word_deg2(const Signature& sig, const Word& w);
Grade word_grade(const Signature& sig, const Word& w);

/// True iff some tail of w sits strictly below the degree floor deg2 < (wt|wt).
/// Such words are zero in the free algebra; this includes every word whose last mode is >= 0.
bool below_degree_floor(const Signature& sig, const Word& w);

inline FreeElement vacuum_element() { return FreeElement(Word{}); }
inline FreeElement generator_element(std::size_t gen) { return FreeElement(Word{Letter{gen, -1}}); }

/// The translation operator D, acting on each letter by a(n) -> -n a(n-1).
FreeElement d_apply(const FreeElement& x);
/// Divided power D^k / k!.
FreeElement d_divided(const FreeElement& x, std::int64_t k);

/// The n-th product u [m] v, expanded into right-normed words.
///
/// The left factor is peeled one letter at a time through the associativity
/// identity; both infinite sums are cut by the degree floor. Words that fall
/// below the floor are dropped, the result is otherwise not normal-formed.
FreeElement product_free(const Signature& sig, const FreeElement& u, std::int64_t m, const FreeElement& v);

/// Arbitrarily parenthesized vertex monomial.
struct VertexExpr {
  struct Vacuum {
    friend bool operator==(const Vacuum&, const Vacuum&) = default;
  };
  struct Generator {
    std::size_t gen = 0;
    friend bool operator==(const Generator&, const Generator&) = default;
  };
  struct Product {
    std::shared_ptr<const VertexExpr> left;
    std::int64_t mode = 0;
    std::shared_ptr<const VertexExpr> right;
  };

  std::variant<Vacuum, Generator, Product> node;

  static VertexExpr vacuum() { return {Vacuum{}}; }
  static VertexExpr generator(std::size_t gen) { return {Generator{gen}}; }
  static VertexExpr product(VertexExpr left, std::int64_t mode, VertexExpr right);
};

bool operator==(const VertexExpr& a, const VertexExpr& b);

FreeElement evaluate_expr(const Signature& sig, const VertexExpr& e);

std::string to_string(const Signature& sig, const Word& w);
/// Canonical printing: words sorted by weight, then deg2, then letters; e.g. "-1 * a(-2)a(-1)vac".
std::string to_string(const Signature& sig, const FreeElement& x);
std::string to_string(const Signature& sig, const VertexExpr& e);

/// Terms of x in canonical (weight, deg2, letters) order.
std::vector<std::pair<Word, Scalar>> canonical_terms(const Signature& sig, const FreeElement& x);

}  // namespace fva
