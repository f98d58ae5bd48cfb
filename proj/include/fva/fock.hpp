#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <tuple>
#include <vector>

#include "fva/freeva.hpp"
#include "fva/linear_combination.hpp"
#include "fva/signature.hpp"

namespace fva {

/// Heisenberg creation operator b(-level), level >= 1.
struct HeisLetter {
  std::int64_t level = 1;
  std::size_t gen = 0;

  friend auto operator<=>(const HeisLetter&, const HeisLetter&) = default;
};

/// h1(-k1)...hm(-km) v_charge with the creation letters sorted by (level, generator).
struct PBWState {
  Weight charge;
  std::vector<HeisLetter> heis;

  friend bool operator==(const PBWState&, const PBWState&) = default;
  friend auto operator<=>(const PBWState&, const PBWState&) = default;
};

using FockElement = LinearCombination<PBWState>;

/// Vacuum-vector letter v_charge [mode] of a lattice word.
struct LatticeLetter {
  Weight charge;
  std::int64_t mode = 0;

  friend bool operator==(const LatticeLetter&, const LatticeLetter&) = default;
  friend auto operator<=>(const LatticeLetter&, const LatticeLetter&) = default;
};

/// Right-normed product v_a1 [n1] (... (v_ak [nk] v_0)...) of vacuum vectors.
using LatticeWord = std::vector<LatticeLetter>;

LatticeWord to_lattice_word(const Signature& sig, const Word& w);

/// Bimultiplicative cocycle fixed by the generator order:
/// e(a,a) = 1, e(a,b) = 1 for a < b, e(b,a) = (-1)^{(a|a)(b|b)+(a|b)}.
int epsilon(const Signature& sig, const Weight& l, const Weight& m);

std::int64_t state_deg2(const Signature& sig, const PBWState& s);
/// A-priori locality bound of v_a against a state: -(a|charge) + sum of levels.
std::int64_t locality_bound(const Signature& sig, const Weight& a, const PBWState& s);

FockElement vacuum_vector(const Weight& charge);
FockElement heisenberg_state(const Weight& charge, std::vector<HeisLetter> letters);

/// h(n) acting on the Fock space, for h in the lattice spanned by the generators.
FockElement heis_act(const Signature& sig, const Weight& h, std::int64_t n, const FockElement& x);
FockElement heis_act(const Signature& sig, std::size_t gen, std::int64_t n, const FockElement& x);

/// Translation operator: D v_l = l(-1) v_l and [D, h(-k)] = k h(-k-1).
FockElement d_act(const FockElement& x);
FockElement d_divided(const FockElement& x, std::int64_t k);

/// The lattice vertex algebra V_L, L = Z[B] with Gram form -N, built from the
/// vacuum products and the Heisenberg commutation formulas.
///
/// Holds memo tables, so one instance must not be shared between threads.
class LatticeAlgebra {
 public:
  explicit LatticeAlgebra(Signature sig) : sig_(std::move(sig)) {}

  const Signature& signature() const { return sig_; }

  /// v_a [n] v_b = e(a,b) (D - b(-1))^(k) v_{a+b}, k = -(a|b) - n - 1; zero when k < 0.
  FockElement vacuum_product(const Weight& a, std::int64_t n, const Weight& b) const;
  /// v_a [n] x, by stripping creation letters from x.
  FockElement va_product(const Weight& a, std::int64_t n, const FockElement& x);
  /// (right-normed word of vacuum vectors) [m] x.
  FockElement monomial_product(const LatticeWord& u, std::int64_t m, const FockElement& x);
  FockElement monomial_product(const Word& u, std::int64_t m, const FockElement& x);
  /// General x [m] y for arbitrary Fock elements.
  FockElement product(const FockElement& x, std::int64_t m, const FockElement& y);

  /// The embedding of the free vertex algebra, a -> v_a.
  FockElement phi(const FreeElement& x);

  /// Smallest N with v_a [n] x = 0 for all n >= N. x must be nonzero.
  std::int64_t locality_order(const Weight& a, const FockElement& x);

 private:
  FockElement va_state(const Weight& a, std::int64_t n, const PBWState& s);
  FockElement monomial_state(const LatticeWord& u, std::int64_t m, const PBWState& s);
  FockElement product_states(const PBWState& x, std::int64_t m, const PBWState& y);

  Signature sig_;
  std::map<std::tuple<Weight, std::int64_t, PBWState>, FockElement> va_cache_;
  std::map<std::tuple<LatticeWord, std::int64_t, PBWState>, FockElement> monomial_cache_;
  std::map<std::tuple<PBWState, std::int64_t, PBWState>, FockElement> product_cache_;
};

FockElement vacuum_product(const Signature& sig, const Weight& a, std::int64_t n, const Weight& b);
FockElement va_product(const Signature& sig, const Weight& a, std::int64_t n, const FockElement& x);
FockElement monomial_product(const Signature& sig, const Word& u, std::int64_t m, const FockElement& x);
FockElement phi_embed(const Signature& sig, const FreeElement& x);

/// Exact rank over Q of the coordinate vectors in the PBW basis.
std::size_t rank_of(const std::vector<FockElement>& elements);

std::string to_string(const Signature& sig, const PBWState& s);
/// Canonical printing, e.g. "a(-2)a(-1) v[2a] - 1/2 * a(-3) v[2a]".
std::string to_string(const Signature& sig, const FockElement& x);

}  // namespace fva
