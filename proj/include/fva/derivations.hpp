#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "fva/freeva.hpp"
#include "fva/signature.hpp"

namespace fva {

/// A conformal derivation of the free algebra, given by its values alpha(s) b on generators.
struct DerivationSpec {
  /// values[b] lists the pairs (s, alpha(s) b) with s >= 0; omitted modes act by zero.
  std::vector<std::vector<std::pair<std::int64_t, FreeElement>>> values;
  /// Set for derivations of the form alpha_f, enabling the letterwise mode-shift rule.
  std::optional<std::vector<Scalar>> shift_coeffs;

  /// Uniform locality bound against the generators: one past the largest mode used.
  std::int64_t locality() const;
};

/// alpha_f: alpha(0) b = f(b) b and nothing else.
DerivationSpec alpha_f(const Signature& sig, const std::vector<Scalar>& f);

/// omega_f: omega(0) b = D b, omega(1) b = f(b) b.
DerivationSpec omega_f(const Signature& sig, const std::vector<Scalar>& f);

/// alpha(m) x for m >= 0, expanded with the conformal Leibniz rule over right-normed words.
/// Words below the degree floor are dropped; no normal form is taken.
FreeElement apply_derivation(const Signature& sig, const DerivationSpec& spec, std::int64_t m, const FreeElement& x);

/// [alpha(m), beta(n)] x.
FreeElement derivation_commutator(const Signature& sig, const DerivationSpec& alpha, std::int64_t m,
                                  const DerivationSpec& beta, std::int64_t n, const FreeElement& x);

/// (alpha [j] beta)(n) x = sum_{s=0}^{j} (-1)^s C(j,s) [alpha(j-s), beta(n+s)] x.
FreeElement derivation_product_coefficient(const Signature& sig, const DerivationSpec& alpha, std::int64_t j,
                                           const DerivationSpec& beta, std::int64_t n, const FreeElement& x);

}  // namespace fva
