#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fva/scalar.hpp"

namespace fva {

/// Element of Z[B]: one integer coefficient per generator, in generator order.
/// Free-algebra weights are nonnegative; lattice charges in the Fock space may be signed.
class Weight {
 public:
  Weight() = default;
  explicit Weight(std::size_t rank) : coeffs_(rank, 0) {}
  explicit Weight(std::vector<std::int64_t> coeffs) : coeffs_(std::move(coeffs)) {}

  static Weight unit(std::size_t rank, std::size_t gen) {
    Weight w(rank);
    w.coeffs_[gen] = 1;
    return w;
  }

  std::size_t rank() const { return coeffs_.size(); }
  std::int64_t operator[](std::size_t i) const { return coeffs_[i]; }
  std::int64_t& operator[](std::size_t i) { return coeffs_[i]; }
  const std::vector<std::int64_t>& coeffs() const { return coeffs_; }

  bool is_zero() const;
  bool is_nonnegative() const;
  /// Sum of coefficients (the length of any word of this weight).
  std::int64_t total() const;

  Weight& operator+=(const Weight& o);
  Weight& operator-=(const Weight& o);
  friend Weight operator+(Weight a, const Weight& b) { return a += b; }
  friend Weight operator-(Weight a, const Weight& b) { return a -= b; }
  friend Weight operator-(Weight a);
  friend Weight operator*(std::int64_t k, Weight a);

  friend bool operator==(const Weight&, const Weight&) = default;
  friend auto operator<=>(const Weight&, const Weight&) = default;

 private:
  std::vector<std::int64_t> coeffs_;
};

/// Ordered generator set B with a symmetric integer locality bound N.
///
/// The generator order is the order of construction and defines the basis T.
/// Derived data: Gram form (a|b) = -N(a,b), parity p(a) = N(a,a) mod 2 and
/// doubled degree deg2(a) = -N(a,a).
class Signature {
 public:
  Signature(std::vector<std::string> generators, std::vector<std::vector<std::int64_t>> locality);

  std::size_t size() const { return names_.size(); }
  const std::string& name(std::size_t gen) const { return names_[gen]; }
  const std::vector<std::string>& names() const { return names_; }
  std::optional<std::size_t> find(std::string_view name) const;
  /// Like find() but throws ValidationError for unknown names.
  std::size_t index(std::string_view name) const;

  std::int64_t locality(std::size_t a, std::size_t b) const { return locality_[a * size() + b]; }
  std::int64_t gram(std::size_t a, std::size_t b) const { return -locality(a, b); }
  int parity(std::size_t a) const { return static_cast<int>(((locality(a, a) % 2) + 2) % 2); }
  std::int64_t deg2(std::size_t a) const { return -locality(a, a); }

  Weight zero_weight() const { return Weight(size()); }
  Weight unit(std::size_t gen) const { return Weight::unit(size(), gen); }

  friend bool operator==(const Signature&, const Signature&) = default;

 private:
  std::vector<std::string> names_;
  std::vector<std::int64_t> locality_;
};

/// Parses the JSON configuration {"generators": [...], "locality": [[...], ...]}.
Signature load_signature(std::string_view text);
Signature load_signature_file(const std::string& path);

/// Bilinear extension of the Gram form: sum over a,b of l_a m_b (a|b).
std::int64_t pairing(const Signature& sig, const Weight& l, const Weight& m);

/// Doubled minimal degree (l|l) of the homogeneous component of weight l.
std::int64_t d2_min(const Signature& sig, const Weight& l);

/// Parity sum_a l_a N(a,a) mod 2.
int parity(const Signature& sig, const Weight& l);

/// Parses "2a+b", "a-3b", "0" against the generator names. Throws ParseError / ValidationError.
Weight parse_weight(const Signature& sig, std::string_view text);

/// Prints a weight as a signed generator combination, "0" for the zero weight.
std::string to_string(const Signature& sig, const Weight& w);

}  // namespace fva
