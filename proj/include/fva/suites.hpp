#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "fva/fock.hpp"
#include "fva/signature.hpp"

namespace fva {

enum class CheckStatus { Pass, Fail, Skipped, Info };

std::string to_string(CheckStatus s);

struct Check {
  std::string id;
  std::string expected;
  std::string computed;
  CheckStatus status = CheckStatus::Pass;
};

/// Ordered list of checks produced by one verification suite.
class SuiteReport {
 public:
  explicit SuiteReport(std::string name) : name_(std::move(name)) {}

  void check(std::string id, std::string expected, std::string computed, bool pass);
  void skip(std::string id, std::string reason);
  /// Reported value that is not asserted.
  void info(std::string id, std::string expected, std::string computed);
  void append(const SuiteReport& other);

  const std::string& name() const { return name_; }
  const std::vector<Check>& checks() const { return checks_; }
  std::size_t count(CheckStatus s) const;
  /// True iff no check failed.
  bool passed() const { return count(CheckStatus::Fail) == 0; }

  /// One line per check followed by a summary line.
  std::string render_text() const;
  /// One JSON object per line with fields suite, id, expected, computed, pass, status.
  std::string render_machine() const;

 private:
  std::string name_;
  std::vector<Check> checks_;
};

/// The fermion signature: one odd generator a with N(a,a) = -1.
Signature fermion_signature();

/// Closed-form locality of c with b [n] a, n = N(a,b) - k - 1, in terms of N(a,c), N(b,c) and k.
std::int64_t dong_locality(std::int64_t n_ac, std::int64_t n_bc, std::int64_t k);
std::int64_t dong_locality(const Signature& sig, std::size_t a, std::size_t b, std::size_t c, std::int64_t k);

/// Brute-force locality of v_c against phi(b [n] a) in the lattice algebra, compared with the closed form.
SuiteReport verify_dong(const Signature& sig, std::int64_t k_max);

/// l(l-1)/2 max N - l + 1.
std::int64_t locfun_formula(const Signature& sig, std::int64_t l);

/// Exhaustive search of the largest mode sum of a nonzero conformal monomial of length l.
/// Throws ValidationError when some N(a,b) is negative.
SuiteReport verify_locfun(const Signature& sig, std::int64_t l);

/// Integral lattice given by a basis and its Gram matrix.
struct LatticeConfig {
  std::vector<std::string> basis;
  std::vector<std::vector<std::int64_t>> gram;
};

/// Parses {"basis": [...], "gram": [[...]]}; "basis" defaults to e1, e2, ...
LatticeConfig load_lattice(std::string_view text);
LatticeConfig load_lattice_file(const std::string& path);

/// Signature on the basis with N = -Gram, whose lattice algebra is V_L.
Signature lattice_signature(const LatticeConfig& lattice);
/// Generators a, then a_bar for every basis vector, with (a|b_bar) = -(a|b) and (a_bar|b_bar) = (a|b).
Signature doubled_signature(const LatticeConfig& lattice);

/// Relations of the presentation of V_L and the free-algebra identities behind it.
SuiteReport verify_presentation(const LatticeConfig& lattice);

/// Boson-fermion checks in V_Z: the p_m product table, p_m(n) v_1, p_0 and p_1,
/// graded dimensions and stability of phi(F) under p_m(n).
SuiteReport verify_bozfer(std::int64_t k_max, std::int64_t d_max);

/// Virasoro element of a nondegenerate lattice: its product table and the extension of omega_f.
SuiteReport verify_virasoro(const LatticeConfig& lattice);

/// Number of partitions of d into at most k parts.
Integer partitions_at_most(std::int64_t d, std::int64_t k);

}  // namespace fva
