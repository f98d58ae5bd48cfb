#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "fva/freeva.hpp"

namespace fva {

/// Which redex of a word the R-rules rewrite first.
enum class RedexStrategy { Leftmost, Rightmost };

struct RewriteOptions {
  RedexStrategy strategy = RedexStrategy::Leftmost;
  /// Guard against non-termination; exceeding it means an implementation bug.
  std::size_t step_budget = 50'000'000;
};

struct RewriteOutcome {
  FreeElement result;
  std::size_t steps = 0;    ///< R-rule applications
  std::size_t q_kills = 0;  ///< words removed by Q-rules
};

/// Q-rule test: some tail of w lies below the degree floor.
bool q_vanishes(const Signature& sig, const Word& w);

/// The jump bound m_j between letters j and j+1 (0-based):
/// sum_{i>j} N(a_j,a_i) - sum_{i>j+1} N(a_{j+1},a_i).
std::int64_t jump_bound(const Signature& sig, const Word& w, std::size_t j);

/// 0-based position j of an R-redex at letters (j, j+1), or nullopt.
std::optional<std::size_t> find_r_redex(const Signature& sig, const Word& w,
                                        RedexStrategy strategy = RedexStrategy::Leftmost);

/// Replaces letters (j, j+1) by the locality expansion f_j. Output words that
/// vanish under Q are dropped. Throws std::logic_error if j is not a redex.
FreeElement apply_r(const Signature& sig, const Word& w, std::size_t j);

RewriteOutcome normal_form(const Signature& sig, const FreeElement& x, const RewriteOptions& options = {});

/// Membership in the basis T: last mode negative and no jump exceeds its bound.
bool is_basic(const Signature& sig, const Word& w);

/// Termination measure: d(w_i) for every tail w_i, plus the letter word for tie-breaking.
struct Measure {
  std::vector<std::int64_t> tails;
  std::vector<std::size_t> letters;

  friend auto operator<=>(const Measure&, const Measure&) = default;
};

Measure measure(const Signature& sig, const Word& w);

}  // namespace fva
