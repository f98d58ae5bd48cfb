#pragma once

// Shared fixtures for the test programs: named signatures and random generators.

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

#include "fva/freeva.hpp"
#include "fva/signature.hpp"

namespace fvatest {

using fva::Signature;
using fva::Weight;
using fva::Word;

inline Signature sig_ferm() { return Signature({"a"}, {{-1}}); }
inline Signature sig_free2() { return Signature({"a", "b"}, {{2, 2}, {2, 2}}); }
inline Signature sig_neg() { return Signature({"a", "b"}, {{-2, 1}, {1, 0}}); }
inline Signature sig_ones() { return Signature({"a", "b"}, {{1, 1}, {1, 1}}); }
/// Mixed parities and a negative off-diagonal entry.
inline Signature sig_mixed() { return Signature({"a", "b"}, {{-1, -2}, {-2, 1}}); }

/// Nonnegative weights with 1 <= total <= max_total.
inline std::vector<Weight> weights_up_to(const Signature& sig, std::int64_t max_total) {
  std::vector<Weight> out;
  std::vector<Weight> layer{sig.zero_weight()};
  for (std::int64_t t = 1; t <= max_total; ++t) {
    std::vector<Weight> next;
    for (const auto& w : layer) {
      // extend only at or after the last nonzero slot to avoid duplicates
      std::size_t start = 0;
      for (std::size_t a = 0; a < sig.size(); ++a)
        if (w[a] != 0) start = a;
      for (std::size_t a = start; a < sig.size(); ++a) {
        Weight v = w;
        v[a] += 1;
        next.push_back(v);
      }
    }
    out.insert(out.end(), next.begin(), next.end());
    layer = std::move(next);
  }
  return out;
}

using Rng = std::mt19937_64;

inline std::int64_t uniform(Rng& rng, std::int64_t lo, std::int64_t hi) {
  return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
}

/// Random word with the given letters (shuffled) and doubled degree, modes scattered
/// around the floor. Returns false if the mode total cannot be met.
inline Word random_word_of(const Signature& sig, Rng& rng, const Weight& l, std::int64_t deg2) {
  std::vector<std::size_t> letters;
  for (std::size_t a = 0; a < sig.size(); ++a) letters.insert(letters.end(), static_cast<std::size_t>(l[a]), a);
  std::shuffle(letters.begin(), letters.end(), rng);
  std::int64_t base = 0;
  for (auto g : letters) base += sig.deg2(g) - 2;
  // sum of modes fixed by deg2 = base - 2 * sum
  const std::int64_t total = (base - deg2) / 2;
  Word w;
  std::int64_t used = 0;
  for (std::size_t i = 0; i + 1 < letters.size(); ++i) {
    const std::int64_t m = uniform(rng, -5, 3);
    w.push_back({letters[i], m});
    used += m;
  }
  if (!letters.empty()) w.push_back({letters.back(), total - used});
  return w;
}

/// Random word of length in [1, max_len] with modes in [lo, hi].
inline Word random_word(const Signature& sig, Rng& rng, std::int64_t max_len, std::int64_t lo, std::int64_t hi) {
  Word w;
  const std::int64_t len = uniform(rng, 1, max_len);
  for (std::int64_t i = 0; i < len; ++i)
    w.push_back({static_cast<std::size_t>(uniform(rng, 0, static_cast<std::int64_t>(sig.size()) - 1)), uniform(rng, lo, hi)});
  return w;
}

inline fva::Scalar random_coeff(Rng& rng) {
  fva::Scalar c(fva::Integer(static_cast<long>(uniform(rng, -3, 3))), fva::Integer(static_cast<long>(uniform(rng, 1, 2))));
  c.canonicalize();
  if (c == 0) c = 1;
  return c;
}

/// Sum of up to max_terms random words with small rational coefficients.
inline fva::FreeElement random_element(const Signature& sig, Rng& rng, std::int64_t max_terms = 3,
                                       std::int64_t max_len = 3) {
  fva::FreeElement x;
  const std::int64_t n = uniform(rng, 1, max_terms);
  for (std::int64_t i = 0; i < n; ++i) x.add(random_word(sig, rng, max_len, -4, 1), random_coeff(rng));
  return x;
}

/// Half the gap between a word's doubled degree and the Fock floor of its weight; bounds the
/// size of its image in the lattice algebra.
inline std::int64_t fock_excess(const Signature& sig, const Word& w) {
  const Weight l = fva::word_weight(sig, w);
  return (fva::word_deg2(sig, w) - fva::d2_min(sig, l)) / 2;
}

/// Random word as in random_word, resampled until its Fock excess is at most max_excess.
inline Word random_small_word(const Signature& sig, Rng& rng, std::int64_t max_len, std::int64_t max_excess) {
  for (;;) {
    Word w = random_word(sig, rng, max_len, -4, 1);
    if (fock_excess(sig, w) <= max_excess) return w;
  }
}

inline fva::FreeElement random_small_element(const Signature& sig, Rng& rng, std::int64_t max_terms,
                                             std::int64_t max_len, std::int64_t max_excess = 8) {
  fva::FreeElement x;
  const std::int64_t n = uniform(rng, 1, max_terms);
  for (std::int64_t i = 0; i < n; ++i) x.add(random_small_word(sig, rng, max_len, max_excess), random_coeff(rng));
  return x;
}

/// Random combination of words that share one weight and doubled degree.
inline fva::FreeElement random_homogeneous(const Signature& sig, Rng& rng, const Weight& l, std::int64_t deg2,
                                           std::int64_t terms = 2) {
  fva::FreeElement x;
  for (std::int64_t i = 0; i < terms; ++i) x.add(random_word_of(sig, rng, l, deg2), random_coeff(rng));
  return x;
}

struct ProductCase {
  fva::FreeElement u;
  std::int64_t n = 0;
  fva::FreeElement v;
};

/// Homogeneous u, v of length <= 2 and <= 3 and a mode n, such that u [n] v lands in a
/// component with Fock excess in [0, max_excess].
inline ProductCase random_product_case(const Signature& sig, Rng& rng, std::int64_t max_excess) {
  for (;;) {
    const Word wu = random_word(sig, rng, 2, -4, 1);
    const Word wv = random_word(sig, rng, 3, -4, 1);
    const std::int64_t n = uniform(rng, -3, 3);
    const fva::Grade gu = fva::word_grade(sig, wu);
    const fva::Grade gv = fva::word_grade(sig, wv);
    const std::int64_t deg2 = gu.deg2 + gv.deg2 - 2 * n - 2;
    const std::int64_t excess = (deg2 - fva::d2_min(sig, gu.weight + gv.weight)) / 2;
    if (excess < 0 || excess > max_excess) continue;
    if (fock_excess(sig, wu) > max_excess || fock_excess(sig, wv) > max_excess) continue;
    ProductCase c;
    c.n = n;
    c.u.add(wu, random_coeff(rng));
    c.u.add(random_word_of(sig, rng, gu.weight, gu.deg2), random_coeff(rng));
    c.v.add(wv, random_coeff(rng));
    c.v.add(random_word_of(sig, rng, gv.weight, gv.deg2), random_coeff(rng));
    return c;
  }
}

}  // namespace fvatest
