#include "fva/derivations.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace fva {

std::int64_t DerivationSpec::locality() const {
  std::int64_t n = 0;
  for (const auto& list : values)
    for (const auto& [s, v] : list)
      if (!v.is_zero()) n = std::max(n, s + 1);
  return n;
}

DerivationSpec alpha_f(const Signature& sig, const std::vector<Scalar>& f) {
  DerivationSpec spec;
  spec.values.resize(sig.size());
  for (std::size_t b = 0; b < sig.size(); ++b) {
    if (f[b] != 0) spec.values[b].emplace_back(0, f[b] * generator_element(b));
  }
  spec.shift_coeffs = f;
  return spec;
}

DerivationSpec omega_f(const Signature& sig, const std::vector<Scalar>& f) {
  DerivationSpec spec;
  spec.values.resize(sig.size());
  for (std::size_t b = 0; b < sig.size(); ++b) {
    spec.values[b].emplace_back(0, FreeElement(Word{Letter{b, -2}}));
    if (f[b] != 0) spec.values[b].emplace_back(1, f[b] * generator_element(b));
  }
  return spec;
}

namespace {

class Applier {
 public:
  Applier(const Signature& sig, const DerivationSpec& spec, std::int64_t m) : sig_(sig), spec_(spec), m_(m) {}

  const FreeElement& word(const Word& w) {
    if (auto it = cache_.find(w); it != cache_.end()) return it->second;
    FreeElement r = compute(w);
    return cache_.emplace(w, std::move(r)).first->second;
  }

 private:
  FreeElement compute(const Word& w) {
    FreeElement out;
    if (w.empty()) return out;
    const Letter head = w.front();
    const Word tail(w.begin() + 1, w.end());

    // alpha(m) (a [n] t) = a [n] (alpha(m) t) + sum_s C(m,s) (alpha(s) a) [m+n-s] t
    for (const auto& [v, c] : word(tail)) {
      Word full;
      full.reserve(v.size() + 1);
      full.push_back(head);
      full.insert(full.end(), v.begin(), v.end());
      if (!below_degree_floor(sig_, full)) out.add(full, c);
    }
    const FreeElement t(tail);
    for (const auto& [s, value] : spec_.values[head.gen]) {
      const Scalar c(binomial(m_, s));
      if (c == 0) continue;
      out.add(product_free(sig_, value, m_ + head.mode - s, t), c);
    }
    return out;
  }

  const Signature& sig_;
  const DerivationSpec& spec_;
  std::int64_t m_;
  std::map<Word, FreeElement> cache_;
};

}  // namespace

FreeElement apply_derivation(const Signature& sig, const DerivationSpec& spec, std::int64_t m, const FreeElement& x) {
  if (m < 0) throw std::invalid_argument("derivation mode must be nonnegative");
  FreeElement out;
  if (spec.shift_coeffs) {
    const auto& f = *spec.shift_coeffs;
    for (const auto& [w, c] : x) {
      for (std::size_t i = 0; i < w.size(); ++i) {
        if (f[w[i].gen] == 0) continue;
        Word v = w;
        v[i].mode += m;
        if (!below_degree_floor(sig, v)) out.add(v, c * f[w[i].gen]);
      }
    }
    return out;
  }
  Applier applier(sig, spec, m);
  for (const auto& [w, c] : x) out.add(applier.word(w), c);
  return out;
}

FreeElement derivation_commutator(const Signature& sig, const DerivationSpec& alpha, std::int64_t m,
                                  const DerivationSpec& beta, std::int64_t n, const FreeElement& x) {
  return apply_derivation(sig, alpha, m, apply_derivation(sig, beta, n, x)) -
         apply_derivation(sig, beta, n, apply_derivation(sig, alpha, m, x));
}

FreeElement derivation_product_coefficient(const Signature& sig, const DerivationSpec& alpha, std::int64_t j,
                                           const DerivationSpec& beta, std::int64_t n, const FreeElement& x) {
  FreeElement out;
  for (std::int64_t s = 0; s <= j; ++s) {
    out.add(derivation_commutator(sig, alpha, j - s, beta, n + s, x), sign_power(s) * Scalar(binomial(j, s)));
  }
  return out;
}

}  // namespace fva
