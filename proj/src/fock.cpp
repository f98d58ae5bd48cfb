#include "fva/fock.hpp"

#include <algorithm>
#include <stdexcept>

#include "fva/linalg.hpp"

namespace fva {

namespace {

std::int64_t floor_div2(std::int64_t x) { return x >= 0 ? x / 2 : -((-x + 1) / 2); }

PBWState with_letter(PBWState s, HeisLetter l) {
  s.heis.insert(std::upper_bound(s.heis.begin(), s.heis.end(), l), l);
  return s;
}

PBWState without_index(PBWState s, std::size_t i) {
  s.heis.erase(s.heis.begin() + static_cast<std::ptrdiff_t>(i));
  return s;
}

std::int64_t max_level(const PBWState& s) { return s.heis.empty() ? 0 : s.heis.back().level; }

std::int64_t lattice_word_deg2(const Signature& sig, const LatticeWord& u) {
  std::int64_t d = 0;
  for (const auto& l : u) d += pairing(sig, l.charge, l.charge) - 2 * l.mode - 2;
  return d;
}

Weight lattice_word_weight(const Signature& sig, const LatticeWord& u) {
  Weight w = sig.zero_weight();
  for (const auto& l : u) w += l.charge;
  return w;
}

}  // namespace

LatticeWord to_lattice_word(const Signature& sig, const Word& w) {
  LatticeWord out;
  out.reserve(w.size());
  for (const auto& l : w) out.push_back({sig.unit(l.gen), l.mode});
  return out;
}

int epsilon(const Signature& sig, const Weight& l, const Weight& m) {
  // Exponent of -1 accumulated over the pairs b > a of the base values.
  std::int64_t e = 0;
  for (std::size_t b = 0; b < sig.size(); ++b) {
    if (l[b] == 0) continue;
    for (std::size_t a = 0; a < b; ++a) {
      if (m[a] == 0) continue;
      const std::int64_t base = sig.gram(a, a) * sig.gram(b, b) + sig.gram(a, b);
      e += (l[b] % 2) * (m[a] % 2) * (base % 2);
    }
  }
  return (e % 2 == 0) ? 1 : -1;
}

std::int64_t state_deg2(const Signature& sig, const PBWState& s) {
  std::int64_t d = pairing(sig, s.charge, s.charge);
  for (const auto& l : s.heis) d += 2 * l.level;
  return d;
}

std::int64_t locality_bound(const Signature& sig, const Weight& a, const PBWState& s) {
  std::int64_t n = -pairing(sig, a, s.charge);
  for (const auto& l : s.heis) n += l.level;
  return n;
}

FockElement vacuum_vector(const Weight& charge) { return FockElement(PBWState{charge, {}}); }

FockElement heisenberg_state(const Weight& charge, std::vector<HeisLetter> letters) {
  std::sort(letters.begin(), letters.end());
  return FockElement(PBWState{charge, std::move(letters)});
}

FockElement heis_act(const Signature& sig, const Weight& h, std::int64_t n, const FockElement& x) {
  FockElement out;
  for (const auto& [s, c] : x) {
    if (n < 0) {
      for (std::size_t g = 0; g < sig.size(); ++g) {
        if (h[g] == 0) continue;
        out.add(with_letter(s, HeisLetter{-n, g}), c * Scalar(h[g]));
      }
    } else if (n == 0) {
      out.add(s, c * Scalar(pairing(sig, h, s.charge)));
    } else {
      for (std::size_t i = 0; i < s.heis.size(); ++i) {
        if (s.heis[i].level != n) continue;
        const std::int64_t hc = pairing(sig, h, sig.unit(s.heis[i].gen));
        if (hc != 0) out.add(without_index(s, i), c * Scalar(n * hc));
      }
    }
  }
  return out;
}

FockElement heis_act(const Signature& sig, std::size_t gen, std::int64_t n, const FockElement& x) {
  return heis_act(sig, sig.unit(gen), n, x);
}

FockElement d_act(const FockElement& x) {
  FockElement out;
  for (const auto& [s, c] : x) {
    for (std::size_t i = 0; i < s.heis.size(); ++i) {
      // Equal letters are raised once per occurrence, so repeats add up.
      HeisLetter l = s.heis[i];
      const std::int64_t k = l.level;
      ++l.level;
      out.add(with_letter(without_index(s, i), l), c * Scalar(k));
    }
    for (std::size_t g = 0; g < s.charge.rank(); ++g) {
      if (s.charge[g] != 0) out.add(with_letter(s, HeisLetter{1, g}), c * Scalar(s.charge[g]));
    }
  }
  return out;
}

FockElement d_divided(const FockElement& x, std::int64_t k) {
  FockElement out = x;
  for (std::int64_t i = 0; i < k; ++i) out = d_act(out);
  out *= Scalar(1) / Scalar(factorial(k));
  return out;
}

FockElement LatticeAlgebra::vacuum_product(const Weight& a, std::int64_t n, const Weight& b) const {
  const std::int64_t k = -pairing(sig_, a, b) - n - 1;
  if (k < 0) return {};
  FockElement x = vacuum_vector(a + b);
  for (std::int64_t i = 0; i < k; ++i) x = d_act(x) - heis_act(sig_, b, -1, x);
  x *= Scalar(epsilon(sig_, a, b)) / Scalar(factorial(k));
  return x;
}

FockElement LatticeAlgebra::va_state(const Weight& a, std::int64_t n, const PBWState& s) {
  if (n >= locality_bound(sig_, a, s)) return {};
  if (s.heis.empty()) return vacuum_product(a, n, s.charge);
  auto key = std::make_tuple(a, n, s);
  if (auto it = va_cache_.find(key); it != va_cache_.end()) return it->second;

  // v_a [n] (c(-k) y) = c(-k) (v_a [n] y) - (a|c) v_a [n-k] y
  const HeisLetter first = s.heis.front();
  const PBWState rest = without_index(s, 0);
  FockElement out = heis_act(sig_, first.gen, -first.level, va_state(a, n, rest));
  const std::int64_t ac = pairing(sig_, a, sig_.unit(first.gen));
  if (ac != 0) out.add(va_state(a, n - first.level, rest), Scalar(-ac));
  va_cache_.emplace(std::move(key), out);
  return out;
}

FockElement LatticeAlgebra::va_product(const Weight& a, std::int64_t n, const FockElement& x) {
  FockElement out;
  for (const auto& [s, c] : x) out.add(va_state(a, n, s), c);
  return out;
}

FockElement LatticeAlgebra::monomial_state(const LatticeWord& u, std::int64_t m, const PBWState& y) {
  if (u.empty()) return m == -1 ? FockElement(y) : FockElement{};
  const LatticeLetter head = u.front();
  if (u.size() == 1) {
    // v_a [n] 1 = D^(j) v_a with j = -n-1, and (D^(j) v_a) [m] y = (-1)^j C(m,j) v_a [m-j] y.
    if (head.mode >= 0) return {};
    const std::int64_t j = -head.mode - 1;
    const Scalar c = sign_power(j) * Scalar(binomial(m, j));
    if (c == 0) return {};
    FockElement out = va_state(head.charge, m - j, y);
    out *= c;
    return out;
  }

  auto key = std::make_tuple(u, m, y);
  if (auto it = monomial_cache_.find(key); it != monomial_cache_.end()) return it->second;

  const Weight& a = head.charge;
  const std::int64_t n = head.mode;
  const LatticeWord tail(u.begin() + 1, u.end());
  const Weight wt_t = lattice_word_weight(sig_, tail);
  const std::int64_t deg2_t = lattice_word_deg2(sig_, tail);
  const std::int64_t deg2_y = state_deg2(sig_, y);
  const Weight mu = wt_t + y.charge;

  FockElement out;
  std::int64_t s_hi = floor_div2(deg2_t + deg2_y - 2 * m - 2 - pairing(sig_, mu, mu));
  if (n >= 0) s_hi = std::min(s_hi, n);
  for (std::int64_t s = 0; s <= s_hi; ++s) {
    const Scalar c = sign_power(s) * Scalar(binomial(n, s));
    if (c == 0) continue;
    const FockElement inner = monomial_state(tail, m + s, y);
    out.add(va_product(a, n - s, inner), c);
  }

  const bool odd = (pairing(sig_, a, a) % 2 != 0) && (pairing(sig_, wt_t, wt_t) % 2 != 0);
  const Scalar koszul = odd ? Scalar(1) : Scalar(-1);
  // v_a [n-s] y vanishes once n-s reaches the locality bound.
  std::int64_t s_lo = n - locality_bound(sig_, a, y) + 1;
  if (n >= 0) s_lo = std::max<std::int64_t>(s_lo, 0);
  for (std::int64_t s = s_lo; s <= n; ++s) {
    const Scalar c = koszul * sign_power(s) * Scalar(binomial(n, n - s));
    if (c == 0) continue;
    const FockElement right = va_state(a, n - s, y);
    for (const auto& [rs, rc] : right) out.add(monomial_state(tail, m + s, rs), c * rc);
  }
  monomial_cache_.emplace(std::move(key), out);
  return out;
}

FockElement LatticeAlgebra::monomial_product(const LatticeWord& u, std::int64_t m, const FockElement& x) {
  FockElement out;
  for (const auto& [s, c] : x) out.add(monomial_state(u, m, s), c);
  return out;
}

FockElement LatticeAlgebra::monomial_product(const Word& u, std::int64_t m, const FockElement& x) {
  return monomial_product(to_lattice_word(sig_, u), m, x);
}

FockElement LatticeAlgebra::product_states(const PBWState& x, std::int64_t m, const PBWState& y) {
  if (x.heis.empty()) return va_state(x.charge, m, y);
  auto key = std::make_tuple(x, m, y);
  if (auto it = product_cache_.find(key); it != product_cache_.end()) return it->second;

  // x = h(-k) x', and h(-k) x' = h~ [-k] x' with h~ = h(-1) v_0 even.
  const HeisLetter first = x.heis.front();
  const std::int64_t k = first.level;
  const PBWState rest = without_index(x, 0);
  const Weight h = sig_.unit(first.gen);
  const std::int64_t deg2_rest = state_deg2(sig_, rest);
  const std::int64_t deg2_y = state_deg2(sig_, y);
  const Weight mu = rest.charge + y.charge;

  FockElement out;
  const std::int64_t s_hi = floor_div2(deg2_rest + deg2_y - 2 * m - 2 - pairing(sig_, mu, mu));
  for (std::int64_t s = 0; s <= s_hi; ++s) {
    const Scalar c = sign_power(s) * Scalar(binomial(-k, s));
    const FockElement inner = product_states(rest, m + s, y);
    out.add(heis_act(sig_, h, -k - s, inner), c);
  }
  // Second sum: h(j) y with j = -k-s >= 0 vanishes beyond the top level of y.
  for (std::int64_t j = 0; j <= max_level(y); ++j) {
    const std::int64_t s = -k - j;
    const Scalar c = -sign_power(s) * Scalar(binomial(-k, j));
    const FockElement right = heis_act(sig_, h, j, FockElement(y));
    for (const auto& [rs, rc] : right) out.add(product_states(rest, m + s, rs), c * rc);
  }
  product_cache_.emplace(std::move(key), out);
  return out;
}

FockElement LatticeAlgebra::product(const FockElement& x, std::int64_t m, const FockElement& y) {
  FockElement out;
  for (const auto& [xs, xc] : x)
    for (const auto& [ys, yc] : y) out.add(product_states(xs, m, ys), xc * yc);
  return out;
}

FockElement LatticeAlgebra::phi(const FreeElement& x) {
  FockElement out;
  for (const auto& [w, c] : x) {
    FockElement v = vacuum_vector(sig_.zero_weight());
    for (auto it = w.rbegin(); it != w.rend() && !v.is_zero(); ++it) v = va_product(sig_.unit(it->gen), it->mode, v);
    out.add(v, c);
  }
  return out;
}

std::int64_t LatticeAlgebra::locality_order(const Weight& a, const FockElement& x) {
  if (x.is_zero()) throw std::invalid_argument("locality order of the zero element");
  std::int64_t bound = 0;
  bool first = true;
  for (const auto& [s, c] : x) {
    const std::int64_t b = locality_bound(sig_, a, s);
    bound = first ? b : std::max(bound, b);
    first = false;
  }
  constexpr std::int64_t kSearchDepth = 10000;
  for (std::int64_t n = bound - 1; n >= bound - kSearchDepth; --n) {
    if (!va_product(a, n, x).is_zero()) return n + 1;
  }
  throw std::runtime_error("locality order search exhausted");
}

FockElement vacuum_product(const Signature& sig, const Weight& a, std::int64_t n, const Weight& b) {
  return LatticeAlgebra(sig).vacuum_product(a, n, b);
}

FockElement va_product(const Signature& sig, const Weight& a, std::int64_t n, const FockElement& x) {
  return LatticeAlgebra(sig).va_product(a, n, x);
}

FockElement monomial_product(const Signature& sig, const Word& u, std::int64_t m, const FockElement& x) {
  return LatticeAlgebra(sig).monomial_product(u, m, x);
}

FockElement phi_embed(const Signature& sig, const FreeElement& x) { return LatticeAlgebra(sig).phi(x); }

std::size_t rank_of(const std::vector<FockElement>& elements) { return rank_of_combinations(elements); }

std::string to_string(const Signature& sig, const PBWState& s) {
  std::vector<HeisLetter> letters = s.heis;
  std::stable_sort(letters.begin(), letters.end(),
                   [](const HeisLetter& l, const HeisLetter& r) { return l.level > r.level; });
  std::string out;
  for (const auto& l : letters) out += sig.name(l.gen) + "(" + std::to_string(-l.level) + ")";
  if (!out.empty()) out += " ";
  return out + "v[" + to_string(sig, s.charge) + "]";
}

std::string to_string(const Signature& sig, const FockElement& x) {
  struct Entry {
    Weight charge;
    std::int64_t deg2;
    const PBWState* state;
    Scalar coeff;
  };
  std::vector<Entry> entries;
  for (const auto& [s, c] : x) entries.push_back({s.charge, state_deg2(sig, s), &s, c});
  std::sort(entries.begin(), entries.end(), [](const Entry& l, const Entry& r) {
    if (l.charge != r.charge) return l.charge < r.charge;
    if (l.deg2 != r.deg2) return l.deg2 < r.deg2;
    return l.state->heis < r.state->heis;
  });
  std::vector<std::pair<std::string, Scalar>> terms;
  for (const auto& e : entries) terms.emplace_back(to_string(sig, *e.state), e.coeff);
  return format_sum(terms);
}

}  // namespace fva
