#include "fva/rewrite.hpp"

#include <functional>
#include <map>
#include <stdexcept>
#include <utility>

namespace fva {

bool q_vanishes(const Signature& sig, const Word& w) { return below_degree_floor(sig, w); }

std::int64_t jump_bound(const Signature& sig, const Word& w, std::size_t j) {
  std::int64_t m = 0;
  for (std::size_t i = j + 1; i < w.size(); ++i) m += sig.locality(w[j].gen, w[i].gen);
  for (std::size_t i = j + 2; i < w.size(); ++i) m -= sig.locality(w[j + 1].gen, w[i].gen);
  return m;
}

namespace {

bool is_redex(const Signature& sig, const Word& w, std::size_t j) {
  const std::int64_t gap = w[j].mode - w[j + 1].mode;
  const std::int64_t m = jump_bound(sig, w, j);
  return gap > m || (gap == m && w[j].gen > w[j + 1].gen);
}

// sum of pairwise N over the letters of `tail` and its length, as needed by the Q bound.
std::pair<std::int64_t, std::int64_t> pair_sum_and_length(const Signature& sig, const Word& tail) {
  std::int64_t sum = 0;
  for (std::size_t i = 0; i < tail.size(); ++i) {
    for (std::size_t k = i + 1; k < tail.size(); ++k) sum += sig.locality(tail[i].gen, tail[k].gen);
  }
  return {sum, static_cast<std::int64_t>(tail.size())};
}

}  // namespace

std::optional<std::size_t> find_r_redex(const Signature& sig, const Word& w, RedexStrategy strategy) {
  if (w.size() < 2) return std::nullopt;
  if (strategy == RedexStrategy::Leftmost) {
    for (std::size_t j = 0; j + 1 < w.size(); ++j) {
      if (is_redex(sig, w, j)) return j;
    }
  } else {
    for (std::size_t j = w.size() - 1; j-- > 0;) {
      if (is_redex(sig, w, j)) return j;
    }
  }
  return std::nullopt;
}

FreeElement apply_r(const Signature& sig, const Word& w, std::size_t j) {
  if (j + 1 >= w.size() || !is_redex(sig, w, j)) throw std::logic_error("apply_r: position is not an R-redex");
  const std::size_t a = w[j].gen;
  const std::size_t b = w[j + 1].gen;
  const std::int64_t na = w[j].mode;
  const std::int64_t nb = w[j + 1].mode;
  const std::int64_t N = sig.locality(a, b);

  std::int64_t rest_modes = 0;
  for (std::size_t i = j + 2; i < w.size(); ++i) rest_modes += w[i].mode;

  FreeElement out;
  auto emit = [&](Word v, const Scalar& c) {
    if (c != 0 && !q_vanishes(sig, v)) out.add(v, c);
  };

  // First sum: a(na-s) b(nb+s), s >= 1. The tail starting at b must stay above the floor.
  {
    Word tail(w.begin() + static_cast<std::ptrdiff_t>(j) + 1, w.end());
    auto [pairs, len] = pair_sum_and_length(sig, tail);
    std::int64_t s_hi = pairs - len - nb - rest_modes;
    if (N >= 0) s_hi = std::min(s_hi, N);
    for (std::int64_t s = 1; s <= s_hi; ++s) {
      Word v = w;
      v[j].mode = na - s;
      v[j + 1].mode = nb + s;
      emit(std::move(v), -sign_power(s) * Scalar(binomial(N, s)));
    }
  }

  // Second sum: b(nb+s) a(na-s), s <= N. The tail starting at the moved a must stay above the floor.
  {
    Word tail;
    tail.push_back(w[j]);
    tail.insert(tail.end(), w.begin() + static_cast<std::ptrdiff_t>(j) + 2, w.end());
    auto [pairs, len] = pair_sum_and_length(sig, tail);
    std::int64_t s_lo = na + rest_modes - pairs + len;
    if (N >= 0) s_lo = std::max<std::int64_t>(s_lo, 0);
    const Scalar koszul = (sig.parity(a) == 1 && sig.parity(b) == 1) ? Scalar(-1) : Scalar(1);
    for (std::int64_t s = s_lo; s <= N; ++s) {
      Word v = w;
      v[j] = Letter{b, nb + s};
      v[j + 1] = Letter{a, na - s};
      emit(std::move(v), koszul * sign_power(s) * Scalar(binomial(N, N - s)));
    }
  }
  return out;
}

RewriteOutcome normal_form(const Signature& sig, const FreeElement& x, const RewriteOptions& options) {
  // Every R-step strictly lowers (measure, word) lexicographically, so processing
  // pending words from the largest key down rewrites each word exactly once.
  using Key = std::pair<Measure, Word>;
  std::map<Key, Scalar, std::greater<Key>> pending;
  auto push = [&](const Word& w, const Scalar& c) {
    Key key{measure(sig, w), w};
    auto [it, inserted] = pending.try_emplace(std::move(key), c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) pending.erase(it);
    }
  };
  for (const auto& [w, c] : x) push(w, c);

  RewriteOutcome outcome;
  while (!pending.empty()) {
    auto node = pending.extract(pending.begin());
    const Word& w = node.key().second;
    const Scalar& c = node.mapped();
    if (q_vanishes(sig, w)) {
      ++outcome.q_kills;
      continue;
    }
    auto j = find_r_redex(sig, w, options.strategy);
    if (!j) {
      outcome.result.add(w, c);
      continue;
    }
    if (++outcome.steps > options.step_budget) {
      throw std::runtime_error("normal_form: rewrite step budget exceeded");
    }
    for (const auto& [v, cv] : apply_r(sig, w, *j)) push(v, c * cv);
  }
  return outcome;
}

bool is_basic(const Signature& sig, const Word& w) {
  if (w.empty()) return true;
  if (w.back().mode >= 0) return false;
  for (std::size_t i = 0; i + 1 < w.size(); ++i) {
    std::int64_t bound = jump_bound(sig, w, i);
    if (w[i].gen > w[i + 1].gen) bound -= 1;
    if (w[i].mode - w[i + 1].mode > bound) return false;
  }
  return true;
}

Measure measure(const Signature& sig, const Word& w) {
  Measure m;
  m.tails.resize(w.size());
  m.letters.reserve(w.size());
  for (const auto& l : w) m.letters.push_back(l.gen);
  std::int64_t d = 0;
  for (std::size_t i = w.size(); i-- > 0;) {
    d -= w[i].mode;
    for (std::size_t k = i + 1; k < w.size(); ++k) d += sig.locality(w[i].gen, w[k].gen);
    m.tails[i] = d;
  }
  return m;
}

}  // namespace fva
