#include "fva/freeva.hpp"

#include <algorithm>
#include <map>
#include <tuple>

namespace fva {

Weight word_weight(const Signature& sig, const Word& w) {
  Weight wt = sig.zero_weight();
  for (const auto& l : w) wt[l.gen] += 1;
  return wt;
}

std::int64_t word_deg2(const Signature& sig, const Word& w) {
  std::int64_t d = 0;
  for (const auto& l : w) d += sig.deg2(l.gen) - 2 * l.mode - 2;
  return d;
}

Grade word_grade(const Signature& sig, const Word& w) {
  Grade g{word_weight(sig, w), word_deg2(sig, w), 0};
  g.parity = parity(sig, g.weight);
  return g;
}

bool below_degree_floor(const Signature& sig, const Word& w) {
  // Walk tails from the right, maintaining sum of modes and sum of pairwise N.
  std::int64_t mode_sum = 0;
  std::int64_t pair_sum = 0;
  std::vector<std::int64_t> col(sig.size(), 0);  // sum_{i in tail} N(a, a_i) for each a
  std::int64_t len = 0;
  for (auto it = w.rbegin(); it != w.rend(); ++it) {
    pair_sum += col[it->gen];
    for (std::size_t a = 0; a < sig.size(); ++a) col[a] += sig.locality(a, it->gen);
    mode_sum += it->mode;
    ++len;
    if (mode_sum > pair_sum - len) return true;
  }
  return false;
}

FreeElement d_apply(const FreeElement& x) {
  FreeElement out;
  for (const auto& [w, c] : x) {
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (w[i].mode == 0) continue;
      Word v = w;
      v[i].mode -= 1;
      out.add(v, c * Scalar(-w[i].mode));
    }
  }
  return out;
}

FreeElement d_divided(const FreeElement& x, std::int64_t k) {
  FreeElement out = x;
  for (std::int64_t i = 0; i < k; ++i) out = d_apply(out);
  out *= Scalar(1) / Scalar(factorial(k));
  return out;
}

namespace {

Word prepend(const Letter& l, const Word& w) {
  Word out;
  out.reserve(w.size() + 1);
  out.push_back(l);
  out.insert(out.end(), w.begin(), w.end());
  return out;
}

std::int64_t floor_div2(std::int64_t x) { return x >= 0 ? x / 2 : -((-x + 1) / 2); }
std::int64_t ceil_div2(std::int64_t x) { return -floor_div2(-x); }

class ProductEngine {
 public:
  explicit ProductEngine(const Signature& sig) : sig_(sig) {}

  const FreeElement& words(const Word& u, std::int64_t m, const Word& v) {
    auto key = std::make_tuple(u, m, v);
    if (auto it = cache_.find(key); it != cache_.end()) return it->second;
    FreeElement r = compute(u, m, v);
    return cache_.emplace(std::move(key), std::move(r)).first->second;
  }

 private:
  FreeElement compute(const Word& u, std::int64_t m, const Word& v) {
    FreeElement out;
    const Weight wt_u = word_weight(sig_, u);
    const Weight wt_v = word_weight(sig_, v);
    const std::int64_t deg2_u = word_deg2(sig_, u);
    const std::int64_t deg2_v = word_deg2(sig_, v);
    if (deg2_u + deg2_v - 2 * m - 2 < d2_min(sig_, wt_u + wt_v)) return out;

    if (u.empty()) {
      if (m == -1 && !below_degree_floor(sig_, v)) out.add(v, Scalar(1));
      return out;
    }

    const Letter head = u.front();
    if (u.size() == 1) {
      // a(n).1 = D^(j) a with j = -n-1, and (D^(j) a) [m] v = (-1)^j C(m,j) a [m-j] v.
      if (head.mode >= 0) return out;
      const std::int64_t j = -head.mode - 1;
      Scalar c = sign_power(j) * Scalar(binomial(m, j));
      if (c == 0) return out;
      Word w = prepend(Letter{head.gen, m - j}, v);
      if (!below_degree_floor(sig_, w)) out.add(w, c);
      return out;
    }

    const std::size_t a = head.gen;
    const std::int64_t n = head.mode;
    const Word tail(u.begin() + 1, u.end());
    const Weight wt_t = wt_u - sig_.unit(a);
    const std::int64_t deg2_t = word_deg2(sig_, tail);

    // (a [n] t) [m] v = sum_{s>=0} (-1)^s C(n,s) a [n-s] (t [m+s] v)
    //                 - (-1)^{p(a)p(t)} sum_{s<=n} (-1)^s C(n,n-s) t [m+s] (a [n-s] v)
    std::int64_t s_hi = floor_div2(deg2_t + deg2_v - 2 * m - 2 - d2_min(sig_, wt_t + wt_v));
    if (n >= 0) s_hi = std::min(s_hi, n);
    for (std::int64_t s = 0; s <= s_hi; ++s) {
      Scalar c = sign_power(s) * Scalar(binomial(n, s));
      if (c == 0) continue;
      const FreeElement inner = words(tail, m + s, v);
      for (const auto& [w, cw] : inner) {
        Word full = prepend(Letter{a, n - s}, w);
        if (!below_degree_floor(sig_, full)) out.add(full, c * cw);
      }
    }

    const Scalar koszul = (sig_.parity(a) == 1 && parity(sig_, wt_t) == 1) ? Scalar(1) : Scalar(-1);
    std::int64_t s_lo = ceil_div2(d2_min(sig_, sig_.unit(a) + wt_v) - sig_.deg2(a) - deg2_v + 2 * n + 2);
    if (n >= 0) s_lo = std::max<std::int64_t>(s_lo, 0);
    for (std::int64_t s = s_lo; s <= n; ++s) {
      Scalar c = koszul * sign_power(s) * Scalar(binomial(n, n - s));
      if (c == 0) continue;
      Word right = prepend(Letter{a, n - s}, v);
      if (below_degree_floor(sig_, right)) continue;
      out.add(words(tail, m + s, right), c);
    }
    return out;
  }

  const Signature& sig_;
  std::map<std::tuple<Word, std::int64_t, Word>, FreeElement> cache_;
};

}  // namespace

FreeElement product_free(const Signature& sig, const FreeElement& u, std::int64_t m, const FreeElement& v) {
  ProductEngine engine(sig);
  FreeElement out;
  for (const auto& [wu, cu] : u) {
    for (const auto& [wv, cv] : v) out.add(engine.words(wu, m, wv), cu * cv);
  }
  return out;
}

VertexExpr VertexExpr::product(VertexExpr left, std::int64_t mode, VertexExpr right) {
  return {Product{std::make_shared<const VertexExpr>(std::move(left)), mode,
                  std::make_shared<const VertexExpr>(std::move(right))}};
}

bool operator==(const VertexExpr& a, const VertexExpr& b) {
  if (a.node.index() != b.node.index()) return false;
  if (const auto* pa = std::get_if<VertexExpr::Product>(&a.node)) {
    const auto& pb = std::get<VertexExpr::Product>(b.node);
    return pa->mode == pb.mode && *pa->left == *pb.left && *pa->right == *pb.right;
  }
  if (const auto* ga = std::get_if<VertexExpr::Generator>(&a.node)) {
    return ga->gen == std::get<VertexExpr::Generator>(b.node).gen;
  }
  return true;
}

FreeElement evaluate_expr(const Signature& sig, const VertexExpr& e) {
  return std::visit(
      [&](const auto& node) -> FreeElement {
        using T = std::decay_t<decltype(node)>;
        if constexpr (std::is_same_v<T, VertexExpr::Vacuum>) {
          return vacuum_element();
        } else if constexpr (std::is_same_v<T, VertexExpr::Generator>) {
          return generator_element(node.gen);
        } else {
          return product_free(sig, evaluate_expr(sig, *node.left), node.mode, evaluate_expr(sig, *node.right));
        }
      },
      e.node);
}

std::string to_string(const Signature& sig, const Word& w) {
  std::string out;
  for (const auto& l : w) out += sig.name(l.gen) + "(" + std::to_string(l.mode) + ")";
  return out + "vac";
}

std::vector<std::pair<Word, Scalar>> canonical_terms(const Signature& sig, const FreeElement& x) {
  struct Entry {
    Weight weight;
    std::int64_t deg2;
    Word word;
    Scalar coeff;
  };
  std::vector<Entry> entries;
  for (const auto& [w, c] : x) entries.push_back({word_weight(sig, w), word_deg2(sig, w), w, c});
  std::sort(entries.begin(), entries.end(), [](const Entry& l, const Entry& r) {
    return std::tie(l.weight, l.deg2, l.word) < std::tie(r.weight, r.deg2, r.word);
  });
  std::vector<std::pair<Word, Scalar>> out;
  for (auto& e : entries) out.emplace_back(std::move(e.word), std::move(e.coeff));
  return out;
}

std::string to_string(const Signature& sig, const FreeElement& x) {
  std::vector<std::pair<std::string, Scalar>> terms;
  for (const auto& [w, c] : canonical_terms(sig, x)) terms.emplace_back(to_string(sig, w), c);
  return format_sum(terms);
}

std::string to_string(const Signature& sig, const VertexExpr& e) {
  return std::visit(
      [&](const auto& node) -> std::string {
        using T = std::decay_t<decltype(node)>;
        if constexpr (std::is_same_v<T, VertexExpr::Vacuum>) {
          return "vac";
        } else if constexpr (std::is_same_v<T, VertexExpr::Generator>) {
          return sig.name(node.gen);
        } else {
          if (const auto* g = std::get_if<VertexExpr::Generator>(&node.left->node)) {
            return sig.name(g->gen) + "(" + std::to_string(node.mode) + ")" + to_string(sig, *node.right);
          }
          return "(" + to_string(sig, *node.left) + " [" + std::to_string(node.mode) + "] " +
                 to_string(sig, *node.right) + ")";
        }
      },
      e.node);
}

}  // namespace fva
