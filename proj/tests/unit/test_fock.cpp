#include <doctest.h>

#include "../oracles/oracles.hpp"
#include "../support.hpp"
#include "fva/basis.hpp"
#include "fva/fock.hpp"
#include "fva/freeva.hpp"
#include "fva/rewrite.hpp"

using namespace fva;
using namespace fvatest;

namespace {

FockElement state(const Weight& charge, std::vector<HeisLetter> letters) {
  return heisenberg_state(charge, std::move(letters));
}

Weight random_charge(const Signature& sig, Rng& rng, std::int64_t lo, std::int64_t hi) {
  Weight w = sig.zero_weight();
  for (std::size_t a = 0; a < sig.size(); ++a) w[a] = uniform(rng, lo, hi);
  return w;
}

FockElement random_fock(const Signature& sig, Rng& rng) {
  FockElement x;
  const std::int64_t terms = uniform(rng, 1, 3);
  for (std::int64_t t = 0; t < terms; ++t) {
    std::vector<HeisLetter> letters;
    const std::int64_t len = uniform(rng, 0, 3);
    for (std::int64_t i = 0; i < len; ++i)
      letters.push_back({uniform(rng, 1, 3), static_cast<std::size_t>(uniform(rng, 0, static_cast<std::int64_t>(sig.size()) - 1))});
    x += random_coeff(rng) * state(random_charge(sig, rng, -2, 2), letters);
  }
  return x;
}

}  // namespace

TEST_CASE("epsilon examples") {
  const auto ferm = sig_ferm();
  const Weight a = ferm.unit(0);
  CHECK(epsilon(ferm, a, a) == 1);
  CHECK(epsilon(ferm, 3 * a, ferm.zero_weight()) == 1);
  const Signature odd2({"a", "b"}, {{-1, 0}, {0, -1}});
  CHECK(epsilon(odd2, odd2.unit(1), odd2.unit(0)) == -1);
  CHECK(epsilon(odd2, odd2.unit(0), odd2.unit(1)) == 1);
}

TEST_CASE("heis_act examples") {
  const auto ferm = sig_ferm();
  const Weight zero = ferm.zero_weight();
  const Weight a = ferm.unit(0);
  CHECK(heis_act(ferm, 0, 1, state(zero, {{1, 0}})) == vacuum_vector(zero));
  const Signature two({"a", "b"}, {{-1, 2}, {2, 0}});
  CHECK(heis_act(two, 0, 0, vacuum_vector(two.unit(1))) == Scalar(-2) * vacuum_vector(two.unit(1)));
  CHECK(heis_act(ferm, 0, 2, state(zero, {{1, 0}, {1, 0}})).is_zero());
  CHECK(heis_act(ferm, 0, -3, vacuum_vector(a)) == state(a, {{3, 0}}));
}

TEST_CASE("d_act examples") {
  const auto ferm = sig_ferm();
  const Weight zero = ferm.zero_weight();
  const Weight a = ferm.unit(0);
  CHECK(d_act(vacuum_vector(zero)).is_zero());
  CHECK(d_act(vacuum_vector(2 * a)) == Scalar(2) * state(2 * a, {{1, 0}}));
  CHECK(d_act(state(zero, {{1, 0}})) == state(zero, {{2, 0}}));
}

TEST_CASE("vacuum_product examples") {
  const auto ferm = sig_ferm();
  const Weight a = ferm.unit(0);
  CHECK(vacuum_product(ferm, a, -2, a) == vacuum_vector(2 * a));
  CHECK(vacuum_product(ferm, a, -1, a).is_zero());
  CHECK(vacuum_product(ferm, a, -3, a) == state(2 * a, {{1, 0}}));
  CHECK(vacuum_product(ferm, a, 0, -a) == vacuum_vector(ferm.zero_weight()));
}

TEST_CASE("va_product examples") {
  const auto ferm = sig_ferm();
  const Weight a = ferm.unit(0);
  CHECK(va_product(ferm, a, -1, state(a, {{1, 0}})) == -vacuum_vector(2 * a));
  Rng rng(41);
  LatticeAlgebra alg(ferm);
  for (int t = 0; t < 50; ++t) {
    const Weight b = random_charge(ferm, rng, -2, 2);
    const std::int64_t n = uniform(rng, -5, 2);
    for (const auto& [s, c] : alg.va_product(a, n, state(b, {{2, 0}}))) {
      CHECK(s.charge == a + b);
      CHECK(state_deg2(ferm, s) == 1 + (oracle::gram(ferm, b, b) + 4) - 2 * n - 2);
    }
  }
}

TEST_CASE("phi examples") {
  const auto ferm = sig_ferm();
  const Weight a = ferm.unit(0);
  CHECK(phi_embed(ferm, generator_element(0)) == vacuum_vector(a));
  CHECK(phi_embed(ferm, FreeElement(Word{{0, -2}, {0, -1}})) == vacuum_vector(2 * a));
  for (const auto& sig : {sig_ferm(), sig_free2(), sig_neg(), sig_mixed()}) {
    for (const auto& l : weights_up_to(sig, 4)) {
      const FockElement img = phi_embed(sig, FreeElement(w_min(sig, l)));
      CHECK(img.size() == 1);
      CHECK((img == vacuum_vector(l) || img == -vacuum_vector(l)));
    }
  }
}

TEST_CASE("rank_of examples") {
  const auto ferm = sig_ferm();
  const FockElement v0 = vacuum_vector(ferm.zero_weight());
  CHECK(rank_of({v0}) == 1);
  CHECK(rank_of({v0, Scalar(2) * v0}) == 1);
  CHECK(rank_of({}) == 0);
  std::vector<FockElement> imgs;
  for (const auto& w : enumerate_basis(ferm, 2 * ferm.unit(0), 10)) imgs.push_back(phi_embed(ferm, FreeElement(w)));
  CHECK(rank_of(imgs) == 2);
}

TEST_CASE("printing") {
  const auto ferm = sig_ferm();
  const Weight a = ferm.unit(0);
  CHECK(to_string(ferm, state(2 * a, {{1, 0}, {2, 0}})) == "a(-2)a(-1) v[2a]");
}

TEST_CASE("property: epsilon matches the oracle and the symmetry identity") {
  Rng rng(42);
  for (const auto& sig : {sig_ferm(), sig_free2(), sig_neg(), sig_mixed()}) {
    for (int t = 0; t < 200; ++t) {
      const Weight l = random_charge(sig, rng, -3, 3);
      const Weight m = random_charge(sig, rng, -3, 3);
      const Weight k = random_charge(sig, rng, -3, 3);
      CHECK(epsilon(sig, l, m) == oracle::epsilon(sig, l, m));
      CHECK(epsilon(sig, l + k, m) == epsilon(sig, l, m) * epsilon(sig, k, m));
      CHECK(epsilon(sig, l, m + k) == epsilon(sig, l, m) * epsilon(sig, l, k));
      const std::int64_t e = oracle::gram(sig, l, l) * oracle::gram(sig, m, m) + oracle::gram(sig, l, m);
      CHECK(epsilon(sig, l, m) == (e % 2 == 0 ? 1 : -1) * epsilon(sig, m, l));
    }
  }
}

TEST_CASE("property: Heisenberg relations and the D commutator") {
  Rng rng(43);
  for (const auto& sig : {sig_ferm(), sig_free2(), sig_neg()}) {
    for (int t = 0; t < 100; ++t) {
      const FockElement x = random_fock(sig, rng);
      const auto b = static_cast<std::size_t>(uniform(rng, 0, static_cast<std::int64_t>(sig.size()) - 1));
      const auto c = static_cast<std::size_t>(uniform(rng, 0, static_cast<std::int64_t>(sig.size()) - 1));
      const std::int64_t m = uniform(rng, -3, 3);
      const std::int64_t n = uniform(rng, -3, 3);
      const FockElement lhs = heis_act(sig, b, m, heis_act(sig, c, n, x)) - heis_act(sig, c, n, heis_act(sig, b, m, x));
      const FockElement rhs = m + n == 0 ? Scalar(m * sig.gram(b, c)) * x : FockElement{};
      CHECK(lhs == rhs);
      CHECK(d_act(heis_act(sig, b, n, x)) - heis_act(sig, b, n, d_act(x)) == Scalar(-n) * heis_act(sig, b, n - 1, x));
    }
  }
}

TEST_CASE("property: vacuum products match the exponential oracle and vanish at the locality order") {
  Rng rng(44);
  for (const auto& sig : {sig_ferm(), sig_free2(), sig_neg(), sig_mixed()}) {
    for (int t = 0; t < 60; ++t) {
      const Weight al = random_charge(sig, rng, -2, 2);
      const Weight be = random_charge(sig, rng, -2, 2);
      const std::int64_t order = -oracle::gram(sig, al, be);
      const std::int64_t n = uniform(rng, order - 5, order + 2);
      const FockElement got = vacuum_product(sig, al, n, be);
      CHECK(got == oracle::vacuum_product(sig, al, n, be));
      if (n >= order) CHECK(got.is_zero());
      if (n == order - 1) CHECK(got.size() == 1);
      LatticeAlgebra alg(sig);
      if (!al.is_zero() || !be.is_zero()) CHECK(alg.locality_order(al, vacuum_vector(be)) == order);
    }
  }
}

TEST_CASE("property: phi is a homomorphism and respects the degree floor") {
  Rng rng(45);
  for (const auto& sig : {sig_ferm(), sig_free2(), sig_neg(), sig_mixed()}) {
    LatticeAlgebra alg(sig);
    for (int t = 0; t < 40; ++t) {
      const auto [u, n, v] = random_product_case(sig, rng, 8);
      const FockElement lhs = alg.phi(product_free(sig, u, n, v));
      CHECK(lhs == alg.product(alg.phi(u), n, alg.phi(v)));
      for (const auto& [s, c] : lhs) CHECK(state_deg2(sig, s) >= oracle::gram(sig, s.charge, s.charge));
    }
  }
}

TEST_CASE("property: results do not depend on cache state") {
  Rng rng(46);
  const auto sig = sig_neg();
  LatticeAlgebra warm(sig);
  for (int t = 0; t < 30; ++t) {
    const FreeElement x = random_small_element(sig, rng, 3, 3);
    LatticeAlgebra cold(sig);
    CHECK(warm.phi(x) == cold.phi(x));
  }
}
