#include <doctest.h>

#include "../oracles/oracles.hpp"
#include "../support.hpp"
#include "fva/basis.hpp"
#include "fva/errors.hpp"
#include "fva/rewrite.hpp"

using namespace fva;
using namespace fvatest;

TEST_CASE("w_min examples") {
  const auto ferm = sig_ferm();
  CHECK(w_min(ferm, 2 * ferm.unit(0)) == Word{{0, -2}, {0, -1}});
  const auto free2 = sig_free2();
  CHECK(w_min(free2, free2.unit(1)) == Word{{1, -1}});
  CHECK(w_min(free2, free2.unit(0) + free2.unit(1)) == Word{{0, 1}, {1, -1}});
  CHECK(w_min(free2, free2.zero_weight()).empty());
}

TEST_CASE("eta examples") {
  const auto ferm = sig_ferm();
  CHECK(eta(ferm, Word{{0, -3}, {0, -1}}) == ColoredPartition{{1, 0}});
  CHECK(eta(ferm, Word{{0, -2}, {0, -1}}).empty());
  CHECK(eta(ferm, Word{{0, -4}, {0, -2}}) == ColoredPartition{{2, 0}, {1, 0}});
  CHECK_THROWS_AS(eta(ferm, Word{{0, -1}, {0, -1}}), ValidationError);
}

TEST_CASE("eta_inverse examples") {
  const auto ferm = sig_ferm();
  const Weight two = 2 * ferm.unit(0);
  CHECK(eta_inverse(ferm, two, {{1, 0}}) == Word{{0, -3}, {0, -1}});
  CHECK(eta_inverse(ferm, two, {}) == w_min(ferm, two));
  CHECK_THROWS_AS(eta_inverse(ferm, ferm.unit(0), {{1, 0}, {1, 0}}), ValidationError);
}

TEST_CASE("enumerate_basis examples") {
  const auto ferm = sig_ferm();
  const Weight two = 2 * ferm.unit(0);
  const auto b = enumerate_basis(ferm, two, 10);
  CHECK(std::set<Word>(b.begin(), b.end()) == std::set<Word>{Word{{0, -5}, {0, -1}}, Word{{0, -4}, {0, -2}}});
  CHECK(enumerate_basis(ferm, two, 3).empty());
  CHECK(enumerate_basis(ferm, two, 5).empty());
  for (std::int64_t j = 0; j < 5; ++j) {
    CHECK(enumerate_basis(ferm, ferm.unit(0), 1 + 2 * j) == std::vector<Word>{Word{{0, -1 - j}}});
  }
}

TEST_CASE("dim_component examples") {
  const auto ferm = sig_ferm();
  CHECK(dim_component(ferm, 4 * ferm.unit(0), 16 + 10) == 6);
  CHECK(dim_component(ferm, ferm.zero_weight(), 0) == 1);
  for (const auto& sig : {sig_ferm(), sig_free2(), sig_neg()})
    for (const auto& l : weights_up_to(sig, 4)) CHECK(dim_component(sig, l, d2_min(sig, l)) == 1);
}

TEST_CASE("colored partitions respect the color caps and ordering") {
  const auto parts = colored_partitions(4, {1, 2});
  for (const auto& p : parts) {
    std::int64_t total = 0;
    std::vector<std::int64_t> used(2, 0);
    for (std::size_t i = 0; i < p.size(); ++i) {
      total += p[i].part;
      ++used[p[i].color];
      if (i > 0) {
        CHECK(p[i - 1].part >= p[i].part);
        if (p[i - 1].part == p[i].part) CHECK(p[i - 1].color <= p[i].color);
      }
    }
    CHECK(total == 4);
    CHECK(used[0] <= 1);
    CHECK(used[1] <= 2);
  }
  CHECK(Integer(static_cast<unsigned long>(parts.size())) ==
        oracle::dim(Signature({"a", "b"}, {{0, 0}, {0, 0}}), Weight(std::vector<std::int64_t>{1, 2}), 8));
}

TEST_CASE("property: enumeration agrees with the oracle count, eta round-trips, tails stay basic") {
  for (const auto& sig : {sig_ferm(), sig_free2(), sig_neg(), sig_mixed()}) {
    for (const auto& l : weights_up_to(sig, 4)) {
      for (std::int64_t deg2 = d2_min(sig, l) - 1; deg2 <= d2_min(sig, l) + 10; ++deg2) {
        const auto words = enumerate_basis(sig, l, deg2);
        CHECK(Integer(static_cast<unsigned long>(words.size())) == oracle::dim(sig, l, deg2));
        CHECK(std::set<Word>(words.begin(), words.end()).size() == words.size());
        for (const auto& w : words) {
          CHECK(is_basic(sig, w));
          CHECK(word_weight(sig, w) == l);
          CHECK(word_deg2(sig, w) == deg2);
          const auto p = eta(sig, w);
          std::int64_t total = 0;
          for (const auto& cp : p) total += cp.part;
          CHECK(2 * total == deg2 - d2_min(sig, l));
          CHECK(eta_inverse(sig, l, p) == w);
          for (std::size_t i = 1; i < w.size(); ++i) {
            const Word tail(w.begin() + static_cast<std::ptrdiff_t>(i), w.end());
            CHECK(is_basic(sig, tail));
            for (const auto& cp : eta(sig, tail)) CHECK(cp.part > 0);
          }
        }
      }
    }
  }
}

TEST_CASE("property: dimensions do not depend on a constant shift of N") {
  const Signature base({"a", "b"}, {{-1, 0}, {0, 2}});
  for (std::int64_t shift = -2; shift <= 3; ++shift) {
    const Signature shifted({"a", "b"}, {{-1 + shift, shift}, {shift, 2 + shift}});
    for (const auto& l : weights_up_to(base, 4)) {
      for (std::int64_t e = 0; e <= 10; e += 2) {
        CHECK(dim_component(base, l, d2_min(base, l) + e) == dim_component(shifted, l, d2_min(shifted, l) + e));
      }
    }
  }
}

TEST_CASE("terminal words found by search match the enumeration") {
  for (const auto& sig : {sig_ferm(), sig_free2(), sig_neg()}) {
    for (const auto& l : weights_up_to(sig, 3)) {
      for (std::int64_t deg2 = d2_min(sig, l); deg2 <= d2_min(sig, l) + 6; deg2 += 2) {
        const auto words = enumerate_basis(sig, l, deg2);
        CHECK(oracle::terminal_words(sig, l, deg2, -12, 8) == std::set<Word>(words.begin(), words.end()));
      }
    }
  }
}
