#pragma once

#include <cstddef>
#include <map>
#include <vector>

#include "fva/linear_combination.hpp"
#include "fva/scalar.hpp"

namespace fva {

/// Rank of a dense integer matrix given row by row (all rows of length ncols).
std::size_t integer_rank(std::vector<std::vector<Integer>> rows, std::size_t ncols);

/// Rank over Q of a family of rationally weighted combinations.
/// Each row is scaled by the lcm of its denominators before the integer elimination.
template <class Key>
std::size_t rank_of_combinations(const std::vector<LinearCombination<Key>>& elements) {
  std::map<Key, std::size_t> column;
  for (const auto& e : elements)
    for (const auto& [key, c] : e) column.try_emplace(key, 0);
  std::size_t ncols = 0;
  for (auto& [key, idx] : column) idx = ncols++;

  std::vector<std::vector<Integer>> rows;
  rows.reserve(elements.size());
  for (const auto& e : elements) {
    if (e.is_zero()) continue;
    Integer den = 1;
    for (const auto& [key, c] : e) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
    std::vector<Integer> row(ncols, 0);
    for (const auto& [key, c] : e) row[column.at(key)] = c.get_num() * (den / c.get_den());
    rows.push_back(std::move(row));
  }
  return integer_rank(std::move(rows), ncols);
}

}  // namespace fva
