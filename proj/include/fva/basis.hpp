#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "fva/freeva.hpp"

namespace fva {

struct ColoredPart {
  std::int64_t part = 0;
  std::size_t color = 0;

  friend auto operator<=>(const ColoredPart&, const ColoredPart&) = default;
};

/// Nonincreasing positive parts; equal parts carry nondecreasing colors.
using ColoredPartition = std::vector<ColoredPart>;

/// The unique basic word of weight l at the degree floor.
Word w_min(const Signature& sig, const Weight& l);

/// Colored partition of (deg - deg_min)/1 attached to a basic word. Throws ValidationError if w is not basic.
ColoredPartition eta(const Signature& sig, const Word& w);

/// Inverse of eta on words of weight l. Throws ValidationError when a color is used more often than l allows.
Word eta_inverse(const Signature& sig, const Weight& l, const ColoredPartition& p);

/// All colored partitions of `total` with at most caps[a] parts of color a.
std::vector<ColoredPartition> colored_partitions(std::int64_t total, const std::vector<std::int64_t>& caps);

/// Basis words of the component (l, deg2), in enumeration order.
std::vector<Word> enumerate_basis(const Signature& sig, const Weight& l, std::int64_t deg2);

std::size_t dim_component(const Signature& sig, const Weight& l, std::int64_t deg2);

std::string to_string(const Signature& sig, const ColoredPartition& p);

}  // namespace fva
