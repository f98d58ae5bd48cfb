#include "fva/basis.hpp"

#include <algorithm>

#include "fva/errors.hpp"
#include "fva/rewrite.hpp"

namespace fva {

namespace {

std::vector<std::size_t> sorted_letters(const Weight& l) {
  std::vector<std::size_t> letters;
  for (std::size_t a = 0; a < l.rank(); ++a) {
    if (l[a] < 0) throw ValidationError("weight must be nonnegative");
    letters.insert(letters.end(), static_cast<std::size_t>(l[a]), a);
  }
  return letters;
}

// sum_{j>i} N(a_i, a_j) - 1 for a letter sequence: the mode of letter i at the floor.
std::vector<std::int64_t> floor_modes(const Signature& sig, const std::vector<std::size_t>& letters) {
  std::vector<std::int64_t> modes(letters.size());
  for (std::size_t i = 0; i < letters.size(); ++i) {
    std::int64_t s = 0;
    for (std::size_t j = i + 1; j < letters.size(); ++j) s += sig.locality(letters[i], letters[j]);
    modes[i] = s - 1;
  }
  return modes;
}

void extend_partitions(std::int64_t remaining, std::int64_t max_part, std::size_t min_color,
                       std::vector<std::int64_t>& caps, ColoredPartition& current,
                       std::vector<ColoredPartition>& out) {
  if (remaining == 0) {
    out.push_back(current);
    return;
  }
  for (std::int64_t part = std::min(max_part, remaining); part >= 1; --part) {
    const std::size_t first_color = part == max_part ? min_color : 0;
    for (std::size_t color = first_color; color < caps.size(); ++color) {
      if (caps[color] == 0) continue;
      --caps[color];
      current.push_back({part, color});
      extend_partitions(remaining - part, part, color, caps, current, out);
      current.pop_back();
      ++caps[color];
    }
  }
}

}  // namespace

Word w_min(const Signature& sig, const Weight& l) {
  const auto letters = sorted_letters(l);
  const auto modes = floor_modes(sig, letters);
  Word w;
  for (std::size_t i = 0; i < letters.size(); ++i) w.push_back({letters[i], modes[i]});
  return w;
}

ColoredPartition eta(const Signature& sig, const Word& w) {
  if (!is_basic(sig, w)) throw ValidationError("eta: word " + to_string(sig, w) + " is not basic");
  std::vector<std::size_t> letters;
  for (const auto& l : w) letters.push_back(l.gen);
  const auto modes = floor_modes(sig, letters);
  ColoredPartition p;
  for (std::size_t i = 0; i < w.size(); ++i) {
    std::int64_t part = modes[i] - w[i].mode;
    if (part != 0) p.push_back({part, w[i].gen});
  }
  return p;
}

Word eta_inverse(const Signature& sig, const Weight& l, const ColoredPartition& p) {
  std::vector<std::int64_t> left = l.coeffs();
  ColoredPartition full = p;
  for (const auto& cp : p) {
    if (cp.color >= left.size() || --left[cp.color] < 0) {
      throw ValidationError("eta_inverse: color multiplicity exceeds the weight");
    }
  }
  for (std::size_t a = 0; a < left.size(); ++a) {
    for (std::int64_t k = 0; k < left[a]; ++k) full.push_back({0, a});
  }
  std::vector<std::size_t> letters;
  for (const auto& cp : full) letters.push_back(cp.color);
  const auto modes = floor_modes(sig, letters);
  Word w;
  for (std::size_t i = 0; i < full.size(); ++i) w.push_back({letters[i], modes[i] - full[i].part});
  return w;
}

std::vector<ColoredPartition> colored_partitions(std::int64_t total, const std::vector<std::int64_t>& caps) {
  std::vector<ColoredPartition> out;
  if (total < 0) return out;
  std::vector<std::int64_t> work = caps;
  ColoredPartition current;
  extend_partitions(total, total, 0, work, current, out);
  return out;
}

std::vector<Word> enumerate_basis(const Signature& sig, const Weight& l, std::int64_t deg2) {
  std::vector<Word> out;
  if (!l.is_nonnegative()) return out;
  const std::int64_t excess = deg2 - d2_min(sig, l);
  if (excess < 0 || excess % 2 != 0) return out;
  for (const auto& p : colored_partitions(excess / 2, l.coeffs())) out.push_back(eta_inverse(sig, l, p));
  return out;
}

std::size_t dim_component(const Signature& sig, const Weight& l, std::int64_t deg2) {
  return enumerate_basis(sig, l, deg2).size();
}

std::string to_string(const Signature& sig, const ColoredPartition& p) {
  std::string out = "(";
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(p[i].part) + "_" + sig.name(p[i].color);
  }
  return out + ")";
}

}  // namespace fva
