#pragma once

#include <map>
#include <utility>

#include "fva/scalar.hpp"

namespace fva {

/// Finite formal sum of keys with rational coefficients. Zero coefficients are never stored.
template <class Key>
class LinearCombination {
 public:
  using map_type = std::map<Key, Scalar>;
  using const_iterator = typename map_type::const_iterator;

  LinearCombination() = default;
  explicit LinearCombination(Key key, Scalar coeff = Scalar(1)) { add(std::move(key), coeff); }

  void add(const Key& key, const Scalar& coeff) {
    if (coeff == 0) return;
    auto [it, inserted] = terms_.try_emplace(key, coeff);
    if (!inserted) {
      it->second += coeff;
      if (it->second == 0) terms_.erase(it);
    }
  }

  void add(const LinearCombination& other, const Scalar& coeff) {
    if (coeff == 0) return;
    for (const auto& [key, c] : other.terms_) add(key, c * coeff);
  }

  Scalar coefficient(const Key& key) const {
    auto it = terms_.find(key);
    return it == terms_.end() ? Scalar(0) : it->second;
  }

  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const_iterator begin() const { return terms_.begin(); }
  const_iterator end() const { return terms_.end(); }
  const map_type& terms() const { return terms_; }

  LinearCombination& operator+=(const LinearCombination& o) {
    add(o, Scalar(1));
    return *this;
  }
  LinearCombination& operator-=(const LinearCombination& o) {
    add(o, Scalar(-1));
    return *this;
  }
  LinearCombination& operator*=(const Scalar& c) {
    if (c == 0) {
      terms_.clear();
    } else {
      for (auto& [key, coeff] : terms_) coeff *= c;
    }
    return *this;
  }

  friend LinearCombination operator+(LinearCombination a, const LinearCombination& b) { return a += b; }
  friend LinearCombination operator-(LinearCombination a, const LinearCombination& b) { return a -= b; }
  friend LinearCombination operator-(LinearCombination a) { return a *= Scalar(-1); }
  friend LinearCombination operator*(const Scalar& c, LinearCombination a) { return a *= c; }
  friend LinearCombination operator*(LinearCombination a, const Scalar& c) { return a *= c; }
  friend bool operator==(const LinearCombination& a, const LinearCombination& b) { return a.terms_ == b.terms_; }

 private:
  map_type terms_;
};

}  // namespace fva
