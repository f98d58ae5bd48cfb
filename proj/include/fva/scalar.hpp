#pragma once

#include <cstdint>
#include <string>

#include <gmpxx.h>

namespace fva {

/// Exact rational coefficient. GMP keeps it canonical (lowest terms, positive denominator).
using Scalar = mpq_class;
using Integer = mpz_class;

/// Generalized binomial coefficient n(n-1)...(n-k+1)/k!, valid for negative n. Zero for k < 0.
Integer binomial(std::int64_t n, std::int64_t k);

/// k! as an exact integer.
Integer factorial(std::int64_t k);

/// num/den in lowest terms. den must be nonzero.
Scalar ratio(std::int64_t num, std::int64_t den);

inline Scalar sign_power(std::int64_t e) { return (e % 2 == 0) ? Scalar(1) : Scalar(-1); }

std::string to_string(const Scalar& x);

}  // namespace fva

#include <utility>
#include <vector>

namespace fva {

/// Renders sum_i c_i * t_i as "t1 - 2 * t2 + 1/2 * t3"; a leading -1 is kept explicit ("-1 * t").
std::string format_sum(const std::vector<std::pair<std::string, Scalar>>& terms);

}  // namespace fva
