#include "fva/scalar.hpp"

namespace fva {

Integer binomial(std::int64_t n, std::int64_t k) {
  if (k < 0) return 0;
  Integer top(static_cast<long>(n));
  Integer result;
  mpz_bin_ui(result.get_mpz_t(), top.get_mpz_t(), static_cast<unsigned long>(k));
  return result;
}

Integer factorial(std::int64_t k) {
  Integer result;
  mpz_fac_ui(result.get_mpz_t(), static_cast<unsigned long>(k));
  return result;
}

Scalar ratio(std::int64_t num, std::int64_t den) {
  Scalar q{Integer(static_cast<long>(num)), Integer(static_cast<long>(den))};
  q.canonicalize();
  return q;
}

std::string to_string(const Scalar& x) { return x.get_str(); }

}  // namespace fva

namespace fva {

std::string format_sum(const std::vector<std::pair<std::string, Scalar>>& terms) {
  if (terms.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [text, c] : terms) {
    if (first) {
      if (c != 1) out += c.get_str() + " * ";
    } else {
      Scalar mag = abs(c);
      out += c < 0 ? " - " : " + ";
      if (mag != 1) out += mag.get_str() + " * ";
    }
    out += text;
    first = false;
  }
  return out;
}

}  // namespace fva
