#include "fva/linalg.hpp"

#include <Eigen/Core>

namespace Eigen {

template <>
struct NumTraits<mpz_class> : GenericNumTraits<mpz_class> {
  using Real = mpz_class;
  using NonInteger = mpq_class;
  using Nested = mpz_class;
  using Literal = mpz_class;
  static inline Real epsilon() { return 0; }
  static inline Real dummy_precision() { return 0; }
  static inline int digits10() { return 0; }
  static inline int max_digits10() { return 0; }
  enum {
    IsInteger = 1,
    IsSigned = 1,
    IsComplex = 0,
    RequireInitialization = 1,
    ReadCost = 6,
    AddCost = 150,
    MulCost = 100
  };
};

}  // namespace Eigen

namespace fva {

std::size_t integer_rank(std::vector<std::vector<Integer>> rows, std::size_t ncols) {
  using Matrix = Eigen::Matrix<mpz_class, Eigen::Dynamic, Eigen::Dynamic>;
  const auto nrows = static_cast<Eigen::Index>(rows.size());
  const auto nc = static_cast<Eigen::Index>(ncols);
  Matrix m(nrows, nc);
  for (Eigen::Index i = 0; i < nrows; ++i)
    for (Eigen::Index j = 0; j < nc; ++j) m(i, j) = rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];

  // Bareiss elimination: every entry stays a minor of the input, so the division is exact.
  Eigen::Index rank = 0;
  mpz_class prev = 1;
  mpz_class t;
  for (Eigen::Index col = 0; col < nc && rank < nrows; ++col) {
    Eigen::Index pivot = rank;
    while (pivot < nrows && m(pivot, col) == 0) ++pivot;
    if (pivot == nrows) continue;
    if (pivot != rank) m.row(pivot).swap(m.row(rank));
    for (Eigen::Index i = rank + 1; i < nrows; ++i) {
      for (Eigen::Index j = col + 1; j < nc; ++j) {
        t = m(rank, col) * m(i, j);
        t -= m(i, col) * m(rank, j);
        mpz_divexact(m(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      m(i, col) = 0;
    }
    prev = m(rank, col);
    ++rank;
  }
  return static_cast<std::size_t>(rank);
}

}  // namespace fva
