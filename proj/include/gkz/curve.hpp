// Monomial-curve data: the 2x(m+2) exponent matrix, its kernel lattice, and duality.
#pragma once

#include <optional>
#include <vector>

#include "gkz/errors.hpp"

namespace gkz {

// Bidegree / exponent pair (a1, a2) paired against the two matrix rows.
struct Exponent {
  long long a1 = 0;
  long long a2 = 0;
  friend bool operator==(const Exponent&, const Exponent&) = default;
  friend auto operator<=>(const Exponent&, const Exponent&) = default;
};

using LatticeVector = std::vector<long long>;  // entries in support order
using NVector = std::vector<long long>;        // nonnegative witness, support order

// The matrix with rows (1,...,1) and (0, k1, ..., km, d) for a monomial curve
// t -> (t^0 x0 : ... : t^d xd) slice; columns are indexed by the support
// {0, k1, ..., km, d} with 0 < k1 < ... < km < d and gcd(k1,...,km,d) = 1.
class CurveMatrix {
 public:
  CurveMatrix(std::vector<long long> k, long long d);

  long long d() const { return d_; }
  const std::vector<long long>& k() const { return k_; }
  int m() const { return static_cast<int>(k_.size()); }
  int n_cols() const { return m() + 2; }
  // {0, k1, ..., km, d}; column i of the matrix is (1, support[i]).
  const std::vector<long long>& support() const { return support_; }
  // weights of the submatrix over columns {0, k1, ..., km}
  std::vector<long long> support_B() const;
  // weights of the submatrix over columns {k1, ..., km, d}
  std::vector<long long> support_C() const;

  // position of a support value, or nullopt
  std::optional<int> position_of(long long label) const;

  Exponent apply(const LatticeVector& u) const;  // A*u as an exponent pair

  friend bool operator==(const CurveMatrix&, const CurveMatrix&) = default;

 private:
  std::vector<long long> k_;
  long long d_;
  std::vector<long long> support_;
};

// Divides generators and d by their common gcd (opt-in normalization for
// inputs rejected by the constructor's gcd check).
std::pair<std::vector<long long>, long long> reduce_by_gcd(std::vector<long long> k, long long d);

// All nonzero v with A*v = 0 and max|v_i| <= bound, one representative per
// +-pair (first nonzero entry positive), sorted lexicographically.
std::vector<LatticeVector> kernel_vectors(const CurveMatrix& A, long long bound);

// The distinguished kernel vectors (d-k_i) e_0 - d e_{k_i} + k_i e_d, i=1..m.
std::vector<LatticeVector> omega_vectors(const CurveMatrix& A);

// Dual curve: generators l_j = d - k_{m-j+1}, same d.
CurveMatrix dualize(const CurveMatrix& A);

// Exponent transform matching dualize: (a1, a2) -> (a1, d*a1 - a2). Involutive.
Exponent dual_exponent(const CurveMatrix& A, Exponent alpha);

}  // namespace gkz
