// Sparse Laurent polynomials with exact rational coefficients over the
// variables x_j, j in a curve support, plus the differential operators the
// hypergeometric system is built from.
#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gkz/curve.hpp"
#include "gkz/rational.hpp"

namespace gkz {

using ExpVec = std::vector<long long>;  // monomial exponents, support order

class LaurentPoly {
 public:
  LaurentPoly() = default;
  explicit LaurentPoly(std::vector<long long> support) : support_(std::move(support)) {}

  static LaurentPoly monomial(std::vector<long long> support, ExpVec e, Rational c);

  const std::vector<long long>& support() const { return support_; }
  // term map is the canonical form: ascending lexicographic exponents,
  // no zero coefficients
  const std::map<ExpVec, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  size_t num_terms() const { return terms_.size(); }
  Rational coeff(const ExpVec& e) const;

  void add_term(const ExpVec& e, const Rational& c);  // accumulate, drop zeros

  LaurentPoly& operator+=(const LaurentPoly& q);
  LaurentPoly& operator-=(const LaurentPoly& q);
  friend LaurentPoly operator+(LaurentPoly p, const LaurentPoly& q) { return p += q; }
  friend LaurentPoly operator-(LaurentPoly p, const LaurentPoly& q) { return p -= q; }
  friend LaurentPoly operator*(const LaurentPoly& p, const LaurentPoly& q);
  LaurentPoly operator-() const;
  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

  LaurentPoly scaled(const Rational& c) const;

  // d/dx_j by support position / by variable label (the support value).
  LaurentPoly derivative_pos(size_t pos) const;
  LaurentPoly derivative(long long label) const;

  // Product of partial derivatives: prod_i (d/dx_i)^{u_i}.
  LaurentPoly apply_D(const NVector& u) const;

  std::string to_string() const;  // human-readable, canonical term order

 private:
  void check_same_support(const LaurentPoly& q) const;

  std::vector<long long> support_;
  std::map<ExpVec, Rational> terms_;
};

// Box operator for a kernel vector v (checked against the support rows):
// prod_{v_j>0} d^{v_j}/dx_j - prod_{v_j<0} d^{-v_j}/dx_j applied to p.
LaurentPoly apply_box(const LaurentPoly& p, const LatticeVector& v);

// Residuals of the two homogeneity operators at exponent alpha:
// sum_j x_j dp/dx_j - a1*p and sum_j label_j x_j dp/dx_j - a2*p.
std::pair<LaurentPoly, LaurentPoly> apply_euler(const LaurentPoly& p, Exponent alpha);

// Common bidegree (sum e_i, sum label_i e_i) of all monomials; nullopt for the
// zero polynomial or a non-bihomogeneous one.
std::optional<Exponent> bidegree(const LaurentPoly& p);

// Variable swap x_s -> y_{d-s} onto the dual support (an involution).
LaurentPoly dualize_poly(const CurveMatrix& A, const LaurentPoly& p);

}  // namespace gkz
