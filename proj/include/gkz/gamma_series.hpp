// Truncated twisted-power series: bracket series with exact gamma
// coefficients on the normal support {0,1,...,d}, the sigma_a root series,
// and the theta_b combinations, evaluated numerically inside the convergence
// wedge. Curve supports with gaps embed by zeroing the missing coordinates.
#pragma once

#include <map>

#include "gkz/numeric.hpp"

namespace gkz {

// Coefficient table of the twisted power x^{u+v}:
//   1 if v = 0;
//   u(u-1)...(u+v+1) if v < 0;
//   0 if u is a negative integer with u >= -v;
//   1/((u+1)(u+2)...(u+v)) otherwise.
Rational gamma_coeff(const Rational& u, long long v);

// [x^u] = sum over lattice vectors v (kernel of the normal-curve matrix,
// |v_i| <= N for every coordinate) of prod_i gamma_coeff(u_i, v_i) x^{u+v}.
class Bracket {
 public:
  // u over the normal support 0..d (so u.size() == d+1), truncation N >= 0.
  Bracket(std::vector<Rational> u, int N);

  const std::vector<Rational>& exponent() const { return u_; }
  int truncation() const { return trunc_; }
  const std::map<std::vector<long long>, Rational>& terms() const { return terms_; }

  // Principal-branch evaluation at normal-support coordinates; zero middle
  // coordinates are allowed (their negative powers never acquire a nonzero
  // gamma coefficient).
  Cplx eval(const std::vector<Cplx>& coords) const;

 private:
  std::vector<Rational> u_;
  int trunc_;
  std::map<std::vector<long long>, Rational> terms_;
};

// Coordinates of x (living on A's support) on the normal support, zeros at
// the gaps.
std::vector<Cplx> embed_normal(const CurveMatrix& A, const Point& x);

// min over middle j with x_j != 0 of |x_0|^{d-j} |x_d|^j / (M |x_j|^d);
// > 1 means inside the convergence wedge. +inf when every middle coordinate
// vanishes.
double region_margin(const std::vector<Cplx>& normal_coords, double M = 10.0);

// sigma_1 = [x_0^{1/d} x_d^{-1/d}]; sigma_a = (1/d) [x_{a-1} x_0^{(a-d)/d} x_d^{-a/d}]
// for a = 2..d. Truncated at N.
Cplx sigma(long long d, long long a, const std::vector<Cplx>& normal_coords, int N);

// rho_i = sum_{a=1}^d xi_i^a sigma_a with xi_i = exp(i*pi*(2i-1)/d), the d-th
// roots of -1, i = 1..d.
Cplx root_series(long long d, int i, const std::vector<Cplx>& normal_coords, int N);

// theta_b for s factors: sum over (a_1..a_s) in [1,d]^s with
// a_1+...+a_s = b + l*d of (-1)^l sigma_{a_1}...sigma_{a_s}. Satisfies
// sum_i rho_i^s = -d * theta_d.
Cplx theta(long long d, long long b, const std::vector<Cplx>& normal_coords, long long s, int N);

}  // namespace gkz
