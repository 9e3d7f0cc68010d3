// Rational solutions of the hypergeometric system of a monomial curve: the
// polynomial solution phi, the Laurent solutions psi_0 / psi_d, power sums of
// the roots of the generic polynomial, total residues, and basis descriptors
// for each classification scenario.
#pragma once

#include <optional>
#include <vector>

#include "gkz/laurent.hpp"
#include "gkz/semigroup.hpp"

namespace gkz {

// sum over u in N^{m+2} with A*u = alpha of x^u / u!; zero when alpha is
// outside I(A). Lives on the full support.
LaurentPoly phi(const CurveMatrix& A, Exponent alpha);

// All phi(A, (a1, i)) for i = 0..d*a1, built in one enumeration pass.
std::vector<LaurentPoly> phi_row(const CurveMatrix& A, long long a1);

// sum_{r>=1} (-1)^r (r-1)! phi_C(alpha + r*(1,0)) / x_0^r, where phi_C runs
// over the columns {k1..km, d}. Nonzero exactly when some shift lands in the
// C-cone; vanishes whenever a2 < 0.
LaurentPoly psi_0(const CurveMatrix& A, Exponent alpha);

// sum_{r>=1} (-1)^r (r-1)! phi_B(alpha + r*(1,d)) / x_d^r over the columns
// {0, k1..km}; vanishes whenever d*a1 < a2.
LaurentPoly psi_d(const CurveMatrix& A, Exponent alpha);

// psi_0 + psi_d; requires alpha outside I(A) (ExponentInI otherwise).
LaurentPoly psi_total(const CurveMatrix& A, Exponent alpha);

// Closed form of the summed root solutions: sum_j psi_rho_j(alpha) as a
// Laurent polynomial. Equals psi_d - psi_0: the root sum hits the two
// one-sided solutions with opposite signs (p_s/s = psi_d((0,-s)) for s > 0
// but -psi_0((0,-s)) for s < 0, and derivatives preserve the combination).
// Same support and zero set as psi_total since psi_d-monomials carry
// negative x_d-degree and psi_0-monomials nonnegative x_d-degree.
// Requires alpha outside I(A) (ExponentInI otherwise).
LaurentPoly psi_root_sum(const CurveMatrix& A, Exponent alpha);

// p_s = sum_j rho_j(x)^s as a Laurent polynomial: |s| * psi_d((0,-s)) for
// s > 0 and |s| * psi_0((0,-s)) for s < 0. SZero for s == 0.
LaurentPoly power_sum(const CurveMatrix& A, long long s);

// Total residue sum_rho Res_rho(t^b/f dt/t) for weight b >= 1: the zero
// polynomial when 0 < b < d and -psi_d((-1,-b)) when b >= d.
LaurentPoly total_residue_symbolic(const CurveMatrix& A, long long b);

// Basis descriptors. Analytic members are tagged; rational members carry
// their polynomial. Root indices j are 1-based against the deterministic
// root order of the numeric layer; jhat = 1 is the distinguished root.
enum class BasisKind { PhiPoly, PsiZeroPoly, PsiRho, TauRho, Chi };

struct BasisElement {
  BasisKind kind;
  Exponent alpha;
  int j = 0;     // root index for PsiRho / TauRho
  int jhat = 0;  // distinguished root index for TauRho
  std::optional<LaurentPoly> poly;
};

struct BasisDescriptor {
  Scenario scenario;
  int expected_rank;
  std::vector<BasisElement> elements;
};

BasisDescriptor basis_descriptor(const CurveMatrix& A, Exponent alpha);

}  // namespace gkz
