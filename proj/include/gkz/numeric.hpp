// Numeric layer: deterministic root finding for the generic polynomial,
// contour quadrature, evaluation of the analytic solution families
// (psi_rho, tau_rho, chi), and SVD-based rank measurement.
#pragma once

#include <complex>
#include <random>
#include <vector>

#include "gkz/solutions.hpp"

namespace gkz {

using Cplx = std::complex<double>;

struct Tolerances {
  double eps_root = 1e-12;       // relative backward residual bound for roots
  double delta_sep = 1e-6;       // minimum pairwise root separation
  double eps_check = 1e-8;       // quadrature doubling agreement
  double rank_threshold = 1e-8;  // singular value cutoff, relative to sigma_max
  double cut_margin = 0.05;      // angular clearance from the log branch cut
  int quad_min_nodes = 64;
  int quad_max_nodes = 16384;
  int max_iterations = 400;      // simultaneous-iteration cap
};

// Defaults, with every tolerance multiplied by GKZ_TOLERANCE_SCALE when that
// environment variable is set to a positive number.
Tolerances default_tolerances();

// A coefficient point: x_j for j in the support. x_0 and x_d must be nonzero.
struct Point {
  std::vector<long long> support;
  std::vector<Cplx> coords;
};

Point point_for(const CurveMatrix& A, std::vector<Cplx> coords);

struct RootSet {
  std::vector<Cplx> roots;  // sorted by (principal argument, modulus)
  std::vector<Cplx> logs;   // principal branch log of each root
  double residual;          // max relative backward residual of f at the roots
};

// All d roots of f(x;t) = sum_j x_j t^j via Aberth-Ehrlich simultaneous
// iteration with deterministic initialization and ordering. NearSingular when
// roots collide within delta_sep or the iteration fails to converge.
RootSet find_roots(const Point& x, const Tolerances& tol = default_tolerances());

// Discriminant of x_0 + x_k t^k + x_d t^d (one interior generator only):
// d^d x_0^{d-k} x_d^k + (-1)^{d-1} k^k (d-k)^{d-k} x_k^d.
Cplx discriminant_m1(const CurveMatrix& A, const Point& x);

Cplx eval_laurent(const LaurentPoly& p, const Point& x);

// sum_j rho_j^s (SZero for s == 0).
Cplx power_sum_numeric(const Point& x, long long s, const Tolerances& tol = default_tolerances());

// sum over roots of the local residues of t^{b-1} / f^a dt: the residue sum
// over simple poles for a = 1, trapezoidal contour quadrature on root-centered
// circles for a >= 2.
Cplx residue_total_numeric(const Point& x, long long a, long long b,
                           const Tolerances& tol = default_tolerances());

// psi_rho at the j-th root (1-based). For a1 >= 0 this is the finite sum of
// phi((a1,i)) rho^{i-a2}/(i-a2) plus the log term; for a1 < 0 it is the local
// residue representation (-1)^{b1} (b1-1)!/(2 pi i) * contour of
// t^{-a2-1}/f^{b1} with b1 = -a1.
Cplx eval_psi_rho(const CurveMatrix& A, Exponent alpha, const Point& x, int j,
                  const RootSet& roots, const Tolerances& tol = default_tolerances());

// tau at the j-th root relative to the distinguished root jhat; requires
// alpha in I(A), j != jhat. Equals psi_rho(j) - psi_rho(jhat) with the
// recorded log branches.
Cplx eval_tau(const CurveMatrix& A, Exponent alpha, const Point& x, int j, int jhat,
              const RootSet& roots, const Tolerances& tol = default_tolerances());

// chi(alpha) = sum_j psi_j(alpha) log rho_j for a1 >= 0; for a1 < 0 the
// log-weighted contour representation of its derivative definition.
Cplx eval_chi(const CurveMatrix& A, Exponent alpha, const Point& x, const RootSet& roots,
              const Tolerances& tol = default_tolerances());

// |analytic d/dx_ell of psi_rho(alpha) - psi_rho(alpha - A e_ell)| at x, with
// the derivative taken through the closed-form root derivative
// drho/dx_ell = -rho^ell / f'(rho). Requires a1 > 0; ell is a support label.
double derivative_identity_check(const CurveMatrix& A, Exponent alpha, const Point& x, int j,
                                 long long ell, const RootSet& roots,
                                 const Tolerances& tol = default_tolerances());

// Rank of the row-major matrix: number of singular values above
// threshold * sigma_max.
int numeric_rank(const std::vector<std::vector<Cplx>>& rows, double threshold);

// One column per basis element; per point, a row of values followed by rows of
// the analytic partial derivatives with respect to each support variable.
// The two Euler homogeneity relations tie each point block's rows together,
// so a single point contributes at most |support|-1 to the measurable rank;
// callers probing rank R should supply at least ceil(R / (|support|-1))
// points.
std::vector<std::vector<Cplx>> basis_value_matrix(const CurveMatrix& A,
                                                  const BasisDescriptor& basis,
                                                  const std::vector<Point>& points,
                                                  const Tolerances& tol = default_tolerances());

// numeric_rank of basis_value_matrix at the given points.
int realized_rank(const CurveMatrix& A, Exponent alpha, const std::vector<Point>& points,
                  const Tolerances& tol = default_tolerances());

// Deterministic uniform double in [0,1) from the raw generator stream
// (std:: distributions are implementation-defined, these are not).
double uniform01(std::mt19937_64& rng);

// Coefficient point with moduli in [lo, hi], random phases, well-separated
// roots all clear of the negative real axis; resamples until it finds one.
// Narrow bands around 1 keep root moduli near 1, which tames the dynamic
// range of high root powers in rank probes.
Point sample_point_banded(const CurveMatrix& A, std::mt19937_64& rng, double lo, double hi,
                          const Tolerances& tol = default_tolerances());

// sample_point_banded with the default band [0.5, 2].
Point sample_point(const CurveMatrix& A, std::mt19937_64& rng,
                   const Tolerances& tol = default_tolerances());

// The rescaled point (x_0, t^{k_1} x_{k_1}, ..., t^d x_d).
Point torus_scale(const Point& x, Cplx t);

}  // namespace gkz
