#include "gkz/numeric.hpp"

#include <Eigen/Dense>
#include <Eigen/SVD>

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <functional>
#include <numbers>

namespace gkz {

namespace {

constexpr double kPi = std::numbers::pi;

// Dense coefficient vector c[0..d] of f(x;t) = sum_j x_j t^j.
std::vector<Cplx> dense_coeffs(const Point& x) {
  if (x.support.size() != x.coords.size() || x.support.empty())
    throw Error(Errc::SupportMismatch, "point support/coordinate size mismatch");
  const long long d = x.support.back();
  std::vector<Cplx> c(static_cast<size_t>(d) + 1, Cplx(0.0));
  for (size_t i = 0; i < x.support.size(); ++i) c[static_cast<size_t>(x.support[i])] = x.coords[i];
  if (c[0] == Cplx(0.0) || c.back() == Cplx(0.0))
    throw Error(Errc::DivisionByZeroCoordinate, "x_0 and x_d must be nonzero");
  return c;
}

// f(z) and f'(z) by Horner.
std::pair<Cplx, Cplx> eval_poly(const std::vector<Cplx>& c, Cplx z) {
  Cplx f(0.0), fp(0.0);
  for (size_t s = c.size(); s-- > 0;) {
    fp = fp * z + f;
    f = f * z + c[s];
  }
  return {f, fp};
}

// sum_s |c_s| |z|^s, the natural backward-error scale for |f(z)|.
double eval_scale(const std::vector<Cplx>& c, Cplx z) {
  double scale = 0.0, az = std::abs(z);
  for (size_t s = c.size(); s-- > 0;) scale = scale * az + std::abs(c[s]);
  return scale;
}

Cplx ipow(Cplx z, long long e) {
  if (e == 0) return Cplx(1.0);
  if (e < 0) return Cplx(1.0) / ipow(z, -e);
  Cplx r(1.0);
  while (e > 0) {
    if (e & 1) r *= z;
    z *= z;
    e >>= 1;
  }
  return r;
}

double dfactorial(long long n) {
  double r = 1.0;
  for (long long i = 2; i <= n; ++i) r *= static_cast<double>(i);
  return r;
}

// (1 / 2 pi i) * integral of g over the circle |t - center| = radius,
// trapezoidal rule with node doubling until two refinements agree.
Cplx circle_integral(const std::function<Cplx(Cplx)>& g, Cplx center, double radius,
                     const Tolerances& tol) {
  auto pass = [&](int n) {
    Cplx acc(0.0);
    for (int k = 0; k < n; ++k) {
      const double th = 2.0 * kPi * k / n;
      const Cplx w = std::polar(radius, th);
      // dt/dtheta = i w, and 1/(2 pi i) * i * (2 pi / n) = 1/n.
      acc += g(center + w) * w;
    }
    return acc / static_cast<double>(n);
  };
  int n = tol.quad_min_nodes;
  Cplx prev = pass(n);
  while (n < tol.quad_max_nodes) {
    n *= 2;
    const Cplx cur = pass(n);
    if (std::abs(cur - prev) <= tol.eps_check * (1.0 + std::abs(cur))) return cur;
    prev = cur;
  }
  return prev;
}

// Circle radius around roots[j] keeping every other root strictly outside and
// staying away from t = 0. With avoid_log_cut the circle also keeps clear of
// the negative real axis so Log stays on one branch along the contour.
double contour_radius(const std::vector<Cplx>& roots, size_t j, bool avoid_log_cut) {
  const Cplx rho = roots[j];
  double r = std::abs(rho);
  for (size_t i = 0; i < roots.size(); ++i)
    if (i != j) r = std::min(r, std::abs(roots[i] - rho));
  if (avoid_log_cut) {
    const double cut_dist = rho.real() >= 0.0 ? std::abs(rho) : std::abs(rho.imag());
    r = std::min(r, cut_dist);
  }
  return 0.5 * r;
}

void check_root_index(int j, size_t d) {
  if (j < 1 || static_cast<size_t>(j) > d) throw Error(Errc::BadInput, "root index out of range");
}

}  // namespace

Tolerances default_tolerances() {
  static const Tolerances cached = [] {
    Tolerances t;
    if (const char* env = std::getenv("GKZ_TOLERANCE_SCALE")) {
      const double s = std::atof(env);
      if (s > 0.0) {
        t.eps_root *= s;
        t.delta_sep *= s;
        t.eps_check *= s;
        t.rank_threshold *= s;
      }
    }
    return t;
  }();
  return cached;
}

Point point_for(const CurveMatrix& A, std::vector<Cplx> coords) {
  if (coords.size() != static_cast<size_t>(A.n_cols()))
    throw Error(Errc::SupportMismatch, "coordinate count does not match the support");
  return Point{A.support(), std::move(coords)};
}

RootSet find_roots(const Point& x, const Tolerances& tol) {
  const auto c = dense_coeffs(x);
  const size_t d = c.size() - 1;

  // Start on a circle of radius |c_0/c_d|^{1/d} (geometric mean of the root
  // moduli), phases offset by a fixed irrational fraction so no start aligns
  // with a coordinate axis.
  const double r0 = std::pow(std::abs(c[0] / c[d]), 1.0 / static_cast<double>(d));
  std::vector<Cplx> z(d);
  for (size_t k = 0; k < d; ++k)
    z[k] = std::polar(r0, 2.0 * kPi * (static_cast<double>(k) + 0.3819660112501051) /
                              static_cast<double>(d));

  bool converged = false;
  for (int it = 0; it < tol.max_iterations && !converged; ++it) {
    converged = true;
    for (size_t k = 0; k < d; ++k) {
      const auto [f, fp] = eval_poly(c, z[k]);
      if (f == Cplx(0.0)) continue;
      if (fp == Cplx(0.0)) {  // perturb off the critical point
        z[k] += 1e-8 * (1.0 + std::abs(z[k]));
        converged = false;
        continue;
      }
      const Cplx w = f / fp;
      Cplx s(0.0);
      for (size_t i = 0; i < d; ++i)
        if (i != k) s += Cplx(1.0) / (z[k] - z[i]);
      const Cplx denom = Cplx(1.0) - w * s;
      const Cplx corr = denom == Cplx(0.0) ? w : w / denom;
      z[k] -= corr;
      if (std::abs(corr) > 1e-14 * (1.0 + std::abs(z[k]))) converged = false;
    }
  }
  for (size_t k = 0; k < d; ++k) {  // Newton polish
    for (int it = 0; it < 3; ++it) {
      const auto [f, fp] = eval_poly(c, z[k]);
      if (fp == Cplx(0.0)) break;
      z[k] -= f / fp;
    }
  }

  std::sort(z.begin(), z.end(), [](Cplx a, Cplx b) {
    const double aa = std::arg(a), ab = std::arg(b);
    if (aa != ab) return aa < ab;
    return std::abs(a) < std::abs(b);
  });

  RootSet rs;
  rs.roots = std::move(z);
  rs.residual = 0.0;
  for (const Cplx zk : rs.roots) {
    const auto [f, fp] = eval_poly(c, zk);
    (void)fp;
    rs.residual = std::max(rs.residual, std::abs(f) / eval_scale(c, zk));
  }
  if (!converged && rs.residual > tol.eps_root)
    throw Error(Errc::NearSingular, "root iteration did not converge");
  if (rs.residual > tol.eps_root)
    throw Error(Errc::NearSingular, "root residual above tolerance");
  for (size_t i = 0; i < rs.roots.size(); ++i)
    for (size_t j = i + 1; j < rs.roots.size(); ++j)
      if (std::abs(rs.roots[i] - rs.roots[j]) < tol.delta_sep)
        throw Error(Errc::NearSingular, "roots closer than the separation tolerance");
  rs.logs.reserve(rs.roots.size());
  for (const Cplx r : rs.roots) rs.logs.push_back(std::log(r));
  return rs;
}

Cplx discriminant_m1(const CurveMatrix& A, const Point& x) {
  if (A.m() != 1) throw Error(Errc::MNotOne, "discriminant formula needs exactly one middle column");
  const double d = static_cast<double>(A.d());
  const double k = static_cast<double>(A.k()[0]);
  const Cplx x0 = x.coords[0], xk = x.coords[1], xd = x.coords[2];
  const double sign = (A.d() % 2 == 1) ? 1.0 : -1.0;
  return std::pow(d, d) * ipow(x0, A.d() - A.k()[0]) * ipow(xd, A.k()[0]) +
         sign * std::pow(k, k) * std::pow(d - k, d - k) * ipow(xk, A.d());
}

Cplx eval_laurent(const LaurentPoly& p, const Point& x) {
  if (p.support() != x.support) throw Error(Errc::SupportMismatch, "polynomial/point support mismatch");
  Cplx total(0.0);
  for (const auto& [e, coeff] : p.terms()) {
    Cplx term(coeff.get_d());
    for (size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (x.coords[i] == Cplx(0.0)) {
        if (e[i] > 0) {
          term = Cplx(0.0);
          break;
        }
        throw Error(Errc::DivisionByZeroCoordinate, "negative exponent at a zero coordinate");
      }
      term *= ipow(x.coords[i], e[i]);
    }
    total += term;
  }
  return total;
}

Cplx power_sum_numeric(const Point& x, long long s, const Tolerances& tol) {
  if (s == 0) throw Error(Errc::SZero, "power sum exponent must be nonzero");
  const RootSet rs = find_roots(x, tol);
  Cplx acc(0.0);
  for (const Cplx r : rs.roots) acc += ipow(r, s);
  return acc;
}

Cplx residue_total_numeric(const Point& x, long long a, long long b, const Tolerances& tol) {
  if (a < 1) throw Error(Errc::BadInput, "denominator power must be >= 1");
  const RootSet rs = find_roots(x, tol);
  const auto c = dense_coeffs(x);
  if (a == 1) {
    Cplx acc(0.0);
    for (const Cplx r : rs.roots) {
      const auto [f, fp] = eval_poly(c, r);
      (void)f;
      acc += ipow(r, b - 1) / fp;
    }
    return acc;
  }
  auto g = [&](Cplx t) {
    return ipow(t, b - 1) / ipow(eval_poly(c, t).first, a);
  };
  Cplx acc(0.0);
  for (size_t j = 0; j < rs.roots.size(); ++j)
    acc += circle_integral(g, rs.roots[j], contour_radius(rs.roots, j, false), tol);
  return acc;
}

Cplx eval_psi_rho(const CurveMatrix& A, Exponent alpha, const Point& x, int j,
                  const RootSet& roots, const Tolerances& tol) {
  check_root_index(j, roots.roots.size());
  const Cplx rho = roots.roots[static_cast<size_t>(j - 1)];
  if (alpha.a1 >= 0) {
    const auto row = phi_row(A, alpha.a1);
    Cplx acc(0.0);
    for (long long i = 0; i < static_cast<long long>(row.size()); ++i) {
      if (i == alpha.a2) continue;
      if (row[static_cast<size_t>(i)].is_zero()) continue;
      acc += eval_laurent(row[static_cast<size_t>(i)], x) * ipow(rho, i - alpha.a2) /
             static_cast<double>(i - alpha.a2);
    }
    if (alpha.a2 >= 0 && alpha.a2 < static_cast<long long>(row.size()))
      acc += eval_laurent(row[static_cast<size_t>(alpha.a2)], x) * roots.logs[static_cast<size_t>(j - 1)];
    return acc;
  }
  const long long b1 = -alpha.a1;
  const auto c = dense_coeffs(x);
  const double sign = (b1 % 2 == 0) ? 1.0 : -1.0;
  auto g = [&](Cplx t) { return ipow(t, -alpha.a2 - 1) / ipow(eval_poly(c, t).first, b1); };
  const size_t idx = static_cast<size_t>(j - 1);
  return sign * dfactorial(b1 - 1) *
         circle_integral(g, roots.roots[idx], contour_radius(roots.roots, idx, false), tol);
}

Cplx eval_tau(const CurveMatrix& A, Exponent alpha, const Point& x, int j, int jhat,
              const RootSet& roots, const Tolerances& tol) {
  check_root_index(j, roots.roots.size());
  check_root_index(jhat, roots.roots.size());
  if (j == jhat) throw Error(Errc::SameRoot, "tau needs two distinct roots");
  if (!in_I(A, alpha)) throw Error(Errc::NotInI, "tau is defined for semigroup exponents");
  return eval_psi_rho(A, alpha, x, j, roots, tol) - eval_psi_rho(A, alpha, x, jhat, roots, tol);
}

Cplx eval_chi(const CurveMatrix& A, Exponent alpha, const Point& x, const RootSet& roots,
              const Tolerances& tol) {
  if (alpha.a1 >= 0) {
    Cplx acc(0.0);
    for (size_t j = 0; j < roots.roots.size(); ++j)
      acc += eval_psi_rho(A, alpha, x, static_cast<int>(j + 1), roots, tol) * roots.logs[j];
    return acc;
  }
  const long long b1 = -alpha.a1;
  const double s = static_cast<double>(alpha.a2 != 0 ? -alpha.a2 : -A.k()[0]);
  const auto c = dense_coeffs(x);
  const double sign = (b1 % 2 == 0) ? 1.0 : -1.0;
  auto g = [&](Cplx t) {
    return (std::log(t) + 1.0 / s) * ipow(t, -alpha.a2 - 1) / ipow(eval_poly(c, t).first, b1);
  };
  Cplx acc(0.0);
  for (size_t j = 0; j < roots.roots.size(); ++j)
    acc += circle_integral(g, roots.roots[j], contour_radius(roots.roots, j, true), tol);
  return sign * dfactorial(b1 - 1) * acc;
}

double derivative_identity_check(const CurveMatrix& A, Exponent alpha, const Point& x, int j,
                                 long long ell, const RootSet& roots, const Tolerances& tol) {
  check_root_index(j, roots.roots.size());
  if (alpha.a1 <= 0) throw Error(Errc::BadInput, "derivative check needs a1 > 0");
  const auto pos = A.position_of(ell);
  (void)pos;
  const Cplx rho = roots.roots[static_cast<size_t>(j - 1)];
  const auto c = dense_coeffs(x);
  const Cplx fprime = eval_poly(c, rho).second;
  const Cplx drho = -ipow(rho, ell) / fprime;

  // Differentiate the a1 >= 0 series term by term: each coefficient
  // phi((a1,i)) is a Laurent polynomial in x, and rho depends on x through
  // the closed-form root derivative.
  const auto row = phi_row(A, alpha.a1);
  Cplx lhs(0.0);
  for (long long i = 0; i < static_cast<long long>(row.size()); ++i) {
    const auto& p = row[static_cast<size_t>(i)];
    if (p.is_zero()) continue;
    const Cplx pv = eval_laurent(p, x);
    const Cplx dpv = eval_laurent(p.derivative(ell), x);
    if (i == alpha.a2) {
      lhs += dpv * roots.logs[static_cast<size_t>(j - 1)] + pv * drho / rho;
    } else {
      const double den = static_cast<double>(i - alpha.a2);
      lhs += dpv * ipow(rho, i - alpha.a2) / den + pv * ipow(rho, i - alpha.a2 - 1) * drho;
    }
  }
  const Cplx rhs = eval_psi_rho(A, Exponent{alpha.a1 - 1, alpha.a2 - ell}, x, j, roots, tol);
  return std::abs(lhs - rhs);
}

int numeric_rank(const std::vector<std::vector<Cplx>>& rows, double threshold) {
  if (rows.empty()) return 0;
  Eigen::MatrixXcd mat(static_cast<Eigen::Index>(rows.size()),
                       static_cast<Eigen::Index>(rows[0].size()));
  for (size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != rows[0].size())
      throw Error(Errc::BadInput, "ragged matrix");
    for (size_t cidx = 0; cidx < rows[r].size(); ++cidx)
      mat(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(cidx)) = rows[r][cidx];
  }
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(mat);
  const auto& sv = svd.singularValues();
  if (sv.size() == 0) return 0;
  const double smax = sv(0);
  if (smax == 0.0) return 0;
  int rank = 0;
  for (Eigen::Index i = 0; i < sv.size(); ++i)
    if (sv(i) / smax > threshold) ++rank;
  return rank;
}

namespace {

// Value of one basis element at a point, or of its partial derivative with
// respect to the support variable labeled ell (ell < 0 means plain value).
Cplx element_value(const CurveMatrix& A, const BasisElement& e, const Point& x,
                   const RootSet& roots, long long ell, const Tolerances& tol) {
  switch (e.kind) {
    case BasisKind::PhiPoly:
    case BasisKind::PsiZeroPoly:
      return ell < 0 ? eval_laurent(*e.poly, x) : eval_laurent(e.poly->derivative(ell), x);
    case BasisKind::PsiRho: {
      const Exponent a = ell < 0 ? e.alpha : Exponent{e.alpha.a1 - 1, e.alpha.a2 - ell};
      return eval_psi_rho(A, a, x, e.j, roots, tol);
    }
    case BasisKind::TauRho: {
      const Exponent a = ell < 0 ? e.alpha : Exponent{e.alpha.a1 - 1, e.alpha.a2 - ell};
      return eval_psi_rho(A, a, x, e.j, roots, tol) - eval_psi_rho(A, a, x, e.jhat, roots, tol);
    }
    case BasisKind::Chi: {
      const Exponent a = ell < 0 ? e.alpha : Exponent{e.alpha.a1 - 1, e.alpha.a2 - ell};
      return eval_chi(A, a, x, roots, tol);
    }
  }
  throw Error(Errc::BadInput, "unknown basis element kind");
}

}  // namespace

std::vector<std::vector<Cplx>> basis_value_matrix(const CurveMatrix& A,
                                                  const BasisDescriptor& basis,
                                                  const std::vector<Point>& points,
                                                  const Tolerances& tol) {
  std::vector<std::vector<Cplx>> rows;
  const auto support = A.support();
  for (const Point& x : points) {
    const RootSet roots = find_roots(x, tol);
    std::vector<std::vector<Cplx>> block(support.size() + 1,
                                         std::vector<Cplx>(basis.elements.size()));
    for (size_t col = 0; col < basis.elements.size(); ++col) {
      const auto& e = basis.elements[col];
      block[0][col] = element_value(A, e, x, roots, -1, tol);
      for (size_t s = 0; s < support.size(); ++s)
        block[s + 1][col] = element_value(A, e, x, roots, support[s], tol);
    }
    for (auto& r : block) rows.push_back(std::move(r));
  }
  return rows;
}

int realized_rank(const CurveMatrix& A, Exponent alpha, const std::vector<Point>& points,
                  const Tolerances& tol) {
  const BasisDescriptor basis = basis_descriptor(A, alpha);
  auto rows = basis_value_matrix(A, basis, points, tol);
  // Equilibrate before the SVD: root powers make raw row/column magnitudes
  // span many decades at larger d, which masks genuine dependencies behind
  // the relative rank threshold. Diagonal scaling preserves rank.
  for (auto& row : rows) {
    double m = 0.0;
    for (const Cplx v : row) m = std::max(m, std::abs(v));
    if (m > 0.0)
      for (Cplx& v : row) v /= m;
  }
  if (!rows.empty())
    for (size_t c = 0; c < rows.front().size(); ++c) {
      double m = 0.0;
      for (const auto& row : rows) m = std::max(m, std::abs(row[c]));
      if (m > 0.0)
        for (auto& row : rows) row[c] /= m;
    }
  return numeric_rank(rows, tol.rank_threshold);
}

double uniform01(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

Point sample_point_banded(const CurveMatrix& A, std::mt19937_64& rng, double lo, double hi,
                          const Tolerances& tol) {
  for (int attempt = 0; attempt < 256; ++attempt) {
    std::vector<Cplx> coords;
    coords.reserve(static_cast<size_t>(A.n_cols()));
    for (int i = 0; i < A.n_cols(); ++i) {
      const double modulus = lo + (hi - lo) * uniform01(rng);
      const double phase = 2.0 * kPi * uniform01(rng);
      coords.push_back(std::polar(modulus, phase));
    }
    Point x{A.support(), std::move(coords)};
    RootSet rs;
    try {
      rs = find_roots(x, tol);
    } catch (const Error& err) {
      if (err.code() == Errc::NearSingular) continue;
      throw;
    }
    bool clear = true;
    for (const Cplx r : rs.roots)
      if (kPi - std::abs(std::arg(r)) < tol.cut_margin) clear = false;
    if (clear) return x;
  }
  throw Error(Errc::NearSingular, "no well-conditioned sample point found");
}

Point sample_point(const CurveMatrix& A, std::mt19937_64& rng, const Tolerances& tol) {
  return sample_point_banded(A, rng, 0.5, 2.0, tol);
}

Point torus_scale(const Point& x, Cplx t) {
  Point y = x;
  for (size_t i = 0; i < y.support.size(); ++i) y.coords[i] *= ipow(t, y.support[i]);
  return y;
}

}  // namespace gkz
