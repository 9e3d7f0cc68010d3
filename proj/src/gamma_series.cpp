#include "gkz/gamma_series.hpp"

#include <cmath>
#include <limits>

namespace gkz {

Rational gamma_coeff(const Rational& u, long long v) {
  if (v == 0) return 1;
  if (v < 0) {
    Rational prod = 1;
    for (long long i = 0; i > v; --i) prod *= u + rational_of(i);
    return prod;
  }
  if (u.get_den() == 1 && u < 0 && u >= rational_of(-v)) return 0;
  Rational prod = 1;
  for (long long i = 1; i <= v; ++i) prod *= u + rational_of(i);
  return 1 / prod;
}

Bracket::Bracket(std::vector<Rational> u, int N) : u_(std::move(u)), trunc_(N) {
  if (u_.size() < 2 || N < 0) throw Error(Errc::BadInput, "bracket needs d >= 1 and N >= 0");
  const long long d = static_cast<long long>(u_.size()) - 1;

  // Kernel of [[1,...,1],[0,1,...,d]]: sweep the middle coordinates, then
  // v_d = -(sum j*w_j)/d and v_0 = -(sum w_j + v_d) are forced.
  std::vector<long long> w(static_cast<size_t>(d) - 1, -N);
  const size_t mid = w.size();
  while (true) {
    long long sum = 0, wsum = 0;
    for (size_t j = 0; j < mid; ++j) {
      sum += w[j];
      wsum += static_cast<long long>(j + 1) * w[j];
    }
    if (wsum % d == 0) {
      const long long vd = -wsum / d;
      const long long v0 = -(sum + vd);
      if (std::abs(vd) <= trunc_ && std::abs(v0) <= trunc_) {
        std::vector<long long> v;
        v.reserve(static_cast<size_t>(d) + 1);
        v.push_back(v0);
        for (long long wj : w) v.push_back(wj);
        v.push_back(vd);
        Rational c = 1;
        for (size_t i = 0; i < v.size() && c != 0; ++i) c *= gamma_coeff(u_[i], v[i]);
        if (c != 0) terms_.emplace(std::move(v), std::move(c));
      }
    }
    size_t pos = 0;
    while (pos < mid && w[pos] == N) w[pos++] = -N;
    if (pos == mid) break;
    ++w[pos];
  }
  if (mid == 0) {  // d == 1: the kernel is trivial
    std::vector<long long> v{0, 0};
    terms_.emplace(std::move(v), Rational(1));
  }
}

Cplx Bracket::eval(const std::vector<Cplx>& coords) const {
  if (coords.size() != u_.size())
    throw Error(Errc::SupportMismatch, "bracket evaluation needs normal-support coordinates");
  Cplx total(0.0);
  for (const auto& [v, c] : terms_) {
    Cplx term(c.get_d());
    for (size_t i = 0; i < v.size() && term != Cplx(0.0); ++i) {
      const Rational e = u_[i] + rational_of(v[i]);
      if (e == 0) continue;
      if (coords[i] == Cplx(0.0)) {
        if (e > 0) {
          term = Cplx(0.0);
          break;
        }
        throw Error(Errc::DivisionByZeroCoordinate, "negative power of a zero coordinate");
      }
      if (e.get_den() == 1) {
        term *= std::pow(coords[i], Cplx(static_cast<double>(e.get_num().get_si()), 0.0));
      } else {
        term *= std::pow(coords[i], Cplx(e.get_d(), 0.0));
      }
    }
    total += term;
  }
  return total;
}

std::vector<Cplx> embed_normal(const CurveMatrix& A, const Point& x) {
  if (x.support != A.support() || x.coords.size() != x.support.size())
    throw Error(Errc::SupportMismatch, "point does not live on the curve support");
  std::vector<Cplx> full(static_cast<size_t>(A.d()) + 1, Cplx(0.0));
  for (size_t i = 0; i < x.support.size(); ++i)
    full[static_cast<size_t>(x.support[i])] = x.coords[i];
  return full;
}

double region_margin(const std::vector<Cplx>& normal_coords, double M) {
  const long long d = static_cast<long long>(normal_coords.size()) - 1;
  const double a0 = std::abs(normal_coords.front());
  const double ad = std::abs(normal_coords.back());
  double margin = std::numeric_limits<double>::infinity();
  for (long long j = 1; j < d; ++j) {
    const double aj = std::abs(normal_coords[static_cast<size_t>(j)]);
    if (aj == 0.0) continue;
    margin = std::min(margin, std::pow(a0, static_cast<double>(d - j)) *
                                  std::pow(ad, static_cast<double>(j)) /
                                  (M * std::pow(aj, static_cast<double>(d))));
  }
  return margin;
}

Cplx sigma(long long d, long long a, const std::vector<Cplx>& normal_coords, int N) {
  if (a < 1 || a > d) throw Error(Errc::BadInput, "sigma index must lie in 1..d");
  std::vector<Rational> u(static_cast<size_t>(d) + 1, Rational(0));
  if (a == 1) {
    u.front() = rational_of(1, d);
    u.back() = rational_of(-1, d);
    return Bracket(std::move(u), N).eval(normal_coords);
  }
  u[static_cast<size_t>(a - 1)] = 1;
  u.front() = rational_of(a - d, d);
  u.back() = rational_of(-a, d);
  return Bracket(std::move(u), N).eval(normal_coords) / static_cast<double>(d);
}

Cplx root_series(long long d, int i, const std::vector<Cplx>& normal_coords, int N) {
  if (i < 1 || i > d) throw Error(Errc::BadInput, "root index must lie in 1..d");
  constexpr double kPi = 3.141592653589793238462643383279502884;
  const Cplx xi = std::polar(1.0, kPi * (2.0 * i - 1.0) / static_cast<double>(d));
  Cplx acc(0.0);
  Cplx xipow(1.0);
  for (long long a = 1; a <= d; ++a) {
    xipow *= xi;
    acc += xipow * sigma(d, a, normal_coords, N);
  }
  return acc;
}

Cplx theta(long long d, long long b, const std::vector<Cplx>& normal_coords, long long s, int N) {
  if (b < 1 || b > d || s < 1) throw Error(Errc::BadInput, "theta needs 1 <= b <= d and s >= 1");
  std::vector<Cplx> sig(static_cast<size_t>(d) + 1, Cplx(0.0));
  for (long long a = 1; a <= d; ++a) sig[static_cast<size_t>(a)] = sigma(d, a, normal_coords, N);

  // s-fold convolution power of sum_a sigma_a z^a, tracked by total degree.
  std::vector<Cplx> conv{Cplx(1.0)};
  for (long long rep = 0; rep < s; ++rep) {
    std::vector<Cplx> next(conv.size() + static_cast<size_t>(d), Cplx(0.0));
    for (size_t n = 0; n < conv.size(); ++n) {
      if (conv[n] == Cplx(0.0)) continue;
      for (long long a = 1; a <= d; ++a)
        next[n + static_cast<size_t>(a)] += conv[n] * sig[static_cast<size_t>(a)];
    }
    conv = std::move(next);
  }

  Cplx acc(0.0);
  double sign = 1.0;
  for (long long n = b; n < static_cast<long long>(conv.size()); n += d) {
    acc += sign * conv[static_cast<size_t>(n)];
    sign = -sign;
  }
  return acc;
}

}  // namespace gkz
