#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>
#include <vector>

#include "gkz/gamma_series.hpp"

using namespace gkz;

namespace {

constexpr double kPi = 3.14159265358979323846;

double matched_root_error(const std::vector<Cplx>& series, const std::vector<Cplx>& exact) {
  double worst = 0.0;
  for (const Cplx s : series) {
    double best = 1e300;
    for (const Cplx e : exact) best = std::min(best, std::abs(s - e));
    worst = std::max(worst, best);
  }
  return worst;
}

std::vector<Cplx> all_root_series(long long d, const std::vector<Cplx>& coords, int N) {
  std::vector<Cplx> out;
  for (int i = 1; i <= static_cast<int>(d); ++i) out.push_back(root_series(d, i, coords, N));
  return out;
}

}  // namespace

TEST_CASE("gamma coefficient table") {
  CHECK(gamma_coeff(Rational(5), 0) == Rational(1));
  CHECK(gamma_coeff(rational_of(1, 2), 0) == Rational(1));
  CHECK(gamma_coeff(Rational(-3), 0) == Rational(1));

  // negative shift: falling factorial u(u-1)...(u+v+1)
  CHECK(gamma_coeff(rational_of(1, 2), -2) == rational_of(-1, 4));
  CHECK(gamma_coeff(Rational(2), -3) == Rational(0));   // hits the factor 0
  CHECK(gamma_coeff(Rational(0), -1) == Rational(0));
  CHECK(gamma_coeff(Rational(0), -2) == Rational(0));
  CHECK(gamma_coeff(Rational(3), -2) == Rational(6));

  // positive shift: 1 / ((u+1)...(u+v)), zero when a factor vanishes
  CHECK(gamma_coeff(Rational(0), 1) == Rational(1));
  CHECK(gamma_coeff(rational_of(1, 2), 1) == rational_of(2, 3));
  CHECK(gamma_coeff(Rational(-1), 1) == Rational(0));
  CHECK(gamma_coeff(Rational(-2), 3) == Rational(0));
  CHECK(gamma_coeff(Rational(-3), 2) == rational_of(1, 2));  // -3 < -v, stays nonzero
}

TEST_CASE("sigma_2 for quadratics is exactly x1 / (2 x2)") {
  const std::vector<Cplx> coords{Cplx(1.0), Cplx(0.3, 0.1), Cplx(0.9, -0.2)};
  for (int N : {2, 6, 12}) {
    const Cplx s2 = sigma(2, 2, coords, N);
    CHECK(std::abs(s2 - coords[1] / (2.0 * coords[2])) < 1e-15);
  }
}

TEST_CASE("quadratic root expansion near the binomial point") {
  const double eps = 0.01;
  const std::vector<Cplx> coords{Cplx(1.0), Cplx(eps), Cplx(1.0)};
  const Cplx s1 = sigma(2, 1, coords, 10);
  CHECK(std::abs(s1 - Cplx(1.0 - eps * eps / 8.0)) < 1e-7);

  // the two series roots against the quadratic formula
  const Cplx sq = std::sqrt(Cplx(eps * eps - 4.0));
  const std::vector<Cplx> exact{(-eps + sq) / 2.0, (-eps - sq) / 2.0};
  CHECK(matched_root_error(all_root_series(2, coords, 12), exact) < 1e-10);
}

TEST_CASE("binomial points are summed exactly") {
  // x = (1, 0, ..., 0, 1): every middle term of sigma vanishes, so
  // sigma_1 = 1, sigma_a = 0 for a >= 2, and rho_i = xi_i on the nose.
  for (long long d : {2LL, 3LL, 4LL, 5LL}) {
    std::vector<Cplx> coords(static_cast<size_t>(d) + 1, Cplx(0.0));
    coords.front() = Cplx(1.0);
    coords.back() = Cplx(1.0);
    CHECK(std::abs(sigma(d, 1, coords, 8) - Cplx(1.0)) < 1e-15);
    for (long long a = 2; a <= d; ++a) CHECK(std::abs(sigma(d, a, coords, 8)) < 1e-15);
    for (int i = 1; i <= static_cast<int>(d); ++i) {
      const Cplx xi = std::polar(1.0, kPi * (2.0 * i - 1.0) / static_cast<double>(d));
      CHECK(std::abs(root_series(d, i, coords, 8) - xi) < 1e-14);
    }
  }
}

TEST_CASE("series roots match the iterated roots") {
  // normal supports, unit outer coordinates, small middles
  for (long long d : {2LL, 3LL, 4LL}) {
    std::vector<long long> k;
    for (long long i = 1; i < d; ++i) k.push_back(i);
    CurveMatrix A(k, d);
    std::vector<Cplx> coords(static_cast<size_t>(d) + 1);
    coords.front() = std::polar(1.0, 0.3);
    coords.back() = std::polar(1.0, -0.7);
    for (long long j = 1; j < d; ++j)
      coords[static_cast<size_t>(j)] = std::polar(0.05, 0.1 * static_cast<double>(j));
    CHECK(region_margin(coords) > 1.0);

    std::vector<Cplx> curve_coords = coords;  // normal support == curve support
    const RootSet rs = find_roots(point_for(A, curve_coords));
    CHECK(matched_root_error(all_root_series(d, coords, 12), rs.roots) < 1e-6);

    for (long long s = 1; s <= 3; ++s) {
      const Cplx lhs = -static_cast<double>(d) * theta(d, d, coords, s, 12);
      const Cplx rhs = eval_laurent(power_sum(A, s), point_for(A, curve_coords));
      CHECK(std::abs(lhs - rhs) < 1e-6);
    }
  }
}

TEST_CASE("theta with one factor reduces to sigma") {
  const std::vector<Cplx> coords{Cplx(1.0), Cplx(0.05), Cplx(0.02, 0.01), Cplx(1.0)};
  for (long long b = 1; b <= 3; ++b)
    CHECK(std::abs(theta(3, b, coords, 1, 10) - sigma(3, b, coords, 10)) < 1e-15);
  CHECK_THROWS_AS(theta(3, 0, coords, 1, 10), Error);
  CHECK_THROWS_AS(theta(3, 4, coords, 1, 10), Error);
  CHECK_THROWS_AS(sigma(3, 4, coords, 10), Error);
}

TEST_CASE("bracket refinement is monotone and convergent") {
  const std::vector<Rational> u{rational_of(1, 2), Rational(0), rational_of(-1, 2)};
  const Bracket b4(u, 4), b5(u, 5);
  for (const auto& [v, c] : b4.terms()) {
    const auto it = b5.terms().find(v);
    REQUIRE(it != b5.terms().end());
    CHECK(it->second == c);  // refinement only adds terms
  }
  CHECK(b5.terms().size() >= b4.terms().size());

  const std::vector<Cplx> coords{Cplx(1.0), Cplx(0.05, 0.02), Cplx(1.0)};
  const Bracket b8(u, 8), b12(u, 12);
  CHECK(std::abs(b8.eval(coords) - b12.eval(coords)) < 1e-10);

  CHECK_THROWS_AS(Bracket(u, -1), Error);
  CHECK_THROWS_AS(Bracket(std::vector<Rational>{Rational(1)}, 2), Error);
}

TEST_CASE("convergence region margin") {
  const std::vector<Cplx> pure{Cplx(1.0), Cplx(0.0), Cplx(1.0)};
  CHECK(std::isinf(region_margin(pure)));

  const std::vector<Cplx> in{Cplx(1.0), Cplx(0.05), Cplx(1.0)};
  CHECK(region_margin(in) == doctest::Approx(1.0 / (10.0 * 0.05 * 0.05)));

  const std::vector<Cplx> out{Cplx(1.0), Cplx(2.0), Cplx(1.0)};
  CHECK(region_margin(out) < 1.0);

  // custom mass constant
  CHECK(region_margin(in, 400.0) == doctest::Approx(1.0));
}

TEST_CASE("gapped supports embed into the normal support") {
  CurveMatrix A({1, 3}, 4);
  const Point x =
      point_for(A, {std::polar(1.0, 0.2), Cplx(0.05), Cplx(0.04, 0.02), std::polar(1.0, -0.4)});
  const std::vector<Cplx> emb = embed_normal(A, x);
  REQUIRE(emb.size() == 5);
  CHECK(emb[0] == x.coords[0]);
  CHECK(emb[1] == x.coords[1]);
  CHECK(emb[2] == Cplx(0.0));
  CHECK(emb[3] == x.coords[2]);
  CHECK(emb[4] == x.coords[3]);

  const RootSet rs = find_roots(x);
  CHECK(matched_root_error(all_root_series(4, emb, 14), rs.roots) < 1e-6);
}
