#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <vector>

#include "gkz/solutions.hpp"

using namespace gkz;

namespace {

LaurentPoly mono(const CurveMatrix& A, ExpVec e, const Rational& c) {
  return LaurentPoly::monomial(A.support(), std::move(e), c);
}

// Independent oracle: odometer over {0..a1}^n instead of the library's
// recursive composition enumerator.
LaurentPoly phi_oracle(const CurveMatrix& A, Exponent alpha) {
  LaurentPoly p(A.support());
  if (alpha.a1 < 0) return p;
  const size_t n = A.support().size();
  ExpVec u(n, 0);
  while (true) {
    long long count = 0, weight = 0;
    for (size_t i = 0; i < n; ++i) {
      count += u[i];
      weight += A.support()[i] * u[i];
    }
    if (count == alpha.a1 && weight == alpha.a2) {
      Rational c(1);
      for (long long ui : u) c /= Rational(factorial(ui));
      p.add_term(u, c);
    }
    size_t pos = 0;
    while (pos < n && u[pos] == alpha.a1) u[pos++] = 0;
    if (pos == n) break;
    ++u[pos];
  }
  return p;
}

// Power sums of the roots of sum_i x_i t^i (normal curve, full support) via
// the Newton recurrence on the elementary symmetric functions
// e_j = (-1)^j x_{d-j} / x_d; with `reciprocal` set, of their inverses via
// e_j = (-1)^j x_j / x_0.
std::vector<LaurentPoly> newton_power_sums(const CurveMatrix& A, bool reciprocal, long long smax) {
  const long long d = A.d();
  REQUIRE(static_cast<long long>(A.support().size()) == d + 1);
  std::vector<LaurentPoly> e(static_cast<size_t>(d) + 1, LaurentPoly(A.support()));
  for (long long j = 1; j <= d; ++j) {
    ExpVec ee(static_cast<size_t>(d) + 1, 0);
    if (reciprocal) {
      ee[static_cast<size_t>(j)] += 1;
      ee[0] -= 1;
    } else {
      ee[static_cast<size_t>(d - j)] += 1;
      ee[static_cast<size_t>(d)] -= 1;
    }
    e[static_cast<size_t>(j)] = mono(A, ee, Rational(j % 2 ? -1 : 1));
  }
  std::vector<LaurentPoly> p(static_cast<size_t>(smax) + 1, LaurentPoly(A.support()));
  for (long long s = 1; s <= smax; ++s) {
    LaurentPoly acc(A.support());
    for (long long i = 1; i < s && i <= d; ++i) {
      const LaurentPoly t = e[static_cast<size_t>(i)] * p[static_cast<size_t>(s - i)];
      acc += (i % 2) ? t : -t;
    }
    if (s <= d) {
      const LaurentPoly t = e[static_cast<size_t>(s)].scaled(Rational(static_cast<long>(s)));
      acc += (s % 2) ? t : -t;
    }
    p[static_cast<size_t>(s)] = acc;
  }
  return p;
}

// Exact evaluation at a rational point; zero coordinates may only carry
// nonnegative exponents here.
Rational eval_exact(const LaurentPoly& p, const std::vector<Rational>& vals) {
  Rational total(0);
  for (const auto& [e, c] : p.terms()) {
    Rational t = c;
    bool vanishes = false;
    for (size_t i = 0; i < e.size(); ++i) {
      if (vals[i] == 0) {
        REQUIRE(e[i] >= 0);
        if (e[i] > 0) {
          vanishes = true;
          break;
        }
        continue;
      }
      for (long long j = 0; j < e[i]; ++j) t *= vals[i];
      for (long long j = 0; j > e[i]; --j) t /= vals[i];
    }
    if (!vanishes) total += t;
  }
  return total;
}

bool annihilated(const CurveMatrix& A, const LaurentPoly& p, Exponent alpha) {
  auto [r1, r2] = apply_euler(p, alpha);
  if (!r1.is_zero() || !r2.is_zero()) return false;
  for (const LatticeVector& v : kernel_vectors(A, 2 * A.d()))
    if (!apply_box(p, v).is_zero()) return false;
  return true;
}

}  // namespace

TEST_CASE("phi: pinned values and brute-force oracle") {
  CurveMatrix A({1, 3}, 4);
  CHECK(phi(A, {2, 3}) == mono(A, {1, 0, 1, 0}, Rational(1)));
  CHECK(phi(A, {1, 2}).is_zero());  // (1,2) is not in I(A)
  CHECK(phi(A, {2, 4}) == mono(A, {1, 0, 0, 1}, Rational(1)) + mono(A, {0, 1, 1, 0}, Rational(1)));
  CHECK(phi(A, {0, 0}) == mono(A, {0, 0, 0, 0}, Rational(1)));
  CHECK(phi(A, {-1, 0}).is_zero());

  for (const CurveMatrix& C : {CurveMatrix({1, 3}, 4), CurveMatrix({2, 3}, 7)})
    for (long long a1 = 0; a1 <= 4; ++a1)
      for (long long a2 = -1; a2 <= C.d() * a1 + 1; ++a2)
        CHECK(phi(C, {a1, a2}) == phi_oracle(C, {a1, a2}));
}

TEST_CASE("phi_row: consistency and the generating identity") {
  CurveMatrix A({2, 3}, 7);
  for (long long a1 = 0; a1 <= 3; ++a1) {
    const auto row = phi_row(A, a1);
    CHECK(static_cast<long long>(row.size()) == A.d() * a1 + 1);
    for (long long i = 0; i < static_cast<long long>(row.size()); ++i)
      CHECK(row[static_cast<size_t>(i)] == phi(A, {a1, i}));

    // sum_i phi((a1, i)) = (x0 + ... + xd)^{a1} / a1!
    LaurentPoly sum(A.support()), pow = mono(A, ExpVec(A.support().size(), 0), Rational(1));
    for (const auto& t : row) sum += t;
    LaurentPoly ones(A.support());
    for (size_t i = 0; i < A.support().size(); ++i) {
      ExpVec e(A.support().size(), 0);
      e[i] = 1;
      ones += mono(A, e, Rational(1));
    }
    for (long long i = 0; i < a1; ++i) pow = pow * ones;
    CHECK(sum == pow.scaled(Rational(1) / Rational(factorial(a1))));
  }
}

TEST_CASE("psi_d: pinned values") {
  CurveMatrix A({1, 3}, 4);
  CHECK(psi_d(A, {1, 2}) == mono(A, {0, 0, 2, -1}, rational_of(-1, 2)));
  CHECK(psi_d(A, {0, 1}).is_zero());  // vanishes whenever d*a1 < a2

  CurveMatrix big({6, 7, 13}, 14);
  const LaurentPoly expected = mono(big, {0, 1, 0, 2, -1}, rational_of(-1, 2)) +
                               mono(big, {0, 0, 1, 3, -2}, rational_of(1, 6)) +
                               mono(big, {0, 0, 0, 10, -8}, rational_of(1, 720));
  CHECK(psi_d(big, {2, 18}) == expected);
  CHECK(annihilated(big, expected, {2, 18}));

  // dropping the r = 8 tail term breaks the system: the kernel vector
  // (0,1,0,-8,7) no longer annihilates
  const LaurentPoly truncated = mono(big, {0, 1, 0, 2, -1}, rational_of(-1, 2)) +
                                mono(big, {0, 0, 1, 3, -2}, rational_of(1, 6));
  CHECK(!apply_box(truncated, {0, 1, 0, -8, 7}).is_zero());
  CHECK(!annihilated(big, truncated, {2, 18}));
}

TEST_CASE("psi_0: pinned values") {
  CurveMatrix A({1, 3}, 4);
  CHECK(psi_0(A, {1, 2}) == mono(A, {-1, 2, 0, 0}, rational_of(-1, 2)));
  CHECK(psi_0(A, {0, -1}).is_zero());  // vanishes whenever a2 < 0

  CurveMatrix big({6, 7, 13}, 14);
  CHECK(psi_0(big, {2, 18}) == mono(big, {-1, 3, 0, 0, 0}, rational_of(-1, 6)));
}

TEST_CASE("psi_total and psi_root_sum") {
  CurveMatrix A({1, 3}, 4);
  CHECK(psi_total(A, {1, 2}) == psi_0(A, {1, 2}) + psi_d(A, {1, 2}));
  CHECK(psi_total(A, {-1, -2}).is_zero());
  CHECK_THROWS_AS(psi_total(A, {2, 3}), Error);  // (2,3) lies in I(A)
  try {
    psi_total(A, {2, 3});
  } catch (const Error& e) {
    CHECK(e.code() == Errc::ExponentInI);
  }

  CurveMatrix Q({1}, 2);
  CHECK(psi_total(Q, {0, -1}) == psi_d(Q, {0, -1}));  // psi_0 side is empty

  // sum over roots of psi_rho((0,1)) is +x1/x0 (each root contributes
  // rho^{-1}/(0-1) and sum 1/rho_j = -x1/x0); the closed form must match.
  CHECK(psi_root_sum(Q, {0, 1}) == mono(Q, {-1, 1, 0}, Rational(1)));
  for (long long a2 : {-3LL, -1LL, 1LL, 3LL})
    CHECK(psi_root_sum(A, {0, a2}) == psi_d(A, {0, a2}) - psi_0(A, {0, a2}));
  CHECK_THROWS_AS(psi_root_sum(A, {2, 3}), Error);
}

TEST_CASE("power sums match the Newton recurrence") {
  CurveMatrix Q({1}, 2);
  CHECK(power_sum(Q, 1) == mono(Q, {0, 1, -1}, Rational(-1)));
  CHECK(power_sum(Q, 2) ==
        mono(Q, {0, 2, -2}, Rational(1)) + mono(Q, {1, 0, -1}, Rational(-2)));
  CHECK_THROWS_AS(power_sum(Q, 0), Error);
  try {
    power_sum(Q, 0);
  } catch (const Error& e) {
    CHECK(e.code() == Errc::SZero);
  }

  for (long long d = 2; d <= 6; ++d) {
    std::vector<long long> k;
    for (long long i = 1; i < d; ++i) k.push_back(i);
    CurveMatrix A(k, d);
    const auto direct = newton_power_sums(A, false, 10);
    const auto recip = newton_power_sums(A, true, 10);
    for (long long s = 1; s <= 10; ++s) {
      CHECK(power_sum(A, s) == direct[static_cast<size_t>(s)]);
      CHECK(power_sum(A, -s) == recip[static_cast<size_t>(s)]);
    }
  }
}

TEST_CASE("power sums specialize correctly on t^d + t^(d-1)") {
  // Roots are 0 (d-1 times) and -1, so p_s = (-1)^s for s >= 1.
  for (long long d = 2; d <= 5; ++d) {
    std::vector<long long> k;
    for (long long i = 1; i < d; ++i) k.push_back(i);
    CurveMatrix A(k, d);
    std::vector<Rational> vals(static_cast<size_t>(d) + 1, Rational(0));
    vals[static_cast<size_t>(d - 1)] = 1;
    vals[static_cast<size_t>(d)] = 1;
    for (long long s = 1; s <= 6; ++s)
      CHECK(eval_exact(power_sum(A, s), vals) == Rational(s % 2 ? -1 : 1));
  }
}

TEST_CASE("total residue") {
  CurveMatrix A({1, 3}, 4);
  for (long long b = 1; b < 4; ++b) CHECK(total_residue_symbolic(A, b).is_zero());
  CHECK(total_residue_symbolic(A, 4) == -psi_d(A, {-1, -4}));
  CHECK(!total_residue_symbolic(A, 4).is_zero());
  CHECK_THROWS_AS(total_residue_symbolic(A, 0), Error);

  // degree-2 check by hand: sum_rho Res_rho(t^2/f dt/t) = 1/x2
  CurveMatrix Q({1}, 2);
  CHECK(total_residue_symbolic(Q, 2) == mono(Q, {0, 0, -1}, Rational(1)));
}

TEST_CASE("rational solutions are annihilated by the system") {
  for (const CurveMatrix& A : {CurveMatrix({1, 3}, 4), CurveMatrix({2, 3}, 7)}) {
    for (Exponent alpha : {Exponent{2, 3}, Exponent{3, 5}}) {
      if (!in_I(A, alpha)) continue;
      CHECK(annihilated(A, phi(A, alpha), alpha));
    }
    for (Exponent alpha :
         {Exponent{1, 2}, Exponent{0, 1}, Exponent{0, -1}, Exponent{-1, -2}, Exponent{-1, 2}}) {
      if (in_I(A, alpha)) continue;
      const LaurentPoly p0 = psi_0(A, alpha), pd = psi_d(A, alpha);
      if (!p0.is_zero()) CHECK(annihilated(A, p0, alpha));
      if (!pd.is_zero()) CHECK(annihilated(A, pd, alpha));
    }
  }

  // negative control: for an exponent inside I(A) the one-sided series is
  // not a solution
  CurveMatrix A({1, 3}, 4);
  const LaurentPoly pd = psi_d(A, {2, 3});
  REQUIRE(!pd.is_zero());
  CHECK(!apply_box(pd, {1, 0, -4, 3}).is_zero());
}

TEST_CASE("derivative law for the rational solutions") {
  CurveMatrix A({1, 3}, 4);
  std::mt19937_64 rng(11);
  for (int rep = 0; rep < 25; ++rep) {
    NVector u;
    Exponent shifted{0, 0};
    for (size_t i = 0; i < A.support().size(); ++i) {
      u.push_back(static_cast<long long>(rng() % 3));
      shifted.a1 += u[i];
      shifted.a2 += A.support()[i] * u[i];
    }
    const Exponent alpha{static_cast<long long>(rng() % 4) - 1,
                         static_cast<long long>(rng() % 17) - 4};
    const Exponent down{alpha.a1 - shifted.a1, alpha.a2 - shifted.a2};
    CHECK(phi(A, alpha).apply_D(u) == phi(A, down));
    if (in_I(A, alpha)) continue;  // one-sided law only holds outside I(A)
    CHECK(psi_0(A, alpha).apply_D(u) == psi_0(A, down));
    CHECK(psi_d(A, alpha).apply_D(u) == psi_d(A, down));
  }
  // inside I(A) the shift picks up a boundary term: here D drops the whole
  // series while the shifted exponent still has a one-sided solution
  CHECK(psi_d(A, {1, 3}).apply_D({0, 0, 0, 1}).is_zero());
  CHECK(!psi_d(A, {0, -1}).is_zero());
}

TEST_CASE("one-sided solutions factor through convolution") {
  CurveMatrix A({1, 3}, 4);
  for (long long a1 = 1; a1 <= 3; ++a1)
    for (long long a2 = -2; a2 <= 4 * a1 + 2; ++a2) {
      const Exponent alpha{a1, a2};
      if (in_I(A, alpha)) continue;
      const auto row = phi_row(A, a1);
      LaurentPoly acc0(A.support()), accd(A.support());
      for (long long i = 0; i < static_cast<long long>(row.size()); ++i) {
        if (row[static_cast<size_t>(i)].is_zero()) continue;
        if (i < a2) acc0 += row[static_cast<size_t>(i)] * psi_0(A, {0, a2 - i});
        if (i > a2) accd += row[static_cast<size_t>(i)] * psi_d(A, {0, a2 - i});
      }
      CHECK(acc0 == psi_0(A, alpha));
      CHECK(accd == psi_d(A, alpha));
    }
}

TEST_CASE("duality swaps the one-sided solutions") {
  for (const CurveMatrix& A : {CurveMatrix({1, 3}, 4), CurveMatrix({2, 3}, 7)}) {
    const CurveMatrix dual = dualize(A);
    for (long long a1 = -1; a1 <= 2; ++a1)
      for (long long a2 = -3; a2 <= A.d() * 2 + 3; ++a2)
        CHECK(dualize_poly(A, psi_0(A, {a1, a2})) == psi_d(dual, dual_exponent(A, {a1, a2})));
  }
}

TEST_CASE("basis descriptors per scenario") {
  CurveMatrix A({1, 3}, 4);

  auto in_i = basis_descriptor(A, {2, 3});
  CHECK(in_i.scenario == Scenario::InI);
  CHECK(in_i.expected_rank == 4);
  REQUIRE(in_i.elements.size() == 4);
  CHECK(in_i.elements[0].kind == BasisKind::PhiPoly);
  CHECK(in_i.elements[0].poly == phi(A, {2, 3}));
  for (int j = 2; j <= 4; ++j) {
    CHECK(in_i.elements[static_cast<size_t>(j - 1)].kind == BasisKind::TauRho);
    CHECK(in_i.elements[static_cast<size_t>(j - 1)].j == j);
    CHECK(in_i.elements[static_cast<size_t>(j - 1)].jhat == 1);
  }

  auto both = basis_descriptor(A, {1, 2});
  CHECK(both.scenario == Scenario::EBoth);
  CHECK(both.expected_rank == 5);
  REQUIRE(both.elements.size() == 5);
  for (int j = 1; j <= 4; ++j) CHECK(both.elements[static_cast<size_t>(j - 1)].kind == BasisKind::PsiRho);
  CHECK(both.elements[4].kind == BasisKind::PsiZeroPoly);
  CHECK(both.elements[4].poly == psi_0(A, {1, 2}));

  auto j_cone = basis_descriptor(A, {-1, -2});
  CHECK(j_cone.scenario == Scenario::J);
  CHECK(j_cone.expected_rank == 4);
  REQUIRE(j_cone.elements.size() == 4);
  CHECK(j_cone.elements[3].kind == BasisKind::Chi);

  auto ed = basis_descriptor(A, {0, -1});
  CHECK(ed.scenario == Scenario::EdOnly);
  CHECK(ed.expected_rank == 4);
  REQUIRE(ed.elements.size() == 4);
  for (const auto& el : ed.elements) CHECK(el.kind == BasisKind::PsiRho);

  auto e0 = basis_descriptor(A, {0, 1});
  CHECK(e0.scenario == Scenario::E0Only);
  CHECK(e0.expected_rank == 4);
  CHECK(e0.elements.size() == 4);

  for (Exponent alpha : {Exponent{2, 3}, Exponent{1, 2}, Exponent{-1, -2}, Exponent{0, -1}})
    CHECK(basis_descriptor(A, alpha).expected_rank == holonomic_rank(A, alpha));
}
