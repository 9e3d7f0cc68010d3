#include "gkz/solutions.hpp"

#include <map>
#include <mutex>

namespace gkz {

namespace {

long long floor_div(long long a, long long b) {
  long long q = a / b;
  return (a % b != 0 && ((a < 0) != (b < 0))) ? q - 1 : q;
}

// Enumerate every u in N^n with sum u = count, invoking fn(u, weight).
template <typename Fn>
void for_each_composition(const std::vector<long long>& w, long long count, Fn&& fn) {
  NVector u(w.size(), 0);
  auto rec = [&](auto&& self, size_t pos, long long left, long long weight) -> void {
    if (pos + 1 == u.size()) {
      u[pos] = left;
      fn(u, weight + w[pos] * left);
      u[pos] = 0;
      return;
    }
    for (long long c = 0; c <= left; ++c) {
      u[pos] = c;
      self(self, pos + 1, left - c, weight + w[pos] * c);
    }
    u[pos] = 0;
  };
  if (count >= 0) rec(rec, 0, count, 0);
}

Rational inv_multifactorial(const NVector& u) {
  Integer f(1);
  for (long long ui : u) f *= factorial(ui);
  return Rational(1) / Rational(f);
}

// phi over the columns `cols` (a subset of the full support, in support
// order), embedded into the full support of A.
LaurentPoly phi_cols(const CurveMatrix& A, const std::vector<long long>& cols, Exponent alpha) {
  LaurentPoly p(A.support());
  if (alpha.a1 < 0) return p;
  std::vector<size_t> positions(cols.size());
  for (size_t i = 0; i < cols.size(); ++i) positions[i] = static_cast<size_t>(*A.position_of(cols[i]));
  std::optional<NVector> first = find_composition(cols, alpha.a1, alpha.a2);
  if (!first) return p;  // cheap reject before the full enumeration
  for_each_composition(cols, alpha.a1, [&](const NVector& u, long long weight) {
    if (weight != alpha.a2) return;
    ExpVec e(A.support().size(), 0);
    for (size_t i = 0; i < u.size(); ++i) e[positions[i]] = u[i];
    p.add_term(e, inv_multifactorial(u));
  });
  return p;
}

struct CacheKey {
  int kind;  // 0 = phi, 1 = psi_0, 2 = psi_d
  std::vector<long long> support;
  Exponent alpha;
  auto operator<=>(const CacheKey&) const = default;
};

std::mutex cache_mutex;
std::map<CacheKey, LaurentPoly> cache;

template <typename Fn>
LaurentPoly cached(int kind, const CurveMatrix& A, Exponent alpha, Fn&& compute) {
  CacheKey key{kind, A.support(), alpha};
  {
    std::lock_guard<std::mutex> lock(cache_mutex);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }
  LaurentPoly p = compute();
  std::lock_guard<std::mutex> lock(cache_mutex);
  return cache.emplace(std::move(key), std::move(p)).first->second;
}

}  // namespace

LaurentPoly phi(const CurveMatrix& A, Exponent alpha) {
  return cached(0, A, alpha, [&] { return phi_cols(A, A.support(), alpha); });
}

std::vector<LaurentPoly> phi_row(const CurveMatrix& A, long long a1) {
  std::vector<LaurentPoly> row(static_cast<size_t>(std::max<long long>(0, A.d() * a1) + 1),
                               LaurentPoly(A.support()));
  if (a1 < 0) return row;
  for_each_composition(A.support(), a1, [&](const NVector& u, long long weight) {
    row[static_cast<size_t>(weight)].add_term(u, inv_multifactorial(u));
  });
  return row;
}

LaurentPoly psi_0(const CurveMatrix& A, Exponent alpha) {
  return cached(1, A, alpha, [&] {
    LaurentPoly p(A.support());
    const long long k1 = A.k().front();
    auto C = A.support_C();
    // phi_C(alpha + r(1,0)) needs k1*(a1+r) <= a2, bounding r.
    long long rmax = floor_div(alpha.a2, k1) - alpha.a1;
    for (long long r = std::max<long long>(1, -alpha.a1); r <= rmax; ++r) {
      LaurentPoly term = phi_cols(A, C, {alpha.a1 + r, alpha.a2});
      if (term.is_zero()) continue;
      ExpVec shift(A.support().size(), 0);
      shift[0] = -r;
      Rational c((r % 2 == 0) ? Integer(factorial(r - 1)) : Integer(-factorial(r - 1)));
      p += term * LaurentPoly::monomial(A.support(), shift, c);
    }
    return p;
  });
}

LaurentPoly psi_d(const CurveMatrix& A, Exponent alpha) {
  return cached(2, A, alpha, [&] {
    LaurentPoly p(A.support());
    const long long km = A.k().back(), d = A.d();
    auto B = A.support_B();
    // phi_B(alpha + r(1,d)) needs a2 + r*d <= km*(a1+r), bounding r.
    long long rmax = floor_div(km * alpha.a1 - alpha.a2, d - km);
    for (long long r = std::max<long long>(1, -alpha.a1); r <= rmax; ++r) {
      LaurentPoly term = phi_cols(A, B, {alpha.a1 + r, alpha.a2 + r * d});
      if (term.is_zero()) continue;
      ExpVec shift(A.support().size(), 0);
      shift.back() = -r;
      Rational c((r % 2 == 0) ? Integer(factorial(r - 1)) : Integer(-factorial(r - 1)));
      p += term * LaurentPoly::monomial(A.support(), shift, c);
    }
    return p;
  });
}

LaurentPoly psi_total(const CurveMatrix& A, Exponent alpha) {
  if (in_I(A, alpha)) throw Error(Errc::ExponentInI, "psi_total requires an exponent outside I(A)");
  return psi_0(A, alpha) + psi_d(A, alpha);
}

LaurentPoly psi_root_sum(const CurveMatrix& A, Exponent alpha) {
  if (in_I(A, alpha)) throw Error(Errc::ExponentInI, "psi_root_sum requires an exponent outside I(A)");
  return psi_d(A, alpha) - psi_0(A, alpha);
}

LaurentPoly power_sum(const CurveMatrix& A, long long s) {
  if (s == 0) throw Error(Errc::SZero, "power sum order must be nonzero");
  LaurentPoly base = (s > 0) ? psi_d(A, {0, -s}) : psi_0(A, {0, -s});
  return base.scaled(Rational(static_cast<long>(s > 0 ? s : -s)));
}

LaurentPoly total_residue_symbolic(const CurveMatrix& A, long long b) {
  if (b < 1) throw Error(Errc::BadInput, "weight b must be >= 1");
  if (b < A.d()) return LaurentPoly(A.support());
  return -psi_d(A, {-1, -b});
}

BasisDescriptor basis_descriptor(const CurveMatrix& A, Exponent alpha) {
  BasisDescriptor out;
  Classification c = classify(A, alpha);
  out.scenario = c.tag;
  out.expected_rank = holonomic_rank(A, alpha);
  const int d = static_cast<int>(A.d());
  switch (c.tag) {
    case Scenario::InI:
      out.elements.push_back({BasisKind::PhiPoly, alpha, 0, 0, phi(A, alpha)});
      for (int j = 2; j <= d; ++j) out.elements.push_back({BasisKind::TauRho, alpha, j, 1, std::nullopt});
      break;
    case Scenario::EBoth:
      for (int j = 1; j <= d; ++j) out.elements.push_back({BasisKind::PsiRho, alpha, j, 0, std::nullopt});
      out.elements.push_back({BasisKind::PsiZeroPoly, alpha, 0, 0, psi_0(A, alpha)});
      break;
    case Scenario::E0Only:
    case Scenario::EdOnly:
      for (int j = 1; j <= d; ++j) out.elements.push_back({BasisKind::PsiRho, alpha, j, 0, std::nullopt});
      break;
    case Scenario::J:
      for (int j = 1; j <= d - 1; ++j) out.elements.push_back({BasisKind::PsiRho, alpha, j, 0, std::nullopt});
      out.elements.push_back({BasisKind::Chi, alpha, 0, 0, std::nullopt});
      break;
  }
  return out;
}

}  // namespace gkz
