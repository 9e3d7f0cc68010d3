#include "gkz/curve.hpp"

#include <algorithm>
#include <numeric>

namespace gkz {

CurveMatrix::CurveMatrix(std::vector<long long> k, long long d) : k_(std::move(k)), d_(d) {
  if (k_.empty()) throw Error(Errc::MZero, "need at least one interior generator");
  long long prev = 0;
  for (long long ki : k_) {
    if (ki <= prev) throw Error(Errc::NotStrictlyIncreasing, "generators must satisfy 0 < k1 < ... < km < d");
    prev = ki;
  }
  if (k_.back() >= d_) throw Error(Errc::NotStrictlyIncreasing, "generators must satisfy 0 < k1 < ... < km < d");
  long long g = d_;
  for (long long ki : k_) g = std::gcd(g, ki);
  if (g != 1) throw Error(Errc::GcdNotOne, "gcd(k1,...,km,d) must be 1 (see reduce_by_gcd)");
  support_.reserve(k_.size() + 2);
  support_.push_back(0);
  support_.insert(support_.end(), k_.begin(), k_.end());
  support_.push_back(d_);
}

std::vector<long long> CurveMatrix::support_B() const {
  return {support_.begin(), support_.end() - 1};
}

std::vector<long long> CurveMatrix::support_C() const {
  return {support_.begin() + 1, support_.end()};
}

std::optional<int> CurveMatrix::position_of(long long label) const {
  auto it = std::lower_bound(support_.begin(), support_.end(), label);
  if (it == support_.end() || *it != label) return std::nullopt;
  return static_cast<int>(it - support_.begin());
}

Exponent CurveMatrix::apply(const LatticeVector& u) const {
  if (u.size() != support_.size()) throw Error(Errc::SupportMismatch, "vector length != m+2");
  Exponent e;
  for (size_t i = 0; i < u.size(); ++i) {
    e.a1 += u[i];
    e.a2 += support_[i] * u[i];
  }
  return e;
}

std::pair<std::vector<long long>, long long> reduce_by_gcd(std::vector<long long> k, long long d) {
  long long g = d;
  for (long long ki : k) g = std::gcd(g, ki);
  if (g > 1) {
    for (long long& ki : k) ki /= g;
    d /= g;
  }
  return {std::move(k), d};
}

std::vector<LatticeVector> kernel_vectors(const CurveMatrix& A, long long bound) {
  if (bound < 0) throw Error(Errc::BadInput, "negative bound");
  const auto& sup = A.support();
  const int m = A.m();
  const long long d = A.d();
  std::vector<LatticeVector> out;
  LatticeVector mid(m, -bound);

  // Middle coordinates sweep the box; the weighted-sum constraint forces v_d
  // (when divisible by d) and the row-sum constraint forces v_0.
  while (true) {
    long long wsum = 0, csum = 0;
    for (int i = 0; i < m; ++i) {
      wsum += sup[i + 1] * mid[i];
      csum += mid[i];
    }
    bool mid_zero = std::all_of(mid.begin(), mid.end(), [](long long x) { return x == 0; });
    if (wsum % d == 0 && !mid_zero) {  // all-zero middle forces v = 0
      long long vd = -wsum / d;
      long long v0 = -(csum + vd);
      if (std::llabs(vd) <= bound && std::llabs(v0) <= bound) {
        LatticeVector v;
        v.reserve(m + 2);
        v.push_back(v0);
        v.insert(v.end(), mid.begin(), mid.end());
        v.push_back(vd);
        // sign-normalize: first nonzero entry positive
        for (long long x : v) {
          if (x != 0) {
            if (x < 0)
              for (long long& y : v) y = -y;
            break;
          }
        }
        out.push_back(std::move(v));
      }
    }
    int i = m - 1;
    while (i >= 0 && mid[i] == bound) mid[i--] = -bound;
    if (i < 0) break;
    ++mid[i];
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<LatticeVector> omega_vectors(const CurveMatrix& A) {
  std::vector<LatticeVector> out;
  const long long d = A.d();
  for (int i = 0; i < A.m(); ++i) {
    LatticeVector v(A.n_cols(), 0);
    v[0] = d - A.k()[i];
    v[i + 1] = -d;
    v[A.n_cols() - 1] = A.k()[i];
    out.push_back(std::move(v));
  }
  return out;
}

CurveMatrix dualize(const CurveMatrix& A) {
  std::vector<long long> l(A.m());
  for (int j = 0; j < A.m(); ++j) l[j] = A.d() - A.k()[A.m() - 1 - j];
  return CurveMatrix(std::move(l), A.d());
}

Exponent dual_exponent(const CurveMatrix& A, Exponent alpha) {
  return {alpha.a1, A.d() * alpha.a1 - alpha.a2};
}

}  // namespace gkz
