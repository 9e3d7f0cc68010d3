#include "gkz/laurent.hpp"

#include <algorithm>
#include <sstream>

namespace gkz {

LaurentPoly LaurentPoly::monomial(std::vector<long long> support, ExpVec e, Rational c) {
  LaurentPoly p(std::move(support));
  if (e.size() != p.support_.size()) throw Error(Errc::SupportMismatch, "exponent length != support size");
  p.add_term(e, c);
  return p;
}

Rational LaurentPoly::coeff(const ExpVec& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

void LaurentPoly::add_term(const ExpVec& e, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

void LaurentPoly::check_same_support(const LaurentPoly& q) const {
  if (support_ != q.support_) throw Error(Errc::SupportMismatch, "operands on different supports");
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& q) {
  check_same_support(q);
  for (const auto& [e, c] : q.terms_) add_term(e, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& q) {
  check_same_support(q);
  for (const auto& [e, c] : q.terms_) add_term(e, -c);
  return *this;
}

LaurentPoly operator*(const LaurentPoly& p, const LaurentPoly& q) {
  p.check_same_support(q);
  LaurentPoly r(p.support_);
  ExpVec e(p.support_.size());
  for (const auto& [ep, cp] : p.terms_)
    for (const auto& [eq, cq] : q.terms_) {
      for (size_t i = 0; i < e.size(); ++i) e[i] = ep[i] + eq[i];
      r.add_term(e, cp * cq);
    }
  return r;
}

LaurentPoly LaurentPoly::operator-() const { return scaled(Rational(-1)); }

LaurentPoly LaurentPoly::scaled(const Rational& c) const {
  LaurentPoly r(support_);
  if (c == 0) return r;
  for (const auto& [e, q] : terms_) r.terms_.emplace(e, q * c);
  return r;
}

LaurentPoly LaurentPoly::derivative_pos(size_t pos) const {
  if (pos >= support_.size()) throw Error(Errc::BadInput, "derivative position out of range");
  LaurentPoly r(support_);
  for (const auto& [e, c] : terms_) {
    if (e[pos] == 0) continue;
    ExpVec en = e;
    en[pos] -= 1;
    r.add_term(en, c * Rational(static_cast<long>(e[pos])));
  }
  return r;
}

LaurentPoly LaurentPoly::derivative(long long label) const {
  auto it = std::find(support_.begin(), support_.end(), label);
  if (it == support_.end()) throw Error(Errc::BadInput, "no variable with that label in the support");
  return derivative_pos(static_cast<size_t>(it - support_.begin()));
}

LaurentPoly LaurentPoly::apply_D(const NVector& u) const {
  if (u.size() != support_.size()) throw Error(Errc::SupportMismatch, "operator length != support size");
  LaurentPoly r(support_);
  for (const auto& [e, c] : terms_) {
    Rational cn = c;
    ExpVec en = e;
    bool dead = false;
    for (size_t i = 0; i < u.size() && !dead; ++i) {
      if (u[i] < 0) throw Error(Errc::BadInput, "derivative orders must be nonnegative");
      for (long long s = 0; s < u[i]; ++s) {
        if (en[i] == 0) { dead = true; break; }
        cn *= Rational(static_cast<long>(en[i]));
        en[i] -= 1;
      }
    }
    if (!dead) r.add_term(en, cn);
  }
  return r;
}

std::string LaurentPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    Rational ac = abs(c);
    if (first) {
      if (c < 0) os << "-";
      first = false;
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    bool all_zero = std::all_of(e.begin(), e.end(), [](long long x) { return x == 0; });
    if (ac != 1 || all_zero) os << rational_to_string(ac);
    bool printed = (ac != 1 || all_zero);
    for (size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (printed) os << "*";
      os << "x" << support_[i];
      if (e[i] != 1) os << "^" << e[i];
      printed = true;
    }
  }
  return os.str();
}

LaurentPoly apply_box(const LaurentPoly& p, const LatticeVector& v) {
  const auto& sup = p.support();
  if (v.size() != sup.size()) throw Error(Errc::SupportMismatch, "kernel vector length != support size");
  long long csum = 0, wsum = 0;
  for (size_t i = 0; i < v.size(); ++i) {
    csum += v[i];
    wsum += sup[i] * v[i];
  }
  if (csum != 0 || wsum != 0) throw Error(Errc::NotInKernel, "vector is not in ker(A)");
  NVector plus(v.size(), 0), minus(v.size(), 0);
  for (size_t i = 0; i < v.size(); ++i)
    (v[i] > 0 ? plus[i] : minus[i]) = std::llabs(v[i]);
  return p.apply_D(plus) - p.apply_D(minus);
}

std::pair<LaurentPoly, LaurentPoly> apply_euler(const LaurentPoly& p, Exponent alpha) {
  const auto& sup = p.support();
  LaurentPoly r1(sup), r2(sup);
  for (const auto& [e, c] : p.terms()) {
    long long deg = 0, wdeg = 0;
    for (size_t i = 0; i < e.size(); ++i) {
      deg += e[i];
      wdeg += sup[i] * e[i];
    }
    r1.add_term(e, c * Rational(static_cast<long>(deg - alpha.a1)));
    r2.add_term(e, c * Rational(static_cast<long>(wdeg - alpha.a2)));
  }
  return {std::move(r1), std::move(r2)};
}

std::optional<Exponent> bidegree(const LaurentPoly& p) {
  std::optional<Exponent> deg;
  const auto& sup = p.support();
  for (const auto& [e, c] : p.terms()) {
    Exponent d{0, 0};
    for (size_t i = 0; i < e.size(); ++i) {
      d.a1 += e[i];
      d.a2 += sup[i] * e[i];
    }
    if (deg && *deg != d) return std::nullopt;
    deg = d;
  }
  return deg;
}

LaurentPoly dualize_poly(const CurveMatrix& A, const LaurentPoly& p) {
  if (p.support() != A.support()) throw Error(Errc::SupportMismatch, "polynomial not on the curve support");
  CurveMatrix Ahat = dualize(A);
  LaurentPoly r(Ahat.support());
  for (const auto& [e, c] : p.terms()) {
    ExpVec er(e.rbegin(), e.rend());  // value s at position i maps to d-s
    r.add_term(er, c);
  }
  return r;
}

}  // namespace gkz
