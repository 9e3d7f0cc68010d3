#include "gkz/json_io.hpp"

namespace gkz {

namespace {

long long to_ll(const Json& j, const char* what) {
  if (!j.is_number_integer()) throw Error(Errc::BadInput, std::string(what) + " must be an integer");
  return j.get<long long>();
}

std::vector<long long> to_llvec(const Json& j, const char* what) {
  if (!j.is_array()) throw Error(Errc::BadInput, std::string(what) + " must be an array");
  std::vector<long long> v;
  v.reserve(j.size());
  for (const auto& e : j) v.push_back(to_ll(e, what));
  return v;
}

}  // namespace

Json curve_to_json(const CurveMatrix& A) {
  return Json{{"k", A.k()}, {"d", A.d()}};
}

CurveMatrix curve_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("k") || !j.contains("d"))
    throw Error(Errc::BadInput, "curve needs fields \"k\" and \"d\"");
  return CurveMatrix(to_llvec(j.at("k"), "curve k"), to_ll(j.at("d"), "curve d"));
}

Json exponent_to_json(Exponent alpha) { return Json::array({alpha.a1, alpha.a2}); }

Exponent exponent_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 2)
    throw Error(Errc::BadInput, "exponent must be [a1, a2]");
  return Exponent{to_ll(j.at(0), "exponent"), to_ll(j.at(1), "exponent")};
}

Json poly_to_json(const LaurentPoly& p) {
  Json terms = Json::array();
  for (const auto& [e, c] : p.terms())
    terms.push_back(Json{{"e", e}, {"c", rational_to_string(c)}});
  return Json{{"support", p.support()}, {"terms", std::move(terms)}};
}

LaurentPoly poly_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("support") || !j.contains("terms"))
    throw Error(Errc::BadInput, "polynomial needs fields \"support\" and \"terms\"");
  LaurentPoly p(to_llvec(j.at("support"), "support"));
  for (const auto& t : j.at("terms")) {
    if (!t.is_object() || !t.contains("e") || !t.contains("c"))
      throw Error(Errc::BadInput, "term needs fields \"e\" and \"c\"");
    const auto e = to_llvec(t.at("e"), "term exponent");
    if (e.size() != p.support().size())
      throw Error(Errc::BadInput, "term exponent length does not match the support");
    if (!t.at("c").is_string()) throw Error(Errc::BadInput, "coefficient must be a string");
    p.add_term(e, parse_rational(t.at("c").get<std::string>()));
  }
  return p;
}

Json point_to_json(const Point& x) {
  Json coords = Json::array();
  for (const Cplx c : x.coords) coords.push_back(Json::array({c.real(), c.imag()}));
  return coords;
}

Point point_from_json(const Json& j, const CurveMatrix& A) {
  if (!j.is_array() || j.size() != static_cast<size_t>(A.n_cols()))
    throw Error(Errc::BadInput, "point needs one coordinate per support column");
  std::vector<Cplx> coords;
  coords.reserve(j.size());
  for (const auto& c : j) {
    if (c.is_number()) {
      coords.emplace_back(c.get<double>(), 0.0);
    } else if (c.is_array() && c.size() == 2 && c.at(0).is_number() && c.at(1).is_number()) {
      coords.emplace_back(c.at(0).get<double>(), c.at(1).get<double>());
    } else {
      throw Error(Errc::BadInput, "coordinate must be a number or [re, im]");
    }
  }
  return point_for(A, std::move(coords));
}

Json classification_to_json(const CurveMatrix& A, Exponent alpha) {
  const Classification c = classify(A, alpha);
  Json witness;
  if (c.witness_I)
    witness = *c.witness_I;
  else
    witness = nullptr;
  return Json{{"alpha", exponent_to_json(alpha)},
              {"tag", scenario_name(c.tag)},
              {"rank", holonomic_rank(A, alpha)},
              {"rational_dim", rational_dim(A, alpha)},
              {"witness", std::move(witness)}};
}

Json cm_to_json(const CurveMatrix& A) {
  Json e = Json::array();
  for (const Exponent alpha : e_set(A)) e.push_back(exponent_to_json(alpha));
  return Json{{"cohen_macaulay", is_cohen_macaulay(A)}, {"E", std::move(e)}};
}

Json basis_to_json(const CurveMatrix& A, Exponent alpha) {
  const BasisDescriptor b = basis_descriptor(A, alpha);
  Json elements = Json::array();
  for (const BasisElement& e : b.elements) {
    Json el{{"kind", [&] {
               switch (e.kind) {
                 case BasisKind::PhiPoly: return "phi";
                 case BasisKind::PsiZeroPoly: return "psi_0";
                 case BasisKind::PsiRho: return "psi_rho";
                 case BasisKind::TauRho: return "tau_rho";
                 case BasisKind::Chi: return "chi";
               }
               return "unknown";
             }()},
            {"alpha", exponent_to_json(e.alpha)}};
    if (e.kind == BasisKind::PsiRho || e.kind == BasisKind::TauRho) el["root"] = e.j;
    if (e.kind == BasisKind::TauRho) el["root_ref"] = e.jhat;
    if (e.poly) el["poly"] = poly_to_json(*e.poly);
    elements.push_back(std::move(el));
  }
  return Json{{"alpha", exponent_to_json(alpha)},
              {"scenario", scenario_name(b.scenario)},
              {"expected_rank", b.expected_rank},
              {"elements", std::move(elements)}};
}

}  // namespace gkz
