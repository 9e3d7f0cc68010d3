// Command-line front end: exact classification and solution construction plus
// the numeric verification harness. JSON in, JSON (or text) out.
#include <CLI11.hpp>

#include <cstdint>
#include <iostream>

#include "gkz/gamma_series.hpp"
#include "gkz/verify.hpp"

namespace {

using namespace gkz;

Json parse_json_arg(const std::string& text, const char* what) {
  Json j = Json::parse(text, nullptr, false);
  if (j.is_discarded()) throw Error(Errc::BadInput, std::string("invalid JSON for ") + what);
  return j;
}

void emit(const Json& j, const std::string& format, const std::string& text_rendering) {
  if (format == "json")
    std::cout << j.dump(2) << "\n";
  else
    std::cout << text_rendering << "\n";
}

std::string poly_text(const LaurentPoly& p) { return p.is_zero() ? "0" : p.to_string(); }

Json complex_json(Cplx z) { return Json::array({z.real(), z.imag()}); }

int cmd_residue(const CurveMatrix& A, long long a, long long b,
                const std::optional<Point>& point, const std::string& format) {
  if (a < 1) throw Error(Errc::BadInput, "--a must be >= 1");
  Json out{{"a", a}, {"b", b}};
  std::string text;
  if (a == 1) {
    const LaurentPoly sym = total_residue_symbolic(A, b);
    out["symbolic"] = poly_to_json(sym);
    text = "total residue = " + poly_text(sym);
  } else {
    out["symbolic"] = nullptr;
    text = "no closed form for a >= 2; use --point";
  }
  if (point) {
    const Cplx val = residue_total_numeric(*point, a, b);
    out["numeric"] = complex_json(val);
    text += "\nnumeric = (" + std::to_string(val.real()) + ", " + std::to_string(val.imag()) + ")";
  } else {
    out["numeric"] = nullptr;
  }
  emit(out, format, text);
  return 0;
}

int cmd_gamma_roots(const CurveMatrix& A, const Point& x, int trunc, const std::string& format) {
  const auto normal = embed_normal(A, x);
  const double margin = region_margin(normal);
  const RootSet rs = find_roots(x);
  auto f = [&](Cplx t) {
    Cplx acc(0.0);
    for (size_t i = 0; i < x.support.size(); ++i) {
      Cplx p(1.0);
      for (long long e = 0; e < x.support[i]; ++e) p *= t;
      acc += x.coords[i] * p;
    }
    return acc;
  };
  Json matches = Json::array();
  double worst = 0.0;
  std::string text;
  for (int i = 1; i <= static_cast<int>(A.d()); ++i) {
    const Cplx series = root_series(A.d(), i, normal, trunc);
    Cplx nearest = rs.roots.front();
    for (const Cplx r : rs.roots)
      if (std::abs(series - r) < std::abs(series - nearest)) nearest = r;
    const double dist = std::abs(series - nearest);
    worst = std::max(worst, dist);
    matches.push_back(Json{{"series", complex_json(series)},
                           {"root", complex_json(nearest)},
                           {"distance", dist},
                           {"residual", std::abs(f(series))}});
    text += "series root " + std::to_string(i) + ": |series - iterated| = " +
            std::to_string(dist) + "\n";
  }
  text += "max distance " + std::to_string(worst) + ", region margin " + std::to_string(margin);
  emit(Json{{"curve", curve_to_json(A)},
            {"trunc", trunc},
            {"region_margin", margin},
            {"in_region", margin > 1.0},
            {"matches", std::move(matches)},
            {"max_distance", worst}},
       format, text);
  return 0;
}

std::string verify_text(const VerifyReport& r) {
  std::string text;
  char line[128];
  for (const CheckResult& c : r.checks) {
    std::snprintf(line, sizeof line, "%-26s  residual %-12.4g  tol %-10.4g  %s\n", c.name.c_str(),
                  c.residual, c.tolerance, c.pass ? "PASS" : "FAIL");
    text += line;
  }
  text += "failures: " + std::to_string(r.failures);
  return text;
}

int run(int argc, char** argv) {
  CLI::App app{"hypergeometric system of a monomial curve: exact solutions and numeric checks"};
  app.require_subcommand(1);
  app.fallthrough();  // global options may follow the subcommand

  std::string format = "json";
  app.add_option("--format", format, "output format")->check(CLI::IsMember({"json", "text"}));

  std::string curve_s, alpha_s, point_s, suite = "fast";
  long long s_arg = 1, a_arg = 1, b_arg = 1;
  int trunc = 12;
  std::uint64_t seed = 0;

  auto add_curve = [&](CLI::App* cmd) {
    cmd->add_option("--curve", curve_s, "curve JSON, e.g. '{\"k\":[1,3],\"d\":4}'")->required();
  };
  auto add_alpha = [&](CLI::App* cmd) {
    cmd->add_option("--alpha", alpha_s, "exponent JSON [a1,a2]")->required();
  };

  CLI::App* c_classify = app.add_subcommand("classify", "scenario, rank, witnesses of an exponent");
  add_curve(c_classify);
  add_alpha(c_classify);
  CLI::App* c_eset = app.add_subcommand("eset", "the finite exceptional set E");
  add_curve(c_eset);
  CLI::App* c_cm = app.add_subcommand("cm", "Cohen-Macaulay test (E empty)");
  add_curve(c_cm);
  CLI::App* c_rank = app.add_subcommand("rank", "holonomic rank at an exponent");
  add_curve(c_rank);
  add_alpha(c_rank);
  CLI::App* c_phi = app.add_subcommand("phi", "polynomial solution for a semigroup exponent");
  add_curve(c_phi);
  add_alpha(c_phi);
  CLI::App* c_psi0 = app.add_subcommand("psi0", "Laurent solution with x_0 denominators");
  add_curve(c_psi0);
  add_alpha(c_psi0);
  CLI::App* c_psid = app.add_subcommand("psid", "Laurent solution with x_d denominators");
  add_curve(c_psid);
  add_alpha(c_psid);
  CLI::App* c_power = app.add_subcommand("powersum", "power sum of the roots as a Laurent polynomial");
  add_curve(c_power);
  c_power->add_option("--s", s_arg, "power (nonzero integer)")->required();
  CLI::App* c_residue = app.add_subcommand("residue", "total residue of t^b/f^a dt/t");
  add_curve(c_residue);
  c_residue->add_option("--a", a_arg, "denominator power")->required();
  c_residue->add_option("--b", b_arg, "numerator power")->required();
  c_residue->add_option("--point", point_s, "optional point JSON [[re,im],...]");
  CLI::App* c_basis = app.add_subcommand("basis", "solution basis descriptor at an exponent");
  add_curve(c_basis);
  add_alpha(c_basis);
  CLI::App* c_gamma = app.add_subcommand("gamma-roots", "series roots vs iterated roots");
  add_curve(c_gamma);
  c_gamma->add_option("--point", point_s, "point JSON [[re,im],...]")->required();
  c_gamma->add_option("--trunc", trunc, "series truncation (default 12)");
  CLI::App* c_verify = app.add_subcommand("verify", "seeded verification suite");
  add_curve(c_verify);
  c_verify->add_option("--seed", seed, "RNG seed (default 0)");
  c_verify->add_option("--suite", suite, "fast|full")->check(CLI::IsMember({"fast", "full"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  const CurveMatrix A = curve_from_json(parse_json_arg(curve_s, "--curve"));
  const auto alpha = [&] { return exponent_from_json(parse_json_arg(alpha_s, "--alpha")); };
  const auto point = [&] { return point_from_json(parse_json_arg(point_s, "--point"), A); };

  if (app.got_subcommand(c_classify)) {
    const Json j = classification_to_json(A, alpha());
    emit(j, format,
         "tag=" + j["tag"].get<std::string>() + " rank=" + std::to_string(j["rank"].get<int>()) +
             " rational_dim=" + std::to_string(j["rational_dim"].get<int>()));
  } else if (app.got_subcommand(c_eset)) {
    Json e = Json::array();
    std::string text = "E =";
    for (const Exponent al : e_set(A)) {
      e.push_back(exponent_to_json(al));
      text += " (" + std::to_string(al.a1) + "," + std::to_string(al.a2) + ")";
    }
    if (e.empty()) text += " {}";
    emit(Json{{"curve", curve_to_json(A)}, {"E", std::move(e)}}, format, text);
  } else if (app.got_subcommand(c_cm)) {
    const Json j = cm_to_json(A);
    emit(j, format,
         std::string("cohen_macaulay = ") + (j["cohen_macaulay"].get<bool>() ? "true" : "false"));
  } else if (app.got_subcommand(c_rank)) {
    const Exponent al = alpha();
    const int r = holonomic_rank(A, al);
    emit(Json{{"alpha", exponent_to_json(al)}, {"rank", r}}, format, std::to_string(r));
  } else if (app.got_subcommand(c_phi) || app.got_subcommand(c_psi0) ||
             app.got_subcommand(c_psid) || app.got_subcommand(c_power)) {
    LaurentPoly p;
    if (app.got_subcommand(c_phi))
      p = phi(A, alpha());
    else if (app.got_subcommand(c_psi0))
      p = psi_0(A, alpha());
    else if (app.got_subcommand(c_psid))
      p = psi_d(A, alpha());
    else
      p = power_sum(A, s_arg);
    Json j = poly_to_json(p);
    j["pretty"] = poly_text(p);
    emit(j, format, poly_text(p));
  } else if (app.got_subcommand(c_residue)) {
    std::optional<Point> pt;
    if (!point_s.empty()) pt = point();
    return cmd_residue(A, a_arg, b_arg, pt, format);
  } else if (app.got_subcommand(c_basis)) {
    const Json j = basis_to_json(A, alpha());
    std::string text = "scenario " + j["scenario"].get<std::string>() + ", expected rank " +
                       std::to_string(j["expected_rank"].get<int>());
    for (const auto& el : j["elements"])
      text += "\n  " + el["kind"].get<std::string>() + " at alpha=(" +
              std::to_string(el["alpha"][0].get<long long>()) + "," +
              std::to_string(el["alpha"][1].get<long long>()) + ")";
    emit(j, format, text);
  } else if (app.got_subcommand(c_gamma)) {
    return cmd_gamma_roots(A, point(), trunc, format);
  } else if (app.got_subcommand(c_verify)) {
    const VerifyReport report = run_verify(A, seed, suite);
    emit(verify_report_to_json(A, report), format, verify_text(report));
    return report.failures == 0 ? 0 : 1;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    const bool usage = e.code() == Errc::BadInput || e.code() == Errc::GcdNotOne ||
                       e.code() == Errc::NotStrictlyIncreasing || e.code() == Errc::MZero ||
                       e.code() == Errc::SZero;
    return usage ? 2 : 3;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  }
}
