#include "heightcalc.h"

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <iomanip>
#include <iostream>
#include <string>
#include <vector>

namespace {

using nlohmann::json;

int status_exit(hc_status st) {
  switch (st) {
  case HC_OK:
    return 0;
  case HC_ERROR_VERIFY:
    return 2;
  default:
    return 1;
  }
}

int fail(hc_status st) {
  std::cerr << "error: " << hc_last_error() << "\n";
  return status_exit(st);
}

struct field_handle {
  hc_field *p = nullptr;
  ~field_handle() { hc_field_free(p); }
};
struct ramset_handle {
  hc_ramset *p = nullptr;
  ~ramset_handle() { hc_ramset_free(p); }
};
struct height_handle {
  hc_height *p = nullptr;
  ~height_handle() { hc_height_free(p); }
};
struct report_handle {
  hc_report *p = nullptr;
  ~report_handle() { hc_report_free(p); }
};
struct string_handle {
  char *p = nullptr;
  ~string_handle() { hc_string_free(p); }
};

struct options {
  std::string field = "Q";
  std::string ramified;
  std::string route = "minus1";
  std::string normalization = "modular";
  std::string format = "table";
  std::string suite = "all";
  double precision = 1e-10;
  long long class_number = 1;
  long long disc_e = 0;
  long long disc_b = 1;
  long long prime = 2;
  int delta = 0;
  int r = 0;
  std::string algebra = "matrix";
  long s = 1;
  bool thorough = false;
};

std::ostream &num(std::ostream &os) { return os << std::setprecision(15); }

hc_status collect_terms(const hc_height *h, json &terms) {
  size_t n = 0;
  if (hc_status st = hc_height_term_count(h, &n))
    return st;
  for (size_t i = 0; i < n; ++i) {
    string_handle label;
    double value = 0;
    if (hc_status st = hc_height_term_label(h, i, &label.p))
      return st;
    if (hc_status st = hc_height_term_value(h, i, &value))
      return st;
    terms.push_back({{"label", label.p}, {"value", value}});
  }
  return HC_OK;
}

void print_terms_table(const json &terms) {
  for (const auto &t : terms)
    std::cout << "  " << std::left << std::setw(18) << t["label"].get<std::string>()
              << num << t["value"].get<double>() << "\n";
}

int run_height(const options &o) {
  field_handle f;
  if (hc_status st = hc_field_parse(o.field.c_str(), &f.p))
    return fail(st);
  ramset_handle s;
  if (hc_status st = hc_ramset_parse(f.p, o.ramified.c_str(), &s.p))
    return fail(st);

  auto one_route = [&](hc_route route, json &out) -> hc_status {
    height_handle h;
    hc_status st = o.normalization == "hodge"
                       ? hc_kry_height(f.p, s.p, &h.p)
                       : hc_modular_height(f.p, s.p, route, &h.p);
    if (st)
      return st;
    double value = 0;
    if ((st = hc_height_value(h.p, &value)))
      return st;
    json terms = json::array();
    if ((st = collect_terms(h.p, terms)))
      return st;
    out = {{"value", value}, {"terms", std::move(terms)}};
    return HC_OK;
  };

  json result{{"field", o.field},
              {"ramified", o.ramified},
              {"normalization", o.normalization}};

  if (o.route == "both" && o.normalization != "hodge") {
    json a, b;
    if (hc_status st = one_route(HC_ROUTE_MINUS_ONE, a))
      return fail(st);
    if (hc_status st = one_route(HC_ROUTE_TWO, b))
      return fail(st);
    const double diff =
        a["value"].get<double>() - b["value"].get<double>();
    const bool consistent = std::abs(diff) <= 2 * o.precision;
    result["routes"] = {{"minus1", a}, {"two", b}};
    result["difference"] = diff;
    result["consistent"] = consistent;
    if (o.format == "json") {
      std::cout << result.dump(2) << "\n";
    } else {
      std::cout << "field      " << o.field << "\n"
                << "ramified   " << o.ramified << "\n"
                << "route minus1:\n";
      print_terms_table(a["terms"]);
      std::cout << "  height            " << num << a["value"].get<double>() << "\n"
                << "route two:\n";
      print_terms_table(b["terms"]);
      std::cout << "  height            " << num << b["value"].get<double>() << "\n"
                << "difference " << num << diff << "\n";
    }
    if (!consistent) {
      std::cerr << "error: height routes disagree beyond tolerance\n";
      return 2;
    }
    return 0;
  }

  json single;
  hc_route route = o.route == "two" ? HC_ROUTE_TWO : HC_ROUTE_MINUS_ONE;
  if (hc_status st = one_route(route, single))
    return fail(st);
  result["route"] = o.normalization == "hodge" ? "minus1" : o.route;
  result["value"] = single["value"];
  result["terms"] = single["terms"];
  if (o.format == "json") {
    std::cout << result.dump(2) << "\n";
  } else {
    std::cout << "field      " << o.field << "\n"
              << "ramified   " << o.ramified << "\n"
              << "terms:\n";
    print_terms_table(result["terms"]);
    std::cout << "height     " << num << result["value"].get<double>() << "\n";
  }
  return 0;
}

int run_cm_height(const options &o) {
  double value = 0;
  if (hc_status st = hc_cm_height_from_disc(o.disc_e, o.disc_b, &value))
    return fail(st);
  if (o.format == "json") {
    json result{{"disc_e", o.disc_e}, {"disc_b", o.disc_b}, {"value", value}};
    std::cout << result.dump(2) << "\n";
  } else {
    std::cout << "cm height  " << num << value << "\n";
  }
  return 0;
}

int run_degree(const options &o) {
  field_handle f;
  if (hc_status st = hc_field_parse(o.field.c_str(), &f.p))
    return fail(st);
  if (hc_status st = hc_field_set_class_number(f.p, o.class_number))
    return fail(st);
  ramset_handle s;
  if (hc_status st = hc_ramset_parse(f.p, o.ramified.c_str(), &s.p))
    return fail(st);
  string_handle exact;
  double approx = 0;
  if (hc_status st = hc_vigneras_degree(f.p, s.p, &exact.p, &approx))
    return fail(st);
  if (o.format == "json") {
    json result{{"field", o.field},
                {"ramified", o.ramified},
                {"exact", exact.p},
                {"value", approx}};
    std::cout << result.dump(2) << "\n";
  } else {
    std::cout << "degree     " << exact.p << " = " << num << approx << "\n";
  }
  return 0;
}

int run_lvalue(const options &o, bool have_disc) {
  if (have_disc) {
    double value = 0;
    if (hc_status st = hc_quad_l_log_deriv_at0(o.disc_e, &value))
      return fail(st);
    if (o.format == "json") {
      json result{{"disc", o.disc_e}, {"l_log_deriv_at_0", value}};
      std::cout << result.dump(2) << "\n";
    } else {
      std::cout << "L'/L(0)    " << num << value << "\n";
    }
    return 0;
  }
  field_handle f;
  if (hc_status st = hc_field_parse(o.field.c_str(), &f.p))
    return fail(st);
  hc_route route = o.route == "two" ? HC_ROUTE_TWO : HC_ROUTE_MINUS_ONE;
  double ld = 0;
  if (hc_status st = hc_zeta_log_deriv(f.p, route, &ld))
    return fail(st);
  string_handle exact;
  double zm1 = 0;
  if (hc_status st = hc_zeta_value_at_minus1(f.p, &exact.p, &zm1))
    return fail(st);
  if (o.format == "json") {
    json result{{"field", o.field},
                {"route", o.route},
                {"zeta_log_deriv", ld},
                {"zeta_at_minus1", {{"exact", exact.p}, {"value", zm1}}}};
    std::cout << result.dump(2) << "\n";
  } else {
    std::cout << "zeta'/zeta (" << (route == HC_ROUTE_TWO ? "s=2" : "s=-1") << ")  "
              << num << ld << "\n"
              << "zeta(-1)   " << exact.p << " = " << num << zm1 << "\n";
  }
  return 0;
}

int run_local(const options &o) {
  string_handle exact;
  double approx = 0;
  hc_algebra alg = o.algebra == "division" ? HC_ALGEBRA_DIVISION : HC_ALGEBRA_MATRIX;
  if (hc_status st =
          hc_local_whittaker(o.prime, o.delta, o.r, alg, o.s, &exact.p, &approx))
    return fail(st);
  if (o.format == "json") {
    json result{{"prime", o.prime}, {"delta", o.delta},   {"r", o.r},
                {"algebra", o.algebra}, {"s", o.s},
                {"exact", exact.p},     {"value", approx}};
    std::cout << result.dump(2) << "\n";
  } else {
    std::cout << "whittaker  " << exact.p << " = " << num << approx << "\n";
  }
  return 0;
}

int run_verify(const options &o) {
  report_handle rep;
  if (hc_status st = hc_verify_run(o.suite.c_str(), o.thorough ? 1 : 0, &rep.p))
    return fail(st);
  string_handle js;
  if (hc_status st = hc_report_json(rep.p, &js.p))
    return fail(st);
  int overall = 0;
  if (hc_status st = hc_report_overall(rep.p, &overall))
    return fail(st);
  if (o.format == "json") {
    std::cout << js.p << "\n";
  } else {
    json parsed = json::parse(js.p);
    for (const auto &c : parsed["checks"]) {
      std::cout << (c["pass"].get<bool>() ? "PASS " : "FAIL ")
                << c["label"].get<std::string>();
      if (!c["pass"].get<bool>() && c["abs_error"].is_number())
        std::cout << "  (abs_error=" << c["abs_error"].get<double>()
                  << ", tolerance=" << c["tolerance"].get<double>() << ")";
      std::cout << "\n";
    }
    std::cout << parsed["passed"] << "/" << parsed["total"] << " checks passed\n";
  }
  return overall ? 0 : 2;
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"Heights, degrees, and local invariants of quaternionic curves"};
  app.require_subcommand(1);
  app.fallthrough();

  options o;
  app.add_option("--format", o.format, "Output format")
      ->check(CLI::IsMember({"table", "json"}));
  app.add_option("--precision", o.precision,
                 "Tolerance for cross-route comparisons")
      ->envname("HEIGHTCALC_PRECISION")
      ->check(CLI::Range(1e-12, 1e-2));

  auto *height = app.add_subcommand("height", "Modular height of a quaternionic curve");
  height->add_option("--field", o.field, "Base field: Q or Q(sqrt D)");
  height->add_option("--ramified", o.ramified,
                     "Finite ramification set, e.g. \"2,3\" or \"7:split1\"");
  height->add_option("--route", o.route, "Which zeta route to evaluate")
      ->check(CLI::IsMember({"minus1", "two", "both"}));
  height->add_option("--normalization", o.normalization,
                     "modular (default) or hodge (over Q, even set)")
      ->check(CLI::IsMember({"modular", "hodge"}));

  auto *cm = app.add_subcommand("cm-height", "Height of a CM point");
  cm->add_option("--disc-e", o.disc_e, "Fundamental discriminant < 0 of the CM field")
      ->required();
  cm->add_option("--disc-b", o.disc_b, "Reduced discriminant of the algebra (>= 1)");

  auto *degree = app.add_subcommand("degree", "Exact degree of the Hodge bundle");
  degree->add_option("--field", o.field, "Base field: Q or Q(sqrt D)");
  degree->add_option("--ramified", o.ramified, "Finite ramification set");
  degree->add_option("--class-number", o.class_number, "Class number of the field");

  auto *lvalue = app.add_subcommand("lvalue", "Zeta and L-function data");
  lvalue->add_option("--field", o.field, "Base field: Q or Q(sqrt D)");
  lvalue->add_option("--route", o.route, "minus1 or two")
      ->check(CLI::IsMember({"minus1", "two"}));
  auto *disc_opt = lvalue->add_option(
      "--disc", o.disc_e, "Quadratic L'(0)/L(0) for this fundamental discriminant < 0");

  auto *local = app.add_subcommand("local", "Local Whittaker value at a finite place");
  local->add_option("--prime", o.prime, "Residue characteristic")->required();
  local->add_option("--delta", o.delta, "Valuation of the local different");
  local->add_option("--r", o.r, "Valuation of the additive parameter");
  local->add_option("--algebra", o.algebra, "matrix or division")
      ->check(CLI::IsMember({"matrix", "division"}));
  local->add_option("--s", o.s, "Integer evaluation point, s >= 1");

  auto *verify = app.add_subcommand("verify", "Run a verification suite");
  verify->add_option("--suite", o.suite, "Suite name")
      ->check(CLI::IsMember(
          {"local-oracle", "local-identities", "archimedean", "global", "all"}));
  verify->add_flag("--thorough", o.thorough, "Widen the parameter grid");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  if (height->parsed())
    return run_height(o);
  if (cm->parsed())
    return run_cm_height(o);
  if (degree->parsed())
    return run_degree(o);
  if (lvalue->parsed())
    return run_lvalue(o, disc_opt->count() > 0);
  if (local->parsed())
    return run_local(o);
  if (verify->parsed())
    return run_verify(o);
  return 1;
}
