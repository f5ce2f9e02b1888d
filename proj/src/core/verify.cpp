#include "core/verify.hpp"

#include "core/arch_numerics.hpp"
#include "core/errors.hpp"
#include "core/heights.hpp"
#include "core/lfunc.hpp"
#include "core/padic_oracle.hpp"

#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <cmath>
#include <functional>
#include <limits>
#include <thread>
#include <utility>

namespace hc::vf {

namespace {

using local::check_result;

struct task {
  std::string label;
  std::function<check_result()> fn;
};

check_result basic(std::string label, double lhs, double rhs, double tol, bool pass) {
  check_result c;
  c.label = std::move(label);
  c.lhs = lhs;
  c.rhs = rhs;
  c.abs_error = std::abs(lhs - rhs);
  c.tolerance = tol;
  c.pass = pass;
  return c;
}

check_result exact(const std::string &label, const sqrt_val &a, const sqrt_val &b) {
  return basic(label, a.value(), b.value(), 0, a == b);
}

check_result exact(const std::string &label, const log_val &a, const log_val &b) {
  return basic(label, a.value(), b.value(), 0, a == b);
}

check_result exact(const std::string &label, const rational &a, const rational &b) {
  return basic(label, to_double(a), to_double(b), 0, a == b);
}

check_result near(const std::string &label, double lhs, double rhs, double tol) {
  return basic(label, lhs, rhs, tol, std::abs(lhs - rhs) <= tol);
}

// Relative comparison scaled by the larger magnitude.
check_result near_rel(const std::string &label, double lhs, double rhs, double rtol) {
  const double scale = std::max({std::abs(lhs), std::abs(rhs), 1e-12});
  return near(label, lhs, rhs, rtol * scale);
}

template <class Fn>
check_result expect_domain_throw(const std::string &label, Fn &&fn) {
  try {
    fn();
  } catch (const domain_error &) {
    return basic(label, 1, 1, 0, true);
  }
  return basic(label, 0, 1, 0, false);
}

std::string kind_name(algebra_kind k) {
  return k == algebra_kind::matrix_split ? "matrix" : "division";
}

// ---------------------------------------------------------------------------
// local-oracle: closed Whittaker forms against the lattice-point counter.

void add_oracle_tasks(std::vector<task> &tasks, const verify_config &cfg) {
  for (long long p : cfg.primes) {
    {
      std::string label = "oracle/unit-volume/p=" + std::to_string(p);
      tasks.push_back({label, [label, p] {
                         auto rep = oracle::unit_volume_check(p);
                         auto c = basic(label, to_double(rep.norm_one_density),
                                        to_double(rep.norm_one_expected), 0, rep.pass);
                         return c;
                       }});
    }
    for (int kind_i = 0; kind_i < 2; ++kind_i) {
      const auto kind =
          kind_i ? algebra_kind::division_nonsplit : algebra_kind::matrix_split;
      {
        // Non-unit similitude parameter: both routes must give zero.
        std::string label =
            "oracle/whittaker/" + kind_name(kind) + "/nonunit-u/p=" + std::to_string(p);
        tasks.push_back({label, [label, p, kind] {
                           whittaker_spec spec{p, 1, 1, false, kind};
                           return exact(label, local::whittaker_value(spec, 1),
                                        oracle::whittaker_oracle(spec, 1));
                         }});
      }
      for (int delta = 0; delta <= cfg.max_delta; ++delta) {
        std::vector<int> rs;
        rs.push_back(-delta - 1); // below the support of either form
        if (kind == algebra_kind::division_nonsplit)
          for (int r = -delta; r < 0; ++r)
            rs.push_back(r);
        for (int r = 0; r <= cfg.max_r; ++r)
          rs.push_back(r);
        for (int r : rs)
          for (long s = 1; s <= cfg.max_s; ++s) {
            std::string label = "oracle/whittaker/" + kind_name(kind) +
                                "/p=" + std::to_string(p) +
                                ",delta=" + std::to_string(delta) +
                                ",r=" + std::to_string(r) + ",s=" + std::to_string(s);
            tasks.push_back({label, [label, p, delta, r, s, kind] {
                               whittaker_spec spec{p, delta, r, true, kind};
                               return exact(label, local::whittaker_value(spec, s),
                                            oracle::whittaker_oracle(spec, s));
                             }});
          }
      }
    }
  }
}

// ---------------------------------------------------------------------------
// local-identities: exact relations between the closed forms.

void add_identity_tasks(std::vector<task> &tasks, const verify_config &cfg) {
  std::vector<long long> primes = cfg.primes;
  if (cfg.thorough && std::find(primes.begin(), primes.end(), 7) == primes.end())
    primes.push_back(7);

  for (long long p : primes) {
    const std::string sp = std::to_string(p);
    tasks.push_back({"identity/alpha/p=" + sp, [p, sp] {
                       return exact("identity/alpha/p=" + sp, local::alpha_constant(p),
                                    rational(p + 3) / (2 * (p + 1)));
                     }});
    tasks.push_back({"identity/height-coefficient/p=" + sp, [p, sp] {
                       return exact("identity/height-coefficient/p=" + sp,
                                    local::local_height_coefficient(p),
                                    rational(3 * p - 1) / (2 * (p - 1)));
                     }});
    tasks.push_back({"identity/component-weights/p=" + sp, [p, sp] {
                       auto [a0, a1] = local::component_weights(p);
                       bool ok = a0 + a1 == 0 && rational(p + 1) * (a0 - a1) == rational(1, 2);
                       return basic("identity/component-weights/p=" + sp, to_double(a0),
                                    to_double(rational(1, 4 * (p + 1))), 0,
                                    ok && a0 == rational(1, 4 * (p + 1)));
                     }});
    for (int r = 0; r <= cfg.max_r; ++r) {
      std::string label = "identity/hecke-cosets/p=" + sp + ",r=" + std::to_string(r);
      tasks.push_back({label, [label, p, r] {
                         long long geom = 0, pw = 1;
                         for (int i = 0; i <= r; ++i, pw *= p)
                           geom += pw;
                         long long counted = oracle::hecke_coset_count(p, r);
                         return basic(label, static_cast<double>(counted),
                                      static_cast<double>(geom), 0, counted == geom);
                       }});
    }
    for (int delta = 0; delta <= cfg.max_delta; ++delta) {
      const std::string pd = "p=" + sp + ",delta=" + std::to_string(delta);
      tasks.push_back({"identity/fourier-inversion/" + pd, [pd, p, delta] {
                         auto c = local::fourier_inversion_check(p, delta);
                         c.label = "identity/fourier-inversion/" + pd;
                         return c;
                       }});
      tasks.push_back({"identity/nonsplit-integral/" + pd, [pd, p, delta] {
                         auto c = local::nonsplit_integral_check(p, delta);
                         c.label = "identity/nonsplit-integral/" + pd;
                         return c;
                       }});
      tasks.push_back({"identity/intertwining-volume/" + pd, [pd, p, delta] {
                         auto iw = local::intertwining_w_value(p, delta);
                         sqrt_val expected{p, -local::division_unit_volume(p, delta), 0};
                         return exact("identity/intertwining-volume/" + pd, iw.w_phi,
                                      expected);
                       }});
      tasks.push_back(
          {"identity/siegel-weil-matches-whittaker/" + pd, [pd, p, delta] {
             auto sw = local::siegel_weil_whittaker(p, delta, 0,
                                                    algebra_kind::division_nonsplit);
             auto w0 = local::whittaker_nonsplit_form(p, delta, 0).value0();
             return exact("identity/siegel-weil-matches-whittaker/" + pd, sw, w0);
           }});
      for (int r = 0; r <= cfg.max_r; ++r) {
        const std::string pdr = pd + ",r=" + std::to_string(r);
        tasks.push_back({"identity/cancellation/" + pdr, [pdr, p, delta, r] {
                           auto c = local::cancellation_split(p, delta, r);
                           c.label = "identity/cancellation/" + pdr;
                           return c;
                         }});
        tasks.push_back({"identity/deriv-combo/" + pdr, [pdr, p, delta, r] {
                           return exact("identity/deriv-combo/" + pdr,
                                        local::whittaker_split_deriv_combo(p, delta, r),
                                        local::whittaker_split_deriv_combo_symbolic(
                                            p, delta, r));
                         }});
        tasks.push_back({"identity/hecke-defect/" + pdr, [pdr, p, delta, r] {
                           return exact("identity/hecke-defect/" + pdr,
                                        local::hecke_hodge_defect(p, delta, r),
                                        local::hecke_hodge_defect_counted(p, delta, r));
                         }});
        tasks.push_back(
            {"identity/wall-crossing/" + pdr, [pdr, p, delta, r] {
               auto [cplus, cminus] = local::wall_crossing_pair(p, delta);
               auto sum = cplus * local::siegel_weil_whittaker(
                                      p, delta, r, algebra_kind::matrix_split) +
                          cminus * local::siegel_weil_whittaker(
                                       p, delta, r, algebra_kind::division_nonsplit);
               return exact("identity/wall-crossing/" + pdr, sum, sqrt_val::one(p));
             }});
      }
    }
  }
}

// ---------------------------------------------------------------------------
// archimedean: quadrature and series cross-checks at the real place.

void add_arch_tasks(std::vector<task> &tasks, const verify_config &cfg) {
  (void)cfg;
  const double pi = 3.14159265358979323846;
  const std::vector<double> s_grid{0.25, 0.5, 1.0, 2.0, 4.0};
  const std::vector<double> t_grid{1.01, 1.5, 3.0, 10.0};

  for (double s : s_grid) {
    for (double t : t_grid) {
      std::string label = "arch/legendre-series-vs-quadrature/s=" + std::to_string(s) +
                          ",t=" + std::to_string(t);
      tasks.push_back({label, [label, s, t] {
                         return near_rel(label, arch::legendre_q(s, t),
                                         arch::legendre_q_integral_route(s, t), 1e-8);
                       }});
    }
    {
      std::string label = "arch/legendre-integral/s=" + std::to_string(s);
      tasks.push_back({label, [label, s] {
                         return near_rel(label, arch::legendre_q_integral(s),
                                         1.0 / (s * (s + 1)), 1e-6);
                       }});
    }
    {
      std::string label = "arch/legendre-endpoint-one/s=" + std::to_string(s);
      tasks.push_back({label, [label, s] {
                         return near(label, arch::legendre_q_endpoint_one(s), -1.0, 1e-6);
                       }});
    }
    {
      std::string label = "arch/legendre-endpoint-inf/s=" + std::to_string(s);
      tasks.push_back({label, [label, s] {
                         return near(label, arch::legendre_q_endpoint_inf(s), 0.0, 1e-6);
                       }});
    }
  }

  for (double a : {0.3, 1.0, 2.5}) {
    {
      std::string label = "arch/whittaker-continuity-at-0/a=" + std::to_string(a);
      tasks.push_back({label, [label, a] {
                         return near_rel(label, arch::arch_whittaker(a, 1e-6),
                                         arch::arch_whittaker(a, 0.0), 1e-4);
                       }});
    }
    {
      std::string label = "arch/whittaker-derivative/a=" + std::to_string(a);
      tasks.push_back({label, [label, a] {
                         const double h = 1e-4;
                         double fd = (arch::arch_whittaker(a, h) -
                                      arch::arch_whittaker(a, -h)) /
                                     (2 * h);
                         return near_rel(label, arch::arch_whittaker_deriv0(a).second,
                                         fd, 1e-6);
                       }});
    }
  }

  tasks.push_back({"arch/holproj-residue", [pi] {
                     return near("arch/holproj-residue", arch::holproj_residue(),
                                 pi / 2, 1e-7);
                   }});
  tasks.push_back({"arch/holproj-constant", [pi] {
                     return near("arch/holproj-constant",
                                 arch::holproj_laurent_constant(),
                                 pi * arch::holproj_constant(), 1e-7);
                   }});
  tasks.push_back({"arch/gamma-ratio-fd", [] {
                     return near("arch/gamma-ratio-fd", arch::gamma_ratio_deriv(),
                                 arch::gamma_ratio_deriv_fd(), 1e-7);
                   }});
  tasks.push_back({"arch/gamma-ratio-closed", [pi] {
                     double expected = 1 - lf::euler_gamma() - std::log(4 * pi);
                     return near("arch/gamma-ratio-closed", arch::gamma_ratio_deriv(),
                                 expected, 1e-12);
                   }});

  const std::vector<std::pair<double, double>> taus{
      {0.0, 1.0}, {0.5, 0.8660254037844386}, {0.3, 1.7}};
  for (double s : {2.0, 3.0}) {
    for (auto [x, y] : taus) {
      std::string label = "arch/eisenstein-fourier-vs-lattice/s=" + std::to_string(s) +
                          ",x=" + std::to_string(x) + ",y=" + std::to_string(y);
      tasks.push_back({label, [label, x, y, s] {
                         return near_rel(label, arch::eisenstein_fourier(x, y, s),
                                         arch::eisenstein_lattice(x, y, s, 1500), 1e-5);
                       }});
    }
  }
  for (auto [x, y] : taus) {
    std::string label =
        "arch/kronecker-limit/x=" + std::to_string(x) + ",y=" + std::to_string(y);
    tasks.push_back({label, [label, x, y] {
                       return near(label, arch::kronecker_residual(x, y), 0.0, 1e-6);
                     }});
  }
}

// ---------------------------------------------------------------------------
// global: heights, degrees, CM values, and zeta data over the base fields.

void add_global_tasks(std::vector<task> &tasks, const verify_config &cfg) {
  struct gcase {
    const char *field;
    const char *sigma;
  };
  const std::vector<gcase> cases{
      {"Q", ""},           {"Q", "2,3"},
      {"Q", "2,5"},        {"Q", "3,7"},
      {"Q", "2,3,5,7"},    {"Q(sqrt 2)", "2"},
      {"Q(sqrt 2)", "3"},  {"Q(sqrt 2)", "7:split1"},
      {"Q(sqrt 2)", "2,3,5"}, {"Q(sqrt 2)", "3,5,7:split2"},
      {"Q(sqrt 5)", "5"},  {"Q(sqrt 5)", "2"},
      {"Q(sqrt 5)", "11:split1"}, {"Q(sqrt 5)", "2,3,5"},
      {"Q(sqrt 5)", "2,3,11:split2"}};

  const double tol = std::max(cfg.precision, 1e-12);
  for (const auto &gc : cases) {
    std::string label = std::string("global/height-route-match/") + gc.field + "/[" +
                        gc.sigma + "]";
    std::string field = gc.field, sigma = gc.sigma;
    tasks.push_back({label, [label, field, sigma, tol] {
                       auto f = parse_field(field);
                       auto sg = parse_ramified(f, sigma);
                       return near(label, ht::modular_height(f, sg).value,
                                   ht::modular_height_via_s2(f, sg).value, tol);
                     }});
  }

  tasks.push_back({"global/height-rationals-unramified", [] {
                     auto f = parse_field("Q");
                     auto sg = parse_ramified(f, "");
                     // 1/2 - 12 log A with A the Glaisher-Kinkelin constant.
                     return near("global/height-rationals-unramified",
                                 ht::modular_height(f, sg).value,
                                 0.5 - 12 * 0.24875447703378427, 1e-8);
                   }});
  tasks.push_back({"global/hodge-normalization-2-3", [] {
                     auto f = parse_field("Q");
                     auto sg = parse_ramified(f, "2,3");
                     return near("global/hodge-normalization-2-3",
                                 ht::kry_height(f, sg).value, -1.4158871946513975,
                                 1e-8);
                   }});
  for (const char *sigma : {"", "2,3", "2,5", "3,7"}) {
    std::string label = std::string("global/height-vs-hodge-shift/[") + sigma + "]";
    std::string sg_text = sigma;
    tasks.push_back(
        {label, [label, sg_text] {
           auto f = parse_field("Q");
           auto sg = parse_ramified(f, sg_text);
           double shift = 0.5 * std::log(static_cast<double>(sg.norm_discriminant()));
           return near(label, ht::modular_height(f, sg).value - shift,
                       ht::kry_height(f, sg).value, 1e-10);
         }});
  }

  tasks.push_back({"global/degree-rationals-2-3", [] {
                     auto f = parse_field("Q");
                     auto sg = parse_ramified(f, "2,3");
                     return exact("global/degree-rationals-2-3",
                                  ht::vigneras_degree(f, sg), rational(1, 3));
                   }});
  tasks.push_back({"global/degree-rationals-unramified", [] {
                     auto f = parse_field("Q");
                     auto sg = parse_ramified(f, "");
                     return exact("global/degree-rationals-unramified",
                                  ht::vigneras_degree(f, sg), rational(1, 6));
                   }});
  tasks.push_back({"global/degree-sqrt5-2", [] {
                     auto f = parse_field("Q(sqrt 5)");
                     auto sg = parse_ramified(f, "2");
                     return exact("global/degree-sqrt5-2", ht::vigneras_degree(f, sg),
                                  rational(1, 10));
                   }});

  tasks.push_back({"global/cm-gauss-field", [] {
                     return near("global/cm-gauss-field", ht::cm_height_from_disc(-4, 1),
                                 -1.476335965973619, 1e-8);
                   }});
  tasks.push_back({"global/cm-discriminant-shift", [] {
                     double d = ht::cm_height_from_disc(-4, 6) -
                                ht::cm_height_from_disc(-4, 1);
                     return near("global/cm-discriminant-shift", d, 0.5 * std::log(6.0),
                                 1e-12);
                   }});
  tasks.push_back({"global/l-log-deriv-gauss", [] {
                     return near("global/l-log-deriv-gauss", lf::l_log_deriv_at0(-4),
                                 0.7831887854136739, 1e-8);
                   }});

  struct zcase {
    const char *field;
    rational expected;
  };
  const std::vector<zcase> zcases{{"Q", rational(-1, 12)},
                                  {"Q(sqrt 2)", rational(1, 12)},
                                  {"Q(sqrt 5)", rational(1, 30)}};
  for (const auto &zc : zcases) {
    std::string label = std::string("global/zeta-at-minus1/") + zc.field;
    std::string field = zc.field;
    rational expected = zc.expected;
    tasks.push_back({label, [label, field, expected] {
                       auto f = parse_field(field);
                       return exact(label, lf::zeta_value_at_minus1(f), expected);
                     }});
  }
  tasks.push_back({"global/zeta-log-deriv-minus1-rationals", [] {
                     auto f = parse_field("Q");
                     return near("global/zeta-log-deriv-minus1-rationals",
                                 lf::zeta_log_deriv_at_minus1(f), 1.9850537244054112,
                                 1e-9);
                   }});
  tasks.push_back({"global/zeta-log-deriv-2-rationals", [] {
                     auto f = parse_field("Q");
                     return near("global/zeta-log-deriv-2-rationals",
                                 lf::zeta_log_deriv_at2(f), -0.5699609930945332, 1e-9);
                   }});

  tasks.push_back({"global/parity-rejected-rationals", [] {
                     return expect_domain_throw("global/parity-rejected-rationals", [] {
                       auto f = parse_field("Q");
                       auto sg = parse_ramified(f, "2");
                       ht::modular_height(f, sg);
                     });
                   }});
  tasks.push_back({"global/parity-rejected-quadratic", [] {
                     return expect_domain_throw("global/parity-rejected-quadratic", [] {
                       auto f = parse_field("Q(sqrt 2)");
                       auto sg = parse_ramified(f, "2,3");
                       ht::vigneras_degree(f, sg);
                     });
                   }});
  tasks.push_back({"global/hodge-needs-rationals", [] {
                     return expect_domain_throw("global/hodge-needs-rationals", [] {
                       auto f = parse_field("Q(sqrt 2)");
                       auto sg = parse_ramified(f, "3");
                       ht::kry_height(f, sg);
                     });
                   }});
  tasks.push_back({"global/cm-rejects-nonfundamental", [] {
                     return expect_domain_throw("global/cm-rejects-nonfundamental",
                                                [] { ht::cm_height_from_disc(-12, 1); });
                   }});
}

std::vector<task> build_tasks(const std::string &suite, const verify_config &cfg) {
  std::vector<task> tasks;
  bool matched = false;
  if (suite == "local-oracle" || suite == "all") {
    add_oracle_tasks(tasks, cfg);
    matched = true;
  }
  if (suite == "local-identities" || suite == "all") {
    add_identity_tasks(tasks, cfg);
    matched = true;
  }
  if (suite == "archimedean" || suite == "all") {
    add_arch_tasks(tasks, cfg);
    matched = true;
  }
  if (suite == "global" || suite == "all") {
    add_global_tasks(tasks, cfg);
    matched = true;
  }
  if (!matched)
    throw domain_error("unknown verify suite: " + suite);
  return tasks;
}

} // namespace

const std::vector<std::string> &suite_names() {
  static const std::vector<std::string> names{"local-oracle", "local-identities",
                                              "archimedean", "global", "all"};
  return names;
}

verify_report run_suite(const std::string &suite, const verify_config &cfg) {
  verify_config eff = cfg;
  if (eff.thorough)
    eff.max_r += 1;
  auto tasks = build_tasks(suite, eff);

  verify_report report;
  report.suite = suite;
  report.checks.resize(tasks.size());

  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= tasks.size())
        return;
      try {
        report.checks[i] = tasks[i].fn();
      } catch (const std::exception &e) {
        check_result c;
        c.label = tasks[i].label + " [error: " + e.what() + "]";
        c.lhs = c.rhs = std::numeric_limits<double>::quiet_NaN();
        c.abs_error = std::numeric_limits<double>::quiet_NaN();
        c.pass = false;
        report.checks[i] = c;
      }
    }
  };

  unsigned nthreads = eff.threads;
  if (nthreads == 0)
    nthreads = std::min(8u, std::max(1u, std::thread::hardware_concurrency()));
  nthreads = std::min<unsigned>(nthreads, tasks.size() ? tasks.size() : 1);
  if (nthreads <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(nthreads);
    for (unsigned i = 0; i < nthreads; ++i)
      pool.emplace_back(worker);
    for (auto &t : pool)
      t.join();
  }

  std::sort(report.checks.begin(), report.checks.end(),
            [](const check_result &a, const check_result &b) { return a.label < b.label; });
  report.passed = static_cast<std::size_t>(
      std::count_if(report.checks.begin(), report.checks.end(),
                    [](const check_result &c) { return c.pass; }));
  report.overall = report.passed == report.checks.size();
  return report;
}

std::string report_json(const verify_report &report) {
  nlohmann::json j;
  j["suite"] = report.suite;
  j["overall"] = report.overall;
  j["passed"] = report.passed;
  j["total"] = report.checks.size();
  auto &arr = j["checks"] = nlohmann::json::array();
  for (const auto &c : report.checks) {
    nlohmann::json jc;
    jc["label"] = c.label;
    jc["lhs"] = c.lhs;
    jc["rhs"] = c.rhs;
    jc["abs_error"] = c.abs_error;
    jc["tolerance"] = c.tolerance;
    jc["pass"] = c.pass;
    arr.push_back(std::move(jc));
  }
  return j.dump(2);
}

} // namespace hc::vf
