#include "heightcalc.h"

#include "core/errors.hpp"
#include "core/heights.hpp"
#include "core/lfunc.hpp"
#include "core/local_nonarch.hpp"
#include "core/numberfield.hpp"
#include "core/verify.hpp"

#include <cstdlib>
#include <cstring>
#include <string>

struct hc_field {
  hc::number_field f;
};

struct hc_ramset {
  hc::number_field field; // snapshot of the field the set was parsed against
  hc::ramification_set s;
};

struct hc_height {
  hc::ht::height_result r;
};

struct hc_report {
  hc::vf::verify_report rep;
};

namespace {

thread_local std::string g_last_error = "ok";

char *dup_string(const std::string &s) {
  char *out = static_cast<char *>(std::malloc(s.size() + 1));
  if (out)
    std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

// Runs fn inside the canonical exception-to-status mapping.
template <class Fn> hc_status guarded(Fn &&fn) {
  try {
    return fn();
  } catch (const hc::verification_error &e) {
    g_last_error = e.what();
    return HC_ERROR_VERIFY;
  } catch (const hc::domain_error &e) {
    g_last_error = e.what();
    return HC_ERROR_DOMAIN;
  } catch (const std::invalid_argument &e) {
    g_last_error = e.what();
    return HC_ERROR_ARGUMENT;
  } catch (const std::exception &e) {
    g_last_error = e.what();
    return HC_ERROR_INTERNAL;
  } catch (...) {
    g_last_error = "unknown error";
    return HC_ERROR_INTERNAL;
  }
}

// Same, but reports domain errors as argument errors (for parse entry points
// where a bad string is an argument problem, not a formula domain problem).
template <class Fn> hc_status guarded_parse(Fn &&fn) {
  hc_status st = guarded(std::forward<Fn>(fn));
  return st == HC_ERROR_DOMAIN ? HC_ERROR_ARGUMENT : st;
}

hc_status require(bool ok, const char *message) {
  if (ok)
    return HC_OK;
  g_last_error = message;
  return HC_ERROR_ARGUMENT;
}

bool same_field(const hc::number_field &a, const hc::number_field &b) {
  return a.kind == b.kind && a.radicand == b.radicand && a.disc == b.disc;
}

hc_status check_pair(const hc_field *f, const hc_ramset *s) {
  if (hc_status st = require(f && s, "null handle"))
    return st;
  return require(same_field(f->f, s->field),
                 "ramification set was parsed against a different field");
}

hc_status out_height(hc::ht::height_result r, hc_height **out) {
  *out = new hc_height{std::move(r)};
  return HC_OK;
}

} // namespace

extern "C" {

const char *hc_last_error(void) { return g_last_error.c_str(); }

void hc_string_free(char *s) { std::free(s); }

/* ------------------------------------------------------------------ */

hc_status hc_field_parse(const char *text, hc_field **out) {
  if (hc_status st = require(text && out, "null argument"))
    return st;
  return guarded_parse([&] {
    *out = new hc_field{hc::parse_field(text)};
    return HC_OK;
  });
}

void hc_field_free(hc_field *f) { delete f; }

hc_status hc_field_degree(const hc_field *f, int *out) {
  if (hc_status st = require(f && out, "null argument"))
    return st;
  *out = f->f.degree;
  return HC_OK;
}

hc_status hc_field_discriminant(const hc_field *f, long long *out) {
  if (hc_status st = require(f && out, "null argument"))
    return st;
  *out = f->f.disc;
  return HC_OK;
}

hc_status hc_field_set_class_number(hc_field *f, long long h) {
  if (hc_status st = require(f != nullptr, "null argument"))
    return st;
  if (h < 1) {
    g_last_error = "class number must be positive";
    return HC_ERROR_DOMAIN;
  }
  f->f.class_number = h;
  return HC_OK;
}

hc_status hc_field_render(const hc_field *f, char **out) {
  if (hc_status st = require(f && out, "null argument"))
    return st;
  return guarded([&] {
    *out = dup_string(hc::render_field(f->f));
    return *out ? HC_OK : HC_ERROR_INTERNAL;
  });
}

/* ------------------------------------------------------------------ */

hc_status hc_ramset_parse(const hc_field *f, const char *text, hc_ramset **out) {
  if (hc_status st = require(f && text && out, "null argument"))
    return st;
  return guarded_parse([&] {
    *out = new hc_ramset{f->f, hc::parse_ramified(f->f, text)};
    return HC_OK;
  });
}

void hc_ramset_free(hc_ramset *s) { delete s; }

hc_status hc_ramset_size(const hc_ramset *s, size_t *out) {
  if (hc_status st = require(s && out, "null argument"))
    return st;
  *out = s->s.size();
  return HC_OK;
}

hc_status hc_ramset_discriminant(const hc_ramset *s, long long *out) {
  if (hc_status st = require(s && out, "null argument"))
    return st;
  *out = s->s.norm_discriminant();
  return HC_OK;
}

hc_status hc_ramset_render(const hc_ramset *s, char **out) {
  if (hc_status st = require(s && out, "null argument"))
    return st;
  return guarded([&] {
    *out = dup_string(hc::render_ramified(s->s));
    return *out ? HC_OK : HC_ERROR_INTERNAL;
  });
}

/* ------------------------------------------------------------------ */

hc_status hc_modular_height(const hc_field *f, const hc_ramset *s, hc_route route,
                            hc_height **out) {
  if (hc_status st = check_pair(f, s))
    return st;
  if (hc_status st = require(out != nullptr, "null argument"))
    return st;
  return guarded([&] {
    auto r = route == HC_ROUTE_TWO ? hc::ht::modular_height_via_s2(f->f, s->s)
                                   : hc::ht::modular_height(f->f, s->s);
    return out_height(std::move(r), out);
  });
}

hc_status hc_kry_height(const hc_field *f, const hc_ramset *s, hc_height **out) {
  if (hc_status st = check_pair(f, s))
    return st;
  if (hc_status st = require(out != nullptr, "null argument"))
    return st;
  return guarded([&] { return out_height(hc::ht::kry_height(f->f, s->s), out); });
}

void hc_height_free(hc_height *h) { delete h; }

hc_status hc_height_value(const hc_height *h, double *out) {
  if (hc_status st = require(h && out, "null argument"))
    return st;
  *out = h->r.value;
  return HC_OK;
}

hc_status hc_height_term_count(const hc_height *h, size_t *out) {
  if (hc_status st = require(h && out, "null argument"))
    return st;
  *out = h->r.terms.size();
  return HC_OK;
}

hc_status hc_height_term_label(const hc_height *h, size_t i, char **out) {
  if (hc_status st = require(h && out, "null argument"))
    return st;
  if (hc_status st = require(i < h->r.terms.size(), "term index out of range"))
    return st;
  *out = dup_string(h->r.terms[i].label);
  return *out ? HC_OK : HC_ERROR_INTERNAL;
}

hc_status hc_height_term_value(const hc_height *h, size_t i, double *out) {
  if (hc_status st = require(h && out, "null argument"))
    return st;
  if (hc_status st = require(i < h->r.terms.size(), "term index out of range"))
    return st;
  *out = h->r.terms[i].value;
  return HC_OK;
}

hc_status hc_cm_height_from_disc(long long d_e, long long d_b, double *out) {
  if (hc_status st = require(out != nullptr, "null argument"))
    return st;
  return guarded([&] {
    *out = hc::ht::cm_height_from_disc(d_e, d_b);
    return HC_OK;
  });
}

hc_status hc_cm_height_supplied(double l_ratio, double d_b, double d_ef, double *out) {
  if (hc_status st = require(out != nullptr, "null argument"))
    return st;
  return guarded([&] {
    *out = hc::ht::cm_height_supplied(l_ratio, d_b, d_ef);
    return HC_OK;
  });
}

hc_status hc_vigneras_degree(const hc_field *f, const hc_ramset *s, char **exact,
                             double *approx) {
  if (hc_status st = check_pair(f, s))
    return st;
  return guarded([&] {
    hc::rational deg = hc::ht::vigneras_degree(f->f, s->s);
    if (exact) {
      *exact = dup_string(hc::to_string(deg));
      if (!*exact)
        return HC_ERROR_INTERNAL;
    }
    if (approx)
      *approx = hc::to_double(deg);
    return HC_OK;
  });
}

/* ------------------------------------------------------------------ */

hc_status hc_local_whittaker(long long N, int delta, int r, hc_algebra algebra,
                             long s, char **exact, double *approx) {
  return guarded([&] {
    hc::whittaker_spec spec;
    spec.N = N;
    spec.delta = delta;
    spec.r = r;
    spec.u_unit = true;
    spec.algebra = algebra == HC_ALGEBRA_DIVISION ? hc::algebra_kind::division_nonsplit
                                                  : hc::algebra_kind::matrix_split;
    hc::sqrt_val v = hc::local::whittaker_value(spec, s);
    if (exact) {
      *exact = dup_string(v.str());
      if (!*exact)
        return HC_ERROR_INTERNAL;
    }
    if (approx)
      *approx = v.value();
    return HC_OK;
  });
}

hc_status hc_zeta_log_deriv(const hc_field *f, hc_route route, double *out) {
  if (hc_status st = require(f && out, "null argument"))
    return st;
  return guarded([&] {
    *out = route == HC_ROUTE_TWO ? hc::lf::zeta_log_deriv_at2(f->f)
                                 : hc::lf::zeta_log_deriv_at_minus1(f->f);
    return HC_OK;
  });
}

hc_status hc_zeta_value_at_minus1(const hc_field *f, char **exact, double *approx) {
  if (hc_status st = require(f != nullptr, "null argument"))
    return st;
  return guarded([&] {
    hc::rational v = hc::lf::zeta_value_at_minus1(f->f);
    if (exact) {
      *exact = dup_string(hc::to_string(v));
      if (!*exact)
        return HC_ERROR_INTERNAL;
    }
    if (approx)
      *approx = hc::to_double(v);
    return HC_OK;
  });
}

hc_status hc_quad_l_log_deriv_at0(long long d, double *out) {
  if (hc_status st = require(out != nullptr, "null argument"))
    return st;
  return guarded([&] {
    *out = hc::lf::l_log_deriv_at0(d);
    return HC_OK;
  });
}

/* ------------------------------------------------------------------ */

hc_status hc_verify_run(const char *suite, int thorough, hc_report **out) {
  if (hc_status st = require(suite && out, "null argument"))
    return st;
  return guarded([&] {
    hc::vf::verify_config cfg;
    cfg.thorough = thorough != 0;
    *out = new hc_report{hc::vf::run_suite(suite, cfg)};
    return HC_OK;
  });
}

void hc_report_free(hc_report *r) { delete r; }

hc_status hc_report_overall(const hc_report *r, int *out) {
  if (hc_status st = require(r && out, "null argument"))
    return st;
  *out = r->rep.overall ? 1 : 0;
  return HC_OK;
}

hc_status hc_report_check_count(const hc_report *r, size_t *total, size_t *passed) {
  if (hc_status st = require(r != nullptr, "null argument"))
    return st;
  if (total)
    *total = r->rep.checks.size();
  if (passed)
    *passed = r->rep.passed;
  return HC_OK;
}

hc_status hc_report_json(const hc_report *r, char **out) {
  if (hc_status st = require(r && out, "null argument"))
    return st;
  return guarded([&] {
    *out = dup_string(hc::vf::report_json(r->rep));
    return *out ? HC_OK : HC_ERROR_INTERNAL;
  });
}

} /* extern "C" */
