#include "core/numberfield.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace hc {

namespace {

std::string strip(const std::string &s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b])))
    ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1])))
    --e;
  return s.substr(b, e - b);
}

std::vector<std::string> split_list(const std::string &s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : s) {
    if (ch == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  out.push_back(cur);
  return out;
}

long long parse_ll(const std::string &s, const std::string &what) {
  try {
    std::size_t pos = 0;
    long long v = std::stoll(s, &pos);
    if (pos != s.size())
      throw std::invalid_argument(s);
    return v;
  } catch (const std::exception &) {
    throw domain_error("cannot parse " + what + ": '" + s + "'");
  }
}

} // namespace

bool is_prime(long long n) {
  if (n < 2)
    return false;
  for (long long d = 2; d * d <= n; ++d)
    if (n % d == 0)
      return false;
  return true;
}

bool is_squarefree(long long n) {
  if (n == 0)
    return false;
  if (n < 0)
    n = -n;
  for (long long d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      n /= d;
      if (n % d == 0)
        return false;
    }
  }
  return true;
}

bool is_fundamental_discriminant(long long d) {
  if (d == 0 || d == 1)
    return false;
  long long m4 = ((d % 4) + 4) % 4;
  if (m4 == 1)
    return is_squarefree(d);
  if (m4 != 0)
    return false;
  long long m = d / 4;
  long long mm4 = ((m % 4) + 4) % 4;
  return (mm4 == 2 || mm4 == 3) && is_squarefree(m);
}

int kronecker_symbol(long long a, long long n) {
  if (n == 0)
    return (a == 1 || a == -1) ? 1 : 0;
  if (a % 2 == 0 && n % 2 == 0)
    return 0;
  int k = 1;
  long long v = 0;
  while (n % 2 == 0) {
    n /= 2;
    ++v;
  }
  if (v % 2 == 1) {
    long long am8 = ((a % 8) + 8) % 8;
    k = (am8 == 1 || am8 == 7) ? 1 : -1;
  }
  if (n < 0) {
    n = -n;
    if (a < 0)
      k = -k;
  }
  // n odd and positive from here on; standard quadratic reciprocity loop.
  for (;;) {
    if (n == 1)
      return k;
    a %= n;
    if (a < 0)
      a += n;
    if (a == 0)
      return 0;
    v = 0;
    while (a % 2 == 0) {
      a /= 2;
      ++v;
    }
    if (v % 2 == 1) {
      long long nm8 = n % 8;
      if (nm8 == 3 || nm8 == 5)
        k = -k;
    }
    if (a % 4 == 3 && n % 4 == 3)
      k = -k;
    std::swap(a, n);
  }
}

number_field parse_field(const std::string &text) {
  std::string s = strip(text);
  if (s == "Q" || s == "q") {
    number_field f;
    return f;
  }
  // Accept Q(sqrt D) with optional interior whitespace.
  std::string compact;
  for (char ch : s)
    if (!std::isspace(static_cast<unsigned char>(ch)))
      compact += ch;
  const std::string head = "Q(sqrt";
  if (compact.size() > head.size() + 1 && compact.compare(0, head.size(), head) == 0 &&
      compact.back() == ')') {
    long long d =
        parse_ll(compact.substr(head.size(), compact.size() - head.size() - 1), "radicand");
    if (d <= 1)
      throw domain_error("field radicand must exceed 1");
    if (!is_squarefree(d))
      throw domain_error("field radicand must be squarefree");
    number_field f;
    f.kind = field_kind::real_quadratic;
    f.degree = 2;
    f.radicand = d;
    f.disc = (((d % 4) + 4) % 4 == 1) ? d : 4 * d;
    return f;
  }
  throw domain_error("cannot parse field '" + text + "' (expected Q or Q(sqrt D))");
}

std::string render_field(const number_field &f) {
  if (f.kind == field_kind::rationals)
    return "Q";
  return "Q(sqrt " + std::to_string(f.radicand) + ")";
}

split_type splitting(const number_field &f, long long p) {
  if (!is_prime(p))
    throw domain_error("splitting: " + std::to_string(p) + " is not prime");
  if (f.kind == field_kind::rationals)
    return split_type::inert; // single place with residue degree 1
  int chi = kronecker_symbol(f.disc, p);
  if (chi == 0)
    return split_type::ramified;
  return chi == 1 ? split_type::split : split_type::inert;
}

std::vector<finite_place> places_above(const number_field &f, long long p) {
  if (!is_prime(p))
    throw domain_error("places_above: " + std::to_string(p) + " is not prime");
  std::vector<finite_place> out;
  if (f.kind == field_kind::rationals) {
    finite_place v;
    v.p = p;
    v.type = split_type::inert;
    v.residue_degree = 1;
    v.ram_index = 1;
    v.norm = p;
    v.different_val = 0;
    out.push_back(v);
    return out;
  }
  switch (splitting(f, p)) {
  case split_type::split:
    for (int i = 0; i < 2; ++i) {
      finite_place v;
      v.p = p;
      v.type = split_type::split;
      v.residue_degree = 1;
      v.ram_index = 1;
      v.norm = p;
      v.different_val = 0;
      v.conj_index = i;
      out.push_back(v);
    }
    break;
  case split_type::inert: {
    finite_place v;
    v.p = p;
    v.type = split_type::inert;
    v.residue_degree = 2;
    v.ram_index = 1;
    v.norm = p * p;
    v.different_val = 0;
    out.push_back(v);
    break;
  }
  case split_type::ramified: {
    finite_place v;
    v.p = p;
    v.type = split_type::ramified;
    v.residue_degree = 1;
    v.ram_index = 2;
    v.norm = p;
    // Valuation of the local different: 1 for odd p, v_2(disc) for p = 2.
    if (p == 2) {
      long long d = f.disc;
      int e = 0;
      while (d % 2 == 0) {
        d /= 2;
        ++e;
      }
      v.different_val = e;
    } else {
      v.different_val = 1;
    }
    out.push_back(v);
    break;
  }
  }
  return out;
}

long long ramification_set::norm_discriminant() const {
  long long d = 1;
  for (const auto &v : places)
    d *= v.norm;
  return d;
}

bool ramification_set::parity_ok(const number_field &f) const {
  return (places.size() + static_cast<std::size_t>(f.degree)) % 2 == 1;
}

ramification_set parse_ramified(const number_field &f, const std::string &text) {
  ramification_set out;
  std::string s = strip(text);
  if (s.empty())
    return out;
  for (const std::string &raw : split_list(s, ',')) {
    std::string item = strip(raw);
    if (item.empty())
      throw domain_error("empty entry in ramification list");
    std::string psec = item, sel;
    if (auto pos = item.find(':'); pos != std::string::npos) {
      psec = strip(item.substr(0, pos));
      sel = strip(item.substr(pos + 1));
    }
    long long p = parse_ll(psec, "prime");
    if (!is_prime(p))
      throw domain_error("ramified entry " + std::to_string(p) + " is not prime");
    auto places = places_above(f, p);
    finite_place chosen;
    if (f.kind == field_kind::rationals) {
      if (!sel.empty())
        throw domain_error("field Q has a unique place above " + std::to_string(p) +
                           "; selector '" + sel + "' is not allowed");
      chosen = places[0];
    } else {
      split_type st = splitting(f, p);
      if (sel.empty()) {
        if (st == split_type::split)
          throw domain_error("prime " + std::to_string(p) +
                             " splits; use " + std::to_string(p) + ":split1 or " +
                             std::to_string(p) + ":split2");
        chosen = places[0];
      } else if (sel == "split1" || sel == "split2") {
        if (st != split_type::split)
          throw domain_error("prime " + std::to_string(p) + " does not split in " +
                             render_field(f));
        chosen = places[sel == "split1" ? 0 : 1];
      } else if (sel == "inert") {
        if (st != split_type::inert)
          throw domain_error("prime " + std::to_string(p) + " is not inert in " +
                             render_field(f));
        chosen = places[0];
      } else if (sel == "ram") {
        if (st != split_type::ramified)
          throw domain_error("prime " + std::to_string(p) + " is not ramified in " +
                             render_field(f));
        chosen = places[0];
      } else {
        throw domain_error("unknown place selector '" + sel + "'");
      }
    }
    for (const auto &v : out.places)
      if (v.p == chosen.p && v.conj_index == chosen.conj_index)
        throw domain_error("duplicate place above " + std::to_string(p));
    out.places.push_back(chosen);
  }
  std::sort(out.places.begin(), out.places.end(), [](const auto &a, const auto &b) {
    return std::tie(a.p, a.conj_index) < std::tie(b.p, b.conj_index);
  });
  return out;
}

std::string render_ramified(const ramification_set &s) {
  std::ostringstream os;
  bool first = true;
  for (const auto &v : s.places) {
    if (!first)
      os << ", ";
    first = false;
    os << v.p;
    if (v.type == split_type::split)
      os << ":split" << (v.conj_index + 1);
  }
  return os.str();
}

} // namespace hc
