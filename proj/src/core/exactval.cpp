#include "core/exactval.hpp"

#include <cmath>
#include <sstream>

namespace hc {

double to_double(const rational &x) { return x.convert_to<double>(); }

std::string to_string(const rational &x) {
  std::ostringstream os;
  os << x;
  return os.str();
}

rational rat_pow(const rational &x, long e) {
  if (e == 0)
    return 1;
  if (x == 0) {
    if (e < 0)
      throw std::domain_error("rat_pow: zero to negative power");
    return 0;
  }
  const unsigned long a = static_cast<unsigned long>(e < 0 ? -e : e);
  bigint num = boost::multiprecision::pow(boost::multiprecision::numerator(x), a);
  bigint den = boost::multiprecision::pow(boost::multiprecision::denominator(x), a);
  // Divide rather than construct from (den, num): num may be negative and the
  // two-argument constructor requires a positive denominator.
  return e > 0 ? rational(num, den) : rational(den) / rational(num);
}

sqrt_val::sqrt_val(long long base, rational coeff, int parity)
    : N(base), c(std::move(coeff)), par(parity) {
  if (N <= 0)
    throw std::domain_error("sqrt_val: base must be positive");
  if (par != 0 && par != 1)
    throw std::domain_error("sqrt_val: parity must be 0 or 1");
  if (c == 0)
    par = 0;
}

sqrt_val sqrt_val::half_pow(long long base, long e) {
  const long q = (e >= 0) ? e / 2 : -((-e + 1) / 2);
  const int parity = static_cast<int>(e - 2 * q); // e = 2q + parity, parity in {0,1}
  return {base, rat_pow(rational(base), q), parity};
}

double sqrt_val::value() const {
  double v = to_double(c);
  if (par)
    v *= std::sqrt(static_cast<double>(N));
  return v;
}

std::string sqrt_val::str() const {
  if (is_zero())
    return "0";
  std::string s = to_string(c);
  if (par)
    s += "*sqrt(" + std::to_string(N) + ")";
  return s;
}

sqrt_val sqrt_val::operator-() const {
  sqrt_val r = *this;
  r.c = -r.c;
  return r;
}

namespace {
void require_same_base(const sqrt_val &a, const sqrt_val &b) {
  if (!a.is_zero() && !b.is_zero() && a.N != b.N)
    throw std::logic_error("sqrt_val: mixed bases");
}
} // namespace

sqrt_val &sqrt_val::operator+=(const sqrt_val &o) {
  require_same_base(*this, o);
  if (o.is_zero())
    return *this;
  if (is_zero()) {
    *this = o;
    return *this;
  }
  if (par != o.par)
    throw std::logic_error("sqrt_val: cannot add rational and irrational parts");
  c += o.c;
  if (c == 0)
    par = 0;
  return *this;
}

sqrt_val &sqrt_val::operator-=(const sqrt_val &o) { return *this += -o; }

sqrt_val operator*(const sqrt_val &a, const sqrt_val &b) {
  require_same_base(a, b);
  const long long base = a.is_zero() ? b.N : a.N;
  if (a.is_zero() || b.is_zero())
    return sqrt_val::zero(base);
  sqrt_val r(base, a.c * b.c, (a.par + b.par) % 2);
  if (a.par && b.par)
    r.c *= base; // sqrt(N)*sqrt(N) folds back into the rational part
  return r;
}

bool operator==(const sqrt_val &a, const sqrt_val &b) {
  if (a.is_zero() && b.is_zero())
    return true;
  if (a.is_zero() || b.is_zero())
    return false;
  return a.N == b.N && a.par == b.par && a.c == b.c;
}

log_val::log_val(sqrt_val plain, sqrt_val log_coeff)
    : a(std::move(plain)), b(std::move(log_coeff)) {
  require_same_base(a, b);
}

double log_val::value() const {
  double v = a.value();
  if (!b.is_zero())
    v += b.value() * std::log(static_cast<double>(b.N));
  return v;
}

std::string log_val::str() const {
  if (is_zero())
    return "0";
  std::string s;
  if (!a.is_zero())
    s = a.str();
  if (!b.is_zero()) {
    if (!s.empty())
      s += " + ";
    s += "(" + b.str() + ")*log(" + std::to_string(b.N) + ")";
  }
  return s;
}

log_val log_val::operator-() const { return {-a, -b}; }

log_val &log_val::operator+=(const log_val &o) {
  a += o.a;
  b += o.b;
  return *this;
}

log_val &log_val::operator-=(const log_val &o) { return *this += -o; }

bool operator==(const log_val &x, const log_val &y) {
  return x.a == y.a && x.b == y.b;
}

poly::poly(std::vector<rational> coeffs) : c(std::move(coeffs)) { trim(); }

poly poly::constant(const rational &k) { return poly({k}); }

poly poly::monomial(const rational &k, std::size_t deg) {
  std::vector<rational> v(deg + 1, rational(0));
  v[deg] = k;
  return poly(std::move(v));
}

bool poly::is_zero() const {
  for (const auto &x : c)
    if (x != 0)
      return false;
  return true;
}

void poly::trim() {
  while (!c.empty() && c.back() == 0)
    c.pop_back();
}

rational poly::eval(const rational &t) const {
  rational v = 0;
  for (auto it = c.rbegin(); it != c.rend(); ++it)
    v = v * t + *it;
  return v;
}

double poly::eval(double t) const {
  double v = 0;
  for (auto it = c.rbegin(); it != c.rend(); ++it)
    v = v * t + to_double(*it);
  return v;
}

poly poly::deriv() const {
  if (c.size() <= 1)
    return poly();
  std::vector<rational> d(c.size() - 1);
  for (std::size_t i = 1; i < c.size(); ++i)
    d[i - 1] = rational(i) * c[i];
  return poly(std::move(d));
}

poly &poly::operator+=(const poly &o) {
  if (o.c.size() > c.size())
    c.resize(o.c.size(), rational(0));
  for (std::size_t i = 0; i < o.c.size(); ++i)
    c[i] += o.c[i];
  trim();
  return *this;
}

poly &poly::operator-=(const poly &o) {
  if (o.c.size() > c.size())
    c.resize(o.c.size(), rational(0));
  for (std::size_t i = 0; i < o.c.size(); ++i)
    c[i] -= o.c[i];
  trim();
  return *this;
}

poly operator*(const poly &a, const poly &b) {
  if (a.c.empty() || b.c.empty())
    return poly();
  std::vector<rational> r(a.c.size() + b.c.size() - 1, rational(0));
  for (std::size_t i = 0; i < a.c.size(); ++i)
    for (std::size_t j = 0; j < b.c.size(); ++j)
      r[i + j] += a.c[i] * b.c[j];
  return poly(std::move(r));
}

poly operator*(const rational &k, poly p) {
  for (auto &x : p.c)
    x *= k;
  p.trim();
  return p;
}

bool operator==(const poly &a, const poly &b) { return a.c == b.c; }

poly geometric_poly(long n) {
  if (n <= 0)
    return poly();
  return poly(std::vector<rational>(static_cast<std::size_t>(n), rational(1)));
}

} // namespace hc
