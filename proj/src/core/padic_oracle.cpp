#include "core/padic_oracle.hpp"

#include "core/errors.hpp"
#include "core/numberfield.hpp"

#include <map>
#include <memory>
#include <mutex>

namespace hc::oracle {

namespace {

long long ipow(long long b, int e) {
  long long r = 1;
  while (e-- > 0)
    r *= b;
  return r;
}

// Value distribution of a binary form mod p^m for every level m = 1..mmax.
// level[m-1][v] = #{(x, y) in (Z/p^m)^2 : f(x, y) = v mod p^m}.
struct dist_table {
  int mmax = 0;
  std::vector<std::vector<std::uint64_t>> level;
};

std::vector<std::uint64_t> build_top_prod(long long p, int M) {
  const long long pm = ipow(p, M);
  std::vector<std::uint64_t> d(static_cast<std::size_t>(pm), 0);
  for (long long x = 0; x < pm; ++x)
    for (long long y = 0; y < pm; ++y)
      ++d[static_cast<std::size_t>((x * y) % pm)];
  return d;
}

std::vector<std::uint64_t> build_top_nm(long long p, int M, long long eps, long long c) {
  const long long pm = ipow(p, M);
  std::vector<std::uint64_t> d(static_cast<std::size_t>(pm), 0);
  for (long long x0 = 0; x0 < pm; ++x0)
    for (long long x1 = 0; x1 < pm; ++x1) {
      long long v = (x0 * x0 + eps * x0 * x1 - c * x1 * x1) % pm;
      if (v < 0)
        v += pm;
      ++d[static_cast<std::size_t>(v)];
    }
  return d;
}

dist_table fold_levels(long long p, int M, std::vector<std::uint64_t> top) {
  dist_table t;
  t.mmax = M;
  t.level.resize(static_cast<std::size_t>(M));
  t.level[static_cast<std::size_t>(M - 1)] = std::move(top);
  // A pair mod p^{m+1} determines its value mod p^m, and each pair mod p^m
  // lifts to exactly p^2 pairs, so the lower level is an exact fold.
  for (int m = M - 1; m >= 1; --m) {
    const long long pm = ipow(p, m);
    const long long pup = pm * p;
    const auto &up = t.level[static_cast<std::size_t>(m)];
    std::vector<std::uint64_t> cur(static_cast<std::size_t>(pm), 0);
    for (long long v = 0; v < pup; ++v)
      cur[static_cast<std::size_t>(v % pm)] += up[static_cast<std::size_t>(v)];
    for (auto &x : cur)
      x /= static_cast<std::uint64_t>(p * p);
    t.level[static_cast<std::size_t>(m - 1)] = std::move(cur);
  }
  return t;
}

std::mutex cache_mutex;
std::map<std::pair<int, long long>, std::shared_ptr<const dist_table>> cache;

std::shared_ptr<const dist_table> ensure_dists(const order_model &mod, int mmax) {
  const std::pair<int, long long> key{static_cast<int>(mod.kind), mod.p};
  std::lock_guard<std::mutex> lock(cache_mutex);
  auto it = cache.find(key);
  if (it != cache.end() && it->second->mmax >= mmax)
    return it->second;
  auto top = (mod.kind == algebra_kind::matrix_split)
                 ? build_top_prod(mod.p, mmax)
                 : build_top_nm(mod.p, mmax, mod.eps, mod.c);
  auto table = std::make_shared<dist_table>(fold_levels(mod.p, mmax, std::move(top)));
  cache[key] = table;
  return table;
}

std::uint64_t conv_count(const order_model &mod, int m, long long b) {
  auto table = ensure_dists(mod, m);
  const long long p = mod.p;
  const long long pm = ipow(p, m);
  b %= pm;
  if (b < 0)
    b += pm;
  const auto &d = table->level[static_cast<std::size_t>(m - 1)];
  std::uint64_t cnt = 0;
  if (mod.kind == algebra_kind::matrix_split) {
    // det = x0 x3 - x1 x2; convolve the product distribution with itself.
    for (long long v = 0; v < pm; ++v) {
      long long w = v - b;
      if (w < 0)
        w += pm;
      cnt += d[static_cast<std::size_t>(v)] * d[static_cast<std::size_t>(w)];
    }
  } else {
    // q = Nm(x) - p Nm(y).  #{y : p Nm(y) = w mod p^m} is p^2 times the
    // level-(m-1) norm count at w/p when p | w, and 0 otherwise.
    const std::uint64_t p2 = static_cast<std::uint64_t>(p * p);
    const auto *down =
        (m >= 2) ? &table->level[static_cast<std::size_t>(m - 2)] : nullptr;
    for (long long v = 0; v < pm; ++v) {
      long long w = v - b;
      if (w < 0)
        w += pm;
      if (w % p != 0)
        continue;
      std::uint64_t ycnt = p2;
      if (down)
        ycnt *= (*down)[static_cast<std::size_t>(w / p)];
      cnt += d[static_cast<std::size_t>(v)] * ycnt;
    }
  }
  return cnt;
}

} // namespace

order_model make_model(algebra_kind kind, long long p) {
  if (!is_prime(p))
    throw domain_error("order model requires a prime residue characteristic");
  order_model m;
  m.kind = kind;
  m.p = p;
  if (kind == algebra_kind::division_nonsplit) {
    if (p == 2) {
      // t^2 = t + 1 generates the unramified quadratic extension of Q_2.
      m.eps = 1;
      m.c = 1;
    } else {
      m.eps = 0;
      long long c = 2;
      while (kronecker_symbol(c, p) != -1)
        ++c;
      m.c = c;
    }
  }
  return m;
}

std::uint64_t count_quadric(const order_model &mod, int k, long long target, int mod_pow,
                            bool units_only, std::uint64_t budget) {
  if (k < 0 || mod_pow < 0 || mod_pow > k)
    throw domain_error("count_quadric: need 0 <= mod_pow <= k");
  const long long p = mod.p;
  const long long pk = ipow(p, k);
  long double iters = 1.0L;
  for (int i = 0; i < 4; ++i)
    iters *= static_cast<long double>(pk);
  if (iters > static_cast<long double>(budget))
    throw domain_error("count_quadric: iteration budget exceeded");
  const long long pm = ipow(p, mod_pow);
  const long long tgt = ((target % pm) + pm) % pm;
  const bool division = mod.kind == algebra_kind::division_nonsplit;
  std::uint64_t cnt = 0;
  for (long long x0 = 0; x0 < pk; ++x0)
    for (long long x1 = 0; x1 < pk; ++x1)
      for (long long x2 = 0; x2 < pk; ++x2)
        for (long long x3 = 0; x3 < pk; ++x3) {
          long long q;
          if (division) {
            long long nx = x0 * x0 + mod.eps * x0 * x1 - mod.c * x1 * x1;
            long long ny = x2 * x2 + mod.eps * x2 * x3 - mod.c * x3 * x3;
            q = nx - p * ny;
          } else {
            q = x0 * x3 - x1 * x2;
          }
          if (units_only && ((q % p) + p) % p == 0)
            continue;
          if (((q % pm) + pm) % pm == tgt)
            ++cnt;
        }
  return cnt;
}

rational quadric_density(const order_model &mod, int mod_pow, long long target,
                         bool units_only) {
  if (mod_pow < 1)
    throw domain_error("quadric_density: level must be >= 1");
  const long long p = mod.p;
  if (units_only) {
    // For level >= 1 a solution's value is congruent to the target mod p, so
    // the unit filter either keeps every solution or kills all of them.
    if (((target % p) + p) % p == 0)
      return 0;
  }
  const std::uint64_t cnt = conv_count(mod, mod_pow, target);
  return rational(bigint(cnt),
                  boost::multiprecision::pow(bigint(p), 4u * static_cast<unsigned>(mod_pow)));
}

namespace {

// Volume of the level-n set D_n = {x in supp : q(x) = a mod p^{n - delta}}
// in the self-dual coordinate measure (scale |d|^2, with an extra p^{-1} for
// the division order), where v(a) = r.
rational level_volume(const order_model &mod, int delta, int r, int n) {
  const long long p = mod.p;
  const bool division = mod.kind == algebra_kind::division_nonsplit;
  const int m = n - delta;
  rational scale = rat_pow(rational(p), -2 * delta);
  if (division)
    scale /= p;
  if (m <= 0) {
    // The congruence is vacuous (m <= 0, r >= 0) or a pure valuation
    // condition v(q - a) = r (r < 0), since q is integral on the order.
    if (r < 0 && n > r + delta)
      return 0;
    rational full = division ? rational(1) - rat_pow(rational(p), -2) : rational(1);
    return scale * full;
  }
  if (r < 0)
    return 0;
  return scale * quadric_density(mod, m, ipow(p, r), division);
}

} // namespace

sqrt_val whittaker_oracle(const whittaker_spec &spec, long s_int) {
  const long long p = spec.N;
  if (!is_prime(p))
    throw domain_error("whittaker_oracle: residue norm must be prime");
  if (spec.delta < 0)
    throw domain_error("whittaker_oracle: delta must be >= 0");
  if (s_int < 1)
    throw domain_error("whittaker_oracle: s must be a positive integer");
  if (!spec.u_unit)
    return sqrt_val::zero(p);
  const bool division = spec.algebra == algebra_kind::division_nonsplit;
  const order_model mod = make_model(spec.algebra, p);
  const rational t = rat_pow(rational(p), -s_int);
  const rational tN = t * p;
  const int delta = spec.delta, r = spec.r;
  rational total;
  if (r < 0) {
    if (r + delta < 0)
      return sqrt_val::zero(p);
    rational acc = 0, pw = 1;
    for (int n = 0; n <= r + delta; ++n) {
      acc += pw * level_volume(mod, delta, r, n);
      pw *= tN;
    }
    total = (1 - t) * acc;
  } else {
    const int n0 = r + delta + 1;
    std::vector<rational> vols(static_cast<std::size_t>(n0) + 2);
    for (int n = 0; n <= n0 + 1; ++n)
      vols[static_cast<std::size_t>(n)] = level_volume(mod, delta, r, n);
    if (vols[static_cast<std::size_t>(n0) + 1] * p != vols[static_cast<std::size_t>(n0)])
      throw verification_error("whittaker_oracle: level volumes did not stabilize");
    rational acc = 0, pw = 1;
    for (int n = 0; n <= n0; ++n) {
      acc += pw * vols[static_cast<std::size_t>(n)];
      pw *= tN;
    }
    // Beyond n0 the volumes decay by exactly 1/p per level, so the remaining
    // geometric series folds into vols[n0] * (tN)^{n0} * t / (1 - t).
    total = (1 - t) * acc + vols[static_cast<std::size_t>(n0)] * pw * t / tN;
  }
  const rational gamma = division ? -1 : 1;
  return (gamma * total) * sqrt_val::half_pow(p, -delta);
}

long long hecke_coset_count(long long p, int r) {
  if (!is_prime(p))
    throw domain_error("hecke_coset_count: p must be prime");
  if (r < 0)
    throw domain_error("hecke_coset_count: r must be >= 0");
  // Hermite forms [[a, b], [0, d]] with ad = p^r and 0 <= b < a.
  long long cnt = 0;
  for (int i = 0; i <= r; ++i)
    cnt += ipow(p, i);
  return cnt;
}

unit_volume_report unit_volume_check(long long p) {
  const order_model mat = make_model(algebra_kind::matrix_split, p);
  const order_model div = make_model(algebra_kind::division_nonsplit, p);
  auto fiber = [&](const order_model &m, int k) {
    // count / p^{3k}: density of the codimension-one fiber q = 1.
    return quadric_density(m, k, 1, false) * rat_pow(rational(p), k);
  };
  unit_volume_report rep;
  rep.sl2_density = fiber(mat, 2);
  rep.norm_one_density = fiber(div, 2) / p;
  rep.stable_in_k =
      rep.sl2_density == fiber(mat, 3) && rep.norm_one_density == fiber(div, 3) / p;
  rep.sl2_expected = 1 - rat_pow(rational(p), -2);
  rep.norm_one_expected = rational(1, p) * (1 + rational(1, p));
  // Cross-validate the convolution counter against a direct scan at k = 2.
  const bigint p8 = boost::multiprecision::pow(bigint(p), 8u);
  if (rational(bigint(count_quadric(mat, 2, 1, 2, false)), p8) != quadric_density(mat, 2, 1, false) ||
      rational(bigint(count_quadric(div, 2, 1, 2, false)), p8) != quadric_density(div, 2, 1, false))
    throw verification_error("unit_volume_check: convolution and direct counts disagree");
  rep.pass = rep.stable_in_k && rep.sl2_density == rep.sl2_expected &&
             rep.norm_one_density == rep.norm_one_expected;
  return rep;
}

} // namespace hc::oracle
