#include "poly.hpp"

#include <cstdlib>

namespace dl::poly {

void trim(Poly& a) {
  while (!a.empty() && a.back().is_zero()) a.pop_back();
}

int degree(const Poly& a) { return static_cast<int>(a.size()) - 1; }

Poly add(const Poly& a, const Poly& b) {
  Poly r(std::max(a.size(), b.size()), Scalar(0) * (a.empty() ? (b.empty() ? Scalar(0) : b[0]) : a[0]));
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
  trim(r);
  return r;
}

Poly scale(const Poly& a, const Scalar& s) {
  Poly r;
  for (const auto& c : a) r.push_back(c * s);
  trim(r);
  return r;
}

Poly sub(const Poly& a, const Poly& b) { return add(a, scale(b, Scalar(-1))); }

Poly mul(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, a[0] * Scalar(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  trim(r);
  return r;
}

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
  Poly r = a, q;
  trim(r);
  const int db = degree(b);
  if (degree(r) < db) return {q, r};
  q.assign(r.size() - b.size() + 1, b.back() * Scalar(0));
  const Scalar inv = b.back().inverse();
  while (!r.empty() && degree(r) >= db) {
    const int shift = degree(r) - db;
    const Scalar c = r.back() * inv;
    q[shift] = c;
    for (int i = 0; i <= db; ++i) r[shift + i] -= c * b[i];
    trim(r);
  }
  trim(q);
  return {q, r};
}

Poly monic(const Poly& a) {
  if (a.empty()) return a;
  return scale(a, a.back().inverse());
}

Poly gcd(Poly a, Poly b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return monic(a);
}

ExtGcd ext_gcd(const Poly& a, const Poly& b) {
  const Scalar one = (a.empty() ? b.back() : a.back()) * Scalar(0) + Scalar(1);
  Poly r0 = a, r1 = b, s0{one}, s1{}, t0{}, t1{one};
  trim(r0);
  trim(r1);
  while (!r1.empty()) {
    auto [q, r] = divmod(r0, r1);
    Poly s2 = sub(s0, mul(q, s1)), t2 = sub(t0, mul(q, t1));
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  const Scalar inv = r0.back().inverse();
  return {scale(r0, inv), scale(s0, inv), scale(t0, inv)};
}

Poly derivative(const Poly& a) {
  Poly r;
  for (std::size_t i = 1; i < a.size(); ++i) r.push_back(a[i] * Scalar(static_cast<long>(i)));
  trim(r);
  return r;
}

Poly powmod(const Poly& base, const mpz_class& e, const Poly& m) {
  const Scalar one = m.back() * Scalar(0) + Scalar(1);
  Poly result{one}, b = divmod(base, m).second;
  mpz_class k = e;
  while (k > 0) {
    if (mpz_odd_p(k.get_mpz_t())) result = divmod(mul(result, b), m).second;
    b = divmod(mul(b, b), m).second;
    k >>= 1;
  }
  return result;
}

namespace {

// Yun's squarefree decomposition: a = c * prod f_i^i with f_i squarefree and coprime.
std::vector<Poly> squarefree_parts(const Poly& a) {
  std::vector<Poly> parts;
  Poly am = monic(a);
  Poly d = derivative(am);
  Poly g = gcd(am, d);
  Poly b = divmod(am, g).first;
  Poly c = divmod(d, g).first;
  Poly e = sub(c, derivative(b));
  while (degree(b) > 0) {
    Poly f = gcd(b, e);
    parts.push_back(f);
    b = divmod(b, f).first;
    c = divmod(e, f).first;
    e = sub(c, derivative(b));
  }
  return parts;
}

std::vector<mpz_class> small_divisors(mpz_class n) {
  std::vector<mpz_class> out;
  if (n < 0) n = -n;
  if (n == 0 || n > mpz_class("1000000000000")) return out;
  for (mpz_class d = 1; d * d <= n; ++d)
    if (n % d == 0) {
      out.push_back(d);
      if (d * d != n) out.push_back(n / d);
    }
  return out;
}

std::optional<Scalar> rational_root(const Poly& a) {
  if (a.empty()) return std::nullopt;
  if (a[0].is_zero()) return Scalar(0);
  mpz_class den = 1;
  for (const auto& c : a) den = lcm(den, c.value().get_den());
  std::vector<mpz_class> z;
  for (const auto& c : a) z.push_back(c.value().get_num() * (den / c.value().get_den()));
  auto ps = small_divisors(z.front());
  auto qs = small_divisors(z.back());
  for (const auto& p : ps)
    for (const auto& q : qs)
      for (int sgn : {1, -1}) {
        mpq_class rq(mpz_class(sgn * p), q);
        rq.canonicalize();
        Scalar r(rq);
        Scalar v(0);
        for (auto it = a.rbegin(); it != a.rend(); ++it) v = v * r + *it;
        if (v.is_zero()) return r;
      }
  return std::nullopt;
}

// A proper monic factor of the squarefree polynomial h, if found.
std::optional<Poly> proper_factor(const Poly& h, Field f, std::mt19937_64& rng) {
  const Scalar one = f.one(), zero = f.zero();
  if (degree(h) < 2) return std::nullopt;
  if (f.is_rational()) {
    auto r = rational_root(h);
    if (!r) return std::nullopt;
    return Poly{-*r, one};
  }
  const std::uint32_t p = f.characteristic();
  // Product of the linear factors: gcd(h, t^p - t).
  Poly t{zero, one};
  Poly tp = powmod(t, mpz_class(p), h);
  Poly lin = gcd(h, sub(tp, t));
  if (degree(lin) <= 0) return std::nullopt;
  if (degree(lin) < degree(h)) return lin;
  // h splits into distinct linear factors; separate them.
  std::uniform_int_distribution<std::uint32_t> dist(0, p - 1);
  for (int attempt = 0; attempt < 64; ++attempt) {
    Poly base{f(static_cast<long>(dist(rng))), one};
    Poly w = powmod(base, mpz_class((p - 1) / 2), h);
    Poly g = gcd(h, sub(w, Poly{one}));
    if (degree(g) > 0 && degree(g) < degree(h)) return g;
  }
  return std::nullopt;
}

}  // namespace

std::optional<std::pair<Poly, Poly>> coprime_split(const Poly& a, Field f, std::mt19937_64& rng) {
  auto parts = squarefree_parts(a);
  // a = prod parts[i]^(i+1); group into two coprime halves when possible.
  std::vector<std::pair<Poly, int>> nonconst;
  for (std::size_t i = 0; i < parts.size(); ++i)
    if (degree(parts[i]) > 0) nonconst.emplace_back(parts[i], static_cast<int>(i) + 1);
  auto power = [](const Poly& p, int e) {
    Poly r{p.back() * Scalar(0) + Scalar(1)};
    for (int i = 0; i < e; ++i) r = mul(r, p);
    return r;
  };
  if (nonconst.size() >= 2) {
    Poly first = power(nonconst[0].first, nonconst[0].second);
    Poly rest = divmod(monic(a), first).first;
    return std::make_pair(first, rest);
  }
  if (nonconst.empty()) return std::nullopt;
  const auto& [h, e] = nonconst[0];
  auto g = proper_factor(h, f, rng);
  if (!g) return std::nullopt;
  Poly other = divmod(h, *g).first;
  return std::make_pair(power(*g, e), power(other, e));
}

}  // namespace dl::poly
