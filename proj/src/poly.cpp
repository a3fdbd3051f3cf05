#include "poly.hpp"

#include <stdexcept>

namespace qcover::poly {

void trim(Poly& a) {
  while (!a.empty() && a.back().is_zero()) a.pop_back();
}

int degree(const Poly& a) {
  for (int i = static_cast<int>(a.size()) - 1; i >= 0; --i)
    if (!a[i].is_zero()) return i;
  return -1;
}

Poly sub(const Field& f, const Poly& a, const Poly& b) {
  Poly r(std::max(a.size(), b.size()), f.zero());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] = f.sub(r[i], b[i]);
  trim(r);
  return r;
}

Poly mul(const Field& f, const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, f.zero());
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = f.add(r[i + j], f.mul(a[i], b[j]));
  }
  trim(r);
  return r;
}

std::pair<Poly, Poly> divmod(const Field& f, const Poly& a, const Poly& b) {
  const int db = degree(b);
  if (db < 0) throw std::domain_error("polynomial division by zero");
  Poly r = a;
  trim(r);
  const int da = degree(r);
  if (da < db) return {{}, r};
  Poly q(static_cast<std::size_t>(da - db + 1), f.zero());
  const Scalar lead_inv = f.inv(b[db]);
  for (int i = da; i >= db; --i) {
    if (static_cast<int>(r.size()) <= i || r[i].is_zero()) continue;
    Scalar c = f.mul(r[i], lead_inv);
    q[i - db] = c;
    for (int j = 0; j <= db; ++j) r[i - db + j] = f.sub(r[i - db + j], f.mul(c, b[j]));
  }
  trim(q);
  trim(r);
  return {q, r};
}

Poly monic(const Field& f, Poly a) {
  trim(a);
  if (a.empty()) return a;
  Scalar inv = f.inv(a.back());
  for (auto& c : a) c = f.mul(c, inv);
  return a;
}

Poly gcd(const Field& f, Poly a, Poly b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly r = divmod(f, a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return monic(f, a);
}

Poly derivative(const Field& f, const Poly& a) {
  Poly r;
  for (std::size_t i = 1; i < a.size(); ++i) r.push_back(f.mul(a[i], f.from_int(static_cast<std::int64_t>(i))));
  trim(r);
  return r;
}

Poly powmod(const Field& f, Poly base, std::uint64_t e, const Poly& mod) {
  Poly result{f.one()};
  base = divmod(f, base, mod).second;
  while (e) {
    if (e & 1) result = divmod(f, mul(f, result, base), mod).second;
    e >>= 1;
    if (e) base = divmod(f, mul(f, base, base), mod).second;
  }
  return result;
}

namespace {

// Cantor-Zassenhaus splitting of a squarefree product of degree-d irreducibles.
void equal_degree(const Field& f, const Poly& g, int d, std::mt19937_64& rng, std::vector<Poly>& out) {
  const int n = degree(g);
  if (n <= d) {
    out.push_back(monic(f, g));
    return;
  }
  const auto p = static_cast<std::uint64_t>(f.characteristic());
  std::uniform_int_distribution<std::int64_t> coef(0, f.characteristic() - 1);
  for (int attempt = 0; attempt < 200; ++attempt) {
    Poly a(static_cast<std::size_t>(n), f.zero());
    for (auto& c : a) c = f.from_int(coef(rng));
    trim(a);
    if (degree(a) < 1) continue;
    // a^((p^d - 1) / 2) = (a^(1 + p + ... + p^(d-1)))^((p - 1) / 2)
    Poly c = a, acc = a;
    for (int i = 1; i < d; ++i) {
      c = powmod(f, c, p, g);
      acc = divmod(f, mul(f, acc, c), g).second;
    }
    Poly b = powmod(f, acc, (p - 1) / 2, g);
    Poly u = gcd(f, g, sub(f, b, Poly{f.one()}));
    const int du = degree(u);
    if (du > 0 && du < n) {
      equal_degree(f, u, d, rng, out);
      equal_degree(f, divmod(f, g, u).first, d, rng, out);
      return;
    }
  }
  throw std::runtime_error("equal-degree factorization did not converge");
}

}  // namespace

std::vector<Poly> irreducible_factors(const Field& f, const Poly& a, std::mt19937_64& rng) {
  if (!f.is_prime()) throw std::logic_error("irreducible_factors needs a prime field");
  Poly m = monic(f, a);
  if (degree(m) < 1) return {};
  if (f.characteristic() <= degree(m)) throw std::domain_error("characteristic too small for factorization");
  // squarefree part
  Poly r = divmod(f, m, gcd(f, m, derivative(f, m))).first;
  r = monic(f, r);
  std::vector<Poly> out;
  const auto p = static_cast<std::uint64_t>(f.characteristic());
  Poly x{f.zero(), f.one()};
  Poly h = x;
  for (int d = 1; degree(r) >= 2 * d; ++d) {
    h = powmod(f, h, p, r);
    Poly g = gcd(f, r, sub(f, h, x));
    if (degree(g) > 0) {
      equal_degree(f, g, d, rng, out);
      r = monic(f, divmod(f, r, g).first);
      h = divmod(f, h, r).second;
    }
  }
  if (degree(r) > 0) out.push_back(r);
  return out;
}

Scalar evaluate(const Field& f, const Poly& a, const Scalar& x) {
  Scalar acc = f.zero();
  for (auto it = a.rbegin(); it != a.rend(); ++it) acc = f.add(f.mul(acc, x), *it);
  return acc;
}

std::vector<Scalar> small_rational_roots(const Field& f, const Poly& a) {
  std::vector<Scalar> roots;
  for (std::int64_t den = 1; den <= 6; ++den)
    for (std::int64_t num = -24; num <= 24; ++num) {
      Scalar x = f.from_fraction(num, den);
      if (x.den != den) continue;  // already seen in lower terms
      if (evaluate(f, a, x).is_zero()) roots.push_back(x);
    }
  return roots;
}

Mat evaluate(const Poly& a, const Mat& m) {
  const Field& f = m.field();
  Mat acc(f, m.rows(), m.cols());
  for (auto it = a.rbegin(); it != a.rend(); ++it) acc = acc * m + Mat::identity(f, m.rows()).scaled(*it);
  return acc;
}

}  // namespace qcover::poly
