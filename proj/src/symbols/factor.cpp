#include "gerbeforge/symbols/factor.hpp"

#include <map>
#include <random>

#include "gerbeforge/error.hpp"

namespace gf {
namespace {

using Multiset = std::map<Poly, int>;

Integer power(long p, int d) {
  Integer out;
  mpz_ui_pow_ui(out.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(d));
  return out;
}

// Squarefree parts f = prod g_i^i (Yun, with p-th roots for f' = 0).
std::vector<std::pair<Poly, int>> squarefree(const Poly& f) {
  std::vector<std::pair<Poly, int>> out;
  const long p = f.p();
  Poly c = gcd(f, f.derivative());
  Poly w = f / c;
  int i = 1;
  while (!w.is_one()) {
    const Poly y = gcd(w, c);
    const Poly part = w / y;
    if (!part.is_one()) out.emplace_back(part.monic(), i);
    w = y;
    c = c / y;
    ++i;
  }
  if (!c.is_one()) {
    for (auto& [g, m] : squarefree(c.monic().pth_root())) out.emplace_back(g, m * static_cast<int>(p));
  }
  return out;
}

// Products of the irreducible factors of each degree of a squarefree f.
std::vector<std::pair<Poly, int>> distinct_degree(Poly f) {
  std::vector<std::pair<Poly, int>> out;
  const long p = f.p();
  const Poly t = Poly::t(p);
  Poly h = t % f;
  for (int d = 1; 2 * d <= f.degree(); ++d) {
    h = pow_mod(h, p, f);
    const Poly g = gcd(f, h - t);
    if (!g.is_one()) {
      out.emplace_back(g, d);
      f = f / g;
      h = h % f;
    }
  }
  if (f.degree() > 0) out.emplace_back(f.monic(), f.degree());
  return out;
}

void equal_degree(const Poly& f, int d, std::mt19937_64& rng, Multiset& out, int multiplicity) {
  if (f.degree() == d) {
    out[f.monic()] += multiplicity;
    return;
  }
  const long p = f.p();
  std::uniform_int_distribution<long> coef(0, p - 1);
  while (true) {
    std::vector<long> c(f.degree());
    for (auto& x : c) x = coef(rng);
    const Poly a(p, std::move(c));
    if (a.degree() < 1) continue;
    Poly b = Poly::zero(p);
    if (p == 2) {
      // Absolute trace a + a^2 + ... + a^(2^(d-1)).
      Poly term = a % f;
      for (int i = 0; i < d; ++i) {
        b = b + term;
        term = term * term % f;
      }
    } else {
      b = pow_mod(a, (power(p, d) - 1) / 2, f) - Poly::constant(p, 1);
    }
    const Poly g = gcd(f, b);
    if (g.degree() > 0 && g.degree() < f.degree()) {
      equal_degree(g, d, rng, out, multiplicity);
      equal_degree(f / g, d, rng, out, multiplicity);
      return;
    }
  }
}

}  // namespace

std::vector<Factor> factor(const Poly& f) {
  if (f.is_zero()) throw InvalidInput("factor: zero polynomial");
  Multiset found;
  std::mt19937_64 rng(0x5eed);
  for (const auto& [part, m] : squarefree(f.monic()))
    for (const auto& [block, d] : distinct_degree(part)) equal_degree(block, d, rng, found, m);
  std::vector<Factor> out;
  for (const auto& [g, m] : found) out.push_back({g, m});
  return out;
}

bool is_irreducible(const Poly& f) {
  const int n = f.degree();
  if (n < 1) return false;
  if (n == 1) return true;
  const long p = f.p();
  const Poly g = f.monic();
  const Poly t = Poly::t(p);
  if (!(pow_mod(t, power(p, n), g) == t % g)) return false;
  int m = n;
  for (int q = 2; q <= m; ++q) {
    if (m % q != 0) continue;
    while (m % q == 0) m /= q;
    if (!gcd(g, pow_mod(t, power(p, n / q), g) - t).is_one()) return false;
  }
  return true;
}

}  // namespace gf
