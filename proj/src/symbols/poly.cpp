#include "gerbeforge/symbols/poly.hpp"

#include <algorithm>

#include "gerbeforge/error.hpp"

namespace gf {

bool is_prime(long n) {
  if (n < 2) return false;
  for (long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

PrimeField::PrimeField(long p) : p_(p) {
  if (p > 97 || !is_prime(p)) throw InvalidInput("field characteristic must be a prime <= 97");
}

long PrimeField::reduce(long x) const {
  x %= p_;
  return x < 0 ? x + p_ : x;
}

long PrimeField::inv(long a) const {
  a = reduce(a);
  if (a == 0) throw InvalidInput("division by zero in F_" + std::to_string(p_));
  return pow(a, p_ - 2);
}

long PrimeField::pow(long a, const Integer& e) const {
  Integer base = reduce(a), out;
  mpz_powm(out.get_mpz_t(), base.get_mpz_t(), e.get_mpz_t(), Integer(p_).get_mpz_t());
  return out.get_si();
}

long PrimeField::primitive_root() const {
  if (p_ == 2) return 1;
  std::vector<long> primes;
  long m = p_ - 1;
  for (long d = 2; d <= m; ++d)
    if (m % d == 0) {
      primes.push_back(d);
      while (m % d == 0) m /= d;
    }
  for (long g = 2; g < p_; ++g) {
    bool ok = true;
    for (long q : primes) ok = ok && pow(g, (p_ - 1) / q) != 1;
    if (ok) return g;
  }
  throw InvariantBreach("no primitive root found");
}

Poly::Poly(long p, std::vector<long> coefficients) : p_(p), c_(std::move(coefficients)) {
  const PrimeField f(p);
  for (auto& c : c_) c = f.reduce(c);
  trim();
}

Poly Poly::monomial(long p, long c, int degree) {
  std::vector<long> v(degree + 1, 0);
  v[degree] = c;
  return Poly(p, std::move(v));
}

void Poly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

void Poly::require_same_field(const Poly& rhs, const char* where) const {
  if (p_ != rhs.p_) throw ParentMismatch(std::string(where) + ": polynomials over different fields");
}

Poly Poly::monic() const {
  if (is_zero()) return *this;
  return scaled(field().inv(lead()));
}

Poly Poly::derivative() const {
  std::vector<long> d;
  for (std::size_t k = 1; k < c_.size(); ++k) d.push_back(static_cast<long>(k) % p_ * c_[k]);
  return Poly(p_, std::move(d));
}

Poly Poly::reversed() const {
  std::vector<long> r(c_.rbegin(), c_.rend());
  return Poly(p_, std::move(r));
}

long Poly::eval(long x) const {
  const PrimeField f = field();
  long acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = f.add(f.mul(acc, f.reduce(x)), *it);
  return acc;
}

Poly Poly::pth_root() const {
  std::vector<long> r;
  for (std::size_t k = 0; k < c_.size(); k += static_cast<std::size_t>(p_)) r.push_back(c_[k]);
  return Poly(p_, std::move(r));
}

Poly Poly::operator+(const Poly& rhs) const {
  require_same_field(rhs, "Poly +");
  std::vector<long> r(std::max(c_.size(), rhs.c_.size()), 0);
  for (std::size_t k = 0; k < r.size(); ++k) r[k] = coefficient(k) + rhs.coefficient(k);
  return Poly(p_, std::move(r));
}

Poly Poly::operator-() const { return scaled(p_ - 1); }

Poly Poly::operator-(const Poly& rhs) const { return *this + (-rhs); }

Poly Poly::operator*(const Poly& rhs) const {
  require_same_field(rhs, "Poly *");
  if (is_zero() || rhs.is_zero()) return zero(p_);
  std::vector<long> r(c_.size() + rhs.c_.size() - 1, 0);
  for (std::size_t i = 0; i < c_.size(); ++i)
    for (std::size_t j = 0; j < rhs.c_.size(); ++j) r[i + j] = (r[i + j] + c_[i] * rhs.c_[j]) % p_;
  return Poly(p_, std::move(r));
}

Poly Poly::scaled(long c) const {
  const long k = (c % p_ + p_) % p_;
  std::vector<long> r = c_;
  for (auto& x : r) x = x * k % p_;
  return Poly(p_, std::move(r));
}

Poly Poly::operator/(const Poly& rhs) const { return divmod(*this, rhs).first; }
Poly Poly::operator%(const Poly& rhs) const { return divmod(*this, rhs).second; }

std::string Poly::to_string() const {
  if (is_zero()) return "0";
  std::string s;
  for (int k = degree(); k >= 0; --k) {
    const long c = c_[k];
    if (c == 0) continue;
    if (!s.empty()) s += " + ";
    if (k == 0 || c != 1) s += std::to_string(c);
    if (k > 0) s += k == 1 ? "t" : "t^" + std::to_string(k);
  }
  return s;
}

bool operator<(const Poly& a, const Poly& b) {
  if (a.p_ != b.p_) return a.p_ < b.p_;
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  return std::lexicographical_compare(a.c_.rbegin(), a.c_.rend(), b.c_.rbegin(), b.c_.rend());
}

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
  if (a.p() != b.p()) throw ParentMismatch("divmod: polynomials over different fields");
  if (b.is_zero()) throw InvalidInput("polynomial division by zero");
  const PrimeField f(a.p());
  std::vector<long> r = a.coefficients();
  const auto& d = b.coefficients();
  const int db = b.degree();
  if (a.degree() < db) return {Poly::zero(a.p()), a};
  std::vector<long> q(a.degree() - db + 1, 0);
  const long inv_lead = f.inv(b.lead());
  for (int k = a.degree(); k >= db; --k) {
    const long c = f.mul(r[k], inv_lead);
    q[k - db] = c;
    if (c == 0) continue;
    for (int j = 0; j <= db; ++j) r[k - db + j] = f.sub(r[k - db + j], f.mul(c, d[j]));
  }
  r.resize(db);
  return {Poly(a.p(), std::move(q)), Poly(a.p(), std::move(r))};
}

Poly gcd(Poly a, Poly b) {
  while (!b.is_zero()) {
    Poly r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

ExtendedGcd extended_gcd(const Poly& a, const Poly& b) {
  const long p = a.p();
  Poly r0 = a, r1 = b, s0 = Poly::constant(p, 1), s1 = Poly::zero(p), t0 = Poly::zero(p),
       t1 = Poly::constant(p, 1);
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    r0 = std::exchange(r1, r);
    s0 = std::exchange(s1, s0 - q * s1);
    t0 = std::exchange(t1, t0 - q * t1);
  }
  if (r0.is_zero()) return {r0, s0, t0};
  const long k = PrimeField(p).inv(r0.lead());
  return {r0.scaled(k), s0.scaled(k), t0.scaled(k)};
}

Poly pow_mod(const Poly& base, const Integer& e, const Poly& modulus) {
  if (e < 0) throw InvalidInput("pow_mod: negative exponent");
  Poly result = Poly::constant(base.p(), 1) % modulus;
  Poly b = base % modulus;
  const std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  for (std::size_t i = bits; i-- > 0;) {
    result = result * result % modulus;
    if (mpz_tstbit(e.get_mpz_t(), i)) result = result * b % modulus;
  }
  return result;
}

std::vector<Poly> monic_polynomials(long p, int degree) {
  std::vector<Poly> out;
  long count = 1;
  for (int k = 0; k < degree; ++k) count *= p;
  for (long idx = 0; idx < count; ++idx) {
    std::vector<long> c(degree + 1, 0);
    long rest = idx;
    for (int k = 0; k < degree; ++k) {
      c[k] = rest % p;
      rest /= p;
    }
    c[degree] = 1;
    out.emplace_back(p, std::move(c));
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace gf
