#include "gerbeforge/symbols/rational.hpp"

#include "gerbeforge/error.hpp"
#include "gerbeforge/symbols/factor.hpp"

namespace gf {

RationalFunction::RationalFunction(Poly numerator, Poly denominator)
    : num_(std::move(numerator)), den_(std::move(denominator)) {
  if (num_.p() != den_.p()) throw ParentMismatch("rational function over two fields");
  if (den_.is_zero()) throw InvalidInput("rational function with zero denominator");
  if (num_.is_zero()) {
    den_ = Poly::constant(num_.p(), 1);
    return;
  }
  const Poly g = gcd(num_, den_);
  num_ = num_ / g;
  den_ = den_ / g;
  const long k = PrimeField(num_.p()).inv(den_.lead());
  num_ = num_.scaled(k);
  den_ = den_.scaled(k);
}

RationalFunction::RationalFunction(Poly numerator)
    : RationalFunction(numerator, Poly::constant(numerator.p(), 1)) {}

RationalFunction RationalFunction::operator+(const RationalFunction& rhs) const {
  return {num_ * rhs.den_ + rhs.num_ * den_, den_ * rhs.den_};
}

RationalFunction RationalFunction::operator-(const RationalFunction& rhs) const {
  return {num_ * rhs.den_ - rhs.num_ * den_, den_ * rhs.den_};
}

RationalFunction RationalFunction::operator*(const RationalFunction& rhs) const {
  return {num_ * rhs.num_, den_ * rhs.den_};
}

RationalFunction RationalFunction::operator/(const RationalFunction& rhs) const {
  return *this * rhs.inverse();
}

RationalFunction RationalFunction::inverse() const {
  if (is_zero()) throw InvalidInput("inverse of the zero rational function");
  return {den_, num_};
}

RationalFunction RationalFunction::pow(long e) const {
  RationalFunction base = e < 0 ? inverse() : *this;
  RationalFunction out = constant(p(), 1);
  for (long k = e < 0 ? -e : e; k > 0; k >>= 1) {
    if (k & 1) out = out * base;
    base = base * base;
  }
  return out;
}

RationalFunction RationalFunction::one_minus() const { return constant(p(), 1) - *this; }

RationalFunction RationalFunction::at_infinity_chart() const {
  if (is_zero()) return *this;
  // N(1/u) / D(1/u) = u^(deg D - deg N) rev(N) / rev(D).
  const int shift = den_.degree() - num_.degree();
  Poly n = num_.reversed(), d = den_.reversed();
  if (shift > 0) n = n * Poly::monomial(p(), 1, shift);
  if (shift < 0) d = d * Poly::monomial(p(), 1, -shift);
  return {n, d};
}

std::string RationalFunction::to_string() const {
  if (den_.is_one()) return num_.to_string();
  return "(" + num_.to_string() + ") / (" + den_.to_string() + ")";
}

RationalFunction random_rational(long p, int max_degree, Rng& rng) {
  auto draw = [&](bool monic) {
    const int d = static_cast<int>(uniform_int(rng, 0, max_degree));
    std::vector<long> c(d + 1);
    for (auto& x : c) x = uniform_int(rng, 0, p - 1);
    if (monic) c[d] = 1;
    return Poly(p, std::move(c));
  };
  Poly n = draw(false);
  while (n.is_zero()) n = draw(false);
  return {n, draw(true)};
}

Place Place::finite(Poly prime) {
  if (prime.lead() != 1 || !is_irreducible(prime))
    throw InvalidInput("place must be a monic irreducible polynomial: " + prime.to_string());
  const long p = prime.p();
  return Place(p, std::move(prime));
}

const Poly& Place::prime() const {
  if (!prime_) throw InvalidInput("the place at infinity has no prime polynomial");
  return *prime_;
}

std::string Place::to_string() const { return prime_ ? "(" + prime_->to_string() + ")" : "inf"; }

bool operator<(const Place& a, const Place& b) {
  if (a.p_ != b.p_) return a.p_ < b.p_;
  if (a.is_infinite() || b.is_infinite()) return !a.is_infinite() && b.is_infinite();
  return *a.prime_ < *b.prime_;
}

void Divisor::add(const Place& v, long n) {
  if (n == 0) return;
  const long total = (terms_[v] += n);
  if (total == 0) terms_.erase(v);
}

long Divisor::coefficient(const Place& v) const {
  const auto it = terms_.find(v);
  return it == terms_.end() ? 0 : it->second;
}

long Divisor::degree() const {
  long d = 0;
  for (const auto& [v, n] : terms_) d += n * v.degree();
  return d;
}

Divisor Divisor::operator+(const Divisor& rhs) const {
  Divisor out = *this;
  for (const auto& [v, n] : rhs.terms_) out.add(v, n);
  return out;
}

Divisor Divisor::operator-() const {
  Divisor out;
  for (const auto& [v, n] : terms_) out.add(v, -n);
  return out;
}

std::string Divisor::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (const auto& [v, n] : terms_) {
    if (!s.empty()) s += n < 0 ? " - " : " + ";
    else if (n < 0) s += "-";
    const long m = n < 0 ? -n : n;
    if (m != 1) s += std::to_string(m) + "*";
    s += "[" + v.to_string() + "]";
  }
  return s;
}

}  // namespace gf
