#include "ehrkit/poly.hpp"

#include <sstream>

namespace ehrkit {

Poly Poly::monomial(const Rat& c, std::size_t k) {
  if (c == 0) return Poly();
  RatVec v(k + 1, Rat(0));
  v[k] = c;
  return Poly(std::move(v));
}

Rat Poly::eval(const Rat& t) const {
  Rat r = 0;
  for (std::size_t i = c_.size(); i-- > 0;) r = r * t + c_[i];
  return r;
}

Poly Poly::derivative() const {
  if (c_.size() <= 1) return Poly();
  RatVec d(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = Rat(long(i)) * c_[i];
  return Poly(std::move(d));
}

Poly Poly::stretch(std::size_t g) const {
  if (g == 0) throw Error("Poly::stretch: g must be positive");
  if (is_zero() || g == 1) return *this;
  RatVec v((c_.size() - 1) * g + 1, Rat(0));
  for (std::size_t i = 0; i < c_.size(); ++i) v[i * g] = c_[i];
  return Poly(std::move(v));
}

Poly Poly::shift(std::size_t k) const {
  if (is_zero() || k == 0) return *this;
  RatVec v(c_.size() + k, Rat(0));
  for (std::size_t i = 0; i < c_.size(); ++i) v[i + k] = c_[i];
  return Poly(std::move(v));
}

Poly Poly::pow(std::size_t e) const {
  Poly r = Poly::constant(1);
  Poly base = *this;
  while (e > 0) {
    if (e & 1) r = r * base;
    base = base * base;
    e >>= 1;
  }
  return r;
}

Poly operator+(const Poly& a, const Poly& b) {
  RatVec v(std::max(a.c_.size(), b.c_.size()), Rat(0));
  for (std::size_t i = 0; i < a.c_.size(); ++i) v[i] += a.c_[i];
  for (std::size_t i = 0; i < b.c_.size(); ++i) v[i] += b.c_[i];
  return Poly(std::move(v));
}

Poly operator-(const Poly& a, const Poly& b) {
  RatVec v(std::max(a.c_.size(), b.c_.size()), Rat(0));
  for (std::size_t i = 0; i < a.c_.size(); ++i) v[i] += a.c_[i];
  for (std::size_t i = 0; i < b.c_.size(); ++i) v[i] -= b.c_[i];
  return Poly(std::move(v));
}

Poly operator-(const Poly& a) { return Rat(-1) * a; }

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return Poly();
  RatVec v(a.c_.size() + b.c_.size() - 1, Rat(0));
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) v[i + j] += a.c_[i] * b.c_[j];
  }
  return Poly(std::move(v));
}

Poly operator*(const Rat& s, const Poly& a) {
  if (s == 0) return Poly();
  RatVec v = a.c_;
  for (Rat& x : v) x *= s;
  return Poly(std::move(v));
}

PolyDivMod Poly::divmod(const Poly& divisor) const {
  if (divisor.is_zero()) throw Error("Poly::divmod: division by zero");
  Poly rem = *this;
  RatVec q;
  long dd = divisor.degree();
  if (rem.degree() >= dd) q.assign(rem.degree() - dd + 1, Rat(0));
  Rat lead_inv = 1 / divisor.leading();
  while (!rem.is_zero() && rem.degree() >= dd) {
    long k = rem.degree() - dd;
    Rat f = rem.leading() * lead_inv;
    q[k] = f;
    RatVec v = rem.c_;
    for (std::size_t i = 0; i < divisor.c_.size(); ++i)
      v[k + i] -= f * divisor.c_[i];
    rem = Poly(std::move(v));
  }
  return {Poly(std::move(q)), std::move(rem)};
}

Poly Poly::exact_div(const Poly& divisor) const {
  PolyDivMod dm = divmod(divisor);
  if (!dm.remainder.is_zero()) throw Error("Poly::exact_div: nonzero remainder");
  return dm.quotient;
}

std::string Poly::str(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (std::size_t i = c_.size(); i-- > 0;) {
    const Rat& c = c_[i];
    if (c == 0) continue;
    Rat a = abs(c);
    if (first) {
      if (sgn(c) < 0) out << "-";
      first = false;
    } else {
      out << (sgn(c) < 0 ? " - " : " + ");
    }
    if (i == 0) {
      out << a.get_str();
    } else {
      if (a != 1) out << a.get_str() << "*";
      out << var;
      if (i > 1) out << "^" << i;
    }
  }
  return out.str();
}

Poly geometric_sum(std::size_t step, std::size_t total) {
  if (step == 0 || total % step != 0) throw Error("geometric_sum: step must divide total");
  RatVec v(total - step + 1, Rat(0));
  for (std::size_t k = 0; k + step <= total; k += step) v[k] = 1;
  return Poly(std::move(v));
}

Poly gcd(const Poly& a, const Poly& b) {
  Poly x = a, y = b;
  while (!y.is_zero()) {
    Poly r = x.divmod(y).remainder;
    x = std::move(y);
    y = std::move(r);
  }
  if (x.is_zero()) return x;
  return (1 / x.leading()) * x;  // monic
}

std::vector<Poly> squarefree_decomposition(const Poly& p) {
  // Yun's algorithm on the monic part; parts[i-1] holds the multiplicity-i
  // squarefree factor.
  std::vector<Poly> parts;
  if (p.degree() <= 0) return parts;
  Poly f = (1 / p.leading()) * p;
  Poly fp = f.derivative();
  Poly d = gcd(f, fp);
  Poly b = f.exact_div(d);
  Poly c = fp.exact_div(d);
  Poly z = c - b.derivative();
  while (b.degree() > 0) {
    Poly a = gcd(b, z);
    parts.push_back(a);
    b = b.exact_div(a);
    c = z.exact_div(a);
    z = c - b.derivative();
  }
  return parts;
}

}  // namespace ehrkit
