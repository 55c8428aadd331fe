#pragma once

#include <string>
#include <vector>

#include "ehrkit/rational.hpp"

namespace ehrkit {

struct PolyDivMod;

// Univariate polynomial with exact rational coefficients, stored ascending by
// exponent with no trailing zeros. degree() of the zero polynomial is -1.
class Poly {
 public:
  Poly() = default;
  explicit Poly(RatVec coeffs) : c_(std::move(coeffs)) { trim(); }
  static Poly constant(const Rat& c) { return Poly(RatVec{c}); }
  static Poly monomial(const Rat& c, std::size_t k);

  long degree() const { return static_cast<long>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const RatVec& coeffs() const { return c_; }
  Rat coeff(std::size_t k) const { return k < c_.size() ? c_[k] : Rat(0); }
  Rat leading() const { return c_.empty() ? Rat(0) : c_.back(); }

  Rat eval(const Rat& t) const;

  Poly derivative() const;

  // Substitutes t -> t^g.
  Poly stretch(std::size_t g) const;

  // Multiplies by t^k.
  Poly shift(std::size_t k) const;

  Poly pow(std::size_t e) const;

  friend Poly operator+(const Poly& a, const Poly& b);
  friend Poly operator-(const Poly& a, const Poly& b);
  friend Poly operator-(const Poly& a);
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(const Rat& s, const Poly& a);
  Poly& operator+=(const Poly& b) { return *this = *this + b; }
  Poly& operator-=(const Poly& b) { return *this = *this - b; }
  friend bool operator==(const Poly& a, const Poly& b) = default;

  // Quotient and remainder; the divisor must be nonzero.
  PolyDivMod divmod(const Poly& divisor) const;

  // Exact division; throws when the remainder is nonzero.
  Poly exact_div(const Poly& divisor) const;

  // "9*t^3 - 4*t^2 + 23*t" style, descending exponents; "0" for zero.
  std::string str(const std::string& var = "t") const;

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }
  RatVec c_;
};

struct PolyDivMod {
  Poly quotient, remainder;
};

// 1 + t^step + t^(2*step) + ... + t^(total - step); requires step | total.
// total == step gives 1.
Poly geometric_sum(std::size_t step, std::size_t total);

Poly gcd(const Poly& a, const Poly& b);  // monic gcd

// Squarefree decomposition p = prod f_i^i (Yun); index 0 holds f_1.
std::vector<Poly> squarefree_decomposition(const Poly& p);

}  // namespace ehrkit
