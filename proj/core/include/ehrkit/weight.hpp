#pragma once

#include <vector>

#include "ehrkit/rational.hpp"

namespace ehrkit {

// Linear form on homogenized points (x, n) in R^{d+1}; the last coefficient
// acts on the dilation factor.
struct LinForm {
  RatVec coeffs;

  Rat eval(const IntVec& v) const {
    if (v.size() != coeffs.size()) throw Error("LinForm: length mismatch");
    Rat s = 0;
    for (std::size_t i = 0; i < coeffs.size(); ++i)
      if (coeffs[i] != 0) s += coeffs[i] * Rat(v[i]);
    return s;
  }
  Rat eval(const RatVec& v) const { return dot(coeffs, v); }

  friend bool operator==(const LinForm& a, const LinForm& b) = default;
};

// The form picking coordinate `index` of (x, n); index == d is the height.
LinForm coordinate_form(std::size_t ambient_dim, std::size_t index);

// Lifts a form on R^d to R^{d+1} with zero height coefficient.
LinForm lift_form(RatVec coeffs_on_x);

struct WeightTerm {
  Rat scalar;
  std::vector<LinForm> factors;  // ordered product; length = degree

  Rat eval(const IntVec& homogenized_point) const {
    Rat v = scalar;
    for (const LinForm& f : factors) {
      if (v == 0) break;
      v *= f.eval(homogenized_point);
    }
    return v;
  }
};

// Homogeneous polynomial weight: every term has the same number of factors.
class Weight {
 public:
  Weight(std::size_t ambient_dim, unsigned degree, std::vector<WeightTerm> terms);

  static Weight constant(std::size_t ambient_dim, const Rat& c);
  // scalar * form^power
  static Weight form_power(std::size_t ambient_dim, const LinForm& form,
                           unsigned power, const Rat& scalar = Rat(1));

  std::size_t ambient_dim() const { return d_; }
  unsigned degree() const { return degree_; }
  const std::vector<WeightTerm>& terms() const { return terms_; }

  // Value at the lattice point x of the n-th dilate (height bound to n).
  Rat eval(const IntVec& x, const Int& n) const;

  Weight operator*(const Rat& s) const;
  Weight operator+(const Weight& other) const;  // same degree required

 private:
  std::size_t d_;
  unsigned degree_;
  std::vector<WeightTerm> terms_;
};

}  // namespace ehrkit
