#include "ehrkit/weight.hpp"

namespace ehrkit {

LinForm coordinate_form(std::size_t ambient_dim, std::size_t index) {
  if (index > ambient_dim) throw Error("coordinate_form: index out of range");
  LinForm f;
  f.coeffs.assign(ambient_dim + 1, Rat(0));
  f.coeffs[index] = 1;
  return f;
}

LinForm lift_form(RatVec coeffs_on_x) {
  LinForm f;
  f.coeffs = std::move(coeffs_on_x);
  f.coeffs.push_back(Rat(0));
  return f;
}

Weight::Weight(std::size_t ambient_dim, unsigned degree,
               std::vector<WeightTerm> terms)
    : d_(ambient_dim), degree_(degree), terms_(std::move(terms)) {
  for (const WeightTerm& t : terms_) {
    if (t.factors.size() != degree_)
      throw Error("Weight: term degree mismatch (weights must be homogeneous)");
    for (const LinForm& f : t.factors)
      if (f.coeffs.size() != d_ + 1)
        throw Error("Weight: linear form length mismatch");
  }
}

Weight Weight::constant(std::size_t ambient_dim, const Rat& c) {
  if (c == 0) return Weight(ambient_dim, 0, {});
  return Weight(ambient_dim, 0, {WeightTerm{c, {}}});
}

Weight Weight::form_power(std::size_t ambient_dim, const LinForm& form,
                          unsigned power, const Rat& scalar) {
  WeightTerm t;
  t.scalar = scalar;
  t.factors.assign(power, form);
  return Weight(ambient_dim, power, {std::move(t)});
}

Rat Weight::eval(const IntVec& x, const Int& n) const {
  if (x.size() != d_) throw Error("Weight::eval: point length mismatch");
  IntVec h = x;
  h.push_back(n);
  Rat s = 0;
  for (const WeightTerm& t : terms_) s += t.eval(h);
  return s;
}

Weight Weight::operator*(const Rat& s) const {
  std::vector<WeightTerm> terms = terms_;
  for (WeightTerm& t : terms) t.scalar *= s;
  return Weight(d_, degree_, std::move(terms));
}

Weight Weight::operator+(const Weight& other) const {
  if (other.d_ != d_ || other.degree_ != degree_)
    throw Error("Weight: cannot add weights of different degree or dimension");
  std::vector<WeightTerm> terms = terms_;
  terms.insert(terms.end(), other.terms_.begin(), other.terms_.end());
  return Weight(d_, degree_, std::move(terms));
}

}  // namespace ehrkit
