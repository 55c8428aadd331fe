#include "ehrkit/rational.hpp"

namespace ehrkit {

Rat make_rat(const Int& num, const Int& den) {
  if (den == 0) throw Error("make_rat: zero denominator");
  Rat r(num, den);
  r.canonicalize();
  return r;
}

Rat parse_rat(const std::string& s) {
  if (s.empty()) throw Error("parse_rat: empty string");
  Rat r;
  if (r.set_str(s, 10) != 0) throw Error("parse_rat: bad rational '" + s + "'");
  if (r.get_den() == 0) throw Error("parse_rat: zero denominator in '" + s + "'");
  r.canonicalize();
  return r;
}

Int rat_floor(const Rat& x) {
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
  return q;
}

Rat rat_pow(const Rat& base, unsigned long exp) {
  Rat r;
  mpz_pow_ui(r.get_num_mpz_t(), base.get_num_mpz_t(), exp);
  mpz_pow_ui(r.get_den_mpz_t(), base.get_den_mpz_t(), exp);
  // base was canonical, so num^k/den^k already is.
  return r;
}

Int int_pow(const Int& base, unsigned long exp) {
  Int r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
  return r;
}

Int binomial(unsigned long n, unsigned long k) {
  Int r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

Rat dot(const RatVec& a, const RatVec& b) {
  if (a.size() != b.size()) throw Error("dot: length mismatch");
  Rat s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

}  // namespace ehrkit
