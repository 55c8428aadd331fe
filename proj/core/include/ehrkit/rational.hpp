#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <vector>

namespace ehrkit {

// All scalar arithmetic in the library is exact. Rat is always reduced with a
// positive denominator (gmp keeps the canonical form through class operators).
using Int = mpz_class;
using Rat = mpq_class;

using IntVec = std::vector<Int>;
using RatVec = std::vector<Rat>;

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// num/den with canonicalization; throws on den == 0.
Rat make_rat(const Int& num, const Int& den);

// Accepts "p" or "p/q" with an optional leading sign.
Rat parse_rat(const std::string& s);

// Reduced fraction string, "p" when the denominator is 1.
inline std::string rat_str(const Rat& x) { return x.get_str(); }

inline int sign(const Rat& x) { return sgn(x); }
inline int sign(const Int& x) { return sgn(x); }

Int rat_floor(const Rat& x);
Rat rat_pow(const Rat& base, unsigned long exp);
Int int_pow(const Int& base, unsigned long exp);
Int binomial(unsigned long n, unsigned long k);

Rat dot(const RatVec& a, const RatVec& b);

inline bool fits_ulong(const Int& x) { return x.fits_ulong_p(); }

}  // namespace ehrkit
