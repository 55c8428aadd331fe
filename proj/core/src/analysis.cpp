#include "ehrkit/analysis.hpp"

#include <algorithm>
#include <map>

#include "ehrkit/matrix.hpp"
#include "ehrkit/triangulation.hpp"

namespace ehrkit {

std::optional<std::size_t> check_nonneg_coeffs(const Poly& p) {
  const RatVec& c = p.coeffs();
  for (std::size_t i = 0; i < c.size(); ++i)
    if (sgn(c[i]) < 0) return i;
  return std::nullopt;
}

namespace {

std::vector<Poly> sturm_chain(const Poly& p) {
  std::vector<Poly> chain;
  chain.push_back(p);
  Poly d = p.derivative();
  if (!d.is_zero()) chain.push_back(d);
  while (chain.size() >= 2 && !chain.back().is_zero()) {
    Poly rem = chain[chain.size() - 2].divmod(chain.back()).remainder;
    if (rem.is_zero()) break;
    chain.push_back(-rem);
  }
  return chain;
}

std::size_t variations(const std::vector<int>& signs) {
  std::size_t v = 0;
  int prev = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++v;
    prev = s;
  }
  return v;
}

std::size_t variations_at(const std::vector<Poly>& chain, const Rat& x) {
  std::vector<int> signs;
  signs.reserve(chain.size());
  for (const Poly& f : chain) signs.push_back(sgn(f.eval(x)));
  return variations(signs);
}

std::size_t variations_at_inf(const std::vector<Poly>& chain) {
  std::vector<int> signs;
  signs.reserve(chain.size());
  for (const Poly& f : chain) signs.push_back(sgn(f.leading()));
  return variations(signs);
}

// Upper bound beyond which p has no roots (Cauchy bound).
Rat root_bound(const Poly& p) {
  Rat bound = 0;
  Rat lead = abs(p.leading());
  const RatVec& c = p.coeffs();
  for (std::size_t i = 0; i + 1 < c.size(); ++i) {
    Rat q = abs(c[i]) / lead;
    if (q > bound) bound = q;
  }
  return bound + 1;
}

// Product of the odd-multiplicity squarefree factors; sign(p) = sign(odd)
// times a square on any interval avoiding roots.
Poly odd_multiplicity_part(const Poly& p) {
  Poly odd = Poly::constant(1);
  std::vector<Poly> parts = squarefree_decomposition(p);
  for (std::size_t i = 0; i < parts.size(); ++i)
    if (i % 2 == 0) odd = odd * parts[i];  // multiplicity i + 1
  return odd;
}

}  // namespace

std::size_t sturm_count_roots(const Poly& p, const Rat& a, const Rat& b) {
  if (p.is_zero()) throw Error("sturm_count_roots: zero polynomial");
  if (!(a < b)) throw Error("sturm_count_roots: empty interval");
  Poly sf = p.exact_div(gcd(p, p.derivative()));  // squarefree radical
  auto chain = sturm_chain(sf);
  std::size_t va = variations_at(chain, a);
  std::size_t vb = variations_at(chain, b);
  std::size_t roots_in_half_open = va - vb;  // roots in (a, b]
  if (sf.eval(b) == 0) --roots_in_half_open;
  return roots_in_half_open;
}

std::size_t sturm_count_positive_roots(const Poly& p) {
  if (p.is_zero()) throw Error("sturm_count_positive_roots: zero polynomial");
  // strip t^k so that 0 is not a root
  const RatVec& c = p.coeffs();
  std::size_t k = 0;
  while (k < c.size() && c[k] == 0) ++k;
  Poly s(RatVec(c.begin() + static_cast<long>(k), c.end()));
  if (s.degree() <= 0) return 0;
  Poly sf = s.exact_div(gcd(s, s.derivative()));
  auto chain = sturm_chain(sf);
  return variations_at(chain, Rat(0)) - variations_at_inf(chain);
}

RayCheck nonneg_on_ray(const Poly& p) {
  if (p.is_zero()) return {true, Rat(0), Rat(0)};
  if (sgn(p.leading()) < 0) {
    Rat b = root_bound(p);
    return {false, b, b};  // p(b) has the sign of the leading coefficient
  }
  // factor out t^k; t^k >= 0 on the ray
  const RatVec& c = p.coeffs();
  std::size_t k = 0;
  while (c[k] == 0) ++k;
  Poly s(RatVec(c.begin() + static_cast<long>(k), c.end()));
  if (sgn(s.coeff(0)) < 0 && k == 0) return {false, Rat(0), Rat(0)};
  if (s.degree() == 0) return {true, Rat(0), Rat(0)};

  Poly odd = odd_multiplicity_part(s);
  auto chain = sturm_chain(odd);
  std::size_t count = variations_at(chain, Rat(0)) - variations_at_inf(chain);
  if (count == 0) {
    // no sign change on (0, inf); positive leading coefficient and
    // nonnegative value at 0 settle the ray
    if (sgn(s.coeff(0)) < 0) return {false, Rat(0), Rat(0)};
    return {true, Rat(0), Rat(0)};
  }
  // isolate one sign-violating root by bisection on (0, bound]
  Rat lo = 0, hi = root_bound(odd);
  auto count_in = [&](const Rat& a, const Rat& b) {
    return variations_at(chain, a) - variations_at(chain, b);  // roots in (a, b]
  };
  std::size_t here = count_in(lo, hi);
  while (here > 1) {
    Rat mid = (lo + hi) / 2;
    if (odd.eval(mid) == 0) return {false, mid, mid};
    std::size_t left = count_in(lo, mid);
    if (left > 0) {
      hi = mid;
      here = left;
    } else {
      lo = mid;
      here -= left;
    }
  }
  return {false, lo, hi};
}

WeightClass classify_weight(const Polytope& p, const Weight& w) {
  if (w.ambient_dim() != p.ambient_dim())
    throw Error("classify_weight: dimension mismatch");
  const Int q = p.denominator();
  std::vector<IntVec> gens;  // homogenized vertices (q*u, q), generators of C(P)
  for (const RatVec& v : p.vertices()) {
    IntVec g(v.size() + 1);
    for (std::size_t i = 0; i < v.size(); ++i) {
      Rat s = Rat(q) * v[i];
      g[i] = s.get_num();  // integral by choice of q
    }
    g[v.size()] = q;
    gens.push_back(std::move(g));
  }
  auto nonneg_on_cone = [&](const LinForm& f) {
    for (const IntVec& g : gens)
      if (sgn(f.eval(g)) < 0) return false;
    return true;
  };

  bool rp = true;
  for (const WeightTerm& t : w.terms()) {
    if (sgn(t.scalar) < 0) {
      rp = false;
      break;
    }
    for (const LinForm& f : t.factors)
      if (!nonneg_on_cone(f)) {
        rp = false;
        break;
      }
    if (!rp) break;
  }
  if (rp) return WeightClass::RP;

  // SP: identical factors pair up as squares; odd-multiplicity factors must
  // individually be nonnegative on the cone.
  for (const WeightTerm& t : w.terms()) {
    if (sgn(t.scalar) < 0) return WeightClass::Uncertified;
    std::map<RatVec, unsigned> mult;
    for (const LinForm& f : t.factors) mult[f.coeffs] += 1;
    for (const auto& [coeffs, count] : mult) {
      if (count % 2 == 0) continue;
      if (!nonneg_on_cone(LinForm{coeffs})) return WeightClass::Uncertified;
    }
  }
  return WeightClass::SP;
}

MonotoneReport check_monotonicity(const Polytope& p, const Polytope& q,
                                  const Weight& w, const Int& g,
                                  MonotoneMode mode) {
  const Int qp = p.denominator();
  const Int qq = q.denominator();
  if (g < 1 || g % qp != 0 || g % qq != 0)
    throw Error("check_monotonicity: g must be a common multiple of both denominators");
  if (!p.is_empty()) {
    if (q.is_empty()) throw Error("check_monotonicity: P not contained in Q");
    Triangulation tq = triangulate(q);
    for (const RatVec& v : p.vertices())
      if (!polytope_contains(q, tq, v))
        throw Error("check_monotonicity: P not contained in Q");
  }
  if (mode == MonotoneMode::Ray && p.dim() != q.dim())
    throw Error("check_monotonicity: ray mode needs equal dimensions");

  HStarResult hp = hstar(p, w);
  HStarResult hq = hstar(q, w);
  if (!g.fits_ulong_p()) throw Error("check_monotonicity: g out of range");
  const unsigned long gu = g.get_ui();
  const long dp = std::max(p.dim(), 0L);
  const long dq = std::max(q.dim(), 0L);
  const unsigned long mp = static_cast<unsigned long>(dp) + w.degree() + 1;
  const unsigned long mq = static_cast<unsigned long>(dq) + w.degree() + 1;

  MonotoneReport rep;
  rep.lhs = geometric_sum(hp.period, gu).pow(mp) * hp.numerator;
  rep.rhs = geometric_sum(hq.period, gu).pow(mq) * hq.numerator;
  Poly diff = rep.rhs - rep.lhs;
  if (mode == MonotoneMode::Coeffwise) {
    auto witness = check_nonneg_coeffs(diff);
    rep.pass = !witness.has_value();
    rep.witness_exponent = witness;
  } else {
    RayCheck rc = nonneg_on_ray(diff);
    rep.pass = rc.pass;
    if (!rc.pass) rep.witness_interval = std::make_pair(rc.lo, rc.hi);
  }
  return rep;
}

TriangleConditions triangle_conditions(const HalfOpenSimplex& h,
                                       const LinForm& ell) {
  if (h.vertices.size() != 3 || h.ambient_dim() != 2)
    throw Error("triangle_conditions: expected a triangle in R^2");
  if (h.denominator() != 1)
    throw Error("triangle_conditions: expected lattice vertices");
  if (ell.coeffs.size() != 3)
    throw Error("triangle_conditions: expected a form on R^{2+1}");

  TriangleConditions out{};
  out.partially_open = !h.strict.empty() && h.strict.size() != 3;

  RatVec values(3);
  for (std::size_t i = 0; i < 3; ++i)
    values[i] = ell.coeffs[0] * h.vertices[i][0] +
                ell.coeffs[1] * h.vertices[i][1] + ell.coeffs[2];

  // side k is opposite vertex k; ker ell crosses its relative interior iff
  // the form changes sign strictly between the two endpoints
  std::vector<std::size_t> crossed;
  for (std::size_t k = 0; k < 3; ++k) {
    const Rat& a = values[(k + 1) % 3];
    const Rat& b = values[(k + 2) % 3];
    if (sgn(a) * sgn(b) < 0) crossed.push_back(k);
  }
  out.kernel_crosses_like_sides =
      crossed.size() == 2 &&
      (h.strict.count(crossed[0]) == h.strict.count(crossed[1]));
  return out;
}

Rat SymMatrix::quadratic_form(const RatVec& v) const {
  if (v.size() != n) throw Error("SymMatrix: vector length mismatch");
  Rat s = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (v[i] == 0) continue;
    for (std::size_t j = 0; j < n; ++j)
      if (v[j] != 0) s += v[i] * at(i, j) * v[j];
  }
  return s;
}

TensorHPoly h2_tensor(const Polytope& p) {
  if (p.denominator() != 1) throw Error("h2_tensor: polytope must be lattice");
  const std::size_t d = p.ambient_dim();
  if (p.dim() != static_cast<long>(d) || d == 0)
    throw Error("h2_tensor: polytope must be full-dimensional");

  HStarEngine engine(p);
  const std::size_t len = d + 3;  // degrees 0 .. d+2
  TensorHPoly out;
  out.coeffs.assign(len, SymMatrix(d));

  auto coordinate = [&](std::size_t a) {
    RatVec c(d, Rat(0));
    c[a] = 1;
    return c;
  };
  for (std::size_t a = 0; a < d; ++a) {
    for (std::size_t b = a; b < d; ++b) {
      Poly num;
      if (a == b) {
        num = engine.numerator_ell_squared(lift_form(coordinate(a)));
      } else {
        // polarization: x_a x_b = ((x_a + x_b)^2 - (x_a - x_b)^2) / 4
        RatVec plus = coordinate(a), minus = coordinate(a);
        plus[b] += 1;
        minus[b] -= 1;
        num = Rat(1, 4) * (engine.numerator_ell_squared(lift_form(plus)) -
                           engine.numerator_ell_squared(lift_form(minus)));
      }
      for (std::size_t i = 0; i < len; ++i) {
        out.coeffs[i].at(a, b) = num.coeff(i);
        out.coeffs[i].at(b, a) = num.coeff(i);
      }
    }
  }
  return out;
}

PsdCheck is_psd(const SymMatrix& m) {
  const std::size_t n = m.n;
  // work = C^T M C stays congruent to M; columns of C map back to the
  // original coordinates for witness extraction
  SymMatrix work = m;
  RatMatrix c = RatMatrix::identity(n);

  auto column = [&](std::size_t j) {
    RatVec v(n);
    for (std::size_t i = 0; i < n; ++i) v[i] = c.at(i, j);
    return v;
  };
  auto fail_with = [&](RatVec v) {
    Rat val = m.quadratic_form(v);
    if (sgn(val) >= 0) throw Error("is_psd: internal witness error");
    return PsdCheck{false, std::move(v), std::move(val)};
  };

  for (std::size_t k = 0; k < n; ++k) {
    if (work.at(k, k) != 0) {
      if (sgn(work.at(k, k)) < 0) return fail_with(column(k));
      const Rat pivot = work.at(k, k);
      for (std::size_t i = k + 1; i < n; ++i) {
        if (work.at(i, k) == 0) continue;
        Rat f = work.at(i, k) / pivot;
        // symmetric row+column elimination; update the basis map alongside
        for (std::size_t j = k; j < n; ++j) work.at(i, j) -= f * work.at(k, j);
        for (std::size_t j = 0; j < n; ++j) work.at(j, i) = work.at(i, j);
        for (std::size_t r = 0; r < n; ++r) c.at(r, i) -= f * c.at(r, k);
      }
      continue;
    }
    // zero diagonal: a nonzero off-diagonal residual makes the form indefinite
    for (std::size_t j = k + 1; j < n; ++j) {
      if (work.at(k, j) == 0) continue;
      const Rat& a = work.at(k, j);
      const Rat& b = work.at(j, j);
      if (sgn(b) < 0) return fail_with(column(j));
      RatVec v = column(k);
      const RatVec cj = column(j);
      // q(e_k + tau e_j) = 2 tau a + tau^2 b < 0 for the right tau
      Rat tau = (b == 0) ? Rat(-sgn(a)) : Rat(-a / b);
      for (std::size_t i = 0; i < n; ++i) v[i] += tau * cj[i];
      return fail_with(std::move(v));
    }
  }
  return {true, {}, Rat(0)};
}

}  // namespace ehrkit
