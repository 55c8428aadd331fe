#include "ehrkit/hstar.hpp"

#include <map>

#include "ehrkit/eulerian.hpp"

namespace ehrkit {

namespace {

unsigned long to_ulong(const Int& x, const char* what) {
  if (x < 0 || !x.fits_ulong_p()) throw Error(std::string(what) + ": out of range");
  return x.get_ui();
}

// Accumulates poly * t^shift into acc.
void add_shifted(RatVec& acc, const Poly& poly, std::size_t shift) {
  const RatVec& c = poly.coeffs();
  if (acc.size() < c.size() + shift) acc.resize(c.size() + shift, Rat(0));
  for (std::size_t i = 0; i < c.size(); ++i) acc[shift + i] += c[i];
}

// Sum over assignments of the term's factors to the generators, grouped by
// the vector of per-generator factor counts; one Eulerian product per group.
void term_on_cell(const ConeGenerators& gens,
                  const std::vector<ParallelepipedPoint>& points,
                  const WeightTerm& term, unsigned long g, RatVec& acc) {
  if (term.scalar == 0) return;
  const std::size_t k = gens.generators.size();
  const std::size_t m = term.factors.size();

  // factor values at the integer generators
  std::vector<RatVec> val(m, RatVec(k));
  for (std::size_t f = 0; f < m; ++f)
    for (std::size_t j = 0; j < k; ++j)
      val[f][j] = term.factors[f].eval(gens.generators[j]);

  for (const ParallelepipedPoint& pt : points) {
    std::map<std::vector<unsigned>, Rat> groups;
    std::vector<unsigned> counts(k, 0);
    // depth-first over factor assignments with zero pruning
    auto recurse = [&](auto&& self, std::size_t f, const Rat& prod) -> void {
      if (f == m) {
        groups[counts] += prod;
        return;
      }
      for (std::size_t j = 0; j < k; ++j) {
        if (val[f][j] == 0) continue;
        counts[j] += 1;
        self(self, f + 1, Rat(prod * val[f][j]));
        counts[j] -= 1;
      }
    };
    recurse(recurse, 0, Rat(1));
    if (groups.empty()) continue;

    // A_c^{lambda_j}(t^g), built on demand per (c, j)
    std::map<std::pair<unsigned, std::size_t>, Poly> stretched;
    auto eulerian_at = [&](unsigned c, std::size_t j) -> const Poly& {
      auto key = std::make_pair(c, j);
      auto it = stretched.find(key);
      if (it == stretched.end())
        it = stretched
                 .emplace(key, eulerian_poly(c, pt.lambdas[j]).stretch(g))
                 .first;
      return it->second;
    };

    Poly point_sum;
    for (const auto& [cts, scal] : groups) {
      if (scal == 0) continue;
      Poly prod = Poly::constant(scal);
      for (std::size_t j = 0; j < k; ++j)
        if (cts[j] > 0) prod = prod * eulerian_at(cts[j], j);
      point_sum += prod;
    }
    add_shifted(acc, point_sum, to_ulong(pt.height, "hstar: point height"));
  }
  // term scalar applied by the caller
}

void ell_squared_on_cell(const ConeGenerators& gens,
                         const std::vector<ParallelepipedPoint>& points,
                         const LinForm& ell, unsigned long g, RatVec& acc) {
  const std::size_t k = gens.generators.size();
  RatVec vals(k);
  for (std::size_t j = 0; j < k; ++j) vals[j] = ell.eval(gens.generators[j]);

  Rat total = 0, sumsq = 0;
  for (const Rat& v : vals) {
    total += v;
    sumsq += v * v;
  }
  for (const ParallelepipedPoint& pt : points) {
    Rat low = 0;  // sum lambda_j * L_j
    for (std::size_t j = 0; j < k; ++j)
      if (vals[j] != 0) low += pt.lambdas[j] * vals[j];
    Rat high = total - low;  // sum (1 - lambda_j) * L_j
    Rat c0 = low * low;
    Rat c2 = high * high;
    Rat c1 = sumsq + total * total - c0 - c2;
    std::size_t h = to_ulong(pt.height, "hstar: point height");
    if (acc.size() < h + 2 * g + 1) acc.resize(h + 2 * g + 1, Rat(0));
    acc[h] += c0;
    acc[h + g] += c1;
    acc[h + 2 * g] += c2;
  }
}

}  // namespace

HStarResult make_hstar_result(Poly numerator, unsigned long period,
                              unsigned long exponent, long dim,
                              long weight_degree, std::size_t ambient_dim) {
  if (period == 0 || exponent == 0)
    throw Error("HStarResult: period and exponent must be positive");
  if (numerator.degree() >= 0 &&
      static_cast<unsigned long>(numerator.degree()) > period * exponent - 1)
    throw Error("HStarResult: numerator degree exceeds period*exponent - 1");
  HStarResult r;
  r.numerator = std::move(numerator);
  r.period = period;
  r.exponent = exponent;
  r.dim = dim;
  r.weight_degree = weight_degree;
  r.ambient_dim = ambient_dim;
  return r;
}

Poly hstar_term_halfopen(const HalfOpenSimplex& h, const WeightTerm& term,
                         const Int& g) {
  ConeGenerators gens = cone_generators(h, g);
  auto points = enumerate_points(gens);
  RatVec acc;
  term_on_cell(gens, points, term, to_ulong(g, "hstar: g"), acc);
  return term.scalar * Poly(std::move(acc));
}

Poly hstar_halfopen(const HalfOpenSimplex& h, const Weight& w, const Int& g) {
  ConeGenerators gens = cone_generators(h, g);
  auto points = enumerate_points(gens);
  const unsigned long gu = to_ulong(g, "hstar: g");
  Poly out;
  for (const WeightTerm& term : w.terms()) {
    RatVec acc;
    term_on_cell(gens, points, term, gu, acc);
    out += term.scalar * Poly(std::move(acc));
  }
  return out;
}

Poly hstar_ell_squared_halfopen(const HalfOpenSimplex& h, const LinForm& ell,
                                const Int& g) {
  ConeGenerators gens = cone_generators(h, g);
  auto points = enumerate_points(gens);
  RatVec acc;
  ell_squared_on_cell(gens, points, ell, to_ulong(g, "hstar: g"), acc);
  return Poly(std::move(acc));
}

HStarEngine::HStarEngine(const Polytope& p) : q_(1), r_(p.dim()), d_(p.ambient_dim()) {
  if (p.is_empty()) return;
  q_ = p.denominator();
  Triangulation t = triangulate(p);
  for (const HalfOpenSimplex& h : half_open_decomposition(p, t)) {
    Cell cell;
    cell.gens = cone_generators(h, q_);
    cell.points = enumerate_points(cell.gens);
    cells_.push_back(std::move(cell));
  }
}

Poly HStarEngine::numerator(const Weight& w) const {
  if (w.ambient_dim() != d_) throw Error("hstar: weight dimension mismatch");
  const unsigned long gu = to_ulong(q_, "hstar: period");
  Poly out;
  for (const WeightTerm& term : w.terms()) {
    RatVec acc;
    for (const Cell& cell : cells_) term_on_cell(cell.gens, cell.points, term, gu, acc);
    out += term.scalar * Poly(std::move(acc));
  }
  return out;
}

Poly HStarEngine::numerator_ell_squared(const LinForm& ell) const {
  if (ell.coeffs.size() != d_ + 1)
    throw Error("hstar: linear form must act on R^{d+1}");
  const unsigned long gu = to_ulong(q_, "hstar: period");
  RatVec acc;
  for (const Cell& cell : cells_)
    ell_squared_on_cell(cell.gens, cell.points, ell, gu, acc);
  return Poly(std::move(acc));
}

HStarResult hstar(const Polytope& p, const Weight& w) {
  if (w.ambient_dim() != p.ambient_dim())
    throw Error("hstar: weight dimension mismatch");
  HStarEngine engine(p);
  const long r = p.is_empty() ? 0 : p.dim();
  const unsigned long exponent =
      static_cast<unsigned long>(r) + w.degree() + 1;
  return make_hstar_result(engine.numerator(w),
                           to_ulong(engine.period(), "hstar: period"), exponent,
                           p.dim(), w.degree(), p.ambient_dim());
}

HStarResult hstar_ell_squared(const Polytope& p, const LinForm& ell) {
  LinForm lifted = ell;
  if (lifted.coeffs.size() == p.ambient_dim())
    lifted.coeffs.push_back(Rat(0));
  if (lifted.coeffs.size() != p.ambient_dim() + 1)
    throw Error("hstar_ell_squared: bad linear form length");
  HStarEngine engine(p);
  const long r = p.is_empty() ? 0 : p.dim();
  return make_hstar_result(engine.numerator_ell_squared(lifted),
                           to_ulong(engine.period(), "hstar: period"),
                           static_cast<unsigned long>(r) + 3, p.dim(), 2,
                           p.ambient_dim());
}

HStarResult ratfun_combine(const std::vector<ScaledResult>& parts,
                           unsigned long period, unsigned long exponent) {
  Poly acc;
  long dim = 0, mdeg = 0;
  std::size_t ambient = 0;
  RatVec one_minus(period + 1, Rat(0));
  one_minus[0] = 1;
  one_minus[period] = -1;
  const Poly one_minus_ta = Poly(std::move(one_minus));
  for (const ScaledResult& sr : parts) {
    const HStarResult& p = sr.part;
    if (period % p.period != 0)
      throw Error("ratfun_combine: part period does not divide target period");
    if (p.exponent > exponent)
      throw Error("ratfun_combine: part exponent exceeds target exponent");
    Poly rebased = p.numerator *
                   geometric_sum(p.period, period).pow(p.exponent) *
                   one_minus_ta.pow(exponent - p.exponent);
    acc += sr.coeff * rebased;
    dim = std::max(dim, p.dim);
    mdeg = std::max(mdeg, p.weight_degree);
    ambient = std::max(ambient, p.ambient_dim);
  }
  return make_hstar_result(std::move(acc), period, exponent, dim, mdeg, ambient);
}

RatVec series_expand(const HStarResult& r, std::size_t n_max) {
  RatVec out(n_max + 1, Rat(0));
  const RatVec& num = r.numerator.coeffs();
  for (std::size_t j = 0; j < num.size() && j <= n_max; ++j) {
    if (num[j] == 0) continue;
    for (std::size_t k = 0; j + r.period * k <= n_max; ++k)
      out[j + r.period * k] += num[j] * Rat(binomial(k + r.exponent - 1, r.exponent - 1));
  }
  return out;
}

}  // namespace ehrkit
