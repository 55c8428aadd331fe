#include "ehrkit/polytope.hpp"

#include "ehrkit/linalg.hpp"
#include "ehrkit/triangulation.hpp"

namespace ehrkit {

namespace {

long affine_dim(const std::vector<RatVec>& vertices, std::size_t d) {
  if (vertices.empty()) return -1;
  RatMatrix m(vertices.size(), d + 1);
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    for (std::size_t j = 0; j < d; ++j) m.at(i, j) = vertices[i][j];
    m.at(i, d) = 1;
  }
  return static_cast<long>(rank(m)) - 1;
}

}  // namespace

Polytope::Polytope(std::size_t ambient_dim, std::vector<RatVec> vertices)
    : d_(ambient_dim), vertices_(std::move(vertices)) {
  for (const RatVec& v : vertices_)
    if (v.size() != d_) throw Error("Polytope: vertex length mismatch");
  for (std::size_t j = 0; j < vertices_.size(); ++j) {
    std::vector<RatVec> others;
    others.reserve(vertices_.size() - 1);
    for (std::size_t i = 0; i < vertices_.size(); ++i)
      if (i != j) others.push_back(vertices_[i]);
    if (in_convex_hull(vertices_[j], others))
      throw Error("Polytope: redundant vertex at index " + std::to_string(j));
  }
  dim_ = affine_dim(vertices_, d_);
}

Int Polytope::denominator() const {
  Int q = 1;
  for (const RatVec& v : vertices_)
    for (const Rat& x : v) q = lcm(q, x.get_den());
  return q;
}

Polytope Polytope::dilate(const Int& k) const {
  if (k < 1) throw Error("Polytope::dilate: factor must be >= 1");
  std::vector<RatVec> scaled = vertices_;
  for (RatVec& v : scaled)
    for (Rat& x : v) x *= Rat(k);
  return Polytope(d_, std::move(scaled));
}

Polytope pyramid(const Polytope& base, const std::vector<RatVec>& apexes) {
  std::vector<RatVec> verts = base.vertices();
  for (const RatVec& apex : apexes) {
    if (apex.size() != base.ambient_dim())
      throw Error("pyramid: apex length mismatch");
    if (in_affine_hull(apex, verts))
      throw Error("pyramid: apex inside the affine hull");
    verts.push_back(apex);
  }
  return Polytope(base.ambient_dim(), std::move(verts));
}

RatVec linear_form_from_vertex_values(const Polytope& simplex,
                                      const RatVec& values) {
  const auto& verts = simplex.vertices();
  if (verts.empty()) throw Error("linear_form_from_vertex_values: empty polytope");
  if (simplex.dim() + 1 != static_cast<long>(verts.size()))
    throw Error("linear_form_from_vertex_values: polytope is not a simplex");
  if (values.size() != verts.size())
    throw Error("linear_form_from_vertex_values: one value per vertex required");
  const std::size_t d = simplex.ambient_dim();
  RatMatrix m(verts.size(), d + 1);
  for (std::size_t i = 0; i < verts.size(); ++i) {
    for (std::size_t j = 0; j < d; ++j) m.at(i, j) = verts[i][j];
    m.at(i, d) = 1;
  }
  auto c = solve_rational(m, values);
  if (!c) throw Error("linear_form_from_vertex_values: inconsistent system");
  return *c;
}

}  // namespace ehrkit
