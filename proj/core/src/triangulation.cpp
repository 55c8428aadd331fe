#include "ehrkit/triangulation.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "ehrkit/linalg.hpp"

namespace ehrkit {

std::optional<RatVec> barycentric_coordinates(
    const std::vector<RatVec>& simplex, const RatVec& point) {
  if (simplex.empty()) return std::nullopt;
  const std::size_t d = simplex.front().size();
  if (point.size() != d) throw Error("barycentric_coordinates: dimension mismatch");
  const std::size_t k = simplex.size();
  RatMatrix a(d + 1, k);
  for (std::size_t j = 0; j < k; ++j) {
    for (std::size_t i = 0; i < d; ++i) a.at(i, j) = simplex[j][i];
    a.at(d, j) = 1;
  }
  RatVec rhs = point;
  rhs.push_back(Rat(1));
  return solve_rational(a, rhs);
}

namespace {

bool all_nonneg(const RatVec& v) {
  for (const Rat& x : v)
    if (sgn(x) < 0) return false;
  return true;
}

std::vector<std::size_t> lex_order(const std::vector<RatVec>& points) {
  std::vector<std::size_t> order(points.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (points[a] != points[b]) return points[a] < points[b];
    return a < b;
  });
  return order;
}

std::vector<RatVec> gather(const std::vector<RatVec>& points,
                           const std::vector<std::size_t>& cell) {
  std::vector<RatVec> v;
  v.reserve(cell.size());
  for (std::size_t i : cell) v.push_back(points[i]);
  return v;
}

}  // namespace

std::vector<std::vector<std::size_t>> placing_triangulation(
    const std::vector<RatVec>& points) {
  std::vector<std::vector<std::size_t>> cells;
  if (points.empty()) return cells;
  for (std::size_t idx : lex_order(points)) {
    const RatVec& p = points[idx];
    if (cells.empty()) {
      cells.push_back({idx});
      continue;
    }
    // Every cell spans the current affine hull, so one solve decides whether
    // p extends the dimension.
    std::vector<RatVec> first_cell = gather(points, cells.front());
    if (!barycentric_coordinates(first_cell, p)) {
      for (auto& cell : cells) {  // cone every cell
        cell.push_back(idx);
        std::sort(cell.begin(), cell.end());
      }
      continue;
    }
    std::vector<RatVec> bary(cells.size());
    bool inside = false;
    for (std::size_t c = 0; c < cells.size(); ++c) {
      auto bc = barycentric_coordinates(gather(points, cells[c]), p);
      if (!bc) throw Error("placing_triangulation: inconsistent affine hulls");
      bary[c] = std::move(*bc);
      if (all_nonneg(bary[c])) {
        inside = true;
        break;
      }
    }
    if (inside) continue;  // redundant point, skip
    // Boundary facets are those owned by exactly one cell; p is beyond a
    // facet iff the barycentric functional of the opposite vertex is negative.
    std::map<std::vector<std::size_t>, std::vector<std::pair<std::size_t, std::size_t>>>
        facet_owners;
    for (std::size_t c = 0; c < cells.size(); ++c) {
      for (std::size_t v = 0; v < cells[c].size(); ++v) {
        std::vector<std::size_t> facet = cells[c];
        facet.erase(facet.begin() + static_cast<long>(v));
        facet_owners[facet].push_back({c, v});
      }
    }
    std::vector<std::vector<std::size_t>> fresh;
    for (const auto& [facet, owners] : facet_owners) {
      if (owners.size() != 1) continue;
      auto [c, v] = owners.front();
      if (sgn(bary[c][v]) >= 0) continue;  // not strictly visible
      std::vector<std::size_t> cell = facet;
      cell.push_back(idx);
      std::sort(cell.begin(), cell.end());
      fresh.push_back(std::move(cell));
    }
    if (fresh.empty())
      throw Error("placing_triangulation: no visible facet for outside point");
    cells.insert(cells.end(), fresh.begin(), fresh.end());
  }
  for (auto& cell : cells) std::sort(cell.begin(), cell.end());
  std::sort(cells.begin(), cells.end());
  return cells;
}

bool in_convex_hull(const RatVec& point, const std::vector<RatVec>& points) {
  if (points.empty()) return false;
  auto cells = placing_triangulation(points);
  for (const auto& cell : cells) {
    auto bc = barycentric_coordinates(gather(points, cell), point);
    if (bc && all_nonneg(*bc)) return true;
  }
  return false;
}

bool in_affine_hull(const RatVec& point, const std::vector<RatVec>& points) {
  if (points.empty()) return false;
  const std::size_t d = points.front().size();
  const std::size_t k = points.size();
  RatMatrix a(d + 1, k);
  for (std::size_t j = 0; j < k; ++j) {
    for (std::size_t i = 0; i < d; ++i) a.at(i, j) = points[j][i];
    a.at(d, j) = 1;
  }
  RatVec rhs = point;
  rhs.push_back(Rat(1));
  return solve_rational(a, rhs).has_value();
}

Triangulation triangulate(const Polytope& p) {
  if (p.is_empty()) throw Error("triangulate: empty polytope");
  Triangulation t;
  t.cells = placing_triangulation(p.vertices());
  const std::size_t cell_size = static_cast<std::size_t>(p.dim() + 1);
  for (const auto& cell : t.cells)
    if (cell.size() != cell_size)
      throw Error("triangulate: degenerate cell");  // cannot happen for irredundant input
  return t;
}

Int HalfOpenSimplex::denominator() const {
  Int q = 1;
  for (const RatVec& v : vertices)
    for (const Rat& x : v) q = lcm(q, x.get_den());
  return q;
}

std::vector<HalfOpenSimplex> half_open_decomposition(const Polytope& p,
                                                     const Triangulation& t) {
  static const unsigned long kBases[] = {3, 5, 7, 11, 13, 17, 19, 23};
  const auto& verts = p.vertices();
  if (verts.empty()) throw Error("half_open_decomposition: empty polytope");
  for (unsigned long base : kBases) {
    RatVec anchor(p.ambient_dim(), Rat(0));
    Rat total = 0;
    Rat w = 1;
    for (const RatVec& v : verts) {
      for (std::size_t i = 0; i < v.size(); ++i) anchor[i] += w * v[i];
      total += w;
      w *= static_cast<long>(base);
    }
    for (Rat& x : anchor) x /= total;

    std::vector<HalfOpenSimplex> out;
    out.reserve(t.cells.size());
    bool degenerate = false;
    std::size_t closed_cells = 0;
    for (const auto& cell : t.cells) {
      std::vector<RatVec> cell_verts;
      cell_verts.reserve(cell.size());
      for (std::size_t i : cell) cell_verts.push_back(verts[i]);
      auto bc = barycentric_coordinates(cell_verts, anchor);
      if (!bc) throw Error("half_open_decomposition: anchor outside affine hull");
      HalfOpenSimplex h;
      h.vertices = std::move(cell_verts);
      for (std::size_t i = 0; i < bc->size(); ++i) {
        int s = sgn((*bc)[i]);
        if (s == 0) {
          degenerate = true;
          break;
        }
        if (s < 0) h.strict.insert(i);
      }
      if (degenerate) break;
      if (h.strict.empty()) ++closed_cells;
      out.push_back(std::move(h));
    }
    if (degenerate) continue;
    if (closed_cells != 1)
      throw Error("half_open_decomposition: anchor not in exactly one cell");
    return out;
  }
  throw Error("half_open_decomposition: anchor degenerate for all re-weightings");
}

HalfOpenSimplex pyramid(const HalfOpenSimplex& base,
                        const std::vector<RatVec>& apexes) {
  HalfOpenSimplex h = base;
  for (const RatVec& apex : apexes) {
    if (in_affine_hull(apex, h.vertices))
      throw Error("pyramid: apex inside the affine hull");
    h.vertices.push_back(apex);
  }
  return h;
}

bool polytope_contains(const Polytope& p, const Triangulation& t,
                       const RatVec& point) {
  const auto& verts = p.vertices();
  for (const auto& cell : t.cells) {
    std::vector<RatVec> cell_verts;
    cell_verts.reserve(cell.size());
    for (std::size_t i : cell) cell_verts.push_back(verts[i]);
    auto bc = barycentric_coordinates(cell_verts, point);
    if (bc && all_nonneg(*bc)) return true;
  }
  return false;
}

}  // namespace ehrkit
