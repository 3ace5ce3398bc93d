#include "hyperfront/singular.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <map>
#include <utility>

#include "hyperfront/error.hpp"
#include "hyperfront/front.hpp"
#include "hyperfront/parallel.hpp"

namespace hyperfront::front {
namespace {

constexpr int kMaxRefineSteps = 100;
constexpr double kFieldTarget = 1e-15;

// Segment endpoints per marching-squares case, as local edge numbers
// (0 bottom, 1 right, 2 top, 3 left). Corners: 0 (i,j), 1 (i+1,j),
// 2 (i+1,j+1), 3 (i,j+1); bit k of the case is set when corner k is
// non-negative. Saddles (5, 10) are handled separately.
constexpr std::array<std::array<int, 2>, 16> kSingleSegment = {{
    {-1, -1}, {3, 0}, {0, 1}, {3, 1}, {1, 2}, {-1, -1}, {0, 2}, {3, 2},
    {2, 3}, {0, 2}, {-1, -1}, {1, 2}, {3, 1}, {0, 1}, {3, 0}, {-1, -1},
}};

struct Vertex {
  Complex z;
  double residual = 0.0;
};

struct Refined {
  Complex z;
  FieldSample sample;
};

// Illinois false position on the bracket [pos, neg]; the sign change is
// kept at every step, so this degrades to bisection-like progress at worst.
Refined refine(const FieldFn& field, Complex pos, FieldSample fpos, Complex neg, FieldSample fneg) {
  double gp = fpos.field, gn = fneg.field;
  int side = 0;
  for (int step = 0; step < kMaxRefineSteps; ++step) {
    const double t = gp / (gp - gn);
    Complex mid = pos + std::clamp(t, 0.0, 1.0) * (neg - pos);
    if (mid == pos || mid == neg) mid = 0.5 * (pos + neg);
    if (mid == pos || mid == neg) break;
    const FieldSample fm = field(mid);
    if (fm.field == 0.0) return {mid, fm};
    if (fm.field > 0.0) {
      pos = mid;
      fpos = fm;
      gp = fm.field;
      if (side == 1) gn *= 0.5;
      side = 1;
    } else {
      neg = mid;
      fneg = fm;
      gn = fm.field;
      if (side == -1) gp *= 0.5;
      side = -1;
    }
    if (std::abs(neg - pos) <= 4.0 * std::numeric_limits<double>::epsilon() * std::max(1.0, std::abs(pos)) ||
        std::min(std::abs(fpos.field), std::abs(fneg.field)) <= kFieldTarget) {
      break;
    }
  }
  return std::abs(fpos.field) <= std::abs(fneg.field) ? Refined{pos, fpos} : Refined{neg, fneg};
}

}  // namespace

SingularCurve contour_zero_set(const FieldFn& field, const CartesianGrid& grid,
                               std::size_t threads) {
  const int n = grid.n;
  if (n < 16) throw DomainError("singular-set grid must be at least 16 x 16");
  if (!(grid.radius > 0.0 && grid.radius < 1.0)) {
    throw DomainError("singular-set grid radius must lie in (0, 1)");
  }
  const auto node_index = [n](int i, int j) { return static_cast<std::size_t>(j) * n + i; };

  std::vector<FieldSample> values(static_cast<std::size_t>(n) * n);
  std::vector<char> inside(values.size(), 0);
  parallel_for(values.size(), threads, [&](std::size_t k) {
    const int i = static_cast<int>(k % n);
    const int j = static_cast<int>(k / n);
    if (!grid.inside(i, j)) return;
    inside[k] = 1;
    values[k] = field(grid.node(i, j));
  });

  SingularCurve out;
  bool all_singular = true;
  std::size_t inside_nodes = 0;
  for (std::size_t k = 0; k < values.size(); ++k) {
    if (!inside[k]) continue;
    ++inside_nodes;
    if (!(std::abs(values[k].residual) <= kSingularVertexTol)) all_singular = false;
  }
  out.entire_domain_singular = inside_nodes > 0 && all_singular;

  // Classify cells; collect crossing edges and per-cell segments.
  struct Cell {
    int i, j, mask;
  };
  std::vector<Cell> cells;
  for (int j = 0; j + 1 < n; ++j) {
    for (int i = 0; i + 1 < n; ++i) {
      if (!inside[node_index(i, j)] || !inside[node_index(i + 1, j)] ||
          !inside[node_index(i + 1, j + 1)] || !inside[node_index(i, j + 1)]) {
        continue;
      }
      ++out.cells;
      const std::array<std::size_t, 4> c = {node_index(i, j), node_index(i + 1, j),
                                            node_index(i + 1, j + 1), node_index(i, j + 1)};
      int mask = 0;
      bool infinite = false;
      for (int k = 0; k < 4; ++k) {
        if (values[c[k]].field >= 0.0) mask |= 1 << k;
        infinite = infinite || values[c[k]].infinite;
      }
      if (infinite) ++out.infinite_cells;
      if (mask != 0 && mask != 15) cells.push_back({i, j, mask});
    }
  }
  out.crossed_cells = cells.size();
  if (cells.empty()) return out;

  // Global edge id: 2*node for the edge to (i+1, j), 2*node+1 for the edge to (i, j+1).
  const auto edge_id = [&](int i, int j, int local) -> std::size_t {
    switch (local) {
      case 0: return 2 * node_index(i, j);
      case 1: return 2 * node_index(i + 1, j) + 1;
      case 2: return 2 * node_index(i, j + 1);
      default: return 2 * node_index(i, j) + 1;
    }
  };

  // Saddle resolution needs the centre value.
  std::vector<double> centre(cells.size(), 0.0);
  parallel_for(cells.size(), threads, [&](std::size_t k) {
    const Cell& c = cells[k];
    if (c.mask != 5 && c.mask != 10) return;
    centre[k] = field(0.5 * (grid.node(c.i, c.j) + grid.node(c.i + 1, c.j + 1))).field;
  });

  std::vector<std::pair<std::size_t, std::size_t>> segments;
  for (std::size_t k = 0; k < cells.size(); ++k) {
    const Cell& c = cells[k];
    auto add = [&](int a, int b) { segments.emplace_back(edge_id(c.i, c.j, a), edge_id(c.i, c.j, b)); };
    if (c.mask == 5) {
      if (centre[k] >= 0.0) {
        add(0, 1);
        add(2, 3);
      } else {
        add(3, 0);
        add(1, 2);
      }
    } else if (c.mask == 10) {
      if (centre[k] >= 0.0) {
        add(3, 0);
        add(1, 2);
      } else {
        add(0, 1);
        add(2, 3);
      }
    } else {
      const auto& s = kSingleSegment[c.mask];
      add(s[0], s[1]);
    }
  }

  // Refine every crossing edge once.
  std::vector<std::size_t> edges;
  edges.reserve(2 * segments.size());
  for (const auto& [a, b] : segments) {
    edges.push_back(a);
    edges.push_back(b);
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());

  std::vector<Vertex> vertices(edges.size());
  parallel_for(edges.size(), threads, [&](std::size_t k) {
    const std::size_t id = edges[k];
    const std::size_t node = id / 2;
    const int i = static_cast<int>(node % n);
    const int j = static_cast<int>(node / n);
    const int i2 = (id % 2 == 0) ? i + 1 : i;
    const int j2 = (id % 2 == 0) ? j : j + 1;
    Complex za = grid.node(i, j);
    Complex zb = grid.node(i2, j2);
    FieldSample fa = values[node];
    FieldSample fb = values[node_index(i2, j2)];
    if (fa.field < 0.0) {
      std::swap(za, zb);
      std::swap(fa, fb);
    }
    const Refined r = refine(field, za, fa, zb, fb);
    vertices[k] = {r.z, r.sample.residual};
  });
  const auto vertex_of = [&](std::size_t id) -> const Vertex& {
    return vertices[std::lower_bound(edges.begin(), edges.end(), id) - edges.begin()];
  };

  // Stitch segments into polylines.
  std::map<std::size_t, std::vector<std::size_t>> incident;
  for (std::size_t s = 0; s < segments.size(); ++s) {
    incident[segments[s].first].push_back(s);
    incident[segments[s].second].push_back(s);
  }
  std::vector<char> used(segments.size(), 0);
  auto walk = [&](std::size_t start_edge) {
    std::vector<std::size_t> chain{start_edge};
    std::size_t at = start_edge;
    for (;;) {
      std::size_t next_seg = segments.size();
      for (std::size_t s : incident[at]) {
        if (!used[s]) {
          next_seg = s;
          break;
        }
      }
      if (next_seg == segments.size()) break;
      used[next_seg] = 1;
      at = segments[next_seg].first == at ? segments[next_seg].second : segments[next_seg].first;
      chain.push_back(at);
    }
    std::vector<Complex> line;
    std::vector<double> res;
    for (std::size_t id : chain) {
      const Vertex& v = vertex_of(id);
      line.push_back(v.z);
      res.push_back(v.residual);
    }
    out.polylines.push_back(std::move(line));
    out.residuals.push_back(std::move(res));
  };
  for (const auto& [id, segs] : incident) {
    if (segs.size() == 1 && !used[segs.front()]) walk(id);
  }
  for (std::size_t s = 0; s < segments.size(); ++s) {
    if (!used[s]) walk(segments[s].first);
  }

  out.vertex_count = vertices.size();
  for (const Vertex& v : vertices) {
    out.max_vertex_residual = std::max(out.max_vertex_residual, std::abs(v.residual));
  }
  return out;
}

SingularCurve singular_set(const legendrian::LegendrianData& d, const CartesianGrid& grid,
                           std::size_t threads) {
  const FieldFn field = [&d](Complex z) {
    const auto forms = legendrian::canonical_forms(d, z);
    return FieldSample{singular_field(forms), singular_value(forms), forms.rho.infinite};
  };
  return contour_zero_set(field, grid, threads);
}

double distance_to(const SingularCurve& curve, Complex p) noexcept {
  double best = HUGE_VAL;
  for (const auto& line : curve.polylines) {
    if (line.size() == 1) best = std::min(best, std::abs(line.front() - p));
    for (std::size_t k = 1; k < line.size(); ++k) {
      const Complex a = line[k - 1];
      const Complex d = line[k] - a;
      const double len2 = std::norm(d);
      double t = len2 > 0.0 ? ((p - a) * std::conj(d)).real() / len2 : 0.0;
      t = std::clamp(t, 0.0, 1.0);
      best = std::min(best, std::abs(a + t * d - p));
    }
  }
  return best;
}

}  // namespace hyperfront::front
