#include "convval/random_gen.hpp"

#include <stdexcept>

namespace convval {

int Rng::uniform_int(int lo, int hi) {
  uint64_t span = static_cast<uint64_t>(hi - lo) + 1;
  return lo + static_cast<int>(next() % span);
}

double Rng::uniform(double lo, double hi) {
  double u = static_cast<double>(next() >> 11) * 0x1.0p-53;
  return lo + (hi - lo) * u;
}

Rat Rng::grid_rational(int span, int denom) {
  return Rat(uniform_int(-span, span), denom);
}

RVec Rng::grid_point(int n, int span, int denom) {
  RVec p(static_cast<size_t>(n));
  for (auto& c : p) c = grid_rational(span, denom);
  return p;
}

namespace {

std::vector<RVec> full_dim_point_cloud(Rng& rng, int n, int count) {
  for (int attempt = 0; attempt < 200; ++attempt) {
    std::vector<RVec> pts;
    pts.reserve(static_cast<size_t>(count));
    for (int i = 0; i < count; ++i) pts.push_back(rng.grid_point(n, 16, 8));
    RMat dirs;
    for (size_t i = 1; i < pts.size(); ++i) dirs.push_back(sub(pts[i], pts[0]));
    if (rank(dirs) == n) return pts;
  }
  throw std::runtime_error("random_polytope: cannot reach full dimension");
}

RVec exact_centroid(const std::vector<RVec>& pts) {
  RVec c = zero_vec(static_cast<int>(pts[0].size()));
  for (const auto& p : pts) c = add(c, p);
  return scaled(c, Rat(1, static_cast<unsigned long>(pts.size())));
}

}  // namespace

Polytope random_polytope(uint64_t seed, int n, int vertex_count, OriginMode mode) {
  if (vertex_count < n + 1) throw std::invalid_argument("random_polytope: need >= n+1 points");
  Rng rng(seed);
  auto pts = full_dim_point_cloud(rng, n, vertex_count);
  if (mode == OriginMode::contains_origin) {
    if (rng.next() % 2 == 0) {
      pts.push_back(zero_vec(n));
    } else {
      RVec c = exact_centroid(pts);
      for (auto& p : pts) p = sub(p, c);
    }
  }
  return Polytope::from_points(n, std::move(pts));
}

Polytope random_polytope_origin_interior(uint64_t seed, int n, int vertex_count) {
  if (vertex_count < n + 1) throw std::invalid_argument("random_polytope: need >= n+1 points");
  Rng rng(seed);
  auto pts = full_dim_point_cloud(rng, n, vertex_count);
  RVec c = exact_centroid(pts);
  for (auto& p : pts) p = sub(p, c);
  return Polytope::from_points(n, std::move(pts));
}

Polytope random_lowdim_polytope(uint64_t seed, int n, int d, int vertex_count,
                                bool through_origin) {
  if (d < 0 || d >= n) throw std::invalid_argument("random_lowdim_polytope: need 0 <= d < n");
  Rng rng(seed);
  if (d == 0) {
    RVec p = through_origin ? zero_vec(n) : rng.grid_point(n, 16, 8);
    return Polytope::from_points(n, {std::move(p)});
  }
  for (int attempt = 0; attempt < 200; ++attempt) {
    // Random rational embedding of a d-dimensional cloud.
    RMat emb(static_cast<size_t>(d));
    for (auto& col : emb) col = rng.grid_point(n, 4, 2);
    if (rank(emb) != d) continue;
    RVec shift = through_origin ? zero_vec(n) : rng.grid_point(n, 16, 8);
    std::vector<RVec> pts;
    pts.reserve(static_cast<size_t>(vertex_count));
    bool origin_included = false;
    for (int i = 0; i < vertex_count; ++i) {
      RVec low(static_cast<size_t>(d));
      for (auto& c : low) c = rng.grid_rational(16, 8);
      if (through_origin && !origin_included) {
        for (auto& c : low) c = 0;
        origin_included = true;
      }
      RVec p = shift;
      for (int j = 0; j < d; ++j)
        p = add(p, scaled(emb[static_cast<size_t>(j)], low[static_cast<size_t>(j)]));
      pts.push_back(std::move(p));
    }
    RMat dirs;
    for (size_t i = 1; i < pts.size(); ++i) dirs.push_back(sub(pts[i], pts[0]));
    if (rank(dirs) != d) continue;
    return Polytope::from_points(n, std::move(pts));
  }
  throw std::runtime_error("random_lowdim_polytope: cannot reach requested dimension");
}

LinearMap random_unimodular(uint64_t seed, int n, int shear_count) {
  Rng rng(seed);
  RMat m = identity_mat(n);
  for (int s = 0; s < shear_count; ++s) {
    int i = rng.uniform_int(0, n - 1);
    int j = rng.uniform_int(0, n - 2);
    if (j >= i) ++j;
    int c = rng.uniform_int(1, 3) * (rng.next() % 2 == 0 ? 1 : -1);
    // row_i += c * row_j
    for (int k = 0; k < n; ++k)
      m[static_cast<size_t>(i)][static_cast<size_t>(k)] +=
          Rat(c) * m[static_cast<size_t>(j)][static_cast<size_t>(k)];
  }
  return LinearMap(std::move(m));
}

Halfspace random_cutting_halfspace(const Polytope& p, Rng& rng, bool through_origin) {
  for (int attempt = 0; attempt < 500; ++attempt) {
    RVec a(static_cast<size_t>(p.ambient_dim()));
    bool nonzero = false;
    for (auto& c : a) {
      c = rng.uniform_int(-4, 4);
      if (c != 0) nonzero = true;
    }
    if (!nonzero) continue;
    Rat lo = dot(a, p.vertices()[0]), hi = lo;
    for (const auto& v : p.vertices()) {
      Rat t = dot(a, v);
      lo = std::min(lo, t);
      hi = std::max(hi, t);
    }
    if (through_origin) {
      if (lo < 0 && hi > 0) return Halfspace(std::move(a), Rat(0));
      continue;
    }
    if (lo == hi) continue;
    Rat b = lo + (hi - lo) * Rat(rng.uniform_int(1, 15), 16);
    if (b > lo && b < hi) return Halfspace(std::move(a), std::move(b));
  }
  throw std::runtime_error("random_cutting_halfspace: no cutting hyperplane found");
}

DVec random_direction(Rng& rng, int n, double inv_scale) {
  DVec x(static_cast<size_t>(n));
  bool nonzero = false;
  for (auto& c : x) {
    c = static_cast<double>(rng.uniform_int(-32, 32)) * inv_scale;
    if (c != 0) nonzero = true;
  }
  if (!nonzero) x[0] = inv_scale;
  return x;
}

RVec random_rational_point(Rng& rng, int n, int span, int denom) {
  return rng.grid_point(n, span, denom);
}

}  // namespace convval
