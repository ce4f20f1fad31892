#include "convval/polytope.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <stdexcept>

namespace convval {
namespace {

// --- small dynamic bitset over constraint indices ---------------------------

struct ActSet {
  std::vector<uint64_t> w;
  ActSet() = default;
  explicit ActSet(size_t nbits) : w((nbits + 63) / 64, 0) {}
  void set(size_t i) { w[i >> 6] |= uint64_t(1) << (i & 63); }
  bool test(size_t i) const { return (w[i >> 6] >> (i & 63)) & 1; }
  int count() const {
    int c = 0;
    for (uint64_t x : w) c += __builtin_popcountll(x);
    return c;
  }
  bool subset_of(const ActSet& o) const {
    for (size_t i = 0; i < w.size(); ++i)
      if (w[i] & ~o.w[i]) return false;
    return true;
  }
  static ActSet intersect(const ActSet& a, const ActSet& b) {
    ActSet r;
    r.w.resize(a.w.size());
    for (size_t i = 0; i < a.w.size(); ++i) r.w[i] = a.w[i] & b.w[i];
    return r;
  }
};

struct DualVertex {
  RVec y;
  ActSet act;
};

RVec centroid(const std::vector<RVec>& pts, const std::vector<size_t>& ids) {
  RVec c = zero_vec(static_cast<int>(pts[0].size()));
  for (size_t id : ids) c = add(c, pts[id]);
  Rat inv(1, static_cast<unsigned long>(ids.size()));
  return scaled(c, inv);
}

// Greedy affinely independent subset in the given point order; returns point
// indices, size = affine dimension + 1.
std::vector<size_t> affine_independent_subset(const std::vector<RVec>& pts) {
  std::vector<size_t> chosen{0};
  RMat dirs;  // rows: p - p0
  for (size_t i = 1; i < pts.size(); ++i) {
    RMat trial = dirs;
    trial.push_back(sub(pts[i], pts[chosen[0]]));
    if (rank(trial) == static_cast<int>(trial.size())) {
      dirs = std::move(trial);
      chosen.push_back(i);
    }
  }
  return chosen;
}

std::vector<HullFacet> facets_of_segment_family(const std::vector<RVec>& pts) {
  // 1-dimensional case: the two endpoints are the facets.
  size_t lo = 0, hi = 0;
  for (size_t i = 1; i < pts.size(); ++i) {
    if (pts[i][0] < pts[lo][0]) lo = i;
    if (pts[i][0] > pts[hi][0]) hi = i;
  }
  HullFacet upper{RVec{Rat(1)}, pts[hi][0], {static_cast<int>(hi)}};
  HullFacet lower{RVec{Rat(-1)}, -pts[lo][0], {static_cast<int>(lo)}};
  std::vector<HullFacet> out{std::move(lower), std::move(upper)};
  std::sort(out.begin(), out.end(), [](const HullFacet& a, const HullFacet& b) {
    int c = compare(a.normal, b.normal);
    return c != 0 ? c < 0 : a.offset < b.offset;
  });
  return out;
}

}  // namespace

std::vector<HullFacet> enumerate_facets(const std::vector<RVec>& pts) {
  if (pts.empty()) throw std::invalid_argument("enumerate_facets: no points");
  const size_t d = pts[0].size();
  if (d == 1) return facets_of_segment_family(pts);

  std::vector<size_t> simplex = affine_independent_subset(pts);
  if (simplex.size() != d + 1)
    throw std::invalid_argument("enumerate_facets: points not full-dimensional");
  const RVec c = centroid(pts, simplex);

  // Dual constraints (p - c) . y <= 1; the origin is strictly interior.
  const size_t m = pts.size();
  std::vector<RVec> con(m);
  for (size_t i = 0; i < m; ++i) con[i] = sub(pts[i], c);

  std::vector<DualVertex> verts;
  verts.reserve(2 * d + 2);
  std::vector<char> in_simplex(m, 0);
  for (size_t s : simplex) in_simplex[s] = 1;
  for (size_t j = 0; j <= d; ++j) {
    RMat a(d, RVec(d));
    RVec b(d, Rat(1));
    size_t r = 0;
    for (size_t i = 0; i <= d; ++i) {
      if (i == j) continue;
      for (size_t k = 0; k < d; ++k) a[r][k] = con[simplex[i]][k];
      ++r;
    }
    auto y = solve(std::move(a), std::move(b));
    if (!y) throw std::logic_error("enumerate_facets: degenerate initial simplex");
    DualVertex v{std::move(*y), ActSet(m)};
    for (size_t i = 0; i <= d; ++i)
      if (i != j) v.act.set(simplex[i]);
    verts.push_back(std::move(v));
  }

  for (size_t k = 0; k < m; ++k) {
    if (in_simplex[k]) continue;
    const RVec& a = con[k];
    std::vector<int> sign(verts.size());
    std::vector<size_t> neg, zero, pos;
    for (size_t v = 0; v < verts.size(); ++v) {
      Rat val = dot(a, verts[v].y) - 1;
      sign[v] = sgn(val);
      (sign[v] < 0 ? neg : sign[v] > 0 ? pos : zero).push_back(v);
    }
    if (pos.empty()) {
      for (size_t v : zero) verts[v].act.set(k);
      continue;
    }
    if (neg.empty() && zero.empty())
      throw std::logic_error("enumerate_facets: constraint removed all dual vertices");

    std::vector<DualVertex> created;
    for (size_t i : neg) {
      for (size_t j : pos) {
        ActSet common = ActSet::intersect(verts[i].act, verts[j].act);
        if (common.count() < static_cast<int>(d) - 1) continue;
        bool edge = true;
        for (size_t z = 0; z < verts.size(); ++z) {
          if (z == i || z == j) continue;
          if (common.subset_of(verts[z].act)) {
            edge = false;
            break;
          }
        }
        if (!edge) continue;
        Rat fi = dot(a, verts[i].y) - 1;
        Rat fj = dot(a, verts[j].y) - 1;
        Rat mu = fi / (fi - fj);  // in (0,1)
        RVec y(d);
        for (size_t t = 0; t < d; ++t)
          y[t] = verts[i].y[t] + mu * (verts[j].y[t] - verts[i].y[t]);
        common.set(k);
        created.push_back(DualVertex{std::move(y), std::move(common)});
      }
    }
    for (size_t v : zero) verts[v].act.set(k);
    std::vector<DualVertex> next;
    next.reserve(verts.size() - pos.size() + created.size());
    for (size_t v = 0; v < verts.size(); ++v)
      if (sign[v] <= 0) next.push_back(std::move(verts[v]));
    for (auto& nv : created) next.push_back(std::move(nv));
    verts = std::move(next);
  }

  std::vector<HullFacet> out;
  out.reserve(verts.size());
  for (const auto& v : verts) {
    HullFacet f;
    f.normal = canonical_direction(v.y);
    bool first = true;
    for (size_t i = 0; i < m; ++i) {
      if (!v.act.test(i)) continue;
      f.point_ids.push_back(static_cast<int>(i));
      Rat val = dot(f.normal, pts[i]);
      if (first || val > f.offset) f.offset = val;
      first = false;
    }
    out.push_back(std::move(f));
  }
  std::sort(out.begin(), out.end(), [](const HullFacet& a, const HullFacet& b) {
    int c = compare(a.normal, b.normal);
    return c != 0 ? c < 0 : a.offset < b.offset;
  });
  return out;
}

namespace {

struct AffineFrame {
  RVec base;
  RMat basis;  // column vectors, length = ambient
  int dim = 0;
};

AffineFrame frame_of(const std::vector<RVec>& pts) {
  AffineFrame f;
  f.base = pts[0];
  for (size_t i = 1; i < pts.size(); ++i) {
    RMat trial = f.basis;
    trial.push_back(sub(pts[i], f.base));
    if (rank(trial) == static_cast<int>(trial.size())) f.basis = std::move(trial);
  }
  f.dim = static_cast<int>(f.basis.size());
  return f;
}

std::vector<RVec> reduce_points(const AffineFrame& f, const std::vector<RVec>& pts) {
  std::vector<RVec> out;
  out.reserve(pts.size());
  for (const auto& p : pts) out.push_back(solve_in_span(f.basis, sub(p, f.base)));
  return out;
}

// Volume of a full-dimensional point set in R^d given its facet structure,
// by exact-determinant pyramid decomposition from the vertex centroid.
double volume_full_dim(const std::vector<RVec>& pts, const std::vector<HullFacet>& facets) {
  const size_t d = pts[0].size();
  if (d == 1) {
    Rat lo = pts[0][0], hi = pts[0][0];
    for (const auto& p : pts) {
      lo = std::min(lo, p[0]);
      hi = std::max(hi, p[0]);
    }
    return Rat(hi - lo).get_d();
  }
  std::vector<size_t> all(pts.size());
  for (size_t i = 0; i < pts.size(); ++i) all[i] = i;
  const RVec c = centroid(pts, all);
  double total = 0;
  for (const auto& f : facets) {
    std::vector<RVec> fpts;
    fpts.reserve(f.point_ids.size());
    for (int id : f.point_ids) fpts.push_back(pts[static_cast<size_t>(id)]);
    AffineFrame ff = frame_of(fpts);
    auto tpts = reduce_points(ff, fpts);
    double sub_vol = volume_full_dim(tpts, enumerate_facets(tpts));
    RMat m(d, RVec(d));
    for (size_t row = 0; row < d; ++row) {
      for (size_t col = 0; col + 1 < d; ++col) m[row][col] = ff.basis[col][row];
      m[row][d - 1] = ff.base[row] - c[row];
    }
    total += std::abs(det(std::move(m)).get_d()) * sub_vol / static_cast<double>(d);
  }
  return total;
}

// dim(P)-dimensional volume of an arbitrary point set embedded in R^n.
double embedded_volume(const std::vector<RVec>& pts) {
  AffineFrame f = frame_of(pts);
  if (f.dim == 0) return 1.0;
  auto tpts = reduce_points(f, pts);
  double v = volume_full_dim(tpts, enumerate_facets(tpts));
  return v * std::sqrt(gram_det(f.basis).get_d());
}

DVec unit_of(const RVec& dir) {
  double len = std::sqrt(dot(dir, dir).get_d());
  DVec u(dir.size());
  for (size_t i = 0; i < dir.size(); ++i) u[i] = dir[i].get_d() / len;
  return u;
}

}  // namespace

// --- LinearMap ---------------------------------------------------------------

LinearMap::LinearMap(RMat m) : mat_(std::move(m)) {
  if (mat_.empty() || mat_.size() != mat_[0].size())
    throw std::invalid_argument("LinearMap: matrix must be square");
  det_ = convval::det(mat_);
  if (det_ == 0) throw std::invalid_argument("LinearMap: singular matrix");
}

LinearMap LinearMap::identity(int n) { return LinearMap(identity_mat(n)); }

DVec LinearMap::apply(const DVec& x) const {
  return to_double(mat_vec(mat_, to_rational(x)));
}

LinearMap LinearMap::inverse() const {
  auto inv = convval::inverse(mat_);
  return LinearMap(std::move(*inv));
}

LinearMap LinearMap::transposed() const { return LinearMap(transpose(mat_)); }

LinearMap LinearMap::compose(const LinearMap& rhs) const {
  return LinearMap(mat_mul(mat_, rhs.mat_));
}

// --- Polytope ----------------------------------------------------------------

std::shared_ptr<const Polytope::Impl> Polytope::build(int n, std::vector<RVec> pts) {
  if (n < 3) throw std::invalid_argument("Polytope: ambient dimension must be >= 3");
  for (const auto& p : pts)
    if (static_cast<int>(p.size()) != n)
      throw std::invalid_argument("Polytope: point dimension mismatch");
  auto impl = std::make_shared<Impl>();
  impl->n = n;
  std::sort(pts.begin(), pts.end(), [](const RVec& a, const RVec& b) { return compare(a, b) < 0; });
  pts.erase(std::unique(pts.begin(), pts.end(),
                        [](const RVec& a, const RVec& b) { return compare(a, b) == 0; }),
            pts.end());
  if (pts.empty()) return impl;

  AffineFrame frame = frame_of(pts);
  impl->dim = frame.dim;

  if (frame.dim == 0) {
    impl->verts = std::move(pts);
    impl->rel_vol = 1.0;
    impl->contains_o = is_zero(impl->verts[0]);
    impl->o_in_relint = impl->contains_o;
  } else if (frame.dim == n) {
    auto hull = enumerate_facets(pts);
    // A point is extreme iff its incident facet normals span R^n.
    std::vector<int> keep_map(pts.size(), -1);
    std::vector<RVec> extremes;
    for (size_t i = 0; i < pts.size(); ++i) {
      RMat normals;
      for (const auto& f : hull)
        if (std::find(f.point_ids.begin(), f.point_ids.end(), static_cast<int>(i)) !=
            f.point_ids.end())
          normals.push_back(f.normal);
      if (rank(normals) == n) {
        keep_map[i] = static_cast<int>(extremes.size());
        extremes.push_back(pts[i]);
      }
    }
    impl->verts = std::move(extremes);
    impl->facets.reserve(hull.size());
    impl->contains_o = true;
    impl->o_in_relint = true;
    for (const auto& hf : hull) {
      Facet f;
      f.normal_exact = hf.normal;
      f.offset_exact = hf.offset;
      f.unit_normal = unit_of(hf.normal);
      double len = std::sqrt(dot(hf.normal, hf.normal).get_d());
      f.offset = hf.offset.get_d() / len;
      std::vector<RVec> fpts;
      for (int id : hf.point_ids) {
        fpts.push_back(pts[static_cast<size_t>(id)]);
        if (keep_map[static_cast<size_t>(id)] >= 0)
          f.vertex_ids.push_back(keep_map[static_cast<size_t>(id)]);
      }
      std::sort(f.vertex_ids.begin(), f.vertex_ids.end());
      f.area = embedded_volume(fpts);
      if (hf.offset < 0) impl->contains_o = false;
      if (hf.offset <= 0) impl->o_in_relint = false;
      impl->facets.push_back(std::move(f));
    }
    impl->volume = volume_full_dim(pts, hull);
    impl->rel_vol = impl->volume;
  } else {
    // Lower-dimensional: work in the affine hull.
    auto tpts = reduce_points(frame, pts);
    std::vector<HullFacet> hull_t = enumerate_facets(tpts);
    std::vector<char> extreme(pts.size(), 0);
    if (frame.dim == 1) {
      for (const auto& hf : hull_t)
        for (int id : hf.point_ids) extreme[static_cast<size_t>(id)] = 1;
    } else {
      for (size_t i = 0; i < pts.size(); ++i) {
        RMat normals;
        for (const auto& f : hull_t)
          if (std::find(f.point_ids.begin(), f.point_ids.end(), static_cast<int>(i)) !=
              f.point_ids.end())
            normals.push_back(f.normal);
        extreme[i] = rank(normals) == frame.dim;
      }
    }
    for (size_t i = 0; i < pts.size(); ++i)
      if (extreme[i]) impl->verts.push_back(pts[i]);
    impl->rel_vol =
        volume_full_dim(tpts, hull_t) * std::sqrt(gram_det(frame.basis).get_d());

    // Origin tests, exactly: o in the affine hull and inside every reduced
    // facet inequality.
    RMat span_check = frame.basis;
    span_check.push_back(negated(frame.base));
    if (rank(span_check) == frame.dim) {
      RVec t_o = solve_in_span(frame.basis, negated(frame.base));
      impl->contains_o = true;
      impl->o_in_relint = true;
      for (const auto& hf : hull_t) {
        Rat v = dot(hf.normal, t_o);
        if (v > hf.offset) impl->contains_o = false;
        if (v >= hf.offset) impl->o_in_relint = false;
      }
      if (!impl->contains_o) impl->o_in_relint = false;
    }

    if (frame.dim == n - 1) {
      // Two-facet convention: ±(affine hull normal), each carrying vol_{n-1}.
      RVec a = canonical_direction(null_direction(frame.basis));
      Rat b = dot(a, frame.base);
      double len = std::sqrt(dot(a, a).get_d());
      std::vector<int> all_ids(impl->verts.size());
      for (size_t i = 0; i < all_ids.size(); ++i) all_ids[i] = static_cast<int>(i);
      Facet plus;
      plus.normal_exact = a;
      plus.offset_exact = b;
      plus.unit_normal = unit_of(a);
      plus.offset = b.get_d() / len;
      plus.area = impl->rel_vol;
      plus.vertex_ids = all_ids;
      Facet minus;
      minus.normal_exact = negated(a);
      minus.offset_exact = -b;
      minus.unit_normal.resize(plus.unit_normal.size());
      for (size_t i = 0; i < plus.unit_normal.size(); ++i)
        minus.unit_normal[i] = -plus.unit_normal[i];
      minus.offset = -plus.offset;
      minus.area = impl->rel_vol;
      minus.vertex_ids = all_ids;
      impl->facets.push_back(std::move(plus));
      impl->facets.push_back(std::move(minus));
      std::sort(impl->facets.begin(), impl->facets.end(), [](const Facet& x, const Facet& y) {
        return compare(x.normal_exact, y.normal_exact) < 0;
      });
    }
  }

  impl->verts_d.reserve(impl->verts.size());
  for (const auto& v : impl->verts) impl->verts_d.push_back(to_double(v));
  return impl;
}

Polytope Polytope::from_points(int n, std::vector<RVec> pts) {
  return Polytope(build(n, std::move(pts)));
}

Polytope Polytope::empty(int n) { return from_points(n, {}); }

Polytope Polytope::simplex(int n, int d, const Rat& s) {
  if (d < 0 || d > n) throw std::invalid_argument("simplex: need 0 <= d <= n");
  std::vector<RVec> pts{zero_vec(n)};
  for (int i = 0; i < d; ++i) pts.push_back(scaled(unit_vec(n, i), s));
  return from_points(n, std::move(pts));
}

Polytope Polytope::hat_simplex(int n, int d, const Rat& s) {
  if (d < 2 || d > n) throw std::invalid_argument("hat_simplex: need 2 <= d <= n");
  std::vector<RVec> pts{zero_vec(n), scaled(unit_vec(n, 0), s)};
  for (int i = 2; i < d; ++i) pts.push_back(scaled(unit_vec(n, i), s));
  return from_points(n, std::move(pts));
}

Polytope Polytope::shifted_simplex(int n, int d, const Rat& s) {
  if (d < 1 || d > n) throw std::invalid_argument("shifted_simplex: need 1 <= d <= n");
  std::vector<RVec> pts;
  for (int i = 0; i < d; ++i) pts.push_back(scaled(unit_vec(n, i), s));
  return from_points(n, std::move(pts));
}

Polytope Polytope::cube(int n, const Rat& lo, const Rat& hi) {
  std::vector<RVec> pts;
  pts.reserve(size_t(1) << n);
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    RVec p(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) p[static_cast<size_t>(i)] = (mask >> i) & 1 ? hi : lo;
    pts.push_back(std::move(p));
  }
  return from_points(n, std::move(pts));
}

Polytope Polytope::cross_polytope(int n, const Rat& r) {
  std::vector<RVec> pts;
  for (int i = 0; i < n; ++i) {
    pts.push_back(scaled(unit_vec(n, i), r));
    pts.push_back(scaled(unit_vec(n, i), -r));
  }
  return from_points(n, std::move(pts));
}

double Polytope::support(const DVec& x) const {
  if (is_empty()) return -std::numeric_limits<double>::infinity();
  double best = -std::numeric_limits<double>::infinity();
  for (const auto& v : impl_->verts_d) best = std::max(best, ddot(v, x));
  return best;
}

Rat Polytope::support_exact(const RVec& x) const {
  if (is_empty()) throw std::invalid_argument("support_exact of empty polytope");
  Rat best = dot(impl_->verts[0], x);
  for (size_t i = 1; i < impl_->verts.size(); ++i)
    best = std::max(best, dot(impl_->verts[i], x));
  return best;
}

OriginPosition Polytope::origin_position() const {
  if (!contains_origin()) return OriginPosition::outside;
  return origin_in_relint() ? OriginPosition::relative_interior : OriginPosition::boundary;
}

double Polytope::diameter() const {
  double best = 0;
  const auto& vs = impl_->verts_d;
  for (size_t i = 0; i < vs.size(); ++i)
    for (size_t j = i + 1; j < vs.size(); ++j) {
      double s = 0;
      for (size_t k = 0; k < vs[i].size(); ++k) {
        double dlt = vs[i][k] - vs[j][k];
        s += dlt * dlt;
      }
      best = std::max(best, s);
    }
  return std::sqrt(best);
}

Polytope Polytope::hull_with_origin() const {
  std::call_once(impl_->hull_o_once, [this] {
    if (is_empty()) {
      impl_->hull_o = build(impl_->n, {zero_vec(impl_->n)});
    } else if (impl_->contains_o) {
      impl_->hull_o = impl_;
    } else {
      auto pts = impl_->verts;
      pts.push_back(zero_vec(impl_->n));
      impl_->hull_o = build(impl_->n, std::move(pts));
    }
  });
  return Polytope(impl_->hull_o);
}

bool Polytope::same_vertex_set(const Polytope& other) const {
  if (vertex_count() != other.vertex_count()) return false;
  for (int i = 0; i < vertex_count(); ++i)
    if (compare(vertices()[static_cast<size_t>(i)], other.vertices()[static_cast<size_t>(i)]) != 0)
      return false;
  return true;
}

// --- free operations ---------------------------------------------------------

Polytope convex_hull(int n, const std::vector<RVec>& pts) {
  if (pts.empty()) throw std::invalid_argument("convex_hull: need at least one point");
  return Polytope::from_points(n, pts);
}

Polytope clip(const Polytope& p, const Halfspace& h) {
  if (p.is_empty()) return p;
  const auto& vs = p.vertices();
  std::vector<Rat> vals(vs.size());
  for (size_t i = 0; i < vs.size(); ++i) vals[i] = dot(h.normal, vs[i]) - h.bound;
  std::vector<RVec> cand;
  bool any_cut = false;
  for (size_t i = 0; i < vs.size(); ++i) {
    if (vals[i] <= 0)
      cand.push_back(vs[i]);
    else
      any_cut = true;
  }
  if (!any_cut) return p;
  if (cand.empty()) return Polytope::empty(p.ambient_dim());
  for (size_t i = 0; i < vs.size(); ++i) {
    if (vals[i] >= 0) continue;
    for (size_t j = 0; j < vs.size(); ++j) {
      if (vals[j] <= 0) continue;
      Rat mu = vals[i] / (vals[i] - vals[j]);
      RVec x(vs[i].size());
      for (size_t k = 0; k < x.size(); ++k) x[k] = vs[i][k] + mu * (vs[j][k] - vs[i][k]);
      cand.push_back(std::move(x));
    }
  }
  return Polytope::from_points(p.ambient_dim(), std::move(cand));
}

Polytope intersect_hyperplane(const Polytope& p, const Halfspace& h) {
  if (p.is_empty()) return p;
  const auto& vs = p.vertices();
  std::vector<Rat> vals(vs.size());
  for (size_t i = 0; i < vs.size(); ++i) vals[i] = dot(h.normal, vs[i]) - h.bound;
  std::vector<RVec> cand;
  for (size_t i = 0; i < vs.size(); ++i)
    if (vals[i] == 0) cand.push_back(vs[i]);
  for (size_t i = 0; i < vs.size(); ++i) {
    if (vals[i] >= 0) continue;
    for (size_t j = 0; j < vs.size(); ++j) {
      if (vals[j] <= 0) continue;
      Rat mu = vals[i] / (vals[i] - vals[j]);
      RVec x(vs[i].size());
      for (size_t k = 0; k < x.size(); ++k) x[k] = vs[i][k] + mu * (vs[j][k] - vs[i][k]);
      cand.push_back(std::move(x));
    }
  }
  if (cand.empty()) return Polytope::empty(p.ambient_dim());
  return Polytope::from_points(p.ambient_dim(), std::move(cand));
}

Polytope apply_linear(const Polytope& p, const LinearMap& m) {
  if (m.dim() != p.ambient_dim()) throw std::invalid_argument("apply_linear: dimension mismatch");
  std::vector<RVec> pts;
  pts.reserve(p.vertices().size());
  for (const auto& v : p.vertices()) pts.push_back(m.apply(v));
  if (pts.empty()) return p;
  return Polytope::from_points(p.ambient_dim(), std::move(pts));
}

Polytope translate(const Polytope& p, const RVec& y) {
  std::vector<RVec> pts;
  pts.reserve(p.vertices().size());
  for (const auto& v : p.vertices()) pts.push_back(add(v, y));
  if (pts.empty()) return p;
  return Polytope::from_points(p.ambient_dim(), std::move(pts));
}

Polytope scale(const Polytope& p, const Rat& s) {
  if (s == 0) throw std::invalid_argument("scale: factor must be nonzero");
  std::vector<RVec> pts;
  pts.reserve(p.vertices().size());
  for (const auto& v : p.vertices()) pts.push_back(scaled(v, s));
  if (pts.empty()) return p;
  return Polytope::from_points(p.ambient_dim(), std::move(pts));
}

Polytope hull_with_origin(const Polytope& p) { return p.hull_with_origin(); }

}  // namespace convval
