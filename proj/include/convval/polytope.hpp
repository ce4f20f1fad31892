#ifndef CONVVAL_POLYTOPE_HPP_
#define CONVVAL_POLYTOPE_HPP_

#include <memory>
#include <mutex>
#include <vector>

#include "convval/rational.hpp"

namespace convval {

// Geometric tolerance at unit scale; exact predicates never use it, it only
// bounds accumulated double rounding in areas/closedness diagnostics.
inline constexpr double kEpsGeom = 1e-10;

// Closed halfspace {x : a . x <= b}. The normal need not be unit.
struct Halfspace {
  RVec normal;
  Rat bound;
  Halfspace(RVec a, Rat b) : normal(std::move(a)), bound(std::move(b)) {
    if (is_zero(normal)) throw std::invalid_argument("halfspace with zero normal");
  }
};

// Invertible linear transform with exact rational entries and cached det.
class LinearMap {
 public:
  explicit LinearMap(RMat m);
  static LinearMap identity(int n);

  int dim() const { return static_cast<int>(mat_.size()); }
  const RMat& matrix() const { return mat_; }
  const Rat& det() const { return det_; }
  bool unimodular() const { return det_ == 1; }

  RVec apply(const RVec& x) const { return mat_vec(mat_, x); }
  DVec apply(const DVec& x) const;
  LinearMap inverse() const;
  LinearMap transposed() const;
  LinearMap compose(const LinearMap& rhs) const;  // this ∘ rhs

 private:
  RMat mat_;
  Rat det_;
};

// One facet of a polytope: exact supporting data plus double measure data.
// normal_exact is the canonical integer direction; offset_exact = h_P w.r.t.
// that direction, so the sign of offset_exact decides membership in {h_P=0}
// exactly. unit_normal/offset/area are the numeric view used by measures.
struct Facet {
  RVec normal_exact;
  Rat offset_exact;
  DVec unit_normal;
  double offset = 0;
  double area = 0;
  std::vector<int> vertex_ids;
};

enum class OriginPosition { outside, boundary, relative_interior };

// Immutable vertex-represented convex polytope in R^n (n >= 3 ambient, any
// intrinsic dimension, including the empty polytope). Construction
// canonicalizes the vertex set to the exact extreme points and eagerly
// computes facet data; instances are cheap shared handles and safe to use
// from multiple threads.
class Polytope {
 public:
  // Canonical constructors.
  static Polytope from_points(int n, std::vector<RVec> pts);
  static Polytope empty(int n);
  // sT^d = s.conv{o, e_1, ..., e_d}, 0 <= d <= n.
  static Polytope simplex(int n, int d, const Rat& s = Rat(1));
  // s.conv{o, e_1, e_3, ..., e_d}: the (d-1)-dimensional cut simplex.
  static Polytope hat_simplex(int n, int d, const Rat& s = Rat(1));
  // s.conv{e_1, ..., e_d}: the shifted simplex missing the origin.
  static Polytope shifted_simplex(int n, int d, const Rat& s = Rat(1));
  static Polytope cube(int n, const Rat& lo, const Rat& hi);
  static Polytope cross_polytope(int n, const Rat& r = Rat(1));

  int ambient_dim() const { return impl_->n; }
  bool is_empty() const { return impl_->verts.empty(); }
  // Dimension of the affine hull; -1 for the empty polytope.
  int dim() const { return impl_->dim; }

  const std::vector<RVec>& vertices() const { return impl_->verts; }
  const std::vector<std::vector<double>>& vertices_d() const { return impl_->verts_d; }
  int vertex_count() const { return static_cast<int>(impl_->verts.size()); }

  // Facet list under the lower-dimension convention: genuine facets when
  // dim == n, the two-sided (±u, vol_{n-1}) pair when dim == n-1, empty
  // otherwise.
  const std::vector<Facet>& facets() const { return impl_->facets; }

  double support(const DVec& x) const;
  Rat support_exact(const RVec& x) const;

  bool contains_origin() const { return impl_->contains_o; }
  bool origin_in_relint() const { return impl_->o_in_relint; }
  OriginPosition origin_position() const;

  double volume() const { return impl_->volume; }          // n-volume
  double relative_volume() const { return impl_->rel_vol; }  // dim-volume

  double diameter() const;

  // conv(P ∪ {o}); memoized, computed at most once per instance.
  Polytope hull_with_origin() const;

  bool same_vertex_set(const Polytope& other) const;

 private:
  struct Impl {
    int n = 0;
    int dim = -1;
    std::vector<RVec> verts;
    std::vector<DVec> verts_d;
    std::vector<Facet> facets;
    // Reduced H-representation of P inside its affine hull: o tests only.
    bool contains_o = false;
    bool o_in_relint = false;
    double volume = 0;
    double rel_vol = 0;
    mutable std::once_flag hull_o_once;
    mutable std::shared_ptr<const Impl> hull_o;
  };
  std::shared_ptr<const Impl> impl_;
  explicit Polytope(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
  static std::shared_ptr<const Impl> build(int n, std::vector<RVec> pts);
};

// --- operations --------------------------------------------------------------

Polytope convex_hull(int n, const std::vector<RVec>& pts);
Polytope clip(const Polytope& p, const Halfspace& h);
Polytope intersect_hyperplane(const Polytope& p, const Halfspace& h);
Polytope apply_linear(const Polytope& p, const LinearMap& m);
Polytope translate(const Polytope& p, const RVec& y);
Polytope scale(const Polytope& p, const Rat& s);
Polytope hull_with_origin(const Polytope& p);

// Exact facet enumeration of a full-dimensional point set via the double
// description method on the polar dual. Exposed for oracle cross-checks.
struct HullFacet {
  RVec normal;   // canonical integer direction, outward
  Rat offset;    // support value w.r.t. normal
  std::vector<int> point_ids;  // all input points on the facet hyperplane
};
std::vector<HullFacet> enumerate_facets(const std::vector<RVec>& pts);

}  // namespace convval

#endif  // CONVVAL_POLYTOPE_HPP_
