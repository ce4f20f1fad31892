#ifndef CONVVAL_RANDOM_GEN_HPP_
#define CONVVAL_RANDOM_GEN_HPP_

#include <cstdint>
#include <random>

#include "convval/polytope.hpp"

namespace convval {

// Deterministic RNG: mt19937_64 raw draws only, so streams are reproducible
// across standard libraries (std distributions are not portable).
class Rng {
 public:
  explicit Rng(uint64_t seed) : gen_(seed) {}
  uint64_t next() { return gen_(); }
  int uniform_int(int lo, int hi);  // inclusive bounds
  double uniform(double lo, double hi);
  // Grid rational in [-span, span] with the given denominator.
  Rat grid_rational(int span, int denom);
  RVec grid_point(int n, int span, int denom);

 private:
  std::mt19937_64 gen_;
};

enum class OriginMode { contains_origin, general };

// Deterministic full-dimensional random polytope; contains_origin mode either
// adjoins the origin as a generator or recenters at the vertex centroid
// (chosen per seed), so both boundary and interior origins occur.
Polytope random_polytope(uint64_t seed, int n, int vertex_count, OriginMode mode);

// Random polytope with o strictly interior (recentered at the centroid).
Polytope random_polytope_origin_interior(uint64_t seed, int n, int vertex_count);

// Random polytope of affine dimension d < n, optionally with the origin in
// its affine hull (and in the polytope itself when through_origin).
Polytope random_lowdim_polytope(uint64_t seed, int n, int d, int vertex_count,
                                bool through_origin);

// Product of integer elementary shears; det = 1 exactly.
LinearMap random_unimodular(uint64_t seed, int n, int shear_count);

// A halfspace whose boundary hyperplane strictly separates vertices of p;
// through_origin forces the hyperplane through o (so cuts of P containing o
// again contain o). Throws if no cutting hyperplane is found.
Halfspace random_cutting_halfspace(const Polytope& p, Rng& rng, bool through_origin);

DVec random_direction(Rng& rng, int n, double inv_scale = 0.125);
RVec random_rational_point(Rng& rng, int n, int span = 32, int denom = 16);

}  // namespace convval

#endif  // CONVVAL_RANDOM_GEN_HPP_
