#ifndef CONVVAL_MEASURES_HPP_
#define CONVVAL_MEASURES_HPP_

#include <vector>

#include "convval/polytope.hpp"
#include "convval/rational.hpp"

namespace convval {

enum class MeasureKind { surface_area, cone_volume };

// One atom of a finite (signed) measure on the unit sphere. dir_exact and
// offset_exact carry the exact supporting data of the generating facet, so
// membership in {h_P = 0} is a sign test, never a tolerance.
struct SphereAtom {
  DVec u;           // unit normal
  double w = 0;     // atom weight
  RVec dir_exact;   // canonical integer direction
  Rat offset_exact; // h_P w.r.t. dir_exact
  double h = 0;     // h_P(u)
  double area = 0;  // generating facet area
};

class AtomicSphereMeasure {
 public:
  AtomicSphereMeasure(MeasureKind kind, int ambient, std::vector<SphereAtom> atoms);

  MeasureKind kind() const { return kind_; }
  int ambient_dim() const { return n_; }
  const std::vector<SphereAtom>& atoms() const { return atoms_; }
  double total_mass() const;

 private:
  MeasureKind kind_;
  int n_;
  std::vector<SphereAtom> atoms_;  // merged, sorted by canonical direction
};

// Surface area measure S_P: atoms (facet normal, facet area) under the
// lower-dimension convention of the polytope facet list.
AtomicSphereMeasure surface_area_measure(const Polytope& p);

// Cone-volume measure V_P with atoms (u, h_P(u) * area / n); signed when the
// origin lies outside P.
AtomicSphereMeasure cone_volume_measure(const Polytope& p);

// Drops atoms on {h_P = 0}, decided exactly from the stored offsets.
AtomicSphereMeasure restrict_nonzero(const AtomicSphereMeasure& m);

}  // namespace convval

#endif  // CONVVAL_MEASURES_HPP_
