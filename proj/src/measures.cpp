#include "convval/measures.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace convval {

AtomicSphereMeasure::AtomicSphereMeasure(MeasureKind kind, int ambient,
                                         std::vector<SphereAtom> atoms)
    : kind_(kind), n_(ambient) {
  // Merge atoms with exactly equal canonical directions.
  std::map<RVec, SphereAtom, bool (*)(const RVec&, const RVec&)> merged(
      [](const RVec& a, const RVec& b) { return compare(a, b) < 0; });
  for (auto& a : atoms) {
    auto it = merged.find(a.dir_exact);
    if (it == merged.end()) {
      merged.emplace(a.dir_exact, std::move(a));
    } else {
      if (it->second.offset_exact != a.offset_exact)
        throw std::invalid_argument("measure atoms with equal direction, distinct offsets");
      it->second.w += a.w;
      it->second.area += a.area;
    }
  }
  atoms_.reserve(merged.size());
  for (auto& [dir, atom] : merged) atoms_.push_back(std::move(atom));
}

double AtomicSphereMeasure::total_mass() const {
  double s = 0;
  for (const auto& a : atoms_) s += a.w;
  return s;
}

AtomicSphereMeasure surface_area_measure(const Polytope& p) {
  std::vector<SphereAtom> atoms;
  atoms.reserve(p.facets().size());
  for (const auto& f : p.facets()) {
    SphereAtom a;
    a.u = f.unit_normal;
    a.w = f.area;
    a.dir_exact = f.normal_exact;
    a.offset_exact = f.offset_exact;
    a.h = f.offset;
    a.area = f.area;
    atoms.push_back(std::move(a));
  }
  return AtomicSphereMeasure(MeasureKind::surface_area, p.ambient_dim(), std::move(atoms));
}

AtomicSphereMeasure cone_volume_measure(const Polytope& p) {
  const double n = static_cast<double>(p.ambient_dim());
  std::vector<SphereAtom> atoms;
  atoms.reserve(p.facets().size());
  for (const auto& f : p.facets()) {
    SphereAtom a;
    a.u = f.unit_normal;
    a.w = f.offset * f.area / n;
    a.dir_exact = f.normal_exact;
    a.offset_exact = f.offset_exact;
    a.h = f.offset;
    a.area = f.area;
    atoms.push_back(std::move(a));
  }
  return AtomicSphereMeasure(MeasureKind::cone_volume, p.ambient_dim(), std::move(atoms));
}

AtomicSphereMeasure restrict_nonzero(const AtomicSphereMeasure& m) {
  std::vector<SphereAtom> kept;
  kept.reserve(m.atoms().size());
  for (const auto& a : m.atoms())
    if (a.offset_exact != 0) kept.push_back(a);
  return AtomicSphereMeasure(m.kind(), m.ambient_dim(), std::move(kept));
}

}  // namespace convval
