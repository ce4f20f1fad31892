#ifndef CONVVAL_HARNESS_HPP_
#define CONVVAL_HARNESS_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "convval/valuations.hpp"

namespace convval {

// Result of one property check; reproducible from (property, seed).
struct PropertyReport {
  std::string property;
  int trials = 0;
  double max_defect = 0;
  double tolerance = 0;
  bool pass = false;
  uint64_t seed = 0;
  std::string witness;  // serialized failing inputs, empty when passing
};

// One halfspace cut of a random polytope plus sample points: the reusable
// input of the valuation-identity check.
struct CutTrial {
  Polytope whole;
  Polytope minus_side;
  Polytope plus_side;
  Polytope wall;
  std::vector<DVec> xs;
  std::string desc;
};

// Cuts pass through the origin when scope is P_o, so every piece stays in
// the oracle's domain.
std::vector<CutTrial> build_cut_corpus(int n, uint64_t seed, int trials, int x_count,
                                       Scope scope);

PropertyReport check_valuation(const BlackBoxValuation& z, const std::vector<CutTrial>& corpus,
                               uint64_t seed, double tol = 1e-8);
PropertyReport check_valuation(const BlackBoxValuation& z, int n, uint64_t seed, int trials,
                               double tol = 1e-8);
PropertyReport check_contravariance(const BlackBoxValuation& z, int n, uint64_t seed, int trials,
                                    double tol = 1e-8);
// Requires exact zero of z on lower-dimensional inputs.
PropertyReport check_simplicity(const BlackBoxValuation& z, int n, uint64_t seed, int trials);
// Exact vertex-set dissection identities plus the numeric Cauchy identities.
PropertyReport check_simplex_dissections(int n, uint64_t seed, double tol = 1e-10);
PropertyReport check_minkowski_inequality(int n, uint64_t seed, int trials,
                                          const std::vector<double>& p_list,
                                          double tol = 1e-12);
// Probes Z_zeta along the collapsing-prism sequence of the continuity proof;
// passes when the numeric verdict matches the symbolic sublinear flag.
PropertyReport check_continuity_witness(const ZetaSpec& zeta, int n);
PropertyReport check_homogeneity_in_x(const ZetaSpec& zeta, int n, uint64_t seed, int trials,
                                      double tol = 1e-9);
PropertyReport check_homogeneity_in_body(const ZetaSpec& zeta, int n, uint64_t seed, int trials,
                                         double tol = 1e-9);
// expect_invariant: constant zeta stays put under admissible translations;
// otherwise the translated-cube witness must break the identity.
PropertyReport check_translation(const ZetaSpec& zeta, int n, uint64_t seed, int trials,
                                 bool expect_invariant, double tol = 1e-10);
PropertyReport check_orlicz_convexity(const ZetaSpec& zeta, int n, uint64_t seed, int trials,
                                      double tol = 1e-10);

std::vector<PropertyReport> run_property_suite(int n, uint64_t seed);

}  // namespace convval

#endif  // CONVVAL_HARNESS_HPP_
