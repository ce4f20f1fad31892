#ifndef CONVVAL_CLASSIFIER_HPP_
#define CONVVAL_CLASSIFIER_HPP_

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "convval/valuations.hpp"

namespace convval {

struct GridSpec {
  double lo = -10;
  double hi = 10;
  int count = 201;
};

struct FitConstants {
  double c0 = 0;
  double c0_prime = 0;
  double c_n1 = 0;
  double consistency_defect = 0;  // s-grid deviation of the low-dim model
};

struct FitDiagnostics {
  double constants_defect = 0;  // consistency of (c0, c_{n-1}) across scales
  double scaling_defect = 0;    // s^n/n! law for zeta at s = 1/2, 2
  double cauchy_defect = 0;     // additivity of r -> Z(r^{1/n}T^n)(r^{1/n}te_n)
  double lowdim_defect = 0;     // Z P (x) = Z P (o) on dim <= n-2 inputs
  std::string failure;          // which identity broke, when non-classifiable
};

// Outcome of the constructive fit. `spec` stores zetas as grid tables (the
// serializable report); `pointwise_spec` stores them as exact closures over
// the oracle, which is what certification evaluates.
struct FitResult {
  ValuationSpec spec;
  ValuationSpec pointwise_spec;
  std::vector<double> t_grid;
  FitDiagnostics diag;
  bool classifiable = true;
};

struct FitReport {
  FitResult fit;
  uint64_t corpus_seed = 0;
  int corpus_size = 0;
  int x_samples = 0;
  double tolerance = 1e-7;
  double residual_max = 0;
  double residual_mean = 0;
  bool certified = false;
  std::string note;
};

// Z([o,e_1])(o), Z({o})(o) and the (n-1)-simplex normalization, exactly as in
// the constructive uniqueness proof; consistency over a scale grid reported.
FitConstants fit_constants(const BlackBoxValuation& z, int n);

// Pointwise zeta recovery from Z(T^n)(t e_n); the table samples the grid.
ZetaSpec fit_zeta(const BlackBoxValuation& z, int n, const FitConstants& constants,
                  const GridSpec& grid, FitDiagnostics* diag = nullptr,
                  std::function<double(double)>* pointwise = nullptr);

// Full fit for either scope; P_full runs the shifted-simplex stage and the
// recombination of the two partial fits.
FitResult fit_valuation(const BlackBoxValuation& z, int n, const GridSpec& grid = {},
                        double classify_tol = 1e-6);

// Residuals of the fitted representation on a fresh random corpus.
FitReport certify(const BlackBoxValuation& z, const FitResult& fit, int n,
                  uint64_t corpus_seed, int corpus_size, int x_samples, double tolerance);

FitReport fit_and_certify(const BlackBoxValuation& z, int n, const GridSpec& grid = {},
                          uint64_t corpus_seed = 2024, int corpus_size = 100,
                          int x_samples = 20, double tolerance = 1e-7);

}  // namespace convval

#endif  // CONVVAL_CLASSIFIER_HPP_
