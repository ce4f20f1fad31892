#ifndef CONVVAL_ZETA_HPP_
#define CONVVAL_ZETA_HPP_

#include <array>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace convval {

// Continuous generating function zeta: R -> R from a closed family. Every
// variant is a total function; evaluation never clips its argument.
class ZetaSpec {
 public:
  enum class Variant { constant, power_plus, power_minus, abs_power, poly, table, callable };

  static ZetaSpec constant(double c);
  static ZetaSpec power_plus(double p);   // t -> max(t,0)^p, p > 0
  static ZetaSpec power_minus(double p);  // t -> max(-t,0)^p, p > 0
  static ZetaSpec abs_power(double p);    // t -> |t|^p, p > 0
  static ZetaSpec poly(std::vector<double> coeffs);  // sum c_k t^k
  // Piecewise linear on strictly increasing knots, linear extrapolation with
  // the given end slopes.
  static ZetaSpec table(std::vector<double> knots, std::vector<double> values,
                        std::array<double, 2> end_slopes);
  // Pointwise-defined zeta (used by the classifier; not serializable).
  static ZetaSpec callable(std::function<double(double)> fn, std::string label = "callable");

  double operator()(double t) const;

  // True when zeta(t)/t -> 0 as |t| -> infinity, decided per variant.
  bool sublinear() const;
  // Degree p when the variant is positively homogeneous (power families and
  // degree-zero polys/constants).
  std::optional<double> homogeneity_degree() const;
  // Conservative check for the Orlicz projection body preconditions:
  // convex, nonnegative, zeta(0) = 0, not identically zero.
  bool orlicz_admissible() const;

  Variant variant() const { return variant_; }
  double param() const { return param_; }
  const std::vector<double>& coeffs() const { return coeffs_; }
  const std::vector<double>& knots() const { return knots_; }
  const std::vector<double>& values() const { return values_; }
  const std::array<double, 2>& end_slopes() const { return end_slopes_; }
  const std::string& label() const { return label_; }

 private:
  ZetaSpec() = default;
  Variant variant_ = Variant::constant;
  double param_ = 0;                  // constant value or power exponent
  std::vector<double> coeffs_;        // poly
  std::vector<double> knots_, values_;
  std::array<double, 2> end_slopes_{0, 0};
  std::function<double(double)> fn_;
  std::string label_;
};

std::vector<double> linspace(double lo, double hi, int count);

}  // namespace convval

#endif  // CONVVAL_ZETA_HPP_
