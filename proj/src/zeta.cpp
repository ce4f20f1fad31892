#include "convval/zeta.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace convval {

ZetaSpec ZetaSpec::constant(double c) {
  ZetaSpec z;
  z.variant_ = Variant::constant;
  z.param_ = c;
  return z;
}

ZetaSpec ZetaSpec::power_plus(double p) {
  if (!(p > 0)) throw std::invalid_argument("power_plus: exponent must be > 0");
  ZetaSpec z;
  z.variant_ = Variant::power_plus;
  z.param_ = p;
  return z;
}

ZetaSpec ZetaSpec::power_minus(double p) {
  if (!(p > 0)) throw std::invalid_argument("power_minus: exponent must be > 0");
  ZetaSpec z;
  z.variant_ = Variant::power_minus;
  z.param_ = p;
  return z;
}

ZetaSpec ZetaSpec::abs_power(double p) {
  if (!(p > 0)) throw std::invalid_argument("abs_power: exponent must be > 0");
  ZetaSpec z;
  z.variant_ = Variant::abs_power;
  z.param_ = p;
  return z;
}

ZetaSpec ZetaSpec::poly(std::vector<double> coeffs) {
  if (coeffs.empty()) throw std::invalid_argument("poly: empty coefficient list");
  ZetaSpec z;
  z.variant_ = Variant::poly;
  z.coeffs_ = std::move(coeffs);
  return z;
}

ZetaSpec ZetaSpec::table(std::vector<double> knots, std::vector<double> values,
                         std::array<double, 2> end_slopes) {
  if (knots.size() != values.size() || knots.empty())
    throw std::invalid_argument("table: knots/values size mismatch");
  for (size_t i = 1; i < knots.size(); ++i)
    if (!(knots[i - 1] < knots[i]))
      throw std::invalid_argument("table: knots must be strictly increasing");
  ZetaSpec z;
  z.variant_ = Variant::table;
  z.knots_ = std::move(knots);
  z.values_ = std::move(values);
  z.end_slopes_ = end_slopes;
  return z;
}

ZetaSpec ZetaSpec::callable(std::function<double(double)> fn, std::string label) {
  if (!fn) throw std::invalid_argument("callable: empty function");
  ZetaSpec z;
  z.variant_ = Variant::callable;
  z.fn_ = std::move(fn);
  z.label_ = std::move(label);
  return z;
}

double ZetaSpec::operator()(double t) const {
  switch (variant_) {
    case Variant::constant:
      return param_;
    case Variant::power_plus:
      return t > 0 ? std::pow(t, param_) : 0.0;
    case Variant::power_minus:
      return t < 0 ? std::pow(-t, param_) : 0.0;
    case Variant::abs_power:
      return t == 0 ? 0.0 : std::pow(std::abs(t), param_);
    case Variant::poly: {
      double acc = 0;
      for (size_t i = coeffs_.size(); i-- > 0;) acc = acc * t + coeffs_[i];
      return acc;
    }
    case Variant::table: {
      if (t <= knots_.front()) return values_.front() + end_slopes_[0] * (t - knots_.front());
      if (t >= knots_.back()) return values_.back() + end_slopes_[1] * (t - knots_.back());
      auto it = std::upper_bound(knots_.begin(), knots_.end(), t);
      size_t hi = static_cast<size_t>(it - knots_.begin());
      size_t lo = hi - 1;
      double lam = (t - knots_[lo]) / (knots_[hi] - knots_[lo]);
      return values_[lo] + lam * (values_[hi] - values_[lo]);
    }
    case Variant::callable:
      return fn_(t);
  }
  return 0;
}

bool ZetaSpec::sublinear() const {
  switch (variant_) {
    case Variant::constant:
      return true;
    case Variant::power_plus:
    case Variant::power_minus:
    case Variant::abs_power:
      return param_ < 1;
    case Variant::poly: {
      for (size_t i = 1; i < coeffs_.size(); ++i)
        if (coeffs_[i] != 0) return false;
      return true;
    }
    case Variant::table:
      return end_slopes_[0] == 0 && end_slopes_[1] == 0;
    case Variant::callable:
      return false;  // unknown; callers needing the flag use concrete variants
  }
  return false;
}

std::optional<double> ZetaSpec::homogeneity_degree() const {
  switch (variant_) {
    case Variant::power_plus:
    case Variant::power_minus:
    case Variant::abs_power:
      return param_;
    case Variant::constant:
      return 0.0;
    case Variant::poly:
      for (size_t i = 1; i < coeffs_.size(); ++i)
        if (coeffs_[i] != 0) {
          // single monomial c t^i is homogeneous of degree i
          for (size_t j = 0; j < coeffs_.size(); ++j)
            if (j != i && coeffs_[j] != 0) return std::nullopt;
          return static_cast<double>(i);
        }
      return 0.0;
    default:
      return std::nullopt;
  }
}

bool ZetaSpec::orlicz_admissible() const {
  switch (variant_) {
    case Variant::power_plus:
    case Variant::power_minus:
    case Variant::abs_power:
      return param_ >= 1;
    case Variant::constant:
      return false;  // either violates zeta(0)=0 or is identically zero
    case Variant::poly: {
      // Accept only even monomial sums with nonnegative coefficients.
      if (coeffs_[0] != 0) return false;
      bool nontrivial = false;
      for (size_t i = 1; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0) continue;
        if (i % 2 == 1 || coeffs_[i] < 0) return false;
        nontrivial = true;
      }
      return nontrivial;
    }
    case Variant::table: {
      if ((*this)(0.0) != 0) return false;
      bool nontrivial = false;
      double prev_slope = end_slopes_[0];
      for (size_t i = 0; i + 1 <= knots_.size(); ++i) {
        if (values_[i] < 0) return false;
        if (values_[i] > 0) nontrivial = true;
        if (i + 1 < knots_.size()) {
          double s = (values_[i + 1] - values_[i]) / (knots_[i + 1] - knots_[i]);
          if (s < prev_slope) return false;
          prev_slope = s;
        }
      }
      if (end_slopes_[1] < prev_slope) return false;
      nontrivial = nontrivial || end_slopes_[0] < 0 || end_slopes_[1] > 0;
      return nontrivial;
    }
    case Variant::callable:
      return false;
  }
  return false;
}

std::vector<double> linspace(double lo, double hi, int count) {
  if (count < 2 || !(lo < hi)) throw std::invalid_argument("linspace: bad range");
  std::vector<double> out(static_cast<size_t>(count));
  for (int i = 0; i < count; ++i)
    out[static_cast<size_t>(i)] = lo + (hi - lo) * static_cast<double>(i) / (count - 1);
  return out;
}

}  // namespace convval
