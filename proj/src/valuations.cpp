#include "convval/valuations.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

namespace convval {

void ValuationSpec::validate() const {
  if (scope == Scope::P_o) {
    if (c_tilde0 != 0 || c_tilde_n1 != 0 || zeta_tilde.has_value())
      throw std::invalid_argument("P_o spec must not carry tilde terms");
  }
}

SupportFn support_of(const Polytope& l) {
  return [l](const DVec& u) { return l.support(u); };
}

SupportFn support_of_symmetric_segment(const DVec& x) {
  return [x](const DVec& u) { return std::abs(ddot(x, u)); };
}

SupportFn support_of_segment_to(const DVec& x) {
  return [x](const DVec& u) { return std::max(ddot(x, u), 0.0); };
}

SupportFn lp_combination(SupportFn h1, SupportFn h2, double p) {
  if (!(p >= 1)) throw std::invalid_argument("lp_combination: p must be >= 1");
  return [h1 = std::move(h1), h2 = std::move(h2), p](const DVec& u) {
    return std::pow(std::pow(h1(u), p) + std::pow(h2(u), p), 1.0 / p);
  };
}

double zeta_valuation(const Polytope& p, const ZetaSpec& z, const DVec& x) {
  if (p.is_empty()) return 0;
  double acc = 0;
  for (const auto& f : p.facets()) {
    if (f.offset_exact == 0) continue;
    acc += z(ddot(x, f.unit_normal) / f.offset) * (f.offset * f.area / p.ambient_dim());
  }
  return acc;
}

double zeta_hull_valuation(const Polytope& p, const ZetaSpec& z, const DVec& x) {
  if (p.is_empty()) return 0;
  return zeta_valuation(p.hull_with_origin(), z, x);
}

double projection_function(const Polytope& p, const DVec& x) {
  if (p.is_empty()) return 0;
  double acc = 0;
  for (const auto& f : p.facets()) acc += std::abs(ddot(x, f.unit_normal)) * f.area;
  return acc / p.ambient_dim();
}

namespace {

double signed_part(double v, LpMode mode) {
  switch (mode) {
    case LpMode::sym:
      return std::abs(v);
    case LpMode::plus:
      return std::max(v, 0.0);
    case LpMode::minus:
      return std::max(-v, 0.0);
  }
  return 0;
}

}  // namespace

double lp_projection(const Polytope& p, double exponent, const DVec& x, LpMode mode) {
  if (!(exponent >= 0)) throw std::invalid_argument("lp_projection: p must be >= 0");
  if (p.is_empty()) return 0;
  if (!p.contains_origin())
    throw std::domain_error("lp_projection: polytope must contain the origin");
  if (exponent == 0) {
    // Degree-zero valuations contain no asymmetric term; only the
    // constant-zeta reading is meaningful here.
    if (mode != LpMode::sym)
      throw std::invalid_argument("lp_projection: asymmetric p = 0 is rejected");
    double acc = 0;
    for (const auto& f : p.facets()) {
      if (f.offset_exact == 0) continue;
      acc += f.offset * f.area;
    }
    return acc / p.ambient_dim();
  }
  double acc = 0;
  for (const auto& f : p.facets()) {
    if (f.offset_exact == 0) continue;
    double base = signed_part(ddot(x, f.unit_normal), mode);
    double term = base == 0 ? 0.0 : std::pow(base, exponent);
    double hpow = exponent == 1 ? 1.0 : std::pow(f.offset, 1.0 - exponent);
    acc += term * hpow * f.area;
  }
  return acc / p.ambient_dim();
}

double lp_mixed_volume(const Polytope& k, const SupportFn& h_l, double p, bool restricted) {
  if (!(p >= 1)) throw std::invalid_argument("lp_mixed_volume: p must be >= 1");
  if (k.is_empty()) return 0;
  double acc = 0;
  for (const auto& f : k.facets()) {
    if (f.offset_exact == 0) {
      if (p == 1) {
        acc += h_l(f.unit_normal) * f.area;
        continue;
      }
      if (!restricted)
        throw std::domain_error(
            "lp_mixed_volume: zero-offset atom with p > 1; need o in int K or restricted mode");
      continue;
    }
    double hl = h_l(f.unit_normal);
    double hlp = p == 1 ? hl : (hl == 0 ? 0.0 : std::pow(hl, p));
    double hk = p == 1 ? 1.0 : std::pow(f.offset, 1.0 - p);
    acc += hlp * hk * f.area;
  }
  return acc / k.ambient_dim();
}

double orlicz_mixed_volume(const Polytope& k, const SupportFn& h_l, const ZetaSpec& phi) {
  if (k.is_empty()) return 0;
  double acc = 0;
  for (const auto& f : k.facets()) {
    if (f.offset_exact <= 0)
      throw std::domain_error("orlicz_mixed_volume: origin must be interior to K");
    acc += phi(h_l(f.unit_normal) / f.offset) * (f.offset * f.area / k.ambient_dim());
  }
  return acc;
}

double orlicz_projection_support(const Polytope& k, const ZetaSpec& zeta, const DVec& x) {
  if (!zeta.orlicz_admissible())
    throw std::invalid_argument(
        "orlicz_projection_support: zeta must be convex, nonnegative, zeta(0)=0, nontrivial");
  if (k.is_empty() || k.dim() < k.ambient_dim() || !k.origin_in_relint())
    throw std::domain_error("orlicz_projection_support: origin must be interior to K");
  if (dnorm(x) == 0) return 0;

  const double vn = k.volume();
  auto excess = [&](double lambda) {
    double acc = 0;
    for (const auto& f : k.facets())
      acc += zeta(ddot(x, f.unit_normal) / (lambda * f.offset)) *
             (f.offset * f.area / k.ambient_dim());
    return acc - vn;
  };

  // The map lambda -> integral is nonincreasing; bracket then bisect.
  double hi = 1.0;
  int guard = 0;
  while (excess(hi) > 0) {
    hi *= 2;
    if (++guard > 200) throw std::runtime_error("orlicz_projection_support: no upper bracket");
  }
  double lo = hi / 2;
  guard = 0;
  while (excess(lo) <= 0) {
    lo /= 2;
    if (++guard > 400) return 0;  // integral stays below V_n down to lambda ~ 0
  }
  for (int it = 0; it < 200; ++it) {
    double mid = 0.5 * (lo + hi);
    if (excess(mid) <= 0)
      hi = mid;
    else
      lo = mid;
    if (hi - lo <= 1e-12 * hi) break;
  }
  return hi;
}

double euler_characteristic(const Polytope& p) { return p.is_empty() ? 0.0 : 1.0; }

double relint_sign_indicator(const Polytope& p) {
  if (p.is_empty() || !p.origin_in_relint()) return 0;
  return p.dim() % 2 == 0 ? 1.0 : -1.0;
}

double origin_indicator(const Polytope& p) {
  return !p.is_empty() && p.contains_origin() ? 1.0 : 0.0;
}

double eval_representation(const ValuationSpec& spec, const Polytope& p, const DVec& x) {
  if (p.is_empty()) return 0;
  double acc = 0;
  if (spec.zeta) acc += zeta_valuation(p, *spec.zeta, x);
  if (spec.c_n1 != 0) acc += spec.c_n1 * projection_function(p, x);
  if (spec.c0 != 0) acc += spec.c0 * euler_characteristic(p);
  if (spec.c0_prime != 0) acc += spec.c0_prime * relint_sign_indicator(p);
  if (spec.scope == Scope::P_full) {
    Polytope hull = p.hull_with_origin();
    if (spec.zeta_tilde) acc += zeta_valuation(hull, *spec.zeta_tilde, x);
    if (spec.c_tilde_n1 != 0) acc += spec.c_tilde_n1 * projection_function(hull, x);
    if (spec.c_tilde0 != 0) acc += spec.c_tilde0 * origin_indicator(p);
  }
  return acc;
}

BlackBoxValuation make_zeta_family(ZetaSpec z, Scope scope) {
  return {scope, "Z_zeta",
          [z = std::move(z)](const Polytope& p, const DVec& x) { return zeta_valuation(p, z, x); }};
}

BlackBoxValuation make_hull_zeta_family(ZetaSpec z, Scope scope) {
  return {scope, "Z_zeta_hull", [z = std::move(z)](const Polytope& p, const DVec& x) {
            return zeta_hull_valuation(p, z, x);
          }};
}

BlackBoxValuation make_projection_family(double coeff, Scope scope) {
  return {scope, "V1_projection", [coeff](const Polytope& p, const DVec& x) {
            return coeff * projection_function(p, x);
          }};
}

BlackBoxValuation make_hull_projection_family(double coeff, Scope scope) {
  return {scope, "V1_hull_projection", [coeff](const Polytope& p, const DVec& x) {
            return p.is_empty() ? 0.0 : coeff * projection_function(p.hull_with_origin(), x);
          }};
}

BlackBoxValuation make_euler_family(double coeff, Scope scope) {
  return {scope, "V0",
          [coeff](const Polytope& p, const DVec&) { return coeff * euler_characteristic(p); }};
}

BlackBoxValuation make_relint_sign_family(double coeff, Scope scope) {
  return {scope, "relint_sign",
          [coeff](const Polytope& p, const DVec&) { return coeff * relint_sign_indicator(p); }};
}

BlackBoxValuation make_origin_indicator_family(double coeff, Scope scope) {
  return {scope, "origin_indicator",
          [coeff](const Polytope& p, const DVec&) { return coeff * origin_indicator(p); }};
}

BlackBoxValuation make_volume_family(double coeff, Scope scope) {
  return {scope, "volume", [coeff](const Polytope& p, const DVec&) { return coeff * p.volume(); }};
}

BlackBoxValuation make_representation_oracle(ValuationSpec spec) {
  spec.validate();
  return {spec.scope, "representation", [spec = std::move(spec)](const Polytope& p, const DVec& x) {
            return eval_representation(spec, p, x);
          }};
}

BlackBoxValuation make_sum(std::vector<BlackBoxValuation> parts, std::string name) {
  Scope scope = parts.empty() ? Scope::P_o : parts.front().scope;
  for (const auto& part : parts)
    if (part.scope == Scope::P_full) scope = Scope::P_full;
  return {scope, std::move(name), [parts = std::move(parts)](const Polytope& p, const DVec& x) {
            double acc = 0;
            for (const auto& part : parts) acc += part(p, x);
            return acc;
          }};
}

BlackBoxValuation make_vertex_count_bump(BlackBoxValuation base, int threshold) {
  auto scope = base.scope;
  auto name = base.name + "+vertex_bump";
  return {scope, std::move(name),
          [base = std::move(base), threshold](const Polytope& p, const DVec& x) {
            return base(p, x) + (p.vertex_count() > threshold ? 1.0 : 0.0);
          }};
}

BlackBoxValuation make_vertex_count_family(Scope scope) {
  return {scope, "vertex_count", [](const Polytope& p, const DVec&) {
            return static_cast<double>(p.vertex_count());
          }};
}

BlackBoxValuation make_diameter_family(Scope scope) {
  return {scope, "diameter", [](const Polytope& p, const DVec&) { return p.diameter(); }};
}

}  // namespace convval
