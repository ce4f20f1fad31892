#ifndef CONVVAL_VALUATIONS_HPP_
#define CONVVAL_VALUATIONS_HPP_

#include <functional>
#include <optional>
#include <string>

#include "convval/measures.hpp"
#include "convval/polytope.hpp"
#include "convval/zeta.hpp"

namespace convval {

enum class Scope { P_o, P_full };

// Classification tuple of the representation theorems. Scope P_o uses
// (c0, c0', c_{n-1}, zeta); scope P_full additionally carries the hull terms.
struct ValuationSpec {
  Scope scope = Scope::P_o;
  double c0 = 0;
  double c0_prime = 0;
  double c_tilde0 = 0;
  double c_n1 = 0;
  double c_tilde_n1 = 0;
  std::optional<ZetaSpec> zeta;
  std::optional<ZetaSpec> zeta_tilde;

  void validate() const;  // P_o forbids the tilde fields
};

// Support-function oracle for the second body of a mixed volume; evaluated
// only at the finitely many facet normals of the first body.
using SupportFn = std::function<double(const DVec& u)>;

SupportFn support_of(const Polytope& l);
SupportFn support_of_symmetric_segment(const DVec& x);   // h(u) = |x.u|
SupportFn support_of_segment_to(const DVec& x);          // h(u) = (x.u)_+
SupportFn lp_combination(SupportFn h1, SupportFn h2, double p);

// Z_zeta P (x): sum of zeta((x.u)/h_P(u)) over the cone-volume atoms off
// {h_P = 0}. Simple by construction; identically 0 on dim < n inputs.
double zeta_valuation(const Polytope& p, const ZetaSpec& z, const DVec& x);
// Z_zeta [P,o] (x).
double zeta_hull_valuation(const Polytope& p, const ZetaSpec& z, const DVec& x);

// Classical projection function V_1(P, [-x,x]) = h_{Pi P}(x).
double projection_function(const Polytope& p, const DVec& x);

enum class LpMode { sym, plus, minus };
// hat-V_p family on polytopes containing the origin; p = 0 is restricted to
// the symmetric, constant-zeta reading (see the p<1 classification).
double lp_projection(const Polytope& p, double exponent, const DVec& x, LpMode mode);

// V_p(K, L) with L given by its support oracle. p = 1 integrates over the
// full surface measure; p > 1 needs positive offsets unless restricted.
double lp_mixed_volume(const Polytope& k, const SupportFn& h_l, double p, bool restricted);

// V_phi(K, L): requires the origin interior to K.
double orlicz_mixed_volume(const Polytope& k, const SupportFn& h_l, const ZetaSpec& phi);

// h_{Pi_zeta K}(x): minimal lambda > 0 with the Orlicz integral <= V_n(K).
double orlicz_projection_support(const Polytope& k, const ZetaSpec& zeta, const DVec& x);

// Euler characteristic and the indicator terms of the classification.
double euler_characteristic(const Polytope& p);                 // V_0
double relint_sign_indicator(const Polytope& p);                // (-1)^dim 1_{relint P}(o)
double origin_indicator(const Polytope& p);                     // 1_P(o)

// The full representation of the classification theorems.
double eval_representation(const ValuationSpec& spec, const Polytope& p, const DVec& x);

// Black-box oracle consumed by the classifier and the property harness.
struct BlackBoxValuation {
  Scope scope = Scope::P_o;
  std::string name;
  std::function<double(const Polytope&, const DVec&)> eval;

  double operator()(const Polytope& p, const DVec& x) const { return eval(p, x); }
};

// Standard families, usable as harness subjects and classifier fixtures.
BlackBoxValuation make_zeta_family(ZetaSpec z, Scope scope = Scope::P_o);
BlackBoxValuation make_hull_zeta_family(ZetaSpec z, Scope scope = Scope::P_full);
BlackBoxValuation make_projection_family(double coeff = 1, Scope scope = Scope::P_o);
BlackBoxValuation make_hull_projection_family(double coeff = 1, Scope scope = Scope::P_full);
BlackBoxValuation make_euler_family(double coeff = 1, Scope scope = Scope::P_o);
BlackBoxValuation make_relint_sign_family(double coeff = 1, Scope scope = Scope::P_o);
BlackBoxValuation make_origin_indicator_family(double coeff = 1, Scope scope = Scope::P_full);
BlackBoxValuation make_volume_family(double coeff = 1, Scope scope = Scope::P_o);
BlackBoxValuation make_representation_oracle(ValuationSpec spec);
BlackBoxValuation make_sum(std::vector<BlackBoxValuation> parts, std::string name = "sum");
// Adversarial fixtures.
BlackBoxValuation make_vertex_count_bump(BlackBoxValuation base, int threshold);
BlackBoxValuation make_vertex_count_family(Scope scope = Scope::P_o);
BlackBoxValuation make_diameter_family(Scope scope = Scope::P_o);

}  // namespace convval

#endif  // CONVVAL_VALUATIONS_HPP_
