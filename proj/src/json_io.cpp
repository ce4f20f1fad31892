#include "convval/json_io.hpp"

#include <stdexcept>

namespace convval {

void require_keys(const json& obj, std::initializer_list<const char*> allowed,
                  const char* what) {
  if (!obj.is_object()) throw std::invalid_argument(std::string(what) + ": expected an object");
  for (const auto& [key, value] : obj.items()) {
    bool ok = false;
    for (const char* a : allowed)
      if (key == a) {
        ok = true;
        break;
      }
    if (!ok) throw std::invalid_argument(std::string(what) + ": unknown key '" + key + "'");
  }
}

namespace {

Rat coord_from_json(const json& c) {
  if (c.is_number_integer()) return Rat(static_cast<long>(c.get<long long>()));
  if (c.is_number_float()) return Rat(c.get<double>());
  if (c.is_string()) return parse_rat(c.get<std::string>());
  throw std::invalid_argument("coordinate must be a number or a rational string");
}

}  // namespace

json polytope_to_json(const Polytope& p) {
  json verts = json::array();
  for (const auto& v : p.vertices()) {
    json row = json::array();
    for (const auto& c : v) row.push_back(rat_to_string(c));
    verts.push_back(std::move(row));
  }
  return json{{"n", p.ambient_dim()}, {"vertices", std::move(verts)}};
}

Polytope polytope_from_json(const json& j) {
  require_keys(j, {"n", "vertices"}, "polytope");
  if (!j.contains("n") || !j.contains("vertices"))
    throw std::invalid_argument("polytope: need 'n' and 'vertices'");
  int n = j.at("n").get<int>();
  std::vector<RVec> pts;
  for (const auto& row : j.at("vertices")) {
    RVec v;
    v.reserve(row.size());
    for (const auto& c : row) v.push_back(coord_from_json(c));
    if (static_cast<int>(v.size()) != n)
      throw std::invalid_argument("polytope: vertex dimension mismatch");
    pts.push_back(std::move(v));
  }
  if (pts.empty()) throw std::invalid_argument("polytope: empty vertex list");
  return Polytope::from_points(n, std::move(pts));
}

json measure_to_json(const AtomicSphereMeasure& m) {
  json atoms = json::array();
  for (const auto& a : m.atoms()) {
    json u = json::array();
    for (double c : a.u) u.push_back(c);
    atoms.push_back(json{{"u", std::move(u)}, {"w", a.w}});
  }
  return json{
      {"kind", m.kind() == MeasureKind::surface_area ? "surface_area" : "cone_volume"},
      {"atoms", std::move(atoms)}};
}

json zeta_to_json(const ZetaSpec& z) {
  switch (z.variant()) {
    case ZetaSpec::Variant::constant:
      return json{{"variant", "constant"}, {"c", z.param()}};
    case ZetaSpec::Variant::power_plus:
      return json{{"variant", "power_plus"}, {"p", z.param()}};
    case ZetaSpec::Variant::power_minus:
      return json{{"variant", "power_minus"}, {"p", z.param()}};
    case ZetaSpec::Variant::abs_power:
      return json{{"variant", "abs_power"}, {"p", z.param()}};
    case ZetaSpec::Variant::poly:
      return json{{"variant", "poly"}, {"coeffs", z.coeffs()}};
    case ZetaSpec::Variant::table:
      return json{{"variant", "table"},
                  {"knots", z.knots()},
                  {"values", z.values()},
                  {"end_slopes", z.end_slopes()}};
    case ZetaSpec::Variant::callable:
      throw std::invalid_argument("callable zeta is not serializable");
  }
  throw std::logic_error("unreachable");
}

ZetaSpec zeta_from_json(const json& j) {
  require_keys(j, {"variant", "c", "p", "coeffs", "knots", "values", "end_slopes"}, "zeta");
  std::string variant = j.at("variant").get<std::string>();
  if (variant == "constant") return ZetaSpec::constant(j.at("c").get<double>());
  if (variant == "power_plus") return ZetaSpec::power_plus(j.at("p").get<double>());
  if (variant == "power_minus") return ZetaSpec::power_minus(j.at("p").get<double>());
  if (variant == "abs_power") return ZetaSpec::abs_power(j.at("p").get<double>());
  if (variant == "poly") return ZetaSpec::poly(j.at("coeffs").get<std::vector<double>>());
  if (variant == "table") {
    auto slopes = j.at("end_slopes").get<std::vector<double>>();
    if (slopes.size() != 2) throw std::invalid_argument("zeta table: need two end slopes");
    return ZetaSpec::table(j.at("knots").get<std::vector<double>>(),
                           j.at("values").get<std::vector<double>>(), {slopes[0], slopes[1]});
  }
  throw std::invalid_argument("zeta: unknown variant '" + variant + "'");
}

json valuation_spec_to_json(const ValuationSpec& s) {
  json out{{"scope", s.scope == Scope::P_o ? "P_o" : "P_full"},
           {"c0", s.c0},
           {"c0_prime", s.c0_prime},
           {"c_n1", s.c_n1}};
  if (s.zeta) out["zeta"] = zeta_to_json(*s.zeta);
  if (s.scope == Scope::P_full) {
    out["c_tilde0"] = s.c_tilde0;
    out["c_tilde_n1"] = s.c_tilde_n1;
    if (s.zeta_tilde) out["zeta_tilde"] = zeta_to_json(*s.zeta_tilde);
  }
  return out;
}

ValuationSpec valuation_spec_from_json(const json& j) {
  require_keys(j, {"scope", "c0", "c0_prime", "c_n1", "c_tilde0", "c_tilde_n1", "zeta",
                   "zeta_tilde"},
               "valuation spec");
  ValuationSpec s;
  std::string scope = j.at("scope").get<std::string>();
  if (scope == "P_o")
    s.scope = Scope::P_o;
  else if (scope == "P_full")
    s.scope = Scope::P_full;
  else
    throw std::invalid_argument("valuation spec: scope must be P_o or P_full");
  s.c0 = j.value("c0", 0.0);
  s.c0_prime = j.value("c0_prime", 0.0);
  s.c_n1 = j.value("c_n1", 0.0);
  s.c_tilde0 = j.value("c_tilde0", 0.0);
  s.c_tilde_n1 = j.value("c_tilde_n1", 0.0);
  if (j.contains("zeta")) s.zeta = zeta_from_json(j.at("zeta"));
  if (j.contains("zeta_tilde")) s.zeta_tilde = zeta_from_json(j.at("zeta_tilde"));
  s.validate();
  return s;
}

BlackBoxValuation oracle_from_json(const json& j) {
  require_keys(j, {"scope", "terms", "name"}, "oracle");
  std::string scope_str = j.value("scope", std::string("P_o"));
  Scope scope = scope_str == "P_full" ? Scope::P_full : Scope::P_o;
  if (scope_str != "P_o" && scope_str != "P_full")
    throw std::invalid_argument("oracle: scope must be P_o or P_full");
  auto with_coeff = [](BlackBoxValuation base, double coeff) {
    if (coeff == 1.0) return base;
    BlackBoxValuation scaled{base.scope, base.name, nullptr};
    scaled.eval = [base = std::move(base), coeff](const Polytope& p, const DVec& x) {
      return coeff * base(p, x);
    };
    return scaled;
  };
  std::vector<BlackBoxValuation> parts;
  for (const auto& term : j.at("terms")) {
    require_keys(term, {"kind", "coeff", "zeta", "spec", "threshold"}, "oracle term");
    std::string kind = term.at("kind").get<std::string>();
    double coeff = term.value("coeff", 1.0);
    if (kind == "zeta") {
      parts.push_back(with_coeff(make_zeta_family(zeta_from_json(term.at("zeta")), scope), coeff));
    } else if (kind == "hull_zeta") {
      parts.push_back(
          with_coeff(make_hull_zeta_family(zeta_from_json(term.at("zeta")), scope), coeff));
    } else if (kind == "projection") {
      parts.push_back(make_projection_family(coeff, scope));
    } else if (kind == "hull_projection") {
      parts.push_back(make_hull_projection_family(coeff, scope));
    } else if (kind == "euler") {
      parts.push_back(make_euler_family(coeff, scope));
    } else if (kind == "relint_sign") {
      parts.push_back(make_relint_sign_family(coeff, scope));
    } else if (kind == "origin_indicator") {
      parts.push_back(make_origin_indicator_family(coeff, scope));
    } else if (kind == "volume") {
      parts.push_back(make_volume_family(coeff, scope));
    } else if (kind == "representation") {
      parts.push_back(make_representation_oracle(valuation_spec_from_json(term.at("spec"))));
    } else if (kind == "vertex_count_bump") {
      int threshold = term.value("threshold", 6);
      parts.push_back(
          with_coeff(make_vertex_count_bump(make_volume_family(0.0, scope), threshold), coeff));
    } else {
      throw std::invalid_argument("oracle: unknown term kind '" + kind + "'");
    }
  }
  auto oracle = make_sum(std::move(parts), j.value("name", std::string("oracle")));
  oracle.scope = scope;
  return oracle;
}

json fit_report_to_json(const FitReport& r) {
  json fit{{"classifiable", r.fit.classifiable},
           {"spec", valuation_spec_to_json(r.fit.spec)},
           {"t_grid",
            json{{"lo", r.fit.t_grid.front()},
                 {"hi", r.fit.t_grid.back()},
                 {"count", r.fit.t_grid.size()}}},
           {"diagnostics",
            json{{"constants_defect", r.fit.diag.constants_defect},
                 {"scaling_defect", r.fit.diag.scaling_defect},
                 {"cauchy_defect", r.fit.diag.cauchy_defect},
                 {"lowdim_defect", r.fit.diag.lowdim_defect},
                 {"failure", r.fit.diag.failure}}}};
  return json{{"fit", std::move(fit)},
              {"corpus_seed", r.corpus_seed},
              {"corpus_size", r.corpus_size},
              {"x_samples", r.x_samples},
              {"tolerance", r.tolerance},
              {"residual_max", r.residual_max},
              {"residual_mean", r.residual_mean},
              {"certified", r.certified},
              {"note", r.note}};
}

json property_report_to_json(const PropertyReport& r) {
  return json{{"property", r.property}, {"trials", r.trials},
              {"max_defect", r.max_defect}, {"tolerance", r.tolerance},
              {"pass", r.pass},           {"seed", r.seed},
              {"witness", r.witness}};
}

}  // namespace convval
