#include "convval/harness.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "convval/random_gen.hpp"

namespace convval {
namespace {

std::string describe(const Polytope& p) {
  std::ostringstream os;
  os << "{n=" << p.ambient_dim() << ";verts=[";
  for (int i = 0; i < p.vertex_count(); ++i) {
    if (i) os << ";";
    os << "(";
    const auto& v = p.vertices()[static_cast<size_t>(i)];
    for (size_t j = 0; j < v.size(); ++j) {
      if (j) os << ",";
      os << rat_to_string(v[j]);
    }
    os << ")";
  }
  os << "]}";
  return os.str();
}

std::string describe(const DVec& x) {
  std::ostringstream os;
  os << "(";
  for (size_t j = 0; j < x.size(); ++j) {
    if (j) os << ",";
    os << x[j];
  }
  os << ")";
  return os.str();
}

double normalized(double defect, std::initializer_list<double> terms) {
  double m = 0;
  for (double t : terms) m = std::max(m, std::abs(t));
  return defect / (1.0 + m);
}

DVec axis_point(int n, double t) {
  DVec x(static_cast<size_t>(n), 0.0);
  x.back() = t;
  return x;
}

double factorial(int n) {
  double f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

void record(PropertyReport* rep, double defect, const std::string& witness) {
  if (defect > rep->max_defect) {
    rep->max_defect = defect;
    if (defect > rep->tolerance) rep->witness = witness;
  }
}

// Shear-and-stretch maps of the simplex dissection lemmas: image of e_src is
// lam e_1 + (1-lam) e_2, e_n is stretched by `stretch`, the rest is fixed.
LinearMap dissection_map(int n, int src, const Rat& lam, const Rat& stretch) {
  RMat m = identity_mat(n);
  for (int i = 0; i < n; ++i) m[static_cast<size_t>(i)][static_cast<size_t>(src)] = 0;
  m[0][static_cast<size_t>(src)] = lam;
  m[1][static_cast<size_t>(src)] = 1 - lam;
  m[static_cast<size_t>(n - 1)][static_cast<size_t>(n - 1)] = stretch;
  return LinearMap(std::move(m));
}

Polytope box_with_last_interval(int n, const Rat& lo_n, const Rat& hi_n) {
  std::vector<RVec> pts;
  pts.reserve(size_t(1) << n);
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    RVec p(static_cast<size_t>(n));
    for (int i = 0; i + 1 < n; ++i) p[static_cast<size_t>(i)] = (mask >> i) & 1 ? 1 : -1;
    p[static_cast<size_t>(n - 1)] = (mask >> (n - 1)) & 1 ? hi_n : lo_n;
    pts.push_back(std::move(p));
  }
  return Polytope::from_points(n, std::move(pts));
}

}  // namespace

std::vector<CutTrial> build_cut_corpus(int n, uint64_t seed, int trials, int x_count,
                                       Scope scope) {
  std::vector<CutTrial> corpus;
  corpus.reserve(static_cast<size_t>(trials));
  Rng xrng(seed ^ 0xabcdef1234567890ull);
  for (int i = 0; i < trials; ++i) {
    uint64_t s = seed + static_cast<uint64_t>(i) * 7919;
    int k = 6 + static_cast<int>(s % 8);
    bool through_origin = scope == Scope::P_o || i % 2 == 0;
    OriginMode mode = scope == Scope::P_o || i % 2 == 0 ? OriginMode::contains_origin
                                                        : OriginMode::general;
    Polytope p = random_polytope(s, n, k, mode);
    Rng hrng(s ^ 0x5555aaaa5555aaaaull);
    Halfspace h = random_cutting_halfspace(p, hrng, through_origin);
    CutTrial trial{p,
                   clip(p, h),
                   clip(p, Halfspace(negated(h.normal), -h.bound)),
                   intersect_hyperplane(p, h),
                   {},
                   ""};
    trial.xs.reserve(static_cast<size_t>(x_count));
    for (int j = 0; j < x_count; ++j) trial.xs.push_back(random_direction(xrng, n));
    std::ostringstream os;
    os << "trial " << i << " P=" << describe(p) << " H={a=";
    for (const auto& c : h.normal) os << rat_to_string(c) << ",";
    os << " b=" << rat_to_string(h.bound) << "}";
    trial.desc = os.str();
    corpus.push_back(std::move(trial));
  }
  return corpus;
}

PropertyReport check_valuation(const BlackBoxValuation& z, const std::vector<CutTrial>& corpus,
                               uint64_t seed, double tol) {
  PropertyReport rep{"valuation_identity(" + z.name + ")",
                     static_cast<int>(corpus.size()),
                     0,
                     tol,
                     false,
                     seed,
                     ""};
  for (const auto& t : corpus) {
    for (const auto& x : t.xs) {
      double whole = z(t.whole, x);
      double wall = z(t.wall, x);
      double lo = z(t.minus_side, x);
      double hi = z(t.plus_side, x);
      double defect = normalized(std::abs(lo + hi - whole - wall), {whole, wall, lo, hi});
      record(&rep, defect, t.desc + " x=" + describe(x));
    }
  }
  rep.pass = rep.max_defect <= tol;
  return rep;
}

PropertyReport check_valuation(const BlackBoxValuation& z, int n, uint64_t seed, int trials,
                               double tol) {
  auto corpus = build_cut_corpus(n, seed, trials, 10, z.scope);
  return check_valuation(z, corpus, seed, tol);
}

PropertyReport check_contravariance(const BlackBoxValuation& z, int n, uint64_t seed, int trials,
                                    double tol) {
  PropertyReport rep{"sl_contravariance(" + z.name + ")", trials, 0, tol, false, seed, ""};
  Rng rng(seed);
  for (int i = 0; i < trials; ++i) {
    uint64_t s = seed + static_cast<uint64_t>(i) * 6101;
    OriginMode mode = z.scope == Scope::P_full && i % 3 == 0 ? OriginMode::general
                                                             : OriginMode::contains_origin;
    Polytope p = random_polytope(s, n, 6 + static_cast<int>(s % 6), mode);
    LinearMap m = random_unimodular(s ^ 0x1234, n, 2 + static_cast<int>(s % 3));
    RVec x = random_rational_point(rng, n, 32, 16);
    Polytope mp = apply_linear(p, m);
    double lhs = z(mp, to_double(x));
    double rhs = z(p, to_double(m.inverse().apply(x)));
    double defect = normalized(std::abs(lhs - rhs), {lhs, rhs});
    record(&rep, defect, "trial " + std::to_string(i) + " P=" + describe(p));
  }
  rep.pass = rep.max_defect <= tol;
  return rep;
}

PropertyReport check_simplicity(const BlackBoxValuation& z, int n, uint64_t seed, int trials) {
  PropertyReport rep{"simplicity(" + z.name + ")", trials, 0, 0.0, false, seed, ""};
  Rng rng(seed);
  for (int i = 0; i < trials; ++i) {
    uint64_t s = seed + static_cast<uint64_t>(i) * 4409;
    int d = static_cast<int>(s % static_cast<uint64_t>(n));  // 0 .. n-1
    bool through_origin = i % 2 == 0;
    Polytope p = random_lowdim_polytope(s, n, d, d + 3, through_origin);
    for (int j = 0; j < 5; ++j) {
      double v = z(p, random_direction(rng, n));
      record(&rep, std::abs(v), "dim=" + std::to_string(d) + " P=" + describe(p));
    }
  }
  rep.pass = rep.max_defect == 0.0;
  return rep;
}

PropertyReport check_simplex_dissections(int n, uint64_t seed, double tol) {
  PropertyReport rep{"simplex_dissections", 0, 0, tol, false, seed, ""};
  const std::vector<Rat> lambdas{Rat(1, 4), Rat(1, 2), Rat(3, 4)};
  const std::vector<Rat> scales{Rat(1, 2), Rat(1), Rat(2)};
  std::vector<int> dims{2, n - 1, n};
  std::sort(dims.begin(), dims.end());
  dims.erase(std::unique(dims.begin(), dims.end()), dims.end());

  auto expect_equal = [&](const Polytope& got, const Polytope& want, const std::string& what) {
    ++rep.trials;
    if (!got.same_vertex_set(want))
      record(&rep, 1.0, what + ": got " + describe(got) + " want " + describe(want));
  };

  for (const Rat& lam : lambdas) {
    RVec a = zero_vec(n);
    a[0] = 1 - lam;
    a[1] = -lam;
    Halfspace minus(a, Rat(0));
    Halfspace plus(negated(a), Rat(0));
    for (const Rat& s : scales) {
      for (int d : dims) {
        Polytope simplex = Polytope::simplex(n, d, s);
        Polytope lo = clip(simplex, minus);
        Polytope hi = clip(simplex, plus);
        Polytope wall = intersect_hyperplane(simplex, minus);
        std::string tag = " (lam=" + rat_to_string(lam) + ", s=" + rat_to_string(s) +
                          ", d=" + std::to_string(d) + ")";
        if (d < n) {
          LinearMap phi1 = dissection_map(n, 0, lam, 1 / lam);
          LinearMap phi2 = dissection_map(n, 1, lam, 1 / (1 - lam));
          expect_equal(lo, apply_linear(simplex, phi1), "T^d cap H- = phi1 T^d" + tag);
          expect_equal(hi, apply_linear(simplex, phi2), "T^d cap H+ = phi2 T^d" + tag);
          expect_equal(wall, apply_linear(Polytope::hat_simplex(n, d, s), phi1),
                       "T^d cap H = phi1 hat-T^{d-1}" + tag);
        } else {
          // phi3 lambda^{1/n} and phi4 (1-lambda)^{1/n} compose to rational
          // shears fixing e_n.
          LinearMap psi3 = dissection_map(n, 0, lam, Rat(1));
          LinearMap psi4 = dissection_map(n, 1, lam, Rat(1));
          expect_equal(lo, apply_linear(simplex, psi3), "sT^n cap H- = phi3 l^{1/n} sT^n" + tag);
          expect_equal(hi, apply_linear(simplex, psi4),
                       "sT^n cap H+ = phi4 (1-l)^{1/n} sT^n" + tag);
          expect_equal(wall, apply_linear(Polytope::hat_simplex(n, n, s), psi3),
                       "sT^n cap H = phi3 l^{1/n} s hat-T^{n-1}" + tag);
        }
      }
    }
  }

  // Degenerate lambda -> 0: the cut collapses to the opposite face.
  {
    Polytope t2 = Polytope::simplex(n, 2);
    Polytope face = clip(t2, Halfspace(unit_vec(n, 0), Rat(0)));
    std::vector<RVec> expect{zero_vec(n), unit_vec(n, 1)};
    expect_equal(face, Polytope::from_points(n, expect), "lambda->0 clip returns face");
  }

  // Numeric Cauchy-type identities along e_n, normalized defects.
  ValuationSpec dense;
  dense.scope = Scope::P_o;
  dense.c0 = 0.7;
  dense.c0_prime = -0.3;
  dense.c_n1 = 1.2;
  dense.zeta = ZetaSpec::poly({0.3, -0.2, 0.4});
  const std::vector<double> ts{-2.0, 1.0, 3.0};
  for (const Rat& lam_r : lambdas) {
    double lam = lam_r.get_d();
    for (const Rat& s : scales) {
      // (a7-1) for the dense representation on d <= n-1.
      for (int d : dims) {
        if (d >= n) continue;
        Polytope simplex = Polytope::simplex(n, d, s);
        Polytope hat = Polytope::hat_simplex(n, d, s);
        for (double t : ts) {
          ++rep.trials;
          double lhs = eval_representation(dense, simplex, axis_point(n, t)) +
                       eval_representation(dense, hat, axis_point(n, lam * t));
          double rhs = eval_representation(dense, simplex, axis_point(n, lam * t)) +
                       eval_representation(dense, simplex, axis_point(n, (1 - lam) * t));
          record(&rep, normalized(std::abs(lhs - rhs), {lhs, rhs}),
                 "(a7-1) d=" + std::to_string(d));
        }
      }
      // (a7-3) for Z_zeta on sT^n with the lambda^{1/n} rescalings.
      Polytope top = Polytope::simplex(n, n, s);
      Polytope lo_body = scale(top, Rat(std::pow(lam, 1.0 / n)));
      Polytope hi_body = scale(top, Rat(std::pow(1 - lam, 1.0 / n)));
      ZetaSpec zeta = ZetaSpec::poly({0.0, 0.0, 1.0});
      for (double t : ts) {
        ++rep.trials;
        double lhs = zeta_valuation(top, zeta, axis_point(n, t));
        double rhs =
            zeta_valuation(lo_body, zeta, axis_point(n, std::pow(lam, 1.0 / n) * t)) +
            zeta_valuation(hi_body, zeta, axis_point(n, std::pow(1 - lam, 1.0 / n) * t));
        record(&rep, normalized(std::abs(lhs - rhs), {lhs, rhs}), "(a7-3)");
      }
    }
    // (a7-2) for the projection family on T^{n-1}.
    Polytope tn1 = Polytope::simplex(n, n - 1);
    for (double t : ts) {
      ++rep.trials;
      double whole = projection_function(tn1, axis_point(n, t));
      double parts = projection_function(tn1, axis_point(n, lam * t)) +
                     projection_function(tn1, axis_point(n, (1 - lam) * t));
      record(&rep, normalized(std::abs(whole - parts), {whole, parts}), "(a7-2)");
    }
  }
  rep.pass = rep.max_defect <= tol;
  return rep;
}

PropertyReport check_minkowski_inequality(int n, uint64_t seed, int trials,
                                          const std::vector<double>& p_list, double tol) {
  PropertyReport rep{"lp_minkowski_inequality", trials, 0, tol, false, seed, ""};
  for (int i = 0; i < trials; ++i) {
    uint64_t s = seed + static_cast<uint64_t>(i) * 5303;
    Polytope k = random_polytope_origin_interior(s, n, 6 + static_cast<int>(s % 6));
    Polytope l = i % 10 == 0
                     ? k
                     : random_polytope(s ^ 0xbeef, n, 6 + static_cast<int>((s >> 8) % 6),
                                       OriginMode::contains_origin);
    double vk = k.volume(), vl = l.volume();
    auto h_l = support_of(l);
    for (double p : p_list) {
      double vp = lp_mixed_volume(k, h_l, p, false);
      double slack = std::pow(vp / vk, 1.0 / p) - std::pow(vl / vk, 1.0 / n);
      double violation = std::max(0.0, -slack);
      record(&rep, violation, "trial " + std::to_string(i) + " p=" + std::to_string(p) +
                                  " K=" + describe(k) + " L=" + describe(l));
      if (i % 10 == 0)  // K = L must sit on the equality case
        record(&rep, std::abs(slack), "equality trial " + std::to_string(i));
    }
  }
  rep.pass = rep.max_defect <= tol;
  return rep;
}

PropertyReport check_continuity_witness(const ZetaSpec& zeta, int n) {
  PropertyReport rep{"continuity_witness", 0, 0, 1e-2, false, 0, ""};
  Polytope limit = box_with_last_interval(n, Rat(0), Rat(1));
  double final_defect = 0;
  for (int k = 1; k <= 6; ++k) {
    long t = 1;
    for (int j = 0; j < k; ++j) t *= 10;
    Polytope pt = box_with_last_interval(n, Rat(-1, t), Rat(1));
    double defect = 0;
    for (double dir : {1.0, -1.0}) {
      DVec x = axis_point(n, dir);
      defect = std::max(defect,
                        std::abs(zeta_valuation(pt, zeta, x) - zeta_valuation(limit, zeta, x)));
    }
    final_defect = defect;
    ++rep.trials;
  }
  rep.max_defect = final_defect;
  bool converged = final_defect <= rep.tolerance;
  rep.pass = converged == zeta.sublinear();
  if (!rep.pass)
    rep.witness = converged ? "sequence converged but zeta is not flagged sublinear"
                            : "sequence diverged for a sublinear zeta";
  return rep;
}

PropertyReport check_homogeneity_in_x(const ZetaSpec& zeta, int n, uint64_t seed, int trials,
                                      double tol) {
  auto p_deg = zeta.homogeneity_degree();
  if (!p_deg) throw std::invalid_argument("check_homogeneity_in_x: zeta not homogeneous");
  PropertyReport rep{"homogeneity_in_x", trials, 0, tol, false, seed, ""};
  Rng rng(seed);
  for (int i = 0; i < trials; ++i) {
    Polytope p = random_polytope(seed + static_cast<uint64_t>(i) * 31, n, n + 4,
                                 OriginMode::contains_origin);
    DVec x = random_direction(rng, n);
    double base = zeta_valuation(p, zeta, x);
    for (double lam : {0.5, 2.0, 3.0}) {
      DVec lx(x);
      for (auto& c : lx) c *= lam;
      double got = zeta_valuation(p, zeta, lx);
      double want = std::pow(lam, *p_deg) * base;
      record(&rep, normalized(std::abs(got - want), {got, want}),
             "lam=" + std::to_string(lam) + " P=" + describe(p));
    }
  }
  rep.pass = rep.max_defect <= tol;
  return rep;
}

PropertyReport check_homogeneity_in_body(const ZetaSpec& zeta, int n, uint64_t seed, int trials,
                                         double tol) {
  auto p_deg = zeta.homogeneity_degree();
  if (!p_deg) throw std::invalid_argument("check_homogeneity_in_body: zeta not homogeneous");
  PropertyReport rep{"homogeneity_in_body", trials, 0, tol, false, seed, ""};
  Rng rng(seed);
  const std::vector<Rat> lams{Rat(1, 2), Rat(2), Rat(3)};
  for (int i = 0; i < trials; ++i) {
    Polytope p = random_polytope(seed + static_cast<uint64_t>(i) * 53, n, n + 4,
                                 OriginMode::contains_origin);
    DVec x = random_direction(rng, n);
    double base = zeta_valuation(p, zeta, x);
    for (const Rat& lam : lams) {
      double got = zeta_valuation(scale(p, lam), zeta, x);
      double want = std::pow(lam.get_d(), n - *p_deg) * base;
      record(&rep, normalized(std::abs(got - want), {got, want}),
             "lam=" + rat_to_string(lam) + " P=" + describe(p));
    }
  }
  rep.pass = rep.max_defect <= tol;
  return rep;
}

PropertyReport check_translation(const ZetaSpec& zeta, int n, uint64_t seed, int trials,
                                 bool expect_invariant, double tol) {
  if (expect_invariant) {
    PropertyReport rep{"translation_invariance", trials, 0, tol, false, seed, ""};
    Rng rng(seed);
    for (int i = 0; i < trials; ++i) {
      Polytope p = random_polytope(seed + static_cast<uint64_t>(i) * 17, n, n + 4,
                                   OriginMode::contains_origin);
      // Shift a vertex to the origin: o stays inside the translate.
      const RVec& v =
          p.vertices()[static_cast<size_t>(rng.uniform_int(0, p.vertex_count() - 1))];
      Polytope q = translate(p, negated(v));
      DVec x = random_direction(rng, n);
      double a = zeta_valuation(p, zeta, x);
      double b = zeta_valuation(q, zeta, x);
      record(&rep, normalized(std::abs(a - b), {a, b}), "P=" + describe(p));
    }
    rep.pass = rep.max_defect <= tol;
    return rep;
  }
  // The translated-cube witness must break the identity Z(P_t) = Z(P_0).
  PropertyReport rep{"translation_breaks", 0, 0, 1e-2, false, seed, ""};
  Polytope base = Polytope::cube(n, Rat(-1), Rat(1));
  DVec x = axis_point(n, 1.0);
  double z0 = zeta_valuation(base, zeta, x);
  for (const Rat& t : {Rat(1, 4), Rat(1, 2)}) {
    RVec y = scaled(unit_vec(n, n - 1), t);
    double zt = zeta_valuation(translate(base, y), zeta, x);
    record(&rep, std::abs(zt - z0), "");
    ++rep.trials;
  }
  rep.pass = rep.max_defect > rep.tolerance;
  if (!rep.pass) rep.witness = "translated-cube witness failed to move Z_zeta";
  return rep;
}

PropertyReport check_orlicz_convexity(const ZetaSpec& zeta, int n, uint64_t seed, int trials,
                                      double tol) {
  PropertyReport rep{"orlicz_output_convexity", trials, 0, tol, false, seed, ""};
  Rng rng(seed);
  for (int i = 0; i < trials; ++i) {
    Polytope p = random_polytope(seed + static_cast<uint64_t>(i) * 271, n, n + 4,
                                 OriginMode::contains_origin);
    DVec x = random_direction(rng, n), y = random_direction(rng, n);
    DVec mid(x.size());
    for (size_t j = 0; j < x.size(); ++j) mid[j] = 0.5 * (x[j] + y[j]);
    double excess = zeta_valuation(p, zeta, mid) -
                    0.5 * (zeta_valuation(p, zeta, x) + zeta_valuation(p, zeta, y));
    record(&rep, std::max(0.0, excess), "P=" + describe(p) + " x=" + describe(x));
  }
  rep.pass = rep.max_defect <= tol;
  return rep;
}

std::vector<PropertyReport> run_property_suite(int n, uint64_t seed) {
  std::vector<PropertyReport> out;
  ZetaSpec bumpy = ZetaSpec::poly({0.3, -0.2, 0.4});
  ValuationSpec dense;
  dense.scope = Scope::P_full;
  dense.c0 = 0.7;
  dense.c0_prime = -0.3;
  dense.c_tilde0 = 0.4;
  dense.c_n1 = 1.2;
  dense.c_tilde_n1 = -0.8;
  dense.zeta = bumpy;
  dense.zeta_tilde = ZetaSpec::abs_power(0.5);

  std::vector<BlackBoxValuation> families{
      make_zeta_family(bumpy),
      make_hull_zeta_family(ZetaSpec::abs_power(0.5)),
      make_projection_family(),
      make_hull_projection_family(),
      make_euler_family(),
      make_relint_sign_family(),
      make_origin_indicator_family(),
      make_representation_oracle(dense),
  };
  auto corpus_o = build_cut_corpus(n, seed, 60, 8, Scope::P_o);
  auto corpus_full = build_cut_corpus(n, seed ^ 0x77, 60, 8, Scope::P_full);
  for (const auto& fam : families) {
    out.push_back(
        check_valuation(fam, fam.scope == Scope::P_o ? corpus_o : corpus_full, seed));
    out.push_back(check_contravariance(fam, n, seed, 40));
  }
  out.push_back(check_simplicity(make_zeta_family(bumpy), n, seed, 60));
  out.push_back(check_simplex_dissections(n, seed));
  out.push_back(check_minkowski_inequality(n, seed, 60, {1.0, 2.0, 3.0}));
  out.push_back(check_continuity_witness(ZetaSpec::constant(2.0), n));
  out.push_back(check_continuity_witness(ZetaSpec::abs_power(0.5), n));
  out.push_back(check_continuity_witness(
      ZetaSpec::table({-1.0, 0.0, 1.0}, {1.0, 0.0, 1.0}, {-1.0, 1.0}), n));
  out.push_back(check_homogeneity_in_x(ZetaSpec::abs_power(0.5), n, seed, 20));
  out.push_back(check_homogeneity_in_body(ZetaSpec::abs_power(2.0), n, seed, 20));
  out.push_back(check_translation(ZetaSpec::constant(1.5), n, seed, 20, true));
  out.push_back(check_translation(ZetaSpec::abs_power(0.5), n, seed, 0, false));
  out.push_back(check_orlicz_convexity(ZetaSpec::abs_power(2.0), n, seed, 30));
  return out;
}

}  // namespace convval
