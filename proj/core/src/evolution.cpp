#include "qpweyl/evolution.hpp"

#include <chrono>
#include <map>

#include "qpweyl/laxgauge.hpp"
#include "qpweyl/parse.hpp"

namespace qpweyl {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

Expr P(const char* text) { return parse(text); }

Expr image_of(const Transformation& t, const char* text) { return substitute(parse(text), t); }

// prod over i in [lo, hi] of (x - term(i)), where term is "1/nu{i}" etc.
Expr product(const Expr& x, int lo, int hi, const std::string& pre, const std::string& post,
             const Transformation* t = nullptr) {
  std::vector<Expr> fs;
  for (int i = lo; i <= hi; ++i) {
    Expr term = parse(pre + std::to_string(i) + post);
    if (t) term = substitute(term, *t);
    fs.push_back(x - term);
  }
  return mul(std::move(fs));
}

std::string family_key(const FamilyDescriptor& fam) { return fam.name; }

}  // namespace

Transformation make_xi(const FamilyDescriptor& fam) { return fam.xi; }

Transformation time_evolution(const FamilyDescriptor& fam) {
  Transformation t = compose(make_xi(fam), word_to_transform(fam, fam.evolution_word.power(2)));
  t.set_label("T");
  return t;
}

std::vector<RelationSides> nonlinear_relations(const FamilyDescriptor& fam, const Transformation& t) {
  const Expr f = Expr::symbol(sym::f), g = Expr::symbol(sym::g);
  const Expr tf = t.image(sym::f), tg = t.image(sym::g);
  const Expr one = Expr::integer(1);
  std::vector<RelationSides> out;
  if (fam.name == "D5") {
    out.push_back({"relation1", tf,
                   P("nu3*nu4/f*(g - nu5/kappa2)*(g - nu6/kappa2)/((g - 1/nu1)*(g - 1/nu2))")});
    Expr rhs = one / (g * P("nu1*nu2")) * (tf - image_of(t, "kappa1/nu7")) * (tf - image_of(t, "kappa1/nu8")) /
               ((tf - P("nu3")) * (tf - P("nu4")));
    out.push_back({"relation2", tg, rhs});
  } else if (fam.name == "E6") {
    // (T(f) g - 1)(f g - 1)/(T(f) f) = prod(g - 1/nu_i)/((g - nu5/kappa2)(g - nu6/kappa2))
    out.push_back({"relation1", (tf * g - one) * (f * g - one) * P("(g - nu5/kappa2)*(g - nu6/kappa2)"),
                   tf * f * product(g, 1, 4, "1/nu", "")});
    // (T(f) g - 1)(T(f) T(g) - 1)/(g T(g)) = prod(T(f) - nu_i)/prod_{7,8}(T(f) - T(kappa1/nu_j))
    out.push_back({"relation2", (tf * g - one) * (tf * tg - one) * product(tf, 7, 8, "kappa1/nu", "", &t),
                   g * tg * product(tf, 1, 4, "nu", "")});
  } else {
    // (T(f) g - k/q)(f g - k)/((T(f) g - 1)(f g - 1)) = prod_{5..8}(g - nu_j/kappa2)/prod_{1..4}(g - 1/nu_i)
    out.push_back({"relation1", (tf * g - P("kappa1/(q*kappa2)")) * (f * g - P("kappa1/kappa2")) *
                                    product(g, 1, 4, "1/nu", ""),
                   (tf * g - one) * (f * g - one) * product(g, 5, 8, "nu", "/kappa2")});
    // (T(g) T(f) - k/q^2)(T(f) g - k/q)/((T(g) T(f) - 1)(T(f) g - 1))
    //   = prod_{5..8}(T(f) - T(kappa1/nu_j))/prod_{1..4}(T(f) - nu_i)
    out.push_back({"relation2", (tg * tf - P("kappa1/(q^2*kappa2)")) * (tf * g - P("kappa1/(q*kappa2)")) *
                                    product(tf, 1, 4, "nu", ""),
                   (tg * tf - one) * (tf * g - one) * product(tf, 5, 8, "kappa1/nu", "", &t)});
  }
  return out;
}

Report verify_theorem_i(const FamilyDescriptor& fam, const IdentityConfig& cfg) {
  Report r{fam.name + " time evolution", {}};
  const ConstraintRelation* k = fam.constraint_ptr();
  auto t0 = Clock::now();
  Transformation t = time_evolution(fam);
  double build_ms = ms_since(t0);

  auto check = [&](const std::string& what, const Expr& lhs, const Expr& rhs, const IdentityConfig& c) {
    auto s0 = Clock::now();
    IdentityResult res = identities_equal(lhs, rhs, k, c);
    r.checks.push_back(make_record(fam.name + "/T/" + what, res, ms_since(s0) + build_ms));
  };
  // Parameter checks never need the exact path.
  IdentityConfig sampled = cfg;
  sampled.exact = false;
  for (int i = 1; i <= 8; ++i) check("nu" + std::to_string(i), t.image(sym::nu(i)), Expr::symbol(sym::nu(i)), sampled);
  check("kappa1", t.image(sym::kappa1), P("kappa1/q"), sampled);
  check("kappa2", t.image(sym::kappa2), P("q*kappa2"), sampled);
  for (const auto& rel : nonlinear_relations(fam, t)) check(rel.name, rel.lhs, rel.rhs, cfg);
  return r;
}

std::vector<Expr> theorem_ii_generators(const FamilyDescriptor& fam) {
  std::vector<const char*> names;
  if (fam.name == "E7")
    names = {"nu1", "nu2", "nu3", "nu4", "nu5/kappa1", "nu6/kappa1", "nu7/kappa1", "nu8/kappa1", "kappa2/kappa1", "f", "g"};
  else
    names = {"nu1", "nu2", "nu3", "nu4", "nu5/kappa2", "nu6/kappa2", "nu7/kappa1", "nu8/kappa1", "f", "g"};
  std::vector<Expr> out;
  for (const char* n : names) out.push_back(parse(n));
  return out;
}

Transformation theorem_ii_scaling(const FamilyDescriptor& fam) {
  if (fam.name == "D5") {
    Transformation g = specialize(scaling_G(), sym::s, P("kappa2/(nu5*nu6)"));
    Transformation d = specialize(scaling_D(), sym::c, P("kappa1/(q*nu7*nu8)"));
    // The two maps scale disjoint generators, so the order is immaterial.
    Transformation gd = compose(g, d);
    gd.set_label("G D");
    return gd;
  }
  if (fam.name == "E6") return specialize(scaling_SE6(), sym::c, P("kappa2/(nu5*nu6*kappa1^2)"));
  return specialize(scaling_SE7(), sym::c, P("kappa1/(q*kappa2)"));
}

Report verify_theorem_ii(const FamilyDescriptor& fam, const IdentityConfig& cfg) {
  Report r{fam.name + " adjustment", {}};
  Transformation xi = make_xi(fam);
  Transformation scale = theorem_ii_scaling(fam);
  for (const Expr& zeta : theorem_ii_generators(fam)) {
    auto t0 = Clock::now();
    IdentityResult res = identities_equal(substitute(zeta, xi), substitute(zeta, scale), fam.constraint_ptr(), cfg);
    r.checks.push_back(make_record(fam.name + "/xi/" + print(zeta), res, ms_since(t0)));
  }
  return r;
}

CheckRecord check_xi_constraint(const FamilyDescriptor& fam, const IdentityConfig& cfg) {
  auto t0 = Clock::now();
  Transformation xi = make_xi(fam);
  IdentityResult res = identities_equal(substitute(P("kappa1^2*kappa2^2"), xi),
                                        substitute(P("q*nu1*nu2*nu3*nu4*nu5*nu6*nu7*nu8"), xi),
                                        fam.constraint_ptr(), cfg);
  return make_record(fam.name + "/xi/constraint", res, ms_since(t0));
}

mpq_class OrbitState::constraint_residual() const {
  mpq_class prod = q;
  for (const auto& v : nu) prod *= v;
  return kappa1 * kappa1 * kappa2 * kappa2 - prod;
}

void OrbitState::solve_nu8() {
  mpq_class prod = q;
  for (int i = 0; i < 7; ++i) prod *= nu[i];
  if (prod == 0) throw std::domain_error("q*nu1*...*nu7 vanishes; nu8 is not determined by the constraint");
  nu[7] = kappa1 * kappa1 * kappa2 * kappa2 / prod;
}

Valuation<RationalField> OrbitState::valuation() const {
  Valuation<RationalField> v{RationalField{}};
  v.set(sym::q, q);
  for (int i = 0; i < 8; ++i) v.set(sym::nu(i + 1), nu[i]);
  v.set(sym::kappa1, kappa1);
  v.set(sym::kappa2, kappa2);
  v.set(sym::f, f);
  v.set(sym::g, g);
  return v;
}

PoleError::PoleError(long step, std::string stage, Expr denominator)
    : std::domain_error("pole at step " + std::to_string(step) + " (" + stage + "): " + print(denominator) +
                        " vanishes"),
      step_(step),
      stage_(std::move(stage)),
      denominator_(std::move(denominator)) {}

const StepMap& step_map(const FamilyDescriptor& fam) {
  static const std::map<std::string, StepMap> maps = [] {
    std::map<std::string, StepMap> m;
    // D5 and E6: each half is an involution in its unknown, so both
    // directions use the same two expressions.
    Expr d5f = P("nu3*nu4/f*(g - nu5/kappa2)*(g - nu6/kappa2)/((g - 1/nu1)*(g - 1/nu2))");
    Expr d5g = P("1/(g*nu1*nu2)*(f - kappa1/nu7)*(f - kappa1/nu8)/((f - nu3)*(f - nu4))");
    m["D5"] = {d5f, d5g, d5g, d5f};

    Expr r6 = P("(g - 1/nu1)*(g - 1/nu2)*(g - 1/nu3)*(g - 1/nu4)/((g - nu5/kappa2)*(g - nu6/kappa2))");
    Expr s6 = P("(f - nu1)*(f - nu2)*(f - nu3)*(f - nu4)/((f - kappa1/nu7)*(f - kappa1/nu8))");
    Expr fg1 = P("f*g - 1");
    Expr f = Expr::symbol(sym::f), g = Expr::symbol(sym::g);
    Expr e6f = fg1 / (g * fg1 - r6 * f);
    Expr e6g = fg1 / (f * fg1 - s6 * g);
    m["E6"] = {e6f, e6g, e6g, e6f};

    // E7, k = kappa1/kappa2 of the state the expression is evaluated at.
    Expr r7 = P("(g - nu5/kappa2)*(g - nu6/kappa2)*(g - nu7/kappa2)*(g - nu8/kappa2)"
                "/((g - 1/nu1)*(g - 1/nu2)*(g - 1/nu3)*(g - 1/nu4))");
    Expr s7 = P("(f - kappa1/nu5)*(f - kappa1/nu6)*(f - kappa1/nu7)*(f - kappa1/nu8)"
                "/((f - nu1)*(f - nu2)*(f - nu3)*(f - nu4))");
    Expr k = P("kappa1/kappa2");
    Expr q = Expr::symbol(sym::q);
    Expr a = (f * g - k) / fg1;               // old f, old kappa
    Expr b = (f * g - q * k) / fg1;           // new f, old g, new kappa
    Expr c = (f * g - k) / fg1;               // new f, new g, new kappa
    Expr d = (f * g - k / q) / fg1;           // new f, old g, old kappa
    Expr fwd_f = (a * k / q - r7) / (g * (a - r7));
    Expr fwd_g = (b * k - s7) / (f * (b - s7));
    Expr bwd_g = (c * q * k - s7) / (f * (c - s7));
    Expr bwd_f = (d * k - r7) / (g * (d - r7));
    m["E7"] = {fwd_f, fwd_g, bwd_g, bwd_f};
    return m;
  }();
  return maps.at(family_key(fam));
}

OrbitState orbit_step(const FamilyDescriptor& fam, const OrbitState& st, Direction dir) {
  const StepMap& m = step_map(fam);
  auto eval = [&](const Expr& e, const OrbitState& s, const char* stage) {
    try {
      return evaluate(e, s.valuation());
    } catch (const DivisionByZero& z) {
      throw PoleError(st.t, stage, z.subexpression());
    }
  };
  OrbitState next = st;
  if (dir == Direction::forward) {
    next.f = eval(m.forward_f, st, "f");
    next.kappa1 = st.kappa1 / st.q;
    next.kappa2 = st.kappa2 * st.q;
    next.g = eval(m.forward_g, next, "g");
    next.t = st.t + 1;
  } else {
    next.g = eval(m.backward_g, st, "g");
    next.kappa1 = st.kappa1 * st.q;
    next.kappa2 = st.kappa2 / st.q;
    next.f = eval(m.backward_f, next, "f");
    next.t = st.t - 1;
  }
  return next;
}

Orbit orbit(const FamilyDescriptor& fam, const OrbitState& st0, long n) {
  if (n < 0) throw std::invalid_argument("orbit length must be >= 0");
  Orbit out;
  out.states.push_back(st0);
  for (long i = 0; i < n; ++i) {
    try {
      out.states.push_back(orbit_step(fam, out.states.back(), Direction::forward));
    } catch (const PoleError& e) {
      out.pole = e;
      break;
    }
  }
  return out;
}

}  // namespace qpweyl
