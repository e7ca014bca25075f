#include "qpweyl/laxgauge.hpp"

#include <algorithm>
#include <chrono>

#include "qpweyl/parse.hpp"

namespace qpweyl {

namespace {

Symbol other_shift(Symbol s) { return s == sym::z ? sym::u : sym::z; }

bool mentions_shift(const Expr& e) { return contains_symbol(e, sym::z) || contains_symbol(e, sym::u); }

void require_shift_free(const Expr& e, const char* what) {
  if (mentions_shift(e)) throw std::invalid_argument(std::string("gauge parameter ") + what + " mentions z or u");
}

Expr substitute_one(const Expr& e, Symbol x, const Expr& image) {
  Transformation t;
  t.set(x, image);
  return substitute(e, t);
}

LinearQDE map_coefficients(const LinearQDE& eq, const Transformation& t) {
  return {substitute(eq.up, t), substitute(eq.mid, t), substitute(eq.down, t), eq.shift};
}

Expr x_minus(Symbol x, const Expr& a) { return Expr::symbol(x) - a; }

}  // namespace

GaugeSpec GaugeSpec::pochhammer(Expr a, Expr b) { return pochhammer({{std::move(a), std::move(b)}}); }

GaugeSpec GaugeSpec::pochhammer(std::vector<std::pair<Expr, Expr>> pairs) {
  GaugeSpec g;
  g.kind = Kind::pochhammer;
  g.pairs = std::move(pairs);
  return g;
}

GaugeSpec GaugeSpec::power(Expr delta) {
  GaugeSpec g;
  g.kind = Kind::power;
  g.delta = std::move(delta);
  return g;
}

GaugeSpec GaugeSpec::dilation(Expr c) {
  GaugeSpec g;
  g.kind = Kind::dilation;
  g.c = std::move(c);
  return g;
}

GaugeSpec GaugeSpec::inversion(Expr c, Expr delta) {
  GaugeSpec g;
  g.kind = Kind::inversion;
  g.c = std::move(c);
  g.delta = std::move(delta);
  return g;
}

std::string GaugeSpec::str() const {
  switch (kind) {
    case Kind::pochhammer: {
      std::string out = "pochhammer(";
      for (std::size_t i = 0; i < pairs.size(); ++i) {
        if (i) out += "; ";
        out += print(pairs[i].first) + ", " + print(pairs[i].second);
      }
      return out + ")";
    }
    case Kind::power:
      return "power(" + print(delta) + ")";
    case Kind::dilation:
      return "dilation(" + print(c) + ")";
    case Kind::inversion:
      return "inversion(" + print(c) + ", " + print(delta) + ")";
  }
  return "?";
}

LinearQDE build_L1(const FamilyDescriptor& fam) {
  LinearQDE eq;
  eq.shift = sym::z;
  if (fam.name == "D5") {
    Expr down = parse("nu1*nu2*(z - q*nu3)*(z - q*nu4)/(q*(q*f - z))");
    Expr up = parse("(z - kappa1/nu7)*(z - kappa1/nu8)/(q*(f - z))");
    Expr head = parse("z*(g*nu1 - 1)*(g*nu2 - 1)/(q*g) - nu1*nu2*nu3*nu4*(g - nu5/kappa2)*(g - nu6/kappa2)/(f*g)");
    eq.mid = head + down * parse("g") + up / parse("g");
    eq.down = -down;
    eq.up = -up;
  } else if (fam.name == "E6") {
    Expr p = parse("(nu1 - z/q)*(nu2 - z/q)*(nu3 - z/q)*(nu4 - z/q)/(f - z/q)");
    Expr r = parse("(kappa1/nu7 - z)*(kappa1/nu8 - z)/(q*(f - z))");
    Expr head = parse(
        "z*(g*nu1 - 1)*(g*nu2 - 1)*(g*nu3 - 1)*(g*nu4 - 1)/(g*(f*g - 1)*(g*z - q))"
        " - (g*kappa2/nu5 - 1)*(g*kappa2/nu6 - 1)*kappa1^2/(q*f*g*nu7*nu8)");
    eq.mid = head + p * parse("g/(1 - g*z/q)") + r * parse("1/g - z");
    eq.down = -p;
    eq.up = -r;
  } else {
    Expr down = parse("(q*nu1 - z)*(q*nu2 - z)*(q*nu3 - z)*(q*nu4 - z)/(q*nu1*nu2*nu3*nu4*(f*q - z)*z^2)");
    Expr up = parse("q*(kappa1 - nu5*z)*(kappa1 - nu6*z)*(kappa1 - nu7*z)*(kappa1 - nu8*z)/(kappa1^4*(f - z)*z^2)");
    Expr head = parse(
        "q*(kappa1 - kappa2)*(g*kappa2 - nu5)*(g*kappa2 - nu6)*(g*kappa2 - nu7)*(g*kappa2 - nu8)"
        "/(g*kappa1*kappa2^2*(f*g*kappa2 - kappa1)*(g*kappa2*z - kappa1))"
        " - q*(kappa1 - kappa2)*(g*nu1 - 1)*(g*nu2 - 1)*(g*nu3 - 1)*(g*nu4 - 1)"
        "/(g*(f*g - 1)*kappa1*nu1*nu2*nu3*nu4*(g*z - q))");
    eq.mid = head + down * parse("(g*kappa2*z - kappa1*q)/(kappa1*(q - g*z))") +
             up * parse("kappa1*(1 - g*z)/(g*kappa2*z - kappa1)");
    eq.down = down;
    eq.up = up;
  }
  return eq;
}

LinearQDE apply_gauge(const LinearQDE& eq, const GaugeSpec& g) {
  const Symbol x = eq.shift;
  const Expr q = Expr::symbol(sym::q);
  LinearQDE out = eq;
  switch (g.kind) {
    case GaugeSpec::Kind::pochhammer:
      // y(qx)/y(x) picks up (x - a)/(x - b), y(x/q)/y(x) picks up (x - qb)/(x - qa).
      for (const auto& [a, b] : g.pairs) {
        require_shift_free(a, "a");
        require_shift_free(b, "b");
        out.up = out.up * x_minus(x, a) / x_minus(x, b);
        out.down = out.down * x_minus(x, q * b) / x_minus(x, q * a);
      }
      return out;
    case GaugeSpec::Kind::power:
      require_shift_free(g.delta, "delta");
      out.up = eq.up * g.delta;
      out.down = eq.down / g.delta;
      return out;
    case GaugeSpec::Kind::dilation: {
      require_shift_free(g.c, "c");
      Symbol y = other_shift(x);
      Transformation t;
      t.set(x, Expr::symbol(y) / g.c);
      out = map_coefficients(eq, t);
      out.shift = y;
      return out;
    }
    case GaugeSpec::Kind::inversion: {
      require_shift_free(g.c, "c");
      require_shift_free(g.delta, "delta");
      Symbol y = other_shift(x);
      Transformation t;
      t.set(x, g.c / Expr::symbol(y));
      LinearQDE m = map_coefficients(eq, t);
      // y(qx) becomes delta * y~(u/q) and y(x/q) becomes y~(qu)/delta.
      out.up = m.down / g.delta;
      out.down = m.up * g.delta;
      out.mid = m.mid;
      out.shift = y;
      return out;
    }
  }
  return out;
}

LinearQDE substitute_params(const LinearQDE& eq, const Transformation& t) {
  if (t.moves(eq.shift))
    throw std::invalid_argument("parameter map moves the shift variable " + eq.shift.name());
  return map_coefficients(eq, t);
}

LinearQDE rename_shift(const LinearQDE& eq, Symbol to) {
  if (to == eq.shift) return eq;
  Transformation t;
  t.set(eq.shift, Expr::symbol(to));
  LinearQDE out = map_coefficients(eq, t);
  out.shift = to;
  return out;
}

Equivalence equations_equivalent(const LinearQDE& a, const LinearQDE& b, const ConstraintRelation* k,
                                 const IdentityConfig& cfg) {
  if (a.shift != b.shift) throw std::invalid_argument("equations use different shift variables");
  using Part = Expr LinearQDE::*;
  struct Named {
    const char* name;
    Part part;
  };
  const Named parts[] = {{"mid", &LinearQDE::mid}, {"up", &LinearQDE::up}, {"down", &LinearQDE::down}};
  const Expr zero;

  Equivalence out;
  for (const auto& pivot : parts) {
    IdentityResult za = identities_equal(a.*pivot.part, zero, k, cfg);
    IdentityResult zb = identities_equal(b.*pivot.part, zero, k, cfg);
    if (za.verdict == Verdict::degenerate || zb.verdict == Verdict::degenerate) {
      out.result = za.verdict == Verdict::degenerate ? za : zb;
      out.pivot = pivot.name;
      return out;
    }
    bool a_zero = za.holds(), b_zero = zb.holds();
    if (a_zero && b_zero) continue;
    out.pivot = pivot.name;
    if (a_zero != b_zero) {
      // One equation lacks a term the other has.
      out.result = a_zero ? zb : za;
      out.failed = pivot.name;
      return out;
    }
    bool exact = cfg.exact;
    for (const auto& other : parts) {
      if (other.part == pivot.part) continue;
      IdentityResult r = identities_equal(a.*other.part * b.*pivot.part, b.*other.part * a.*pivot.part, k, cfg);
      if (!r.holds()) {
        out.result = std::move(r);
        out.failed = other.name;
        return out;
      }
      exact = exact && r.verdict == Verdict::exact_proved;
    }
    out.result.verdict = exact ? Verdict::exact_proved : Verdict::equal;
    return out;
  }
  out.result.verdict = Verdict::degenerate;
  out.result.note = "all three coefficients vanish identically";
  return out;
}

Transformation scaling_G() { return parse_substitution("nu1 -> nu1/s; nu2 -> nu2/s; nu5 -> s*nu5; nu6 -> s*nu6; g -> s*g", "G"); }

Transformation scaling_D() { return parse_substitution("nu3 -> c*nu3; nu4 -> c*nu4; kappa1 -> c*kappa1; f -> c*f", "D"); }

Transformation scaling_SE6() {
  return parse_substitution(
      "nu1 -> c*nu1; nu2 -> c*nu2; nu3 -> c*nu3; nu4 -> c*nu4; kappa1 -> c*kappa1; kappa2 -> c*kappa2;"
      "f -> c*f; g -> g/c",
      "S_E6");
}

Transformation scaling_SE7() {
  Transformation t = scaling_SE6();
  t.set_label("S_E7");
  return t;
}

Transformation specialize(const Transformation& t, Symbol scale, const Expr& value) {
  Transformation out(t.label());
  for (Symbol x : t.moved_symbols()) out.set(x, substitute_one(t.image(x), scale, value));
  return out;
}

const std::vector<std::string>& gauge_claim_ids() {
  static const std::vector<std::string> ids = {"d5.s2", "d5.s2s1s0s2", "d5.G",   "d5.D",     "d5.inversion",
                                               "e6.s6", "e6.S",        "e7.s0s4s0", "e7.S"};
  return ids;
}

std::vector<std::string> gauge_claim_ids(const FamilyDescriptor& fam) {
  std::string prefix = fam.name;
  std::transform(prefix.begin(), prefix.end(), prefix.begin(), [](unsigned char ch) { return std::tolower(ch); });
  prefix += ".";
  std::vector<std::string> out;
  for (const auto& id : gauge_claim_ids())
    if (id.starts_with(prefix)) out.push_back(id);
  return out;
}

GaugeClaim gauge_claim(const FamilyDescriptor& fam, std::string_view id) {
  auto ids = gauge_claim_ids(fam);
  if (std::find(ids.begin(), ids.end(), id) == ids.end()) throw UnknownClaim(std::string(id));

  GaugeClaim claim;
  claim.id = std::string(id);
  claim.family = fam.name;
  auto word = [&](const char* w) { return word_to_transform(fam, WeylWord::parse(w)); };
  const Expr c = Expr::symbol(sym::c);
  const Expr delta = Expr::symbol(sym::delta);

  if (id == "d5.s2") {
    claim.chain = {GaugeSpec::pochhammer(parse("nu3"), parse("kappa1/nu7"))};
    claim.target = word("s2");
  } else if (id == "d5.s2s1s0s2") {
    claim.chain = {GaugeSpec::pochhammer({{parse("nu3"), parse("kappa1/nu7")}, {parse("nu4"), parse("kappa1/nu8")}})};
    claim.target = word("s2 s1 s0 s2");
  } else if (id == "d5.G") {
    claim.chain = {GaugeSpec::power(delta)};
    claim.target = specialize(scaling_G(), sym::s, delta);
  } else if (id == "d5.D") {
    claim.chain = {GaugeSpec::dilation(c)};
    claim.target = scaling_D();
  } else if (id == "d5.inversion") {
    claim.chain = {GaugeSpec::inversion(parse("q*kappa1"), parse("kappa2"))};
    claim.target = word("pi2 pi1 pi2 pi1");
  } else if (id == "e6.s6") {
    claim.chain = {GaugeSpec::pochhammer(parse("nu1"), parse("kappa1/nu7"))};
    claim.target = word("s6");
  } else if (id == "e6.S") {
    // y(z) = z^d y~(cz) with c q^d = 1.
    claim.chain = {GaugeSpec::power(Expr::integer(1) / c), GaugeSpec::dilation(c)};
    claim.target = scaling_SE6();
  } else if (id == "e7.s0s4s0") {
    claim.chain = {GaugeSpec::pochhammer(parse("nu1"), parse("kappa1/nu5"))};
    claim.target = word("s0 s4 s0");
  } else {
    claim.chain = {GaugeSpec::dilation(c)};
    claim.target = scaling_SE7();
  }
  return claim;
}

CheckRecord verify_gauge_claim(const FamilyDescriptor& fam, std::string_view id, const IdentityConfig& cfg) {
  auto t0 = std::chrono::steady_clock::now();
  GaugeClaim claim = gauge_claim(fam, id);
  LinearQDE l1 = build_L1(fam);
  LinearQDE gauged = l1;
  for (const auto& g : claim.chain) gauged = apply_gauge(gauged, g);
  gauged = rename_shift(gauged, l1.shift);
  LinearQDE target = substitute_params(l1, claim.target);
  Equivalence e = equations_equivalent(gauged, target, fam.constraint_ptr(), cfg);
  double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  CheckRecord rec = make_record(claim.id, e.result, ms);
  std::string detail = "pivot " + e.pivot;
  if (!e.failed.empty()) detail += ", " + e.failed + " coefficient differs";
  if (!rec.detail.empty()) detail += "; " + rec.detail;
  rec.detail = detail;
  return rec;
}

Report verify_gauge_claims(const FamilyDescriptor& fam, const IdentityConfig& cfg) {
  Report r{fam.name + " gauge claims", {}};
  for (const auto& id : gauge_claim_ids(fam)) r.checks.push_back(verify_gauge_claim(fam, id, cfg));
  return r;
}

}  // namespace qpweyl
