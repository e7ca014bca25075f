#include <doctest.h>

#include "qpweyl/expr.hpp"
#include "qpweyl/field.hpp"
#include "qpweyl/identity.hpp"
#include "qpweyl/normal_form.hpp"
#include "qpweyl/parse.hpp"
#include "qpweyl/transform.hpp"

using namespace qpweyl;

TEST_CASE("hash consing gives pointer equality") {
  Expr a = parse("nu1*(f - kappa1/nu7)");
  Expr b = parse("nu1 * (f-kappa1/nu7)");
  CHECK(a == b);
  CHECK(a.id() == b.id());
}

TEST_CASE("constant folding") {
  CHECK(parse("2/4") == Expr::constant(mpq_class(1, 2)));
  CHECK(parse("0*f").is_zero());
  CHECK(parse("f/1") == parse("f"));
  CHECK(parse("(f^2)^3") == parse("f^6"));
  CHECK_THROWS_AS(parse("f/0"), SyntaxError);
  CHECK_THROWS_AS(div(parse("f"), Expr()), ZeroDenominator);
}

TEST_CASE("parser errors carry offsets") {
  try {
    parse("f + * g");
    FAIL("expected syntax error");
  } catch (const SyntaxError& e) {
    CHECK(e.offset() == 4);
  }
  try {
    parse("f + bogus");
    FAIL("expected unknown symbol");
  } catch (const UnknownSymbol& e) {
    CHECK(e.name() == "bogus");
    CHECK(e.offset() == 4);
  }
}

TEST_CASE("print round trips") {
  for (const char* s : {"nu1", "-f", "f - g", "1/(f - z)", "-(f/g)", "f^-2", "(f + 1)^3", "-1/2*nu3",
                        "kappa1/(q*nu7*nu8)", "(f - g)/(f + g) - 3", "-(1 - f)*g", "q^2/(nu1^-1 + 1)"}) {
    Expr e = parse(s);
    CAPTURE(s);
    CAPTURE(print(e));
    CHECK(parse(print(e)) == e);
  }
}

TEST_CASE("latex printing") {
  CHECK(print_latex(parse("nu3")) == "\\nu_{3}");
  CHECK(print_latex(parse("kappa1/nu7")).find("\\frac{\\kappa_{1}}{\\nu_{7}}") != std::string::npos);
}

TEST_CASE("modular and rational evaluation agree") {
  Expr e = parse("(f - kappa1/nu7)*(f - nu3)/(q*g)");
  Valuation<RationalField> vr{RationalField{}};
  ModularField F(kMersenne61);
  Valuation<ModularField> vm{F};
  long vals[] = {2, 3, 5, 7, 11, 13};
  Symbol syms[] = {sym::f, sym::kappa1, sym::nu7, sym::nu3, sym::q, sym::g};
  for (int i = 0; i < 6; ++i) {
    vr.set(syms[i], vals[i]);
    vm.set(syms[i], static_cast<std::uint64_t>(vals[i]));
  }
  mpq_class exact = evaluate(e, vr);
  CHECK(F.from_rational(exact) == evaluate(e, vm));
}

TEST_CASE("division by zero reports the denominator") {
  Expr e = parse("1/(f - g)");
  Valuation<RationalField> v{RationalField{}};
  v.set(sym::f, 3);
  v.set(sym::g, 3);
  try {
    evaluate(e, v);
    FAIL("expected DivisionByZero");
  } catch (const DivisionByZero& d) {
    CHECK(d.subexpression() == parse("f - g"));
  }
}

TEST_CASE("substitution and composition order") {
  Transformation a("a"), b("b");
  a.set(sym::f, parse("f + 1"));
  b.set(sym::f, parse("2*f"));
  // (a o b)(f) = b(f) with a substituted in: 2*(f + 1)
  Transformation ab = compose(a, b);
  CHECK(simplify(ab.image(sym::f)) == simplify(parse("2*f + 2")));
}

TEST_CASE("normal form decides rational identities") {
  auto nf_zero = [](const char* s) {
    auto r = normalize(parse(s));
    REQUIRE(r.has_value());
    return r->is_zero();
  };
  CHECK(nf_zero("(f^2 - g^2)/(f - g) - f - g"));
  CHECK(nf_zero("1/(f - 1) - 1/(f + 1) - 2/(f^2 - 1)"));
  CHECK(nf_zero("nu1/nu1 - 1"));
  CHECK_FALSE(nf_zero("(f + 1)^2 - f^2 - 1"));
  CHECK(simplify(parse("(f*g - f)/(g - 1)")) == parse("f"));
}

TEST_CASE("identity testing") {
  IdentityConfig cfg;
  auto r = identities_equal(parse("(f+g)^2"), parse("f^2 + 2*f*g + g^2"), nullptr, cfg);
  CHECK(r.verdict == Verdict::equal);
  cfg.exact = true;
  r = identities_equal(parse("(f+g)^2"), parse("f^2 + 2*f*g + g^2"), nullptr, cfg);
  CHECK(r.verdict == Verdict::exact_proved);
  r = identities_equal(parse("(f+g)^2"), parse("f^2 + g^2"), nullptr, cfg);
  REQUIRE(r.verdict == Verdict::unequal);
  REQUIRE(r.witness);
  CHECK(r.witness->lhs != r.witness->rhs);
  // reproducibility
  auto r2 = identities_equal(parse("(f+g)^2"), parse("f^2 + g^2"), nullptr, cfg);
  CHECK(r2.witness->values == r.witness->values);
}

TEST_CASE("constraint elimination") {
  auto k = ConstraintRelation::default_relation();
  IdentityConfig cfg;
  cfg.exact = true;
  auto r = identities_equal(parse("q*nu1*nu2*nu3*nu4*nu5*nu6*nu7*nu8"), parse("kappa1^2*kappa2^2"), &k, cfg);
  CHECK(r.verdict == Verdict::exact_proved);
  r = identities_equal(parse("q*nu1*nu2*nu3*nu4*nu5*nu6*nu7*nu8"), parse("kappa1^2*kappa2^2"), nullptr, cfg);
  CHECK(r.verdict == Verdict::unequal);
  CHECK_THROWS_AS(ConstraintRelation(sym::nu8, parse("nu8 + 1")), std::invalid_argument);
}

TEST_CASE("degenerate comparisons") {
  IdentityConfig cfg;
  cfg.trials = 2;
  // f + (-1)*f is not folded structurally but vanishes at every point
  auto r2 = identities_equal(parse("1/(f + (-1)*f)"), parse("g"), nullptr, cfg);
  CHECK(r2.verdict == Verdict::degenerate);
}
