// Acceptance report: one PASS/FAIL line per criterion plus diagnostics.
// Exits 0 once every criterion has been evaluated; the verdicts are in the
// printed lines, not in the exit status.

#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>

#include "corrections.hpp"
#include "proof_fixtures.hpp"
#include "qpweyl/evolution.hpp"
#include "qpweyl/families.hpp"
#include "qpweyl/laxgauge.hpp"
#include "qpweyl/parse.hpp"

using namespace qpweyl;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

IdentityConfig config() {
  IdentityConfig cfg;
  cfg.trials = 16;
  cfg.prime = kMersenne61;
  cfg.seed = 20240601;
  return cfg;
}

struct Criterion {
  Criterion(int n, std::string t) : number(n), title(std::move(t)) {}

  int number;
  std::string title;
  bool pass = true;
  std::vector<std::string> notes;

  void note(const std::string& s) { notes.push_back(s); }
  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      note("failed: " + what);
    }
  }
};

void print(const Criterion& c) {
  std::cout << "CRITERION " << c.number << ": " << (c.pass ? "PASS" : "FAIL") << "  " << c.title << "\n";
  for (const auto& n : c.notes) std::cout << "    " << n << "\n";
  std::cout.flush();
}

std::string failing_ids(const Report& r) {
  std::string out;
  for (const auto& c : r.checks)
    if (!c.pass()) out += (out.empty() ? "" : ", ") + c.id + (c.detail.empty() ? "" : " [" + c.detail + "]");
  return out.empty() ? "none" : out;
}

std::string witness_text(const Witness& w) {
  std::ostringstream os;
  os << "mod " << w.prime << ":";
  for (const auto& [s, v] : w.values) os << " " << s.name() << "=" << v;
  return os.str();
}

std::string tally(const Report& r) {
  return std::to_string(r.count(Status::pass)) + "/" + std::to_string(r.checks.size()) + " pass";
}

// Proof fixtures as a report, ids "<F>/fixture/s^k(x)=expected".
Report fixture_report(const FamilyDescriptor& fam, const std::vector<fixtures::Fixture>& table, bool only_s,
                      const IdentityConfig& cfg) {
  Report r{fam.name + " proof fixtures", {}};
  Transformation s1 = word_to_transform(fam, fam.evolution_word);
  Transformation s2 = word_to_transform(fam, fam.evolution_word.power(2));
  for (const auto& fx : table) {
    if (only_s && fx.power != 1) continue;
    Symbol x;
    find_symbol(fx.symbol, x);
    const Transformation& s = fx.power == 1 ? s1 : s2;
    std::string id = fam.name + "/fixture/s" + (fx.power == 2 ? "^2" : "") + "(" + fx.symbol + ")=" + fx.expected;
    r.checks.push_back(make_record(id, identities_equal(s.image(x), parse(fx.expected), fam.constraint_ptr(), cfg)));
  }
  return r;
}

const std::vector<fixtures::Fixture>& fixture_table(const std::string& family) {
  return family == "D5" ? fixtures::kD5 : family == "E6" ? fixtures::kE6 : fixtures::kE7;
}

FamilyDescriptor corrected(const std::string& name) {
  auto fam = make_family(name);
  if (name == "E6") fam.xi = parse_substitution(corrections::kE6Xi, "Xi");
  if (name == "E7") fam.evolution_word = WeylWord::parse(corrections::kE7Word);
  return fam;
}

// ------------------------------------------------------------ criteria

Criterion relation_suites() {
  Criterion c(1, "relation suites (involutions, braid/commutation, pi relations)");
  auto t0 = Clock::now();
  const std::map<std::string, std::size_t> involutions{{"D5", 8}, {"E6", 9}, {"E7", 9}};
  for (const auto& name : family_names()) {
    auto fam = make_family(name);
    Report inv = verify_involutions(fam, config());
    Report braid = verify_braid(fam, config());
    Report pi = verify_pi_relations(fam, config());
    c.note(name + ": involutions " + tally(inv) + ", braid/commutation " + tally(braid) + ", pi " + tally(pi));
    c.require(inv.checks.size() == involutions.at(name), name + " involution count " + std::to_string(inv.checks.size()));
    for (const Report* r : {&inv, &braid, &pi}) c.require(r->all_pass(), failing_ids(*r));
    if (name != "D5") {
      for (const auto& [p, perm] : discover_pi_permutations(fam, config())) {
        std::string line = name + " " + p + " s_i -> s_j:";
        for (std::size_t i = 0; i < perm.size(); ++i) line += " " + std::to_string(i) + "->" + std::to_string(perm[i]);
        c.note(line);
      }
    }
  }
  double t = seconds_since(t0);
  c.note("elapsed " + std::to_string(t) + " s (limit 60 s)");
  c.require(t < 60, "runtime");
  return c;
}

Criterion proof_fixtures() {
  Criterion c(2, "proof fixtures reproduced by the evolution words");
  for (const auto& name : family_names()) {
    auto fam = make_family(name);
    Report r = fixture_report(fam, fixture_table(name), name == "E7", config());
    c.note(name + ": " + tally(r));
    c.require(r.all_pass(), failing_ids(r));
  }
  auto e7 = corrected("E7");
  Report fixed = fixture_report(e7, fixtures::kE7, false, config());
  c.note(std::string("diagnostic: E7 word ") + corrections::kE7Word + " gives " + tally(fixed) +
         " (s and s^2 values)");
  auto sg = identities_equal(fixtures::e7_sg_residual(word_to_transform(e7, e7.evolution_word)), Expr(),
                             e7.constraint_ptr(), config());
  c.note(std::string("diagnostic: with that word the s(g) relation is ") + to_string(sg.verdict));
  return c;
}

Criterion theorem_i() {
  Criterion c(3, "theorem (i): T = Xi s^2 fixes nu, shifts kappa, satisfies the nonlinear equations");
  for (const auto& name : family_names()) {
    Report r = verify_theorem_i(make_family(name), config());
    c.note(name + ": " + tally(r));
    c.require(r.all_pass(), failing_ids(r));
  }
  IdentityConfig exact = config();
  exact.exact = true;
  Report d5 = verify_theorem_i(make_family("D5"), exact);
  const CheckRecord* rel = d5.find("D5/T/relation1");
  bool proved = rel && rel->verdict == Verdict::exact_proved;
  c.note(std::string("D5 T(f) residual by normal form: ") + (rel ? to_string(rel->verdict) : "missing"));
  c.require(proved, "D5 T(f) residual not exact-proved");
  for (const char* name : {"E6", "E7"}) {
    Report r = verify_theorem_i(corrected(name), config());
    c.note(std::string("diagnostic: ") + name + (name == std::string("E6") ? " with the constraint-preserving Xi: "
                                                                           : " with the corrected word: ") +
           tally(r));
  }
  auto free = corrected("E7");
  free.constraint.reset();
  Report r = verify_theorem_i(free, config());
  c.note("diagnostic: E7 (corrected word) without the constraint: " + tally(r));
  return c;
}

Criterion theorem_ii() {
  Criterion c(4, "theorem (ii): Xi equals the stated scaling maps on the listed generators");
  for (const auto& name : family_names()) {
    Report r = verify_theorem_ii(make_family(name), config());
    c.note(name + ": " + tally(r));
    c.require(r.all_pass(), failing_ids(r));
  }
  auto check_scale = [&](const FamilyDescriptor& fam, const Transformation& scale) {
    Report r{"", {}};
    for (const Expr& zeta : theorem_ii_generators(fam))
      r.checks.push_back(make_record(print(zeta), identities_equal(substitute(zeta, make_xi(fam)),
                                                                    substitute(zeta, scale), fam.constraint_ptr(),
                                                                    config())));
    return r;
  };
  auto d5 = make_family("D5");
  Transformation d5_scale = compose(specialize(scaling_G(), sym::s, parse("kappa2/(nu5*nu6)")),
                                    specialize(scaling_D(), sym::c, parse(corrections::kD5DScale)));
  c.note(std::string("diagnostic: D5 with D[") + corrections::kD5DScale + "]: " + tally(check_scale(d5, d5_scale)));
  auto e6 = corrected("E6");
  c.note(std::string("diagnostic: E6 constraint-preserving Xi against S_E6[") + corrections::kE6Scale +
         "]: " + tally(check_scale(e6, specialize(scaling_SE6(), sym::c, parse(corrections::kE6Scale)))));
  for (const auto& name : family_names())
    c.note("diagnostic: " + name + " Xi preserves the constraint: " +
           to_string(check_xi_constraint(make_family(name), config()).status));
  return c;
}

Criterion gauge_claims() {
  Criterion c(5, "gauge claims on L1");
  std::size_t total = 0;
  for (const auto& name : family_names()) {
    auto fam = make_family(name);
    Report r = verify_gauge_claims(fam, config());
    total += r.checks.size();
    c.note(name + ": " + tally(r));
    c.require(r.all_pass(), failing_ids(r));
  }
  c.require(total == 9, "claim count " + std::to_string(total));

  auto d5 = make_family("D5");
  LinearQDE l1 = build_L1(d5);
  GaugeClaim dbl = gauge_claim(d5, "d5.s2s1s0s2");
  LinearQDE both = apply_gauge(l1, dbl.chain.at(0));
  LinearQDE seq = apply_gauge(apply_gauge(l1, GaugeSpec::pochhammer(parse("nu3"), parse("kappa1/nu7"))),
                              GaugeSpec::pochhammer(parse("nu4"), parse("kappa1/nu8")));
  Equivalence e = equations_equivalent(both, seq, d5.constraint_ptr(), config());
  c.note(std::string("double Pochhammer gauge against two single gauges: ") + to_string(e.result.verdict));
  c.require(e.result.holds(), "double gauge differs from the two single gauges");

  auto e7 = make_family("E7");
  LinearQDE l7 = build_L1(e7);
  LinearQDE g7 = apply_gauge(apply_gauge(l7, GaugeSpec::pochhammer(parse("nu1"), parse("kappa1/nu5"))),
                             GaugeSpec::power(parse(corrections::kE7GaugeDelta)));
  auto fixed = equations_equivalent(g7, substitute_params(l7, word_to_transform(e7, WeylWord::parse("s0 s4 s0"))),
                                    e7.constraint_ptr(), config());
  c.note(std::string("diagnostic: e7.s0s4s0 with an extra power gauge q^d = ") + corrections::kE7GaugeDelta + ": " +
         to_string(fixed.result.verdict));

  Transformation literal = specialize(scaling_G(), sym::s, Expr::symbol(sym::delta));
  literal.set(sym::nu6, parse("delta*nu5"));
  auto lit = equations_equivalent(apply_gauge(l1, GaugeSpec::power(Expr::symbol(sym::delta))),
                                  substitute_params(l1, literal), d5.constraint_ptr(), config());
  c.note(std::string("diagnostic: d5.G under the literal reading nu6 -> s nu5: ") + to_string(lit.result.verdict));
  return c;
}

Criterion constraint_discovery() {
  Criterion c(6, "default constraint kappa1^2 kappa2^2 = q nu1...nu8 against the dual expressions");
  for (const auto& name : family_names()) {
    Report r = verify_constraint_claims(make_family(name), config());
    for (const auto& rec : r.checks) {
      std::string line = rec.id + ": " + to_string(rec.verdict);
      if (rec.witness) line += ", witness " + witness_text(*rec.witness);
      c.note(line);
      // Either outcome is a result; a failure has to come with a witness.
      c.require(rec.pass() || rec.witness.has_value(), rec.id + " failed without a witness");
    }
  }
  auto e7 = corrected("E7");
  Report fixed = verify_constraint_claims(e7, config());
  c.note(std::string("E7 with the corrected word: ") + tally(fixed) +
         ", so the default constraint suffices for s(kappa2) = q kappa2^2/kappa1");
  auto d5 = make_family("D5");
  d5.constraint.reset();
  c.note("D5 without any constraint: " + failing_ids(verify_constraint_claims(d5, config())) + " fail");
  return c;
}

OrbitState random_state(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num(1, 12), sign(0, 1);
  auto r = [&] {
    mpq_class v(num(rng), num(rng));
    v.canonicalize();
    return sign(rng) ? v : mpq_class(-v);
  };
  OrbitState st;
  do {
    st.q = mpq_class(num(rng), num(rng));
    st.q.canonicalize();
  } while (st.q == 1);
  for (int i = 0; i < 7; ++i) st.nu[i] = r();
  st.kappa1 = r();
  st.kappa2 = r();
  st.f = r();
  st.g = r();
  st.solve_nu8();
  return st;
}

Criterion orbit_cross_check() {
  Criterion c(7, "D5 orbits against the symbolic T, 10 states x 20 steps");
  auto t0 = Clock::now();
  auto fam = make_family("D5");
  Transformation t = time_evolution(fam);
  std::mt19937_64 rng(7);
  int states = 0, compared = 0, mismatches = 0, skipped = 0, back_ok = 0;
  while (states < 10) {
    OrbitState st = random_state(rng);
    Orbit o = orbit(fam, st, 20);
    if (o.pole) {
      ++skipped;
      continue;
    }
    ++states;
    for (std::size_t i = 0; i + 1 < o.states.size(); ++i) {
      auto v = o.states[i].valuation();
      ++compared;
      mismatches += evaluate(t.image(sym::f), v) != o.states[i + 1].f;
      mismatches += evaluate(t.image(sym::g), v) != o.states[i + 1].g;
      mismatches += o.states[i + 1].constraint_residual() != 0;
    }
    OrbitState back = o.states.back();
    for (int i = 0; i < 20; ++i) back = orbit_step(fam, back, Direction::backward);
    back_ok += back == st;
  }
  double secs = seconds_since(t0);
  c.note(std::to_string(compared) + " steps compared, " + std::to_string(mismatches) + " mismatches, " +
         std::to_string(back_ok) + "/10 backward orbits exact, " + std::to_string(skipped) +
         " sampled states hit a pole and were redrawn");
  c.note("elapsed " + std::to_string(secs) + " s (limit 30 s)");
  c.require(compared == 200 && mismatches == 0, "forward agreement");
  c.require(back_ok == 10, "backward iteration");
  c.require(secs < 30, "runtime");
  return c;
}

struct Mutation {
  const char* family;
  const char* generator;
  const char* symbol;
  const char* image;
};

const std::vector<Mutation> kMutations = {
    {"D5", "s2", "g", "g*(f - nu4)/(f - kappa1/nu7)"},
    {"D5", "s3", "f", "f*(g - 1/nu2)/(g - nu5/kappa2)"},
    {"D5", "pi1", "f", "f/kappa2"},
    {"D5", "s0", "nu8", "nu8"},
    {"D5", "s4", "nu2", "q*nu1"},
    {"E6", "s6", "g", "g*nu7*(nu2 - f)/(kappa1 - nu7*f + (nu1*nu7 - kappa1)*f*g)"},
    {"E6", "s2", "nu6", "kappa2/nu5"},
    {"E6", "pi2", "f", "1/g"},
    {"E6", "pi1", "g", "kappa1*g"},
    {"E7", "s0", "f", "1/(q*g)"},
    {"E7", "s4", "nu5", "kappa1/nu1"},
    {"E7", "pi", "g", "kappa1*g"},
    {"E7", "s7", "nu8", "nu6"},
};

// Suites 1-5 as one report.
Report all_suites(const FamilyDescriptor& fam) {
  IdentityConfig cfg = config();
  Report r{fam.name, {}};
  r.append(verify_involutions(fam, cfg));
  r.append(verify_braid(fam, cfg));
  r.append(verify_pi_relations(fam, cfg));
  r.append(fixture_report(fam, fixture_table(fam.name), fam.name == "E7", cfg));
  r.append(verify_theorem_i(fam, cfg));
  r.append(verify_theorem_ii(fam, cfg));
  r.append(verify_gauge_claims(fam, cfg));
  return r;
}

Criterion mutation_sensitivity() {
  Criterion c(8, "single corrupted generator images are caught with a witness");
  std::map<std::string, std::set<std::string>> baseline;
  for (const auto& name : family_names()) {
    Report r = all_suites(make_family(name));
    for (const auto& rec : r.checks)
      if (rec.pass()) baseline[name].insert(rec.id);
  }
  int detected = 0;
  for (const auto& m : kMutations) {
    auto fam = make_family(m.family);
    Symbol x;
    find_symbol(m.symbol, x);
    fam.override_image(m.generator, x, parse(m.image));
    Report r = all_suites(fam);
    const CheckRecord* caught = nullptr;
    int newly_failing = 0;
    for (const auto& rec : r.checks)
      if (!rec.pass() && rec.witness && baseline[m.family].count(rec.id)) {
        ++newly_failing;
        if (!caught) caught = &rec;
      }
    std::string line = std::string(m.family) + " " + m.generator + ": " + m.symbol + " -> " + m.image + "  ";
    if (caught) {
      ++detected;
      line += "caught, " + std::to_string(newly_failing) + " failing, first " + caught->id;
    } else {
      line += "NOT caught";
    }
    c.note(line);
  }
  c.note(std::to_string(detected) + "/" + std::to_string(kMutations.size()) + " mutations detected");
  c.require(kMutations.size() >= 10 && detected == static_cast<int>(kMutations.size()), "undetected mutation");
  return c;
}

}  // namespace

int main() {
  std::vector<std::function<Criterion()>> criteria{relation_suites,  proof_fixtures,         theorem_i,
                                                   theorem_ii,       gauge_claims,           constraint_discovery,
                                                   orbit_cross_check, mutation_sensitivity};
  int passed = 0;
  for (auto& run : criteria) {
    Criterion c = run();
    passed += c.pass;
    print(c);
  }
  std::cout << "SUMMARY: " << passed << "/" << criteria.size() << " criteria pass\n";
  return 0;
}
