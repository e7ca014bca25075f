#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "qpweyl/evolution.hpp"
#include "qpweyl/families.hpp"
#include "qpweyl/laxgauge.hpp"
#include "qpweyl/normal_form.hpp"
#include "qpweyl/parse.hpp"

namespace qpweyl::cli {

namespace {

using Json = nlohmann::ordered_json;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string family = "D5";
  std::string word;
  bool word_set = false;
  std::string expr;
  int trials = 16;
  std::uint64_t prime = kMersenne61;
  std::uint64_t seed = 0;
  bool exact = false;
  std::string format = "text";
  std::string params;
  long steps = 0;
  std::string out;
  bool no_constraint = false;
  std::vector<std::string> overrides;
  std::string claim;
  std::string xi;
};

constexpr const char* kWordHelp =
    "Weyl word, e.g. \"pi2 pi1 s2 s1 s0 s2\". Letters are listed left to right but act right to left: "
    "the rightmost letter is applied to the argument first. (a b)^2 expands to a b a b.";

IdentityConfig identity_config(const Options& o) {
  IdentityConfig cfg;
  cfg.trials = o.trials;
  cfg.prime = o.prime;
  cfg.seed = o.seed;
  cfg.exact = o.exact;
  return cfg;
}

Symbol symbol_named(const std::string& name) {
  Symbol s;
  if (!find_symbol(name, s)) throw UsageError("unknown symbol '" + name + "'");
  return s;
}

// --override "s2:f=nu3*f" replaces one generator image.
void apply_override(FamilyDescriptor& fam, const std::string& spec) {
  auto colon = spec.find(':');
  auto eq = spec.find('=', colon == std::string::npos ? 0 : colon);
  if (colon == std::string::npos || eq == std::string::npos)
    throw UsageError("--override expects GENERATOR:SYMBOL=EXPR, got '" + spec + "'");
  std::string gen = spec.substr(0, colon);
  fam.override_image(gen, symbol_named(spec.substr(colon + 1, eq - colon - 1)), parse(spec.substr(eq + 1)));
}

FamilyDescriptor load_family(const Options& o) {
  FamilyDescriptor fam = make_family(o.family);
  if (o.no_constraint) fam.constraint.reset();
  for (const auto& spec : o.overrides) apply_override(fam, spec);
  if (o.word_set) fam.evolution_word = WeylWord::parse(o.word);
  if (!o.xi.empty()) fam.xi = parse_substitution(o.xi, "Xi");
  return fam;
}

std::string rational(const mpq_class& v) { return v.get_num().get_str() + "/" + v.get_den().get_str(); }

std::string latex_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '_': case '&': case '%': case '#': case '$': case '{': case '}':
        out += '\\';
        out += c;
        break;
      case '^': out += "\\^{}"; break;
      case '~': out += "\\~{}"; break;
      case '\\': out += "\\textbackslash{}"; break;
      default: out += c;
    }
  }
  return out;
}

std::string latex_generator(const std::string& name) {
  std::string head = name, index;
  while (!head.empty() && std::isdigit(static_cast<unsigned char>(head.back()))) {
    index.insert(index.begin(), head.back());
    head.pop_back();
  }
  if (head == "pi") head = "\\pi";
  return index.empty() ? head : head + "_{" + index + "}";
}

// ---------------------------------------------------------------- reports

Json witness_json(const Witness& w) {
  Json values = Json::object();
  for (const auto& [s, v] : w.values) values[s.name()] = v;
  return {{"prime", w.prime}, {"values", values}, {"lhs", w.lhs}, {"rhs", w.rhs}};
}

std::string witness_text(const Witness& w) {
  std::ostringstream os;
  os << "witness mod " << w.prime << ":";
  for (const auto& [s, v] : w.values) os << " " << s.name() << "=" << v;
  os << " (lhs " << w.lhs << ", rhs " << w.rhs << ")";
  return os.str();
}

struct Summary {
  std::size_t pass = 0, fail = 0, degenerate = 0;
  bool ok() const { return fail == 0 && degenerate == 0; }
};

Summary summarize(const std::vector<Report>& reports) {
  Summary s;
  for (const auto& r : reports) {
    s.pass += r.count(Status::pass);
    s.fail += r.count(Status::fail);
    s.degenerate += r.count(Status::degenerate);
  }
  return s;
}

Json config_json(const Options& o) {
  return {{"trials", o.trials}, {"prime", o.prime}, {"seed", o.seed}, {"exact", o.exact},
          {"constraint", !o.no_constraint}};
}

// Elapsed times stay out of the JSON so equal seeds give equal bytes.
void emit_reports(const std::string& command, const Options& o, const std::vector<Report>& reports,
                  std::ostream& out) {
  Summary sum = summarize(reports);
  if (o.format == "json") {
    Json doc = {{"schema", 1}, {"command", command}, {"family", make_family(o.family).name},
                {"config", config_json(o)}};
    Json rs = Json::array();
    for (const auto& r : reports) {
      Json checks = Json::array();
      for (const auto& c : r.checks) {
        Json j = {{"id", c.id}, {"status", to_string(c.status)}, {"verdict", to_string(c.verdict)}};
        if (!c.detail.empty()) j["detail"] = c.detail;
        if (c.witness) j["witness"] = witness_json(*c.witness);
        checks.push_back(std::move(j));
      }
      rs.push_back({{"title", r.title}, {"checks", std::move(checks)}});
    }
    doc["reports"] = std::move(rs);
    doc["summary"] = {{"pass", sum.pass}, {"fail", sum.fail}, {"degenerate", sum.degenerate}};
    out << doc.dump(2) << "\n";
    return;
  }
  if (o.format == "latex") {
    out << "\\begin{tabular}{lll}\n";
    for (const auto& r : reports)
      for (const auto& c : r.checks)
        out << "\\texttt{" << latex_escape(c.id) << "} & " << to_string(c.status) << " & "
            << latex_escape(c.detail) << " \\\\\n";
    out << "\\end{tabular}\n";
    return;
  }
  for (const auto& r : reports) {
    out << r.title << "\n";
    for (const auto& c : r.checks) {
      out << "  " << (c.pass() ? "PASS" : c.status == Status::fail ? "FAIL" : "DEGN") << "  " << c.id;
      if (!c.detail.empty()) out << "  [" << c.detail << "]";
      out << "\n";
      if (c.witness) out << "        " << witness_text(*c.witness) << "\n";
    }
  }
  out << "summary: " << sum.pass << " pass, " << sum.fail << " fail, " << sum.degenerate << " degenerate\n";
}

int finish(const std::string& command, const Options& o, const std::vector<Report>& reports, std::ostream& out) {
  emit_reports(command, o, reports, out);
  return summarize(reports).ok() ? kAllPass : kFailure;
}

// --------------------------------------------------------------- commands

int cmd_verify_relations(const Options& o, std::ostream& out) {
  FamilyDescriptor fam = load_family(o);
  return finish("verify-relations", o, {verify_relations(fam, identity_config(o))}, out);
}

int cmd_verify_theorem(const Options& o, std::ostream& out) {
  FamilyDescriptor fam = load_family(o);
  IdentityConfig cfg = identity_config(o);
  return finish("verify-theorem", o, {verify_theorem_i(fam, cfg), verify_theorem_ii(fam, cfg)}, out);
}

int cmd_verify_gauge(const Options& o, std::ostream& out) {
  FamilyDescriptor fam = load_family(o);
  IdentityConfig cfg = identity_config(o);
  Report r;
  if (o.claim.empty()) {
    r = verify_gauge_claims(fam, cfg);
  } else {
    r.title = fam.name + " gauge claim " + o.claim;
    r.checks.push_back(verify_gauge_claim(fam, o.claim, cfg));
  }
  return finish("verify-gauge", o, {r}, out);
}

int cmd_apply(const Options& o, std::ostream& out) {
  FamilyDescriptor fam = load_family(o);
  if (o.expr.empty()) throw UsageError("apply needs --expr");
  WeylWord w = WeylWord::parse(o.word);
  Expr image = simplify(substitute(parse(o.expr), word_to_transform(fam, w)));
  if (o.format == "json") {
    Json doc = {{"schema", 1},   {"command", "apply"},     {"family", fam.name},
                {"word", w.str()}, {"expr", print(parse(o.expr))}, {"image", print(image)},
                {"latex", print_latex(image)}};
    out << doc.dump(2) << "\n";
  } else if (o.format == "latex") {
    out << print_latex(image) << "\n";
  } else {
    out << print(image) << "\n";
  }
  return kAllPass;
}

int cmd_list(const Options& o, bool family_given, std::ostream& out) {
  if (!family_given) {
    Json fams = Json::array();
    for (const auto& name : family_names()) {
      FamilyDescriptor fam = make_family(name);
      Json gens = Json::array();
      for (const auto& g : fam.generators) gens.push_back(g.name);
      fams.push_back({{"name", name}, {"generators", gens}, {"evolution_word", fam.evolution_word.str()},
                      {"gauge_claims", gauge_claim_ids(fam)}});
    }
    if (o.format == "json") {
      out << Json{{"schema", 1}, {"families", fams}}.dump(2) << "\n";
      return kAllPass;
    }
    for (const auto& f : fams) {
      out << f["name"].get<std::string>() << "\n  generators:";
      for (const auto& g : f["generators"]) out << " " << g.get<std::string>();
      out << "\n  evolution word: " << f["evolution_word"].get<std::string>() << "\n  gauge claims:";
      for (const auto& c : f["gauge_claims"]) out << " " << c.get<std::string>();
      out << "\n";
    }
    return kAllPass;
  }

  FamilyDescriptor fam = load_family(o);
  std::vector<std::pair<std::string, const Transformation*>> tables;
  for (const auto& g : fam.generators) tables.emplace_back(g.name, &g.map);
  tables.emplace_back("Xi", &fam.xi);
  for (const auto& [word, t] : fam.composites) tables.emplace_back(word, &t);

  if (o.format == "json") {
    Json gens = Json::object();
    for (const auto& [name, t] : tables) {
      Json images = Json::object();
      for (Symbol s : t->moved_symbols()) images[s.name()] = print(t->image(s));
      gens[name] = std::move(images);
    }
    out << Json{{"schema", 1}, {"family", fam.name}, {"evolution_word", fam.evolution_word.str()}, {"tables", gens}}
               .dump(2)
        << "\n";
    return kAllPass;
  }
  for (const auto& [name, t] : tables) {
    if (o.format == "latex") {
      std::string head;
      if (name == "Xi") {
        head = "\\Xi";
      } else {
        WeylWord w = WeylWord::parse(name);
        for (const auto& letter : w.letters()) head += latex_generator(letter);
      }
      out << head << "\\colon";
      bool first = true;
      for (Symbol s : t->moved_symbols()) {
        out << (first ? "\\quad " : ",\\quad ") << print_latex(Expr::symbol(s)) << " \\mapsto "
            << print_latex(t->image(s));
        first = false;
      }
      out << "\n";
    } else {
      out << name << ":";
      bool first = true;
      for (Symbol s : t->moved_symbols()) {
        out << (first ? " " : "; ") << s.name() << " -> " << print(t->image(s));
        first = false;
      }
      out << "\n";
    }
  }
  return kAllPass;
}

// ------------------------------------------------------------------ orbits

mpq_class read_rational(const Json& v, const std::string& field) {
  std::string text;
  if (v.is_string()) {
    text = v.get<std::string>();
  } else if (v.is_number_integer()) {
    text = v.dump();
  } else {
    throw UsageError("params: '" + field + "' must be a rational string");
  }
  mpq_class out;
  if (text.empty() || out.set_str(text, 10) != 0) throw UsageError("params: bad rational '" + text + "' in " + field);
  if (out.get_den() == 0) throw UsageError("params: zero denominator in " + field);
  out.canonicalize();
  return out;
}

OrbitState read_params(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open params file '" + path + "'");
  Json doc;
  try {
    doc = Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw UsageError(std::string("params: ") + e.what());
  }
  auto need = [&](const char* key) -> const Json& {
    if (!doc.is_object() || !doc.contains(key)) throw UsageError(std::string("params: missing '") + key + "'");
    return doc[key];
  };
  OrbitState st;
  st.q = read_rational(need("q"), "q");
  const Json& nu = need("nu");
  if (!nu.is_array() || nu.size() < 7 || nu.size() > 8) throw UsageError("params: 'nu' needs 7 or 8 entries");
  for (int i = 0; i < 7; ++i) st.nu[i] = read_rational(nu[i], "nu" + std::to_string(i + 1));
  st.kappa1 = read_rational(need("kappa1"), "kappa1");
  st.kappa2 = read_rational(need("kappa2"), "kappa2");
  st.f = read_rational(need("f"), "f");
  st.g = read_rational(need("g"), "g");
  if (doc.contains("t")) {
    if (!doc["t"].is_number_integer()) throw UsageError("params: 't' must be an integer");
    st.t = doc["t"].get<long>();
  }
  if (st.q == 0 || st.q == 1) throw UsageError("params: q must differ from 0 and 1");
  try {
    st.solve_nu8();
  } catch (const std::domain_error&) {
    throw UsageError("params: q nu1 ... nu7 vanishes, nu8 is undetermined");
  }
  return st;
}

Json state_json(const OrbitState& st) {
  Json nu = Json::array();
  for (const auto& v : st.nu) nu.push_back(rational(v));
  return {{"t", st.t},
          {"q", rational(st.q)},
          {"nu", nu},
          {"kappa1", rational(st.kappa1)},
          {"kappa2", rational(st.kappa2)},
          {"f", rational(st.f)},
          {"g", rational(st.g)},
          {"constraint_residual", rational(st.constraint_residual())}};
}

int cmd_evolve(const Options& o, std::ostream& out, std::ostream& err) {
  if (o.params.empty()) throw UsageError("evolve needs --params");
  if (o.steps < 0) throw UsageError("--steps must be non-negative");
  FamilyDescriptor fam = load_family(o);
  OrbitState st0 = read_params(o.params);
  Orbit orb = orbit(fam, st0, o.steps);

  Json states = Json::array();
  for (const auto& s : orb.states) states.push_back(state_json(s));
  Json doc = {{"schema", 1}, {"family", fam.name}, {"steps", o.steps}, {"states", states}, {"pole", nullptr}};
  if (orb.pole)
    doc["pole"] = {{"step", orb.pole->step()}, {"stage", orb.pole->stage()},
                   {"denominator", print(orb.pole->denominator())}};

  if (!o.out.empty()) {
    std::ofstream file(o.out);
    if (!file) throw UsageError("cannot write '" + o.out + "'");
    file << doc.dump(2) << "\n";
  }
  const OrbitState& last = orb.states.back();
  if (o.format == "json") {
    out << (o.out.empty() ? doc : state_json(last)).dump(2) << "\n";
  } else {
    out << "t=" << last.t << " f=" << rational(last.f) << " g=" << rational(last.g)
        << " kappa1=" << rational(last.kappa1) << " kappa2=" << rational(last.kappa2) << "\n";
  }
  if (orb.pole) {
    err << "pole at step " << orb.pole->step() << " (" << orb.pole->stage() << "): "
        << print(orb.pole->denominator()) << " vanishes\n";
    return kFailure;
  }
  return kAllPass;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Symbolic checks of q-Painleve Weyl group actions, Lax gauges and time evolutions", "qpweyl"};
  app.require_subcommand(1);

  std::map<std::string, CLI::Option*> family_opts;
  auto common = [&](CLI::App* sub) {
    family_opts[sub->get_name()] = sub->add_option("--family", o.family, "D5, E6 or E7")->capture_default_str();
    sub->add_option("--trials", o.trials, "random evaluations per identity")->check(CLI::PositiveNumber);
    sub->add_option("--prime", o.prime, "prime modulus, > 2^60")->capture_default_str();
    sub->add_option("--seed", o.seed, "seed for the evaluation points")->capture_default_str();
    sub->add_flag("--exact", o.exact, "also try an exact normal-form proof");
    sub->add_option("--format", o.format, "text, json or latex")
        ->check(CLI::IsMember({"text", "json", "latex"}))
        ->capture_default_str();
    sub->add_flag("--no-constraint", o.no_constraint, "drop kappa1^2 kappa2^2 = q nu1 ... nu8");
    sub->add_option("--override", o.overrides, "replace a generator image, GENERATOR:SYMBOL=EXPR");
  };

  auto* rel = app.add_subcommand("verify-relations", "involutions, braid and pi relations, composite tables");
  common(rel);
  auto* thm = app.add_subcommand("verify-theorem", "T = Xi w^2 against the parameter shifts, relations and scalings");
  common(thm);
  thm->add_option("--word", o.word, kWordHelp);
  thm->add_option("--xi", o.xi, "replacement Xi, \"x -> expr; ...\"");
  auto* gauge = app.add_subcommand("verify-gauge", "gauge claims on the linear equation L1");
  common(gauge);
  gauge->add_option("--claim", o.claim, "single claim id, e.g. d5.s2");
  auto* apply = app.add_subcommand("apply", "image of an expression under a word");
  common(apply);
  apply->add_option("--word", o.word, kWordHelp);
  apply->add_option("--expr", o.expr, "expression, e.g. nu1 or kappa1/nu7")->required();
  auto* evolve = app.add_subcommand("evolve", "exact orbit of the nonlinear equation");
  common(evolve);
  evolve->add_option("--params", o.params, "JSON file with q, nu (7 or 8), kappa1, kappa2, f, g as rational strings")
      ->required();
  evolve->add_option("--steps", o.steps, "number of forward steps")->capture_default_str();
  evolve->add_option("--out", o.out, "write the orbit JSON here");
  auto* list = app.add_subcommand("list", "families, generator tables and claims");
  common(list);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kAllPass : kUsage;
  }
  o.word_set = thm->count("--word") > 0;

  try {
    if (o.prime <= (std::uint64_t{1} << 60) || !is_probable_prime(o.prime))
      throw UsageError("--prime must be a prime above 2^60");
    if (*rel) return cmd_verify_relations(o, out);
    if (*thm) return cmd_verify_theorem(o, out);
    if (*gauge) return cmd_verify_gauge(o, out);
    if (*apply) return cmd_apply(o, out);
    if (*evolve) return cmd_evolve(o, out, err);
    return cmd_list(o, family_opts["list"]->count() > 0, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
  } catch (const SyntaxError& e) {
    err << "syntax error: " << e.what() << "\n";
  } catch (const UnknownSymbol& e) {
    err << "error: " << e.what() << "\n";
  } catch (const UnknownClaim& e) {
    err << "error: " << e.what() << "\n";
  } catch (const std::invalid_argument& e) {
    // Unknown family or generator, malformed word or substitution.
    err << "error: " << e.what() << "\n";
  } catch (const DivisionByZero& e) {
    err << "error: " << print(e.subexpression()) << " is identically zero in a denominator\n";
  }
  return kUsage;
}

}  // namespace qpweyl::cli
