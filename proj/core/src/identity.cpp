#include "qpweyl/identity.hpp"

#include <algorithm>
#include <random>

#include "qpweyl/normal_form.hpp"
#include "qpweyl/parse.hpp"

namespace qpweyl {

ConstraintRelation::ConstraintRelation(Symbol eliminated, Expr replacement)
    : eliminated_(eliminated), replacement_(std::move(replacement)) {
  if (contains_symbol(replacement_, eliminated_))
    throw std::invalid_argument("constraint replacement mentions the eliminated symbol " + eliminated_.name());
}

ConstraintRelation ConstraintRelation::default_relation() {
  return ConstraintRelation(sym::nu8, parse("kappa1^2*kappa2^2/(q*nu1*nu2*nu3*nu4*nu5*nu6*nu7)"));
}

Expr ConstraintRelation::eliminate(const Expr& e) const {
  Transformation t("constraint");
  t.set(eliminated_, replacement_);
  return substitute(e, t);
}

Expr ConstraintRelation::residual() const {
  static const Expr default_replacement = default_relation().replacement_;
  if (eliminated_ == sym::nu8 && replacement_ == default_replacement)
    return parse("kappa1^2*kappa2^2 - q*nu1*nu2*nu3*nu4*nu5*nu6*nu7*nu8");
  return Expr::symbol(eliminated_) - replacement_;
}

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::equal:
      return "equal";
    case Verdict::unequal:
      return "unequal";
    case Verdict::exact_proved:
      return "exact-proved";
    case Verdict::degenerate:
      return "degenerate";
  }
  return "?";
}

Valuation<ModularField> Witness::valuation() const {
  Valuation<ModularField> v{ModularField(prime)};
  for (const auto& [s, x] : values) v.set(s, x);
  return v;
}

Valuation<ModularField> sample_point(const ModularField& field, std::uint64_t seed, std::uint64_t trial,
                                     std::uint64_t attempt) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(trial), static_cast<std::uint32_t>(attempt)};
  std::mt19937_64 rng(seq);
  std::uniform_int_distribution<std::uint64_t> dist(1, field.modulus() - 1);
  Valuation<ModularField> v(field);
  std::uint32_t n = symbol_count();
  for (std::uint32_t i = 0; i < n; ++i) v.set(Symbol(i), dist(rng));
  return v;
}

IdentityResult identities_equal(const Expr& a, const Expr& b, const ConstraintRelation* k,
                                const IdentityConfig& cfg) {
  if (cfg.trials < 1) throw std::invalid_argument("trials must be >= 1");
  if (cfg.prime <= (1ULL << 60)) throw std::invalid_argument("identity testing needs a prime > 2^60");
  ModularField field(cfg.prime);

  Expr lhs = k ? k->eliminate(a) : a;
  Expr rhs = k ? k->eliminate(b) : b;
  IdentityResult result;
  if (lhs == rhs) {
    // Structurally identical after elimination.
    result.verdict = cfg.exact ? Verdict::exact_proved : Verdict::equal;
    return result;
  }
  Expr diff = lhs - rhs;

  const std::uint64_t max_attempts = 100ULL * static_cast<std::uint64_t>(cfg.trials);
  std::uint64_t attempts = 0;
  std::string last_degenerate;
  for (int t = 0; t < cfg.trials; ++t) {
    for (std::uint64_t r = 0;; ++r) {
      if (attempts++ >= max_attempts) {
        result.verdict = Verdict::degenerate;
        result.note = "every sampled point hit a vanishing denominator: " + last_degenerate;
        return result;
      }
      Valuation<ModularField> point = sample_point(field, cfg.seed, static_cast<std::uint64_t>(t), r);
      std::uint64_t value;
      try {
        value = evaluate(diff, point);
      } catch (const DivisionByZero& e) {
        last_degenerate = print(e.subexpression());
        continue;
      }
      if (value != 0) {
        Witness w;
        w.prime = cfg.prime;
        for (Symbol s : free_symbols(diff)) w.values.emplace_back(s, point.get(s));
        if (k) {
          // Place the point on the constraint variety.
          std::uint64_t elim = evaluate(k->replacement(), point);
          w.values.emplace_back(k->eliminated(), elim);
          std::sort(w.values.begin(), w.values.end());
        }
        w.lhs = evaluate(lhs, point);
        w.rhs = evaluate(rhs, point);
        result.verdict = Verdict::unequal;
        result.witness = std::move(w);
        return result;
      }
      break;
    }
  }

  result.verdict = Verdict::equal;
  if (cfg.exact) {
    NormalizeLimits limits;
    limits.max_dag_nodes = cfg.exact_size_bound;
    std::optional<FactoredFraction> nf;
    try {
      nf = normalize(diff, limits);
    } catch (const DivisionByZero& e) {
      result.note = "exact normalization: identically zero denominator " + print(e.subexpression());
      return result;
    }
    if (!nf) {
      result.note = "exact normalization skipped: expression above size bound";
    } else if (nf->is_zero()) {
      result.verdict = Verdict::exact_proved;
    } else {
      result.verdict = Verdict::unequal;
      result.note = "exact normal form is nonzero although all sampled points vanished";
    }
  }
  return result;
}

TransformComparison transforms_equal(const Transformation& a, const Transformation& b,
                                     const std::vector<Symbol>& symbols, const ConstraintRelation* k,
                                     const IdentityConfig& cfg) {
  TransformComparison out;
  bool exact_everywhere = cfg.exact;
  for (Symbol x : symbols) {
    IdentityResult r = identities_equal(a.image(x), b.image(x), k, cfg);
    if (!r.holds()) {
      out.result = std::move(r);
      out.symbol = x;
      return out;
    }
    if (r.verdict != Verdict::exact_proved) exact_everywhere = false;
    if (!r.note.empty() && out.result.note.empty()) out.result.note = x.name() + ": " + r.note;
  }
  out.result.verdict = exact_everywhere ? Verdict::exact_proved : Verdict::equal;
  return out;
}

}  // namespace qpweyl
