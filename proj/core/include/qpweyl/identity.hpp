#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qpweyl/expr.hpp"
#include "qpweyl/field.hpp"
#include "qpweyl/transform.hpp"

namespace qpweyl {

/// A principal relation solved for one symbol, e.g.
/// nu8 = kappa1^2*kappa2^2/(q*nu1*...*nu7).
class ConstraintRelation {
 public:
  /// Throws std::invalid_argument if replacement mentions eliminated.
  ConstraintRelation(Symbol eliminated, Expr replacement);

  /// kappa1^2 kappa2^2 = q nu1 ... nu8, solved for nu8.
  static ConstraintRelation default_relation();

  Symbol eliminated() const { return eliminated_; }
  const Expr& replacement() const { return replacement_; }

  /// Substitutes the eliminated symbol. Idempotent.
  Expr eliminate(const Expr& e) const;

  /// kappa1^2*kappa2^2 - q*nu1*...*nu8 for the default relation; for a
  /// custom relation, eliminated - replacement.
  Expr residual() const;

 private:
  Symbol eliminated_;
  Expr replacement_;
};

inline constexpr std::uint64_t kMersenne61 = (1ULL << 61) - 1;

struct IdentityConfig {
  int trials = 16;
  std::uint64_t prime = kMersenne61;
  std::uint64_t seed = 0;
  bool exact = false;
  std::size_t exact_size_bound = 20'000;
};

enum class Verdict { equal, unequal, exact_proved, degenerate };

const char* to_string(Verdict v);

/// A point of (Z/pZ)^n at which two expressions differ. When a constraint is
/// in force the eliminated symbol carries the value its replacement takes, so
/// the point lies on the constraint variety.
struct Witness {
  std::uint64_t prime = 0;
  std::vector<std::pair<Symbol, std::uint64_t>> values;
  std::uint64_t lhs = 0;
  std::uint64_t rhs = 0;

  Valuation<ModularField> valuation() const;
};

struct IdentityResult {
  Verdict verdict = Verdict::equal;
  std::optional<Witness> witness;
  /// Free-form detail: skipped exact path, degenerate subexpression, ...
  std::string note;

  /// equal or exact_proved.
  bool holds() const { return verdict == Verdict::equal || verdict == Verdict::exact_proved; }
};

/// Randomised identity test of a == b (modulo k when given).
///
/// Evaluates a - b at cfg.trials independent uniform points of [1, p-1]^n.
/// Any nonzero value gives `unequal` with the point as witness; otherwise the
/// verdict is `equal`, upgraded to `exact_proved` when cfg.exact is set and
/// the exact normal form of a - b is zero. Points hitting a vanishing
/// denominator are resampled, up to 100 * trials attempts, after which the
/// comparison is reported `degenerate`.
///
/// Results depend only on (a, b, k, cfg): the point for trial t, attempt r is
/// drawn from a generator seeded by (seed, t, r).
IdentityResult identities_equal(const Expr& a, const Expr& b, const ConstraintRelation* k,
                                const IdentityConfig& cfg);

/// Outcome of comparing two transformations symbol by symbol.
struct TransformComparison {
  IdentityResult result;
  /// First symbol whose images differ (or degenerate); empty when all hold.
  std::optional<Symbol> symbol;
};

/// Compares a(x) and b(x) for every x in symbols; stops at the first failure.
TransformComparison transforms_equal(const Transformation& a, const Transformation& b,
                                     const std::vector<Symbol>& symbols, const ConstraintRelation* k,
                                     const IdentityConfig& cfg);

/// Uniform sample of every registered symbol; deterministic in (seed, trial, attempt).
Valuation<ModularField> sample_point(const ModularField& field, std::uint64_t seed, std::uint64_t trial,
                                     std::uint64_t attempt);

}  // namespace qpweyl
