#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "qpweyl/expr.hpp"

namespace qpweyl {

/// Sparse exponent vector, sorted by symbol id, no zero entries. Negative
/// exponents are allowed (Laurent monomials).
using Monomial = std::vector<std::pair<std::uint32_t, std::int32_t>>;

/// Lexicographic order with lower symbol ids more significant.
int compare_lex(const Monomial& a, const Monomial& b);

struct LexDescending {
  bool operator()(const Monomial& a, const Monomial& b) const { return compare_lex(a, b) > 0; }
};

/// Thrown when an intermediate polynomial exceeds the configured term budget.
class NormalizationLimit : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Sparse multivariate Laurent polynomial over Q; terms are kept leading-first.
class Polynomial {
 public:
  using Terms = std::map<Monomial, mpq_class, LexDescending>;

  Polynomial() = default;
  static Polynomial constant(const mpq_class& c);
  static Polynomial monomial(const Monomial& m, const mpq_class& c = 1);

  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const Terms& terms() const { return terms_; }
  const Monomial& leading_monomial() const { return terms_.begin()->first; }
  const mpq_class& leading_coefficient() const { return terms_.begin()->second; }

  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial scaled(const mpq_class& c, const Monomial& m) const;

  /// Componentwise minimum exponent over all terms (0 for absent variables).
  Monomial monomial_content() const;

  /// Exact quotient when divisor divides *this; both must be genuine
  /// polynomials (no negative exponents).
  std::optional<Polynomial> divide_exact(const Polynomial& divisor) const;

  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.terms_ == b.terms_; }
  friend bool operator<(const Polynomial& a, const Polynomial& b);

  Expr to_expr() const;

  /// Upper bound on the term count of any polynomial built while normalizing;
  /// per thread.
  static void set_term_limit(std::size_t limit);
  static std::size_t term_limit();

 private:
  void check_limit() const;
  Terms terms_;
};

/// c * m * prod(F_i ^ e_i) with every F_i a nonconstant polynomial without
/// monomial content and with leading coefficient 1. Zero iff c == 0.
class FactoredFraction {
 public:
  using Factor = std::pair<std::shared_ptr<const Polynomial>, int>;

  FactoredFraction() = default;
  static FactoredFraction constant(const mpq_class& c);
  static FactoredFraction symbol(Symbol s);
  /// Splits off content and leading coefficient of p.
  static FactoredFraction from_polynomial(const Polynomial& p);

  bool is_zero() const { return coefficient_ == 0; }
  const mpq_class& coefficient() const { return coefficient_; }
  const Monomial& monomial() const { return monomial_; }
  const std::vector<Factor>& factors() const { return factors_; }

  FactoredFraction operator*(const FactoredFraction& o) const;
  FactoredFraction operator+(const FactoredFraction& o) const;
  FactoredFraction inverse() const;
  FactoredFraction power(long e) const;

  Expr to_expr() const;

 private:
  void merge_factor(const std::shared_ptr<const Polynomial>& p, int e);

  mpq_class coefficient_ = 0;
  Monomial monomial_;
  std::vector<Factor> factors_;
};

struct NormalizeLimits {
  std::size_t max_dag_nodes = 20'000;
  std::size_t max_terms = 200'000;
};

/// Exact normal form of e; nullopt when e exceeds the limits. Throws
/// DivisionByZero (see field.hpp) when a denominator is identically zero.
std::optional<FactoredFraction> normalize(const Expr& e, const NormalizeLimits& limits = {});

/// normalize() followed by to_expr(); returns e unchanged when over the limits.
Expr simplify(const Expr& e, const NormalizeLimits& limits = {});

}  // namespace qpweyl
