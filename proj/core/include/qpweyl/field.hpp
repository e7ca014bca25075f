#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "qpweyl/expr.hpp"

namespace qpweyl {

/// Deterministic Miller-Rabin for 64-bit integers.
bool is_probable_prime(std::uint64_t n);

/// Z/pZ for an odd prime p < 2^64.
class ModularField {
 public:
  using value_type = std::uint64_t;

  explicit ModularField(std::uint64_t p);

  std::uint64_t modulus() const { return p_; }

  value_type zero() const { return 0; }
  value_type one() const { return 1; }
  bool is_zero(value_type a) const { return a == 0; }

  value_type add(value_type a, value_type b) const {
    unsigned __int128 s = static_cast<unsigned __int128>(a) + b;
    return static_cast<value_type>(s >= p_ ? s - p_ : s);
  }
  value_type sub(value_type a, value_type b) const { return a >= b ? a - b : a + (p_ - b); }
  value_type neg(value_type a) const { return a == 0 ? 0 : p_ - a; }
  value_type mul(value_type a, value_type b) const {
    return static_cast<value_type>(static_cast<unsigned __int128>(a) * b % p_);
  }
  /// Precondition: a != 0.
  value_type inv(value_type a) const;
  value_type pow(value_type a, long e) const;
  /// Throws std::domain_error when the denominator vanishes mod p.
  value_type from_rational(const mpq_class& v) const;

  std::string to_string(value_type a) const { return std::to_string(a); }

 private:
  std::uint64_t p_;
};

/// Exact arithmetic in Q.
class RationalField {
 public:
  using value_type = mpq_class;

  value_type zero() const { return 0; }
  value_type one() const { return 1; }
  bool is_zero(const value_type& a) const { return a == 0; }
  value_type add(const value_type& a, const value_type& b) const { return a + b; }
  value_type sub(const value_type& a, const value_type& b) const { return a - b; }
  value_type neg(const value_type& a) const { return -a; }
  value_type mul(const value_type& a, const value_type& b) const { return a * b; }
  value_type inv(const value_type& a) const { return 1 / a; }
  value_type pow(const value_type& a, long e) const;
  value_type from_rational(const mpq_class& v) const { return v; }
  std::string to_string(const value_type& a) const { return a.get_str(); }
};

/// Assignment of field elements to symbols.
template <class Field>
class Valuation {
 public:
  using value_type = typename Field::value_type;

  explicit Valuation(Field field) : field_(std::move(field)) {}

  const Field& field() const { return field_; }

  void set(Symbol s, value_type v) {
    if (values_.size() <= s.id()) values_.resize(s.id() + 1);
    values_[s.id()] = std::move(v);
  }
  bool has(Symbol s) const { return s.id() < values_.size() && values_[s.id()].has_value(); }
  const value_type& get(Symbol s) const;

  /// Assigned symbols in id order.
  std::vector<Symbol> symbols() const;

 private:
  Field field_;
  std::vector<std::optional<value_type>> values_;
};

/// A quotient (or negative power) whose denominator evaluated to zero.
/// subexpression() is the vanishing denominator.
class DivisionByZero : public std::domain_error {
 public:
  explicit DivisionByZero(Expr sub)
      : std::domain_error("division by zero during evaluation"), sub_(std::move(sub)) {}
  const Expr& subexpression() const { return sub_; }

 private:
  Expr sub_;
};

class UnboundSymbol : public std::invalid_argument {
 public:
  explicit UnboundSymbol(Symbol s)
      : std::invalid_argument("valuation has no value for '" + s.name() + "'"), sym_(s) {}
  Symbol symbol() const { return sym_; }

 private:
  Symbol sym_;
};

/// Evaluates e under v. Shared subexpressions are evaluated once.
template <class Field>
typename Field::value_type evaluate(const Expr& e, const Valuation<Field>& v);

extern template class Valuation<ModularField>;
extern template class Valuation<RationalField>;
extern template ModularField::value_type evaluate(const Expr&, const Valuation<ModularField>&);
extern template RationalField::value_type evaluate(const Expr&, const Valuation<RationalField>&);

}  // namespace qpweyl
