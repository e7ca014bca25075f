#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "qpweyl/symbol.hpp"

namespace qpweyl {

enum class NodeKind : std::uint8_t { constant, symbol, sum, product, quotient, power };

class Expr;
struct Node;

/// Immutable, hash-consed rational expression over Q.
///
/// Two handles compare equal iff they are structurally equal: every node is
/// interned, so structural equality is pointer equality. The smart
/// constructors below apply a small fixed set of canonicalisations (flatten
/// nested sums/products, fold constants, drop neutral elements) and nothing
/// else; in particular no cancellation of common factors happens here.
class Expr {
 public:
  /// The constant 0.
  Expr();
  explicit Expr(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

  static Expr constant(const mpq_class& value);
  static Expr integer(long value);
  static Expr symbol(Symbol s);

  NodeKind kind() const;
  const Node& node() const { return *node_; }
  const Node* id() const { return node_.get(); }
  std::size_t hash() const;

  bool is_constant() const { return kind() == NodeKind::constant; }
  bool is_zero() const;
  bool is_one() const;
  /// Only valid for constants.
  const mpq_class& value() const;
  /// Only valid for symbols.
  Symbol symbol_value() const;
  /// Children of sum/product ([num, den] for quotients, [base] for powers).
  std::span<const Expr> children() const;
  /// Only valid for powers.
  long exponent() const;

  friend bool operator==(const Expr& a, const Expr& b) { return a.node_ == b.node_; }

 private:
  std::shared_ptr<const Node> node_;
};

struct Node {
  NodeKind kind;
  std::size_t hash = 0;
  mpq_class value;  // constant
  Symbol sym;       // symbol
  long exponent = 0;
  std::vector<Expr> children;
};

/// Raised when a quotient or negative power would get a syntactically zero
/// denominator.
class ZeroDenominator : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

Expr add(std::vector<Expr> terms);
Expr mul(std::vector<Expr> factors);
Expr div(const Expr& num, const Expr& den);
Expr pow(const Expr& base, long exponent);
Expr neg(const Expr& e);
Expr sub(const Expr& a, const Expr& b);

inline Expr operator+(const Expr& a, const Expr& b) { return add({a, b}); }
inline Expr operator-(const Expr& a, const Expr& b) { return sub(a, b); }
inline Expr operator*(const Expr& a, const Expr& b) { return mul({a, b}); }
inline Expr operator/(const Expr& a, const Expr& b) { return div(a, b); }
inline Expr operator-(const Expr& a) { return neg(a); }

/// Number of distinct nodes reachable from e (DAG size).
std::size_t dag_size(const Expr& e);

/// Sorted, de-duplicated free symbols of e.
std::vector<Symbol> free_symbols(const Expr& e);
bool contains_symbol(const Expr& e, Symbol s);

/// Number of live interned nodes; exposed for benchmarks and tests.
std::size_t interned_node_count();

}  // namespace qpweyl

template <>
struct std::hash<qpweyl::Expr> {
  std::size_t operator()(const qpweyl::Expr& e) const noexcept { return e.hash(); }
};
