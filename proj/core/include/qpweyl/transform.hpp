#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qpweyl/expr.hpp"

namespace qpweyl {

/// Simultaneous substitution x -> image(x), identity on symbols it does not
/// mention. Applying a Transformation to an expression means substituting
/// every symbol by its image; generator actions are ring homomorphisms of the
/// field of rational functions.
class Transformation {
 public:
  Transformation() = default;
  explicit Transformation(std::string label) : label_(std::move(label)) {}

  static Transformation identity() { return Transformation("id"); }

  /// Sets x -> image; mapping a symbol to itself clears the entry.
  Transformation& set(Symbol x, Expr image);

  Expr image(Symbol x) const;
  bool moves(Symbol x) const { return x.id() < images_.size() && images_[x.id()].has_value(); }
  std::vector<Symbol> moved_symbols() const;

  const std::string& label() const { return label_; }
  void set_label(std::string label) { label_ = std::move(label); }

 private:
  std::string label_;
  std::vector<std::optional<Expr>> images_;
};

/// Replaces every symbol occurrence in e by its image under m, simultaneously.
Expr substitute(const Expr& e, const Transformation& m);

/// (outer o inner)(x) = outer(inner(x)): the result maps x to
/// substitute(inner.image(x), outer). In a word a b c the rightmost letter c
/// acts first on the argument, i.e. w(x) = a(b(c(x))).
Transformation compose(const Transformation& outer, const Transformation& inner);

}  // namespace qpweyl
