#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "qpweyl/expr.hpp"

namespace qpweyl {

/// Malformed input; offset() is the byte offset of the offending token.
class SyntaxError : public std::runtime_error {
 public:
  SyntaxError(const std::string& what, std::size_t offset)
      : std::runtime_error(what + " at offset " + std::to_string(offset)), offset_(offset) {}
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

class UnknownSymbol : public std::runtime_error {
 public:
  UnknownSymbol(std::string name, std::size_t offset)
      : std::runtime_error("unknown symbol '" + name + "' at offset " + std::to_string(offset)),
        name_(std::move(name)),
        offset_(offset) {}
  const std::string& name() const { return name_; }
  std::size_t offset() const { return offset_; }

 private:
  std::string name_;
  std::size_t offset_;
};

/// Grammar (ASCII, whitespace ignored):
///
///   expr    := ['+'|'-'] term (('+'|'-') term)*
///   term    := unary (('*'|'/') unary)*
///   unary   := '-' unary | power
///   power   := primary ['^' ['-'|'+'] integer]
///   primary := integer | symbol | '(' expr ')'
///
/// Symbols must be registered (see declare_symbol). "p/q" rationals fall out
/// of constant folding in the quotient constructor.
Expr parse(std::string_view text);

/// Text form accepted by parse(); parse(print(e)) == e for every Expr.
std::string print(const Expr& e);

/// LaTeX math fragment: nu3 -> \nu_{3}, kappa1 -> \kappa_{1}, quotients as \frac.
std::string print_latex(const Expr& e);

}  // namespace qpweyl
