#include "qpweyl/parse.hpp"

#include <cctype>
#include <string>
#include <vector>

namespace qpweyl {

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  Expr parse_all() {
    skip_ws();
    if (pos_ == text_.size()) throw SyntaxError("empty expression", pos_);
    Expr e = parse_expr();
    skip_ws();
    if (pos_ != text_.size()) throw SyntaxError(std::string("unexpected '") + text_[pos_] + "'", pos_);
    return e;
  }

 private:
  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char ch) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == ch) {
      ++pos_;
      return true;
    }
    return false;
  }

  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  Expr parse_expr() {
    std::vector<Expr> terms;
    terms.push_back(parse_term());
    for (;;) {
      if (accept('+')) {
        terms.push_back(parse_term());
      } else if (accept('-')) {
        terms.push_back(neg(parse_term()));
      } else {
        break;
      }
    }
    return terms.size() == 1 ? terms.front() : add(std::move(terms));
  }

  Expr parse_term() {
    Expr acc = parse_unary();
    for (;;) {
      if (accept('*')) {
        acc = mul({acc, parse_unary()});
      } else if (peek() == '/') {
        std::size_t at = pos_;
        ++pos_;
        Expr den = parse_unary();
        if (den.is_zero()) throw SyntaxError("division by literal zero", at);
        acc = div(acc, den);
      } else {
        return acc;
      }
    }
  }

  Expr parse_unary() {
    if (accept('-')) return neg(parse_unary());
    if (accept('+')) return parse_unary();
    return parse_power();
  }

  Expr parse_power() {
    Expr base = parse_primary();
    if (!accept('^')) return base;
    skip_ws();
    std::size_t at = pos_;
    bool negative = false;
    if (accept('-')) {
      negative = true;
    } else {
      accept('+');
    }
    skip_ws();
    if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
      throw SyntaxError("exponent must be an integer literal", at);
    long value = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      value = value * 10 + (text_[pos_] - '0');
      if (value > 1'000'000) throw SyntaxError("exponent too large", at);
      ++pos_;
    }
    if (base.is_zero() && negative) throw SyntaxError("negative power of zero", at);
    return pow(base, negative ? -value : value);
  }

  Expr parse_primary() {
    skip_ws();
    if (pos_ >= text_.size()) throw SyntaxError("unexpected end of input", pos_);
    char ch = text_[pos_];
    if (ch == '(') {
      ++pos_;
      Expr inner = parse_expr();
      if (!accept(')')) throw SyntaxError("expected ')'", pos_);
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      return Expr::constant(mpq_class(mpz_class(std::string(text_.substr(start, pos_ - start)))));
    }
    if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
      std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
        ++pos_;
      std::string name(text_.substr(start, pos_ - start));
      Symbol s;
      if (!find_symbol(name, s)) throw UnknownSymbol(name, start);
      return Expr::symbol(s);
    }
    throw SyntaxError(std::string("unexpected '") + ch + "'", pos_);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

// ---------------------------------------------------------------------------
// Text printer. Every rule here is mirrored by a parse rule above so that the
// printed text rebuilds the identical interned node.

bool is_negative_constant(const Expr& e) { return e.is_constant() && e.value() < 0; }

bool is_negative_product(const Expr& e) {
  return e.kind() == NodeKind::product && is_negative_constant(e.children()[0]);
}

Expr abs_term(const Expr& e) {
  if (e.is_constant()) return Expr::constant(-e.value());
  std::vector<Expr> rest(e.children().begin(), e.children().end());
  rest.front() = Expr::constant(-rest.front().value());
  return mul(std::move(rest));
}

void emit(const Expr& e, std::string& out);

void emit_wrapped(const Expr& e, std::string& out) {
  out += '(';
  emit(e, out);
  out += ')';
}

// Operand of a unary minus: binds tighter than '*' and '/'.
void emit_after_unary_minus(const Expr& e, std::string& out) {
  if (e.kind() == NodeKind::product) {
    auto ch = e.children();
    for (std::size_t i = 0; i < ch.size(); ++i) {
      if (i) out += '*';
      NodeKind k = ch[i].kind();
      if (k == NodeKind::sum || k == NodeKind::quotient || is_negative_constant(ch[i]))
        emit_wrapped(ch[i], out);
      else
        emit(ch[i], out);
    }
    return;
  }
  if (e.kind() == NodeKind::sum || e.kind() == NodeKind::quotient)
    emit_wrapped(e, out);
  else
    emit(e, out);
}

void emit_product(const Expr& e, std::string& out) {
  auto ch = e.children();
  if (is_negative_constant(ch[0])) {
    out += '-';
    emit_after_unary_minus(abs_term(e), out);
    return;
  }
  for (std::size_t i = 0; i < ch.size(); ++i) {
    const Expr& f = ch[i];
    if (i) out += '*';
    NodeKind k = f.kind();
    bool wrap = k == NodeKind::sum || (i > 0 && k == NodeKind::quotient);
    if (wrap)
      emit_wrapped(f, out);
    else
      emit(f, out);
  }
}

void emit(const Expr& e, std::string& out) {
  switch (e.kind()) {
    case NodeKind::constant:
      out += e.value().get_str();
      return;
    case NodeKind::symbol:
      out += e.symbol_value().name();
      return;
    case NodeKind::sum: {
      auto ch = e.children();
      emit(ch[0], out);
      for (std::size_t i = 1; i < ch.size(); ++i) {
        const Expr& t = ch[i];
        if (is_negative_constant(t) || is_negative_product(t)) {
          out += " - ";
          Expr a = abs_term(t);
          if (a.kind() == NodeKind::sum)
            emit_wrapped(a, out);
          else
            emit(a, out);
        } else {
          out += " + ";
          emit(t, out);
        }
      }
      return;
    }
    case NodeKind::product:
      emit_product(e, out);
      return;
    case NodeKind::quotient: {
      const Expr& num = e.children()[0];
      const Expr& den = e.children()[1];
      if (num.kind() == NodeKind::sum)
        emit_wrapped(num, out);
      else
        emit(num, out);
      out += '/';
      bool plain = den.kind() == NodeKind::symbol || den.kind() == NodeKind::power ||
                   (den.is_constant() && den.value() > 0 && den.value().get_den() == 1);
      if (plain)
        emit(den, out);
      else
        emit_wrapped(den, out);
      return;
    }
    case NodeKind::power: {
      const Expr& base = e.children()[0];
      if (base.kind() == NodeKind::symbol)
        emit(base, out);
      else
        emit_wrapped(base, out);
      out += '^';
      out += std::to_string(e.exponent());
      return;
    }
  }
}

// ---------------------------------------------------------------------------
// LaTeX printer

std::string latex_symbol(Symbol s) {
  const std::string& n = s.name();
  auto indexed = [&](std::string_view prefix, const char* cmd) -> std::string {
    if (n.size() > prefix.size() && n.compare(0, prefix.size(), prefix) == 0 &&
        std::isdigit(static_cast<unsigned char>(n[prefix.size()])))
      return std::string(cmd) + "_{" + n.substr(prefix.size()) + "}";
    return {};
  };
  if (auto r = indexed("nu", "\\nu"); !r.empty()) return r;
  if (auto r = indexed("kappa", "\\kappa"); !r.empty()) return r;
  if (n == "delta") return "\\delta";
  if (n.size() == 1) return n;
  return "\\mathrm{" + n + "}";
}

std::string latex_constant(const mpq_class& v) {
  std::string sign = v < 0 ? "-" : "";
  mpz_class num = abs(v.get_num());
  if (v.get_den() == 1) return sign + num.get_str();
  return sign + "\\frac{" + num.get_str() + "}{" + v.get_den().get_str() + "}";
}

void emit_latex(const Expr& e, std::string& out);

void emit_latex_wrapped(const Expr& e, std::string& out) {
  out += "\\left(";
  emit_latex(e, out);
  out += "\\right)";
}

void emit_latex(const Expr& e, std::string& out) {
  switch (e.kind()) {
    case NodeKind::constant:
      out += latex_constant(e.value());
      return;
    case NodeKind::symbol:
      out += latex_symbol(e.symbol_value());
      return;
    case NodeKind::sum: {
      auto ch = e.children();
      emit_latex(ch[0], out);
      for (std::size_t i = 1; i < ch.size(); ++i) {
        const Expr& t = ch[i];
        if (is_negative_constant(t) || is_negative_product(t)) {
          out += " - ";
          Expr a = abs_term(t);
          if (a.kind() == NodeKind::sum)
            emit_latex_wrapped(a, out);
          else
            emit_latex(a, out);
        } else {
          out += " + ";
          emit_latex(t, out);
        }
      }
      return;
    }
    case NodeKind::product: {
      auto ch = e.children();
      std::size_t i = 0;
      if (ch[0].is_constant()) {
        if (ch[0].value() == -1) {
          out += '-';
          i = 1;
        } else if (ch[0].value() < 0) {
          out += '-';
          out += latex_constant(-ch[0].value());
          out += ' ';
          i = 1;
        }
      }
      for (bool first = true; i < ch.size(); ++i, first = false) {
        if (!first) out += " ";
        if (ch[i].kind() == NodeKind::sum)
          emit_latex_wrapped(ch[i], out);
        else
          emit_latex(ch[i], out);
      }
      return;
    }
    case NodeKind::quotient:
      out += "\\frac{";
      emit_latex(e.children()[0], out);
      out += "}{";
      emit_latex(e.children()[1], out);
      out += "}";
      return;
    case NodeKind::power: {
      const Expr& base = e.children()[0];
      if (base.kind() == NodeKind::symbol) {
        std::string b = latex_symbol(base.symbol_value());
        // nu_{3}^{2} is fine; braces keep multi-char bases grouped.
        out += "{" + b + "}";
      } else {
        emit_latex_wrapped(base, out);
      }
      out += "^{" + std::to_string(e.exponent()) + "}";
      return;
    }
  }
}

}  // namespace

Expr parse(std::string_view text) { return Parser(text).parse_all(); }

std::string print(const Expr& e) {
  std::string out;
  emit(e, out);
  return out;
}

std::string print_latex(const Expr& e) {
  std::string out;
  emit_latex(e, out);
  return out;
}

}  // namespace qpweyl
