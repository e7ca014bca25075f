#include "qpweyl/expr.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <mutex>
#include <shared_mutex>
#include <unordered_map>
#include <unordered_set>

namespace qpweyl {

// ---------------------------------------------------------------------------
// Symbol registry

namespace {

struct SymbolRegistry {
  std::shared_mutex mu;
  std::deque<std::string> names;  // stable references for Symbol::name
  std::unordered_map<std::string, std::uint32_t> index;

  SymbolRegistry() {
    const char* reserved[] = {"q",      "nu1",    "nu2", "nu3", "nu4", "nu5",   "nu6",
                              "nu7",    "nu8",    "kappa1", "kappa2", "f", "g", "z",
                              "u",      "delta",  "c",   "s"};
    for (const char* n : reserved) {
      index.emplace(n, static_cast<std::uint32_t>(names.size()));
      names.emplace_back(n);
    }
  }
};

SymbolRegistry& registry() {
  static SymbolRegistry r;
  return r;
}

bool is_generator_name(std::string_view name) {
  if (name == "pi" || name == "pi1" || name == "pi2") return true;
  if (name.size() >= 2 && name[0] == 's' &&
      std::all_of(name.begin() + 1, name.end(), [](char ch) { return std::isdigit(static_cast<unsigned char>(ch)); }))
    return true;
  return false;
}

}  // namespace

const std::string& Symbol::name() const {
  auto& r = registry();
  std::shared_lock lock(r.mu);
  return r.names.at(id_);
}

bool find_symbol(std::string_view name, Symbol& out) {
  auto& r = registry();
  std::shared_lock lock(r.mu);
  auto it = r.index.find(std::string(name));
  if (it == r.index.end()) return false;
  out = Symbol(it->second);
  return true;
}

Symbol declare_symbol(std::string_view name) {
  if (name.empty() || !(std::isalpha(static_cast<unsigned char>(name[0])) || name[0] == '_') ||
      !std::all_of(name.begin(), name.end(),
                   [](char ch) { return std::isalnum(static_cast<unsigned char>(ch)) || ch == '_'; }))
    throw std::invalid_argument("not an identifier: '" + std::string(name) + "'");
  if (is_generator_name(name))
    throw std::invalid_argument("'" + std::string(name) + "' is reserved for Weyl words");
  auto& r = registry();
  std::unique_lock lock(r.mu);
  auto [it, inserted] = r.index.emplace(std::string(name), static_cast<std::uint32_t>(r.names.size()));
  if (inserted) r.names.emplace_back(name);
  return Symbol(it->second);
}

std::uint32_t symbol_count() {
  auto& r = registry();
  std::shared_lock lock(r.mu);
  return static_cast<std::uint32_t>(r.names.size());
}

const std::vector<Symbol>& state_symbols() {
  static const std::vector<Symbol> v = {sym::q,   sym::nu1, sym::nu2, sym::nu3,    sym::nu4,
                                        sym::nu5, sym::nu6, sym::nu7, sym::nu8,    sym::kappa1,
                                        sym::kappa2, sym::f, sym::g};
  return v;
}

const std::vector<Symbol>& parameter_symbols() {
  static const std::vector<Symbol> v = {sym::q,   sym::nu1, sym::nu2, sym::nu3, sym::nu4,   sym::nu5,
                                        sym::nu6, sym::nu7, sym::nu8, sym::kappa1, sym::kappa2};
  return v;
}

// ---------------------------------------------------------------------------
// Interning

namespace {

std::size_t mix(std::size_t h, std::size_t v) {
  h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  return h;
}

std::size_t hash_mpq(const mpq_class& v) {
  std::size_t h = mpz_fdiv_ui(v.get_num_mpz_t(), 0x7fffffffffffffe7ULL);
  h = mix(h, mpz_fdiv_ui(v.get_den_mpz_t(), 0x7fffffffffffffe7ULL));
  return mix(h, static_cast<std::size_t>(mpz_sgn(v.get_num_mpz_t()) + 1));
}

bool same_node(const Node& a, const Node& b) {
  if (a.kind != b.kind || a.hash != b.hash) return false;
  switch (a.kind) {
    case NodeKind::constant:
      return a.value == b.value;
    case NodeKind::symbol:
      return a.sym == b.sym;
    case NodeKind::power:
      if (a.exponent != b.exponent) return false;
      [[fallthrough]];
    default:
      return a.children == b.children;
  }
}

class Interner {
 public:
  Expr intern(Node candidate) {
    candidate.hash = compute_hash(candidate);
    std::lock_guard lock(mu_);
    auto [lo, hi] = table_.equal_range(candidate.hash);
    for (auto it = lo; it != hi;) {
      if (auto sp = it->second.lock()) {
        if (same_node(*sp, candidate)) return Expr(std::move(sp));
        ++it;
      } else {
        it = table_.erase(it);
      }
    }
    std::shared_ptr<const Node> fresh(new Node(std::move(candidate)));
    table_.emplace(fresh->hash, fresh);
    if (table_.size() > sweep_at_) sweep();
    return Expr(std::move(fresh));
  }

  std::size_t live() {
    std::lock_guard lock(mu_);
    sweep();
    return table_.size();
  }

 private:
  static std::size_t compute_hash(const Node& n) {
    std::size_t h = static_cast<std::size_t>(n.kind) * 0x100000001b3ULL;
    switch (n.kind) {
      case NodeKind::constant:
        return mix(h, hash_mpq(n.value));
      case NodeKind::symbol:
        return mix(h, n.sym.id() + 1);
      case NodeKind::power:
        h = mix(h, static_cast<std::size_t>(n.exponent));
        break;
      default:
        break;
    }
    for (const Expr& c : n.children) h = mix(h, c.hash());
    return h;
  }

  void sweep() {
    std::erase_if(table_, [](const auto& kv) { return kv.second.expired(); });
    sweep_at_ = std::max<std::size_t>(1 << 16, table_.size() * 2);
  }

  std::mutex mu_;
  std::unordered_multimap<std::size_t, std::weak_ptr<const Node>> table_;
  std::size_t sweep_at_ = 1 << 16;
};

Interner& interner() {
  static Interner* i = new Interner();  // outlives static Exprs at exit
  return *i;
}

Expr make_constant(mpq_class v) {
  Node n;
  n.kind = NodeKind::constant;
  n.value = std::move(v);
  return interner().intern(std::move(n));
}

Expr make_compound(NodeKind kind, std::vector<Expr> children, long exponent = 0) {
  Node n;
  n.kind = kind;
  n.children = std::move(children);
  n.exponent = exponent;
  return interner().intern(std::move(n));
}

const Expr& zero_expr() {
  static const Expr e = make_constant(mpq_class(0));
  return e;
}

const Expr& one_expr() {
  static const Expr e = make_constant(mpq_class(1));
  return e;
}

}  // namespace

std::size_t interned_node_count() { return interner().live(); }

// ---------------------------------------------------------------------------
// Expr accessors

Expr::Expr() : Expr(zero_expr()) {}

Expr Expr::constant(const mpq_class& value) {
  mpq_class v(value);
  v.canonicalize();
  if (v == 0) return zero_expr();
  if (v == 1) return one_expr();
  return make_constant(std::move(v));
}

Expr Expr::integer(long value) { return constant(mpq_class(value)); }

Expr Expr::symbol(Symbol s) {
  Node n;
  n.kind = NodeKind::symbol;
  n.sym = s;
  return interner().intern(std::move(n));
}

NodeKind Expr::kind() const { return node_->kind; }
std::size_t Expr::hash() const { return node_->hash; }
bool Expr::is_zero() const { return node_->kind == NodeKind::constant && node_->value == 0; }
bool Expr::is_one() const { return node_->kind == NodeKind::constant && node_->value == 1; }

const mpq_class& Expr::value() const {
  if (node_->kind != NodeKind::constant) throw std::logic_error("Expr::value on non-constant");
  return node_->value;
}

Symbol Expr::symbol_value() const {
  if (node_->kind != NodeKind::symbol) throw std::logic_error("Expr::symbol_value on non-symbol");
  return node_->sym;
}

std::span<const Expr> Expr::children() const { return node_->children; }
long Expr::exponent() const { return node_->exponent; }

// ---------------------------------------------------------------------------
// Smart constructors

Expr add(std::vector<Expr> terms) {
  std::vector<Expr> out;
  out.reserve(terms.size());
  mpq_class acc(0);
  bool have_const = false;
  for (Expr& t : terms) {
    if (t.kind() == NodeKind::sum) {
      for (const Expr& c : t.children()) {
        if (c.is_constant()) {
          acc += c.value();
          have_const = true;
        } else {
          out.push_back(c);
        }
      }
    } else if (t.is_constant()) {
      acc += t.value();
      have_const = true;
    } else {
      out.push_back(std::move(t));
    }
  }
  if (have_const && acc != 0) out.push_back(Expr::constant(acc));
  if (out.empty()) return zero_expr();
  if (out.size() == 1) return out.front();
  return make_compound(NodeKind::sum, std::move(out));
}

Expr mul(std::vector<Expr> factors) {
  std::vector<Expr> out;
  out.reserve(factors.size() + 1);
  out.emplace_back();  // slot for the folded constant
  mpq_class acc(1);
  auto take = [&](const Expr& f) {
    if (f.is_constant())
      acc *= f.value();
    else
      out.push_back(f);
  };
  for (const Expr& f : factors) {
    if (f.kind() == NodeKind::product) {
      for (const Expr& c : f.children()) take(c);
    } else {
      take(f);
    }
  }
  if (acc == 0) return zero_expr();
  if (acc == 1) {
    out.erase(out.begin());
  } else {
    out.front() = Expr::constant(acc);
  }
  if (out.empty()) return one_expr();
  if (out.size() == 1) return out.front();
  return make_compound(NodeKind::product, std::move(out));
}

Expr div(const Expr& num, const Expr& den) {
  if (den.is_zero()) throw ZeroDenominator("quotient with zero denominator");
  if (den.is_one()) return num;
  if (num.is_zero()) return zero_expr();
  if (num.is_constant() && den.is_constant()) return Expr::constant(num.value() / den.value());
  return make_compound(NodeKind::quotient, {num, den});
}

Expr pow(const Expr& base, long exponent) {
  if (exponent == 0) return one_expr();
  if (exponent == 1) return base;
  if (base.is_constant()) {
    if (base.is_zero()) {
      if (exponent < 0) throw ZeroDenominator("negative power of zero");
      return zero_expr();
    }
    mpz_class num, den;
    unsigned long e = static_cast<unsigned long>(exponent < 0 ? -exponent : exponent);
    mpz_pow_ui(num.get_mpz_t(), base.value().get_num_mpz_t(), e);
    mpz_pow_ui(den.get_mpz_t(), base.value().get_den_mpz_t(), e);
    return exponent > 0 ? Expr::constant(mpq_class(num, den)) : Expr::constant(mpq_class(den, num));
  }
  if (base.kind() == NodeKind::power) return pow(base.children()[0], base.exponent() * exponent);
  return make_compound(NodeKind::power, {base}, exponent);
}

Expr neg(const Expr& e) { return mul({Expr::integer(-1), e}); }

Expr sub(const Expr& a, const Expr& b) { return add({a, neg(b)}); }

// ---------------------------------------------------------------------------
// Traversals

namespace {

template <class Visit>
void for_each_node(const Expr& root, Visit&& visit) {
  std::unordered_set<const Node*> seen;
  std::vector<const Expr*> stack{&root};
  while (!stack.empty()) {
    const Expr* e = stack.back();
    stack.pop_back();
    if (!seen.insert(e->id()).second) continue;
    visit(*e);
    for (const Expr& c : e->children()) stack.push_back(&c);
  }
}

}  // namespace

std::size_t dag_size(const Expr& e) {
  std::size_t n = 0;
  for_each_node(e, [&](const Expr&) { ++n; });
  return n;
}

std::vector<Symbol> free_symbols(const Expr& e) {
  std::vector<Symbol> out;
  for_each_node(e, [&](const Expr& n) {
    if (n.kind() == NodeKind::symbol) out.push_back(n.symbol_value());
  });
  std::sort(out.begin(), out.end());
  return out;
}

bool contains_symbol(const Expr& e, Symbol s) {
  bool found = false;
  for_each_node(e, [&](const Expr& n) {
    if (n.kind() == NodeKind::symbol && n.symbol_value() == s) found = true;
  });
  return found;
}

}  // namespace qpweyl
