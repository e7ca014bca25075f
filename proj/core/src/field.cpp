#include "qpweyl/field.hpp"

#include <unordered_map>

namespace qpweyl {

namespace {

using u128 = unsigned __int128;

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<u128>(a) * b % m);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  a %= m;
  while (e) {
    if (e & 1) r = mulmod(r, a, m);
    a = mulmod(a, a, m);
    e >>= 1;
  }
  return r;
}

}  // namespace

bool is_probable_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t small : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % small == 0) return n == small;
  }
  std::uint64_t d = n - 1;
  int r = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++r;
  }
  // This witness set is deterministic for all n < 2^64.
  for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    std::uint64_t x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < r; ++i) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

ModularField::ModularField(std::uint64_t p) : p_(p) {
  if (p < 3 || !is_probable_prime(p)) throw std::invalid_argument("modulus is not an odd prime: " + std::to_string(p));
}

ModularField::value_type ModularField::inv(value_type a) const {
  // Extended Euclid on signed 128-bit to stay clear of overflow.
  __int128 t = 0, new_t = 1;
  __int128 r = p_, new_r = a;
  while (new_r != 0) {
    __int128 quotient = r / new_r;
    __int128 tmp = t - quotient * new_t;
    t = new_t;
    new_t = tmp;
    tmp = r - quotient * new_r;
    r = new_r;
    new_r = tmp;
  }
  if (t < 0) t += p_;
  return static_cast<value_type>(t);
}

ModularField::value_type ModularField::pow(value_type a, long e) const {
  if (e < 0) {
    a = inv(a);
    e = -e;
  }
  return powmod(a, static_cast<std::uint64_t>(e), p_);
}

ModularField::value_type ModularField::from_rational(const mpq_class& v) const {
  std::uint64_t num = mpz_fdiv_ui(v.get_num_mpz_t(), p_);
  std::uint64_t den = mpz_fdiv_ui(v.get_den_mpz_t(), p_);
  if (den == 0) throw std::domain_error("constant denominator vanishes modulo p");
  return mul(num, inv(den));
}

RationalField::value_type RationalField::pow(const value_type& a, long e) const {
  unsigned long n = static_cast<unsigned long>(e < 0 ? -e : e);
  mpz_class num, den;
  mpz_pow_ui(num.get_mpz_t(), a.get_num_mpz_t(), n);
  mpz_pow_ui(den.get_mpz_t(), a.get_den_mpz_t(), n);
  mpq_class r = e < 0 ? mpq_class(den, num) : mpq_class(num, den);
  r.canonicalize();
  return r;
}

template <class Field>
const typename Field::value_type& Valuation<Field>::get(Symbol s) const {
  if (!has(s)) throw UnboundSymbol(s);
  return *values_[s.id()];
}

template <class Field>
std::vector<Symbol> Valuation<Field>::symbols() const {
  std::vector<Symbol> out;
  for (std::uint32_t i = 0; i < values_.size(); ++i)
    if (values_[i]) out.emplace_back(i);
  return out;
}

template <class Field>
typename Field::value_type evaluate(const Expr& root, const Valuation<Field>& v) {
  using T = typename Field::value_type;
  const Field& F = v.field();
  std::unordered_map<const Node*, T> memo;

  // Iterative post-order walk: deep words nest a few hundred levels.
  struct Frame {
    const Expr* e;
    bool expanded;
  };
  std::vector<Frame> stack{{&root, false}};
  while (!stack.empty()) {
    Frame& top = stack.back();
    const Expr& e = *top.e;
    if (memo.count(e.id())) {
      stack.pop_back();
      continue;
    }
    if (!top.expanded) {
      top.expanded = true;
      for (const Expr& c : e.children())
        if (!memo.count(c.id())) stack.push_back({&c, false});
      continue;
    }
    T result;
    switch (e.kind()) {
      case NodeKind::constant:
        try {
          result = F.from_rational(e.value());
        } catch (const std::domain_error&) {
          throw DivisionByZero(e);
        }
        break;
      case NodeKind::symbol:
        result = v.get(e.symbol_value());
        break;
      case NodeKind::sum: {
        result = F.zero();
        for (const Expr& c : e.children()) result = F.add(result, memo.at(c.id()));
        break;
      }
      case NodeKind::product: {
        result = F.one();
        for (const Expr& c : e.children()) result = F.mul(result, memo.at(c.id()));
        break;
      }
      case NodeKind::quotient: {
        const T& den = memo.at(e.children()[1].id());
        if (F.is_zero(den)) throw DivisionByZero(e.children()[1]);
        result = F.mul(memo.at(e.children()[0].id()), F.inv(den));
        break;
      }
      case NodeKind::power: {
        const T& base = memo.at(e.children()[0].id());
        if (e.exponent() < 0 && F.is_zero(base)) throw DivisionByZero(e.children()[0]);
        result = F.pow(base, e.exponent());
        break;
      }
    }
    memo.emplace(e.id(), std::move(result));
    stack.pop_back();
  }
  return memo.at(root.id());
}

template class Valuation<ModularField>;
template class Valuation<RationalField>;
template ModularField::value_type evaluate(const Expr&, const Valuation<ModularField>&);
template RationalField::value_type evaluate(const Expr&, const Valuation<RationalField>&);

}  // namespace qpweyl
