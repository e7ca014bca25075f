#include "qpweyl/normal_form.hpp"

#include <algorithm>
#include <unordered_map>

#include "qpweyl/field.hpp"

namespace qpweyl {

namespace {

thread_local std::size_t g_term_limit = 200'000;

Monomial mono_mul(const Monomial& a, const Monomial& b, int sign_b = 1) {
  Monomial out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].first < a[i].first) {
      out.emplace_back(b[j].first, sign_b * b[j].second);
      ++j;
    } else {
      int e = a[i].second + sign_b * b[j].second;
      if (e != 0) out.emplace_back(a[i].first, e);
      ++i;
      ++j;
    }
  }
  return out;
}

Monomial mono_neg(const Monomial& a) {
  Monomial out = a;
  for (auto& [v, e] : out) e = -e;
  return out;
}

// Componentwise min (absent = 0).
Monomial mono_min(const Monomial& a, const Monomial& b) {
  Monomial out;
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
      if (a[i].second < 0) out.push_back(a[i]);
      ++i;
    } else if (i == a.size() || b[j].first < a[i].first) {
      if (b[j].second < 0) out.push_back(b[j]);
      ++j;
    } else {
      int e = std::min(a[i].second, b[j].second);
      if (e != 0) out.emplace_back(a[i].first, e);
      ++i;
      ++j;
    }
  }
  return out;
}

bool mono_divides(const Monomial& d, const Monomial& m) {
  // d | m for genuine monomials: every exponent of d <= that of m.
  std::size_t j = 0;
  for (const auto& [v, e] : d) {
    while (j < m.size() && m[j].first < v) ++j;
    if (j == m.size() || m[j].first != v || m[j].second < e) return false;
  }
  return true;
}

Expr mono_factor_expr(std::uint32_t var, int e) { return pow(Expr::symbol(Symbol(var)), e); }

}  // namespace

int compare_lex(const Monomial& a, const Monomial& b) {
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
      return a[i].second > 0 ? 1 : -1;
    }
    if (i == a.size() || b[j].first < a[i].first) {
      return b[j].second > 0 ? -1 : 1;
    }
    if (a[i].second != b[j].second) return a[i].second > b[j].second ? 1 : -1;
    ++i;
    ++j;
  }
  return 0;
}

// ---------------------------------------------------------------------------
// Polynomial

void Polynomial::set_term_limit(std::size_t limit) { g_term_limit = limit; }
std::size_t Polynomial::term_limit() { return g_term_limit; }

void Polynomial::check_limit() const {
  if (terms_.size() > g_term_limit) throw NormalizationLimit("polynomial exceeds term limit");
}

Polynomial Polynomial::constant(const mpq_class& c) {
  Polynomial p;
  if (c != 0) p.terms_.emplace(Monomial{}, c);
  return p;
}

Polynomial Polynomial::monomial(const Monomial& m, const mpq_class& c) {
  Polynomial p;
  if (c != 0) p.terms_.emplace(m, c);
  return p;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  Polynomial out = *this;
  for (const auto& [m, c] : o.terms_) {
    auto [it, inserted] = out.terms_.try_emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) out.terms_.erase(it);
    }
  }
  out.check_limit();
  return out;
}

Polynomial Polynomial::operator-(const Polynomial& o) const { return *this + o.scaled(-1, {}); }

Polynomial Polynomial::operator*(const Polynomial& o) const {
  if (is_zero() || o.is_zero()) return {};
  if (static_cast<double>(size()) * static_cast<double>(o.size()) > 50.0 * static_cast<double>(g_term_limit))
    throw NormalizationLimit("product too large");
  Polynomial out;
  for (const auto& [ma, ca] : terms_) {
    for (const auto& [mb, cb] : o.terms_) {
      mpq_class prod = ca * cb;
      auto [it, inserted] = out.terms_.try_emplace(mono_mul(ma, mb), prod);
      if (!inserted) {
        it->second += prod;
        if (it->second == 0) out.terms_.erase(it);
      }
    }
    out.check_limit();
  }
  return out;
}

Polynomial Polynomial::scaled(const mpq_class& c, const Monomial& m) const {
  Polynomial out;
  if (c == 0) return out;
  for (const auto& [mm, cc] : terms_) out.terms_.emplace_hint(out.terms_.end(), mono_mul(mm, m), cc * c);
  return out;
}

Monomial Polynomial::monomial_content() const {
  // min over terms of each exponent; a variable missing from a term counts as 0
  std::map<std::uint32_t, std::pair<int, std::size_t>> lo;
  for (const auto& [m, c] : terms_) {
    for (auto [v, e] : m) {
      auto [it, inserted] = lo.try_emplace(v, e, 0);
      it->second.first = std::min(it->second.first, static_cast<int>(e));
      ++it->second.second;
    }
  }
  Monomial out;
  for (auto [v, st] : lo) {
    int e = st.second < terms_.size() ? std::min(st.first, 0) : st.first;
    if (e != 0) out.emplace_back(v, e);
  }
  return out;
}

std::optional<Polynomial> Polynomial::divide_exact(const Polynomial& divisor) const {
  if (divisor.is_zero()) return std::nullopt;
  Polynomial rem = *this;
  Polynomial quot;
  const Monomial& lm = divisor.leading_monomial();
  const mpq_class& lc = divisor.leading_coefficient();
  std::size_t steps = 0;
  while (!rem.is_zero()) {
    const Monomial& m = rem.leading_monomial();
    if (!mono_divides(lm, m)) return std::nullopt;
    Monomial qm = mono_mul(m, lm, -1);
    mpq_class qc = rem.leading_coefficient() / lc;
    rem = rem - divisor.scaled(qc, qm);
    quot.terms_.emplace(std::move(qm), std::move(qc));
    if (++steps > g_term_limit) throw NormalizationLimit("division too long");
  }
  return quot;
}

bool operator<(const Polynomial& a, const Polynomial& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  auto ia = a.terms_.begin();
  auto ib = b.terms_.begin();
  for (; ia != a.terms_.end(); ++ia, ++ib) {
    int c = compare_lex(ia->first, ib->first);
    if (c != 0) return c > 0;
    if (ia->second != ib->second) return ia->second < ib->second;
  }
  return false;
}

Expr Polynomial::to_expr() const {
  std::vector<Expr> terms;
  terms.reserve(terms_.size());
  for (const auto& [m, c] : terms_) {
    std::vector<Expr> factors{Expr::constant(c)};
    for (auto [v, e] : m) factors.push_back(mono_factor_expr(v, e));
    terms.push_back(mul(std::move(factors)));
  }
  return add(std::move(terms));
}

// ---------------------------------------------------------------------------
// FactoredFraction

FactoredFraction FactoredFraction::constant(const mpq_class& c) {
  FactoredFraction f;
  f.coefficient_ = c;
  return f;
}

FactoredFraction FactoredFraction::symbol(Symbol s) {
  FactoredFraction f;
  f.coefficient_ = 1;
  f.monomial_ = {{s.id(), 1}};
  return f;
}

FactoredFraction FactoredFraction::from_polynomial(const Polynomial& p) {
  if (p.is_zero()) return {};
  FactoredFraction out;
  Monomial content = p.monomial_content();
  Polynomial prim = p.scaled(1, mono_neg(content));
  out.monomial_ = content;
  out.coefficient_ = prim.leading_coefficient();
  if (prim.size() == 1) return out;
  mpq_class inv_lc = 1 / out.coefficient_;
  out.factors_.emplace_back(std::make_shared<const Polynomial>(prim.scaled(inv_lc, {})), 1);
  return out;
}

void FactoredFraction::merge_factor(const std::shared_ptr<const Polynomial>& p, int e) {
  if (e == 0) return;
  auto it = std::lower_bound(factors_.begin(), factors_.end(), p,
                             [](const Factor& f, const std::shared_ptr<const Polynomial>& q) { return *f.first < *q; });
  if (it != factors_.end() && *it->first == *p) {
    it->second += e;
    if (it->second == 0) factors_.erase(it);
  } else {
    factors_.insert(it, {p, e});
  }
}

FactoredFraction FactoredFraction::operator*(const FactoredFraction& o) const {
  if (is_zero() || o.is_zero()) return {};
  FactoredFraction out = *this;
  out.coefficient_ *= o.coefficient_;
  out.monomial_ = mono_mul(monomial_, o.monomial_);
  for (const auto& [p, e] : o.factors_) out.merge_factor(p, e);
  return out;
}

FactoredFraction FactoredFraction::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero");
  FactoredFraction out = *this;
  out.coefficient_ = 1 / coefficient_;
  out.monomial_ = mono_neg(monomial_);
  for (auto& f : out.factors_) f.second = -f.second;
  return out;
}

FactoredFraction FactoredFraction::power(long e) const {
  if (e == 0) return constant(1);
  if (is_zero()) {
    if (e < 0) throw std::domain_error("negative power of zero");
    return {};
  }
  FactoredFraction out = e > 0 ? *this : inverse();
  long n = e > 0 ? e : -e;
  mpz_class num, den;
  mpz_pow_ui(num.get_mpz_t(), out.coefficient_.get_num_mpz_t(), static_cast<unsigned long>(n));
  mpz_pow_ui(den.get_mpz_t(), out.coefficient_.get_den_mpz_t(), static_cast<unsigned long>(n));
  out.coefficient_ = mpq_class(num, den);
  out.coefficient_.canonicalize();
  for (auto& [v, x] : out.monomial_) x = static_cast<std::int32_t>(x * n);
  for (auto& f : out.factors_) f.second = static_cast<int>(f.second * n);
  return out;
}

FactoredFraction FactoredFraction::operator+(const FactoredFraction& o) const {
  if (is_zero()) return o;
  if (o.is_zero()) return *this;

  // Pull out the common part: min exponent of every factor and variable.
  FactoredFraction common = constant(1);
  common.monomial_ = mono_min(monomial_, o.monomial_);
  {
    std::size_t i = 0, j = 0;
    while (i < factors_.size() || j < o.factors_.size()) {
      if (j == o.factors_.size() || (i < factors_.size() && *factors_[i].first < *o.factors_[j].first)) {
        if (factors_[i].second < 0) common.factors_.push_back(factors_[i]);
        ++i;
      } else if (i == factors_.size() || *o.factors_[j].first < *factors_[i].first) {
        if (o.factors_[j].second < 0) common.factors_.push_back(o.factors_[j]);
        ++j;
      } else {
        int e = std::min(factors_[i].second, o.factors_[j].second);
        if (e != 0) common.factors_.emplace_back(factors_[i].first, e);
        ++i;
        ++j;
      }
    }
  }

  // The cofactors have nonnegative exponents only: expand them.
  auto expand_cofactor = [&](const FactoredFraction& x) {
    FactoredFraction rest = x * common.inverse();
    Polynomial p = Polynomial::monomial(rest.monomial_, rest.coefficient_);
    for (const auto& [f, e] : rest.factors_)
      for (int k = 0; k < e; ++k) p = p * *f;
    return p;
  };
  Polynomial sum = expand_cofactor(*this) + expand_cofactor(o);
  if (sum.is_zero()) return {};

  FactoredFraction s = from_polynomial(sum);
  // Cancel denominator factors of the common part that divide the new factor.
  if (!s.factors_.empty()) {
    std::shared_ptr<const Polynomial> p = s.factors_.front().first;
    s.factors_.clear();
    for (const auto& [f, e] : common.factors_) {
      if (e >= 0) continue;
      for (int k = 0; k < -e && p->size() > 1; ++k) {
        auto q = p->divide_exact(*f);
        if (!q) break;
        s.merge_factor(f, 1);
        p = std::make_shared<const Polynomial>(std::move(*q));
      }
    }
    if (p->size() > 1) {
      s.merge_factor(p, 1);
    } else {
      s.coefficient_ *= p->leading_coefficient();
      s.monomial_ = mono_mul(s.monomial_, p->leading_monomial());
    }
  }
  return common * s;
}

Expr FactoredFraction::to_expr() const {
  if (is_zero()) return Expr::integer(0);
  std::vector<Expr> num{Expr::constant(mpq_class(coefficient_.get_num()))};
  std::vector<Expr> den{Expr::constant(mpq_class(coefficient_.get_den()))};
  for (auto [v, e] : monomial_) (e > 0 ? num : den).push_back(mono_factor_expr(v, e > 0 ? e : -e));
  for (const auto& [p, e] : factors_) (e > 0 ? num : den).push_back(pow(p->to_expr(), e > 0 ? e : -e));
  return div(mul(std::move(num)), mul(std::move(den)));
}

// ---------------------------------------------------------------------------

std::optional<FactoredFraction> normalize(const Expr& root, const NormalizeLimits& limits) {
  if (dag_size(root) > limits.max_dag_nodes) return std::nullopt;
  std::size_t saved = Polynomial::term_limit();
  Polynomial::set_term_limit(limits.max_terms);
  std::unordered_map<const Node*, FactoredFraction> memo;
  struct Frame {
    const Expr* e;
    bool expanded;
  };
  std::vector<Frame> stack{{&root, false}};
  try {
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
      FactoredFraction r;
      switch (e.kind()) {
        case NodeKind::constant:
          r = FactoredFraction::constant(e.value());
          break;
        case NodeKind::symbol:
          r = FactoredFraction::symbol(e.symbol_value());
          break;
        case NodeKind::sum:
          r = FactoredFraction::constant(0);
          for (const Expr& c : e.children()) r = r + memo.at(c.id());
          break;
        case NodeKind::product:
          r = FactoredFraction::constant(1);
          for (const Expr& c : e.children()) r = r * memo.at(c.id());
          break;
        case NodeKind::quotient: {
          const FactoredFraction& den = memo.at(e.children()[1].id());
          if (den.is_zero()) throw DivisionByZero(e.children()[1]);
          r = memo.at(e.children()[0].id()) * den.inverse();
          break;
        }
        case NodeKind::power: {
          const FactoredFraction& base = memo.at(e.children()[0].id());
          if (base.is_zero() && e.exponent() < 0) throw DivisionByZero(e.children()[0]);
          r = base.power(e.exponent());
          break;
        }
      }
      memo.emplace(e.id(), std::move(r));
      stack.pop_back();
    }
  } catch (const NormalizationLimit&) {
    Polynomial::set_term_limit(saved);
    return std::nullopt;
  } catch (...) {
    Polynomial::set_term_limit(saved);
    throw;
  }
  Polynomial::set_term_limit(saved);
  return memo.at(root.id());
}

Expr simplify(const Expr& e, const NormalizeLimits& limits) {
  auto nf = normalize(e, limits);
  return nf ? nf->to_expr() : e;
}

}  // namespace qpweyl
