#include "qpweyl/transform.hpp"

#include <algorithm>
#include <unordered_map>

namespace qpweyl {

Transformation& Transformation::set(Symbol x, Expr image) {
  if (images_.size() <= x.id()) images_.resize(x.id() + 1);
  if (image.kind() == NodeKind::symbol && image.symbol_value() == x)
    images_[x.id()].reset();
  else
    images_[x.id()] = std::move(image);
  return *this;
}

Expr Transformation::image(Symbol x) const {
  if (moves(x)) return *images_[x.id()];
  return Expr::symbol(x);
}

std::vector<Symbol> Transformation::moved_symbols() const {
  std::vector<Symbol> out;
  for (std::uint32_t i = 0; i < images_.size(); ++i)
    if (images_[i]) out.emplace_back(i);
  return out;
}

Expr substitute(const Expr& root, const Transformation& m) {
  std::unordered_map<const Node*, Expr> memo;
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
    Expr result = e;
    switch (e.kind()) {
      case NodeKind::constant:
        break;
      case NodeKind::symbol:
        result = m.image(e.symbol_value());
        break;
      default: {
        std::vector<Expr> kids;
        kids.reserve(e.children().size());
        bool changed = false;
        for (const Expr& c : e.children()) {
          const Expr& r = memo.at(c.id());
          changed = changed || !(r == c);
          kids.push_back(r);
        }
        if (!changed) break;
        switch (e.kind()) {
          case NodeKind::sum:
            result = add(std::move(kids));
            break;
          case NodeKind::product:
            result = mul(std::move(kids));
            break;
          case NodeKind::quotient:
            result = div(kids[0], kids[1]);
            break;
          case NodeKind::power:
            result = pow(kids[0], e.exponent());
            break;
          default:
            break;
        }
      }
    }
    memo.emplace(e.id(), std::move(result));
    stack.pop_back();
  }
  return memo.at(root.id());
}

Transformation compose(const Transformation& outer, const Transformation& inner) {
  Transformation out(outer.label() + " " + inner.label());
  std::vector<Symbol> domain = outer.moved_symbols();
  for (Symbol s : inner.moved_symbols()) domain.push_back(s);
  std::sort(domain.begin(), domain.end());
  domain.erase(std::unique(domain.begin(), domain.end()), domain.end());
  for (Symbol x : domain) out.set(x, substitute(inner.image(x), outer));
  return out;
}

}  // namespace qpweyl
