#pragma once

// Single-step rewriting with the order-type identities.
//
// Reversal push:  (T1+..+Tk)~ -> Tk~+..+T1~   (A.B)~ -> A~.B~   w~ -> w*   w*~ -> w   n~ -> n   T~~ -> T
// Sums:           flatten nested sums, drop 0, n+m -> (n+m)
// Absorption:     n+w -> w   w*+n -> w*   X+X.w -> X.w   X.w*+X -> X.w*
// Products:       A.0 -> 0   0.B -> 0   A.1 -> A   1.B -> B   A.n -> A+..+A   m.w -> w   m.w* -> w*
//                 m.n -> mn  A.(B1+..+Bk) -> A.B1+..+A.Bk   (A.B).C -> A.(B.C)
//
// Inside a sum, X+X.w matches X against a run of consecutive summands when X
// is itself a sum (sums are always flattened before absorption applies).
//
// Two redex relations are exposed. Unconditional: every rule instance anywhere.
// Conditional (the one normalization uses): a node may only be rewritten once
// all of its children are normal, and inside a sum the rule classes fire in
// order flatten/drop/merge, then leaf absorption, then the leftmost product
// absorption. The unconditional relation has non-joinable critical pairs
// (3+w+w.w reaches both w.w and 3+w.w), the conditional one does not.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <string_view>
#include <vector>

#include "pcalc/term.hpp"

namespace pcalc {

enum class Rule : std::uint8_t {
  RevSum,
  RevProd,
  RevOmega,
  RevOmegaStar,
  RevFin,
  RevRev,
  SumFlatten,
  SumDropEmpty,
  SumMergeFin,
  AbsorbFinIntoOmega,
  AbsorbFinIntoOmegaStar,
  AbsorbIntoProdOmega,
  AbsorbIntoProdOmegaStar,
  ProdRightEmpty,
  ProdLeftEmpty,
  ProdRightOne,
  ProdLeftOne,
  ProdRightFinite,
  ProdFinOmega,
  ProdFinOmegaStar,
  ProdFinFin,
  ProdDistribute,
  ProdAssoc,
};

inline std::string_view rule_name(Rule r) {
  switch (r) {
    case Rule::RevSum: return "rev-sum";
    case Rule::RevProd: return "rev-prod";
    case Rule::RevOmega: return "rev-omega";
    case Rule::RevOmegaStar: return "rev-omega-star";
    case Rule::RevFin: return "rev-fin";
    case Rule::RevRev: return "rev-rev";
    case Rule::SumFlatten: return "sum-flatten";
    case Rule::SumDropEmpty: return "sum-drop-empty";
    case Rule::SumMergeFin: return "sum-merge-fin";
    case Rule::AbsorbFinIntoOmega: return "absorb-fin-omega";
    case Rule::AbsorbFinIntoOmegaStar: return "absorb-omega-star-fin";
    case Rule::AbsorbIntoProdOmega: return "absorb-into-prod-omega";
    case Rule::AbsorbIntoProdOmegaStar: return "absorb-into-prod-omega-star";
    case Rule::ProdRightEmpty: return "prod-right-empty";
    case Rule::ProdLeftEmpty: return "prod-left-empty";
    case Rule::ProdRightOne: return "prod-right-one";
    case Rule::ProdLeftOne: return "prod-left-one";
    case Rule::ProdRightFinite: return "prod-right-finite";
    case Rule::ProdFinOmega: return "prod-fin-omega";
    case Rule::ProdFinOmegaStar: return "prod-fin-omega-star";
    case Rule::ProdFinFin: return "prod-fin-fin";
    case Rule::ProdDistribute: return "prod-distribute";
    case Rule::ProdAssoc: return "prod-assoc";
  }
  return "?";
}

/// A rule instance: the node reached by following child indices `path`, and
/// for sum rules the summand index the rule is anchored at.
struct Redex {
  std::vector<std::uint32_t> path;
  Rule rule = Rule::RevFin;
  std::size_t at = 0;
};

enum class RedexMode { Conditional, Unconditional };

/// Cap on the node count produced by expanding A.n into n summands.
inline constexpr std::size_t kExpansionNodeLimit = std::size_t{1} << 22;

namespace detail {

inline std::vector<OrderTerm> sum_parts(const OrderTerm& x) {
  if (x.kind() == Kind::Sum) return {x.children().begin(), x.children().end()};
  return {x};
}

// Length of the run X matched immediately before position j (X.w at j), or 0.
inline std::size_t run_before(std::span<const OrderTerm> s, std::size_t j, const OrderTerm& x) {
  auto parts = sum_parts(x);
  std::size_t m = parts.size();
  if (j < m) return 0;
  for (std::size_t k = 0; k < m; ++k)
    if (!(s[j - m + k] == parts[k])) return 0;
  return m;
}

// Length of the run X matched immediately after position j (X.w* at j), or 0.
inline std::size_t run_after(std::span<const OrderTerm> s, std::size_t j, const OrderTerm& x) {
  auto parts = sum_parts(x);
  std::size_t m = parts.size();
  if (j + m >= s.size()) return 0;
  for (std::size_t k = 0; k < m; ++k)
    if (!(s[j + 1 + k] == parts[k])) return 0;
  return m;
}

inline void sum_class_flatten(const OrderTerm& t, std::vector<Redex>& out, const std::vector<std::uint32_t>& path) {
  auto s = t.children();
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i].kind() == Kind::Sum) out.push_back({path, Rule::SumFlatten, i});
    if (s[i].is_fin(0)) out.push_back({path, Rule::SumDropEmpty, i});
    if (i + 1 < s.size() && s[i].is_fin() && s[i + 1].is_fin()) out.push_back({path, Rule::SumMergeFin, i});
  }
}

inline void sum_class_leaf_absorb(const OrderTerm& t, std::vector<Redex>& out, const std::vector<std::uint32_t>& path) {
  auto s = t.children();
  for (std::size_t i = 0; i + 1 < s.size(); ++i) {
    if (s[i].is_fin() && s[i + 1].kind() == Kind::Omega) out.push_back({path, Rule::AbsorbFinIntoOmega, i});
    if (s[i].kind() == Kind::OmegaStar && s[i + 1].is_fin())
      out.push_back({path, Rule::AbsorbFinIntoOmegaStar, i});
  }
}

inline void sum_class_prod_absorb(const OrderTerm& t, std::vector<Redex>& out, const std::vector<std::uint32_t>& path,
                                  bool leftmost_only) {
  auto s = t.children();
  for (std::size_t j = 0; j < s.size(); ++j) {
    if (s[j].kind() != Kind::Prod) continue;
    const auto& right = s[j].right();
    if (right.kind() == Kind::Omega && run_before(s, j, s[j].left()) > 0) {
      out.push_back({path, Rule::AbsorbIntoProdOmega, j});
      if (leftmost_only) return;
    }
    if (right.kind() == Kind::OmegaStar && run_after(s, j, s[j].left()) > 0) {
      out.push_back({path, Rule::AbsorbIntoProdOmegaStar, j});
      if (leftmost_only) return;
    }
  }
}

inline void prod_rules(const OrderTerm& t, std::vector<Redex>& out, const std::vector<std::uint32_t>& path) {
  const auto& a = t.left();
  const auto& b = t.right();
  if (b.is_fin(0)) out.push_back({path, Rule::ProdRightEmpty, 0});
  if (a.is_fin(0)) out.push_back({path, Rule::ProdLeftEmpty, 0});
  if (b.is_fin(1)) out.push_back({path, Rule::ProdRightOne, 0});
  if (a.is_fin(1)) out.push_back({path, Rule::ProdLeftOne, 0});
  if (b.is_fin() && b.count() >= 2) out.push_back({path, Rule::ProdRightFinite, 0});
  if (a.is_fin() && a.count() >= 1 && b.kind() == Kind::Omega) out.push_back({path, Rule::ProdFinOmega, 0});
  if (a.is_fin() && a.count() >= 1 && b.kind() == Kind::OmegaStar)
    out.push_back({path, Rule::ProdFinOmegaStar, 0});
  if (a.is_fin() && b.is_fin()) out.push_back({path, Rule::ProdFinFin, 0});
  if (b.kind() == Kind::Sum) out.push_back({path, Rule::ProdDistribute, 0});
  if (a.kind() == Kind::Prod) out.push_back({path, Rule::ProdAssoc, 0});
}

inline void rev_rules(const OrderTerm& t, std::vector<Redex>& out, const std::vector<std::uint32_t>& path) {
  switch (t.inner().kind()) {
    case Kind::Sum: out.push_back({path, Rule::RevSum, 0}); break;
    case Kind::Prod: out.push_back({path, Rule::RevProd, 0}); break;
    case Kind::Omega: out.push_back({path, Rule::RevOmega, 0}); break;
    case Kind::OmegaStar: out.push_back({path, Rule::RevOmegaStar, 0}); break;
    case Kind::Fin: out.push_back({path, Rule::RevFin, 0}); break;
    case Kind::Rev: out.push_back({path, Rule::RevRev, 0}); break;
  }
}

inline void node_rules(const OrderTerm& t, RedexMode mode, std::vector<Redex>& out,
                       const std::vector<std::uint32_t>& path) {
  switch (t.kind()) {
    case Kind::Sum: {
      if (mode == RedexMode::Unconditional) {
        sum_class_flatten(t, out, path);
        sum_class_leaf_absorb(t, out, path);
        sum_class_prod_absorb(t, out, path, false);
        return;
      }
      auto before = out.size();
      sum_class_flatten(t, out, path);
      if (out.size() != before) return;
      sum_class_leaf_absorb(t, out, path);
      if (out.size() != before) return;
      sum_class_prod_absorb(t, out, path, true);
      return;
    }
    case Kind::Prod: prod_rules(t, out, path); return;
    case Kind::Rev: rev_rules(t, out, path); return;
    default: return;
  }
}

// Returns true iff the subtree had no redexes.
inline bool collect_redexes(const OrderTerm& t, RedexMode mode, std::vector<std::uint32_t>& path,
                            std::vector<Redex>& out) {
  auto before = out.size();
  bool children_normal = true;
  for (std::uint32_t i = 0; i < t.children().size(); ++i) {
    path.push_back(i);
    children_normal &= collect_redexes(t.child(i), mode, path, out);
    path.pop_back();
  }
  if (children_normal || mode == RedexMode::Unconditional) node_rules(t, mode, out, path);
  return out.size() == before;
}

inline OrderTerm fin_product(const OrderTerm& a, const OrderTerm& b) {
  std::uint64_t n = 0;
  if (__builtin_mul_overflow(a.count(), b.count(), &n))
    throw std::overflow_error("finite product overflows 64 bits");
  return OrderTerm::fin(n, a.tag());
}

inline OrderTerm fin_sum(const OrderTerm& a, const OrderTerm& b) {
  std::uint64_t n = 0;
  if (__builtin_add_overflow(a.count(), b.count(), &n))
    throw std::overflow_error("finite sum overflows 64 bits");
  return OrderTerm::fin(n, a.tag());
}

inline OrderTerm repeat_sum(const OrderTerm& a, std::uint64_t n) {
  if (n > kExpansionNodeLimit || n * a.size() > kExpansionNodeLimit)
    throw BudgetExceeded("expanding a product with finite right factor exceeds the node limit");
  return OrderTerm::sum(std::vector<OrderTerm>(static_cast<std::size_t>(n), a));
}

inline OrderTerm apply_at_node(const OrderTerm& t, const Redex& r) {
  switch (r.rule) {
    case Rule::RevSum: {
      auto parts = t.inner().children();
      std::vector<OrderTerm> out;
      out.reserve(parts.size());
      for (auto it = parts.rbegin(); it != parts.rend(); ++it) out.push_back(OrderTerm::rev(*it));
      return OrderTerm::sum(std::move(out));
    }
    case Rule::RevProd:
      return OrderTerm::prod(OrderTerm::rev(t.inner().left()), OrderTerm::rev(t.inner().right()));
    case Rule::RevOmega: return OrderTerm::omega_star(t.inner().tag());
    case Rule::RevOmegaStar: return OrderTerm::omega(t.inner().tag());
    case Rule::RevFin: return t.inner();
    case Rule::RevRev: return t.inner().inner();

    case Rule::SumFlatten: {
      auto s = t.children();
      std::vector<OrderTerm> out(s.begin(), s.begin() + r.at);
      for (const auto& g : s[r.at].children()) out.push_back(g);
      out.insert(out.end(), s.begin() + r.at + 1, s.end());
      return OrderTerm::sum(std::move(out));
    }
    case Rule::SumDropEmpty: {
      auto s = t.children();
      std::vector<OrderTerm> out(s.begin(), s.end());
      out.erase(out.begin() + r.at);
      return OrderTerm::sum(std::move(out));
    }
    case Rule::SumMergeFin: {
      auto s = t.children();
      std::vector<OrderTerm> out(s.begin(), s.end());
      out[r.at] = fin_sum(s[r.at], s[r.at + 1]);
      out.erase(out.begin() + r.at + 1);
      return OrderTerm::sum(std::move(out));
    }
    case Rule::AbsorbFinIntoOmega: {
      auto s = t.children();
      std::vector<OrderTerm> out(s.begin(), s.end());
      out.erase(out.begin() + r.at);
      return OrderTerm::sum(std::move(out));
    }
    case Rule::AbsorbFinIntoOmegaStar: {
      auto s = t.children();
      std::vector<OrderTerm> out(s.begin(), s.end());
      out.erase(out.begin() + r.at + 1);
      return OrderTerm::sum(std::move(out));
    }
    case Rule::AbsorbIntoProdOmega: {
      auto s = t.children();
      auto m = run_before(s, r.at, s[r.at].left());
      std::vector<OrderTerm> out(s.begin(), s.end());
      out.erase(out.begin() + (r.at - m), out.begin() + r.at);
      return OrderTerm::sum(std::move(out));
    }
    case Rule::AbsorbIntoProdOmegaStar: {
      auto s = t.children();
      auto m = run_after(s, r.at, s[r.at].left());
      std::vector<OrderTerm> out(s.begin(), s.end());
      out.erase(out.begin() + r.at + 1, out.begin() + r.at + 1 + m);
      return OrderTerm::sum(std::move(out));
    }

    case Rule::ProdRightEmpty: return t.right();
    case Rule::ProdLeftEmpty: return t.left();
    case Rule::ProdRightOne: return t.left();
    case Rule::ProdLeftOne: return t.right();
    case Rule::ProdRightFinite: return repeat_sum(t.left(), t.right().count());
    case Rule::ProdFinOmega: return OrderTerm::omega(t.left().tag());
    case Rule::ProdFinOmegaStar: return OrderTerm::omega_star(t.left().tag());
    case Rule::ProdFinFin: return fin_product(t.left(), t.right());
    case Rule::ProdDistribute: {
      std::vector<OrderTerm> out;
      for (const auto& b : t.right().children()) out.push_back(OrderTerm::prod(t.left(), b));
      return OrderTerm::sum(std::move(out));
    }
    case Rule::ProdAssoc:
      return OrderTerm::prod(t.left().left(), OrderTerm::prod(t.left().right(), t.right()));
  }
  return t;
}

inline OrderTerm apply_along(const OrderTerm& t, const Redex& r, std::size_t depth) {
  if (depth == r.path.size()) return apply_at_node(t, r);
  std::vector<OrderTerm> kids(t.children().begin(), t.children().end());
  auto i = r.path[depth];
  kids.at(i) = apply_along(t.child(i), r, depth + 1);
  return t.with_children(std::move(kids));
}

}  // namespace detail

/// All redexes of t, in left-to-right (pre-order of subtree completion) order.
inline std::vector<Redex> find_redexes(const OrderTerm& t, RedexMode mode = RedexMode::Conditional) {
  std::vector<Redex> out;
  std::vector<std::uint32_t> path;
  detail::collect_redexes(t, mode, path, out);
  return out;
}

inline OrderTerm apply_redex(const OrderTerm& t, const Redex& r) { return detail::apply_along(t, r, 0); }

/// True iff no rule applies anywhere.
inline bool is_normal_form(const OrderTerm& t) { return find_redexes(t, RedexMode::Conditional).empty(); }

enum class Strategy { LeftmostInnermost, Random };

/// Rewrites t to normal form one conditional redex at a time.
template <class Rng = std::mt19937_64>
OrderTerm rewrite_to_normal(OrderTerm t, Strategy strategy, Rng* rng = nullptr, std::size_t max_steps = 1'000'000) {
  for (std::size_t step = 0; step < max_steps; ++step) {
    auto redexes = find_redexes(t, RedexMode::Conditional);
    if (redexes.empty()) return t;
    std::size_t pick = 0;
    if (strategy == Strategy::Random && rng != nullptr) {
      std::uniform_int_distribution<std::size_t> dist(0, redexes.size() - 1);
      pick = dist(*rng);
    }
    t = apply_redex(t, redexes[pick]);
  }
  throw BudgetExceeded("rewriting did not terminate within the step limit");
}

}  // namespace pcalc
