#pragma once

// Normal forms. normalize() computes the same result as rewriting to a fixpoint
// with the conditional redex relation of rewrite.hpp, but bottom-up in one pass.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "pcalc/rewrite.hpp"
#include "pcalc/term.hpp"

namespace pcalc {

class NormalTerm;
NormalTerm normalize(const OrderTerm& t);

/// A term with no applicable rewrite. Each leaf remembers which leaf of the
/// term handed to normalize() it descends from.
class NormalTerm {
 public:
  const OrderTerm& term() const noexcept { return term_; }
  Kind kind() const noexcept { return term_.kind(); }
  std::size_t leaf_count() const noexcept { return term_.leaf_count(); }
  std::vector<LeafRef> leaves() const { return pcalc::leaves(term_); }

  /// Leaf of the pre-normalization term that leaf `id` descends from.
  std::optional<LeafId> origin(LeafId id) const {
    auto ls = leaves();
    if (id.value >= ls.size() || ls[id.value].tag == kNoTag) return std::nullopt;
    return LeafId{ls[id.value].tag};
  }

  /// Wraps a term that is already normal; throws ContractViolation otherwise.
  static NormalTerm adopt(OrderTerm t) {
    if (!is_normal_form(t)) throw ContractViolation("term is not in normal form: " + render(t));
    return NormalTerm(std::move(t));
  }

  friend bool operator==(const NormalTerm& a, const NormalTerm& b) { return a.term_ == b.term_; }

 private:
  friend NormalTerm normalize(const OrderTerm& t);
  explicit NormalTerm(OrderTerm t) : term_(std::move(t)) {}

  OrderTerm term_;
};

namespace detail {

inline OrderTerm norm(const OrderTerm& t);
inline OrderTerm norm_prod(const OrderTerm& a, const OrderTerm& b);

// Sum node whose parts are all normal.
inline OrderTerm norm_sum(std::vector<OrderTerm> parts) {
  for (;;) {
    // flatten, drop empty, merge finite runs
    std::vector<OrderTerm> flat;
    std::optional<OrderTerm> first_empty;
    auto push = [&](const OrderTerm& x) {
      if (x.is_fin(0)) {
        if (!first_empty) first_empty = x;
        return;
      }
      if (x.is_fin() && !flat.empty() && flat.back().is_fin()) {
        flat.back() = fin_sum(flat.back(), x);
        return;
      }
      flat.push_back(x);
    };
    for (const auto& p : parts) {
      if (p.kind() == Kind::Sum)
        for (const auto& g : p.children()) push(g);
      else
        push(p);
    }
    if (flat.empty()) return first_empty ? *first_empty : OrderTerm::fin(0);

    // n+w -> w, w*+n -> w*
    std::vector<OrderTerm> kept;
    kept.reserve(flat.size());
    for (std::size_t i = 0; i < flat.size(); ++i) {
      if (flat[i].is_fin()) {
        bool before_omega = i + 1 < flat.size() && flat[i + 1].kind() == Kind::Omega;
        bool after_omega_star = i > 0 && flat[i - 1].kind() == Kind::OmegaStar;
        if (before_omega || after_omega_star) continue;
      }
      kept.push_back(flat[i]);
    }

    // leftmost X+X.w or X.w*+X
    std::span<const OrderTerm> s(kept);
    bool changed = false;
    for (std::size_t j = 0; j < s.size() && !changed; ++j) {
      if (s[j].kind() != Kind::Prod) continue;
      const auto& right = s[j].right();
      if (right.kind() == Kind::Omega) {
        if (auto m = run_before(s, j, s[j].left()); m > 0) {
          kept.erase(kept.begin() + static_cast<std::ptrdiff_t>(j - m), kept.begin() + static_cast<std::ptrdiff_t>(j));
          changed = true;
        }
      } else if (right.kind() == Kind::OmegaStar) {
        if (auto m = run_after(s, j, s[j].left()); m > 0) {
          kept.erase(kept.begin() + static_cast<std::ptrdiff_t>(j + 1),
                     kept.begin() + static_cast<std::ptrdiff_t>(j + 1 + m));
          changed = true;
        }
      }
    }
    if (!changed) return OrderTerm::sum(std::move(kept));
    parts = std::move(kept);
  }
}

// Product node whose factors are both normal.
inline OrderTerm norm_prod(const OrderTerm& a, const OrderTerm& b) {
  if (b.is_fin(0)) return b;
  if (a.is_fin(0)) return a;
  if (b.is_fin(1)) return a;
  if (a.is_fin(1)) return b;
  if (a.is_fin() && b.is_fin()) return fin_product(a, b);
  if (b.is_fin()) {
    auto expanded = repeat_sum(a, b.count());
    return norm_sum({expanded.children().begin(), expanded.children().end()});
  }
  if (a.is_fin() && b.kind() == Kind::Omega) return OrderTerm::omega(a.tag());
  if (a.is_fin() && b.kind() == Kind::OmegaStar) return OrderTerm::omega_star(a.tag());
  if (b.kind() == Kind::Sum) {
    std::vector<OrderTerm> parts;
    parts.reserve(b.children().size());
    for (const auto& bi : b.children()) parts.push_back(norm_prod(a, bi));
    return norm_sum(std::move(parts));
  }
  if (a.kind() == Kind::Prod) return norm_prod(a.left(), norm_prod(a.right(), b));
  return OrderTerm::prod(a, b);
}

// Reversal of a normal term, normalized.
inline OrderTerm push_rev(const OrderTerm& t) {
  switch (t.kind()) {
    case Kind::Fin: return t;
    case Kind::Omega: return OrderTerm::omega_star(t.tag());
    case Kind::OmegaStar: return OrderTerm::omega(t.tag());
    case Kind::Sum: {
      std::vector<OrderTerm> parts;
      auto s = t.children();
      for (auto it = s.rbegin(); it != s.rend(); ++it) parts.push_back(push_rev(*it));
      return norm_sum(std::move(parts));
    }
    case Kind::Prod: return norm_prod(push_rev(t.left()), push_rev(t.right()));
    case Kind::Rev: return norm(t.inner());
  }
  return t;
}

inline OrderTerm norm(const OrderTerm& t) {
  switch (t.kind()) {
    case Kind::Fin:
    case Kind::Omega:
    case Kind::OmegaStar: return t;
    case Kind::Rev: return push_rev(norm(t.inner()));
    case Kind::Sum: {
      std::vector<OrderTerm> parts;
      parts.reserve(t.children().size());
      for (const auto& c : t.children()) parts.push_back(norm(c));
      return norm_sum(std::move(parts));
    }
    case Kind::Prod: return norm_prod(norm(t.left()), norm(t.right()));
  }
  return t;
}

}  // namespace detail

inline NormalTerm normalize(const OrderTerm& t) { return NormalTerm(detail::norm(tag_leaves(t))); }

/// Size class of a term; normalization-invariant.
inline Cardinality cardinality(const NormalTerm& t) { return cardinality_of(t.term()); }

/// Keeps the points owned by the letter leaves in `keep` and renormalizes.
/// Leaves inside a product's right factor only index copies and are never
/// removed, so restrict(A.B, S) = restrict(A, S).B. Provenance of the result
/// points into the leaves of t.
inline NormalTerm restrict(const NormalTerm& t, std::span<const LeafId> keep) {
  std::vector<bool> kept(t.leaf_count(), false);
  for (auto id : keep) {
    if (id.value >= kept.size())
      throw ContractViolation("restrict: leaf " + std::to_string(id.value) + " does not exist");
    kept[id.value] = true;
  }
  std::uint32_t next = 0;
  auto go = [&](auto&& self, const OrderTerm& u, bool letter) -> OrderTerm {
    if (u.is_leaf()) {
      auto id = next++;
      if (letter && !kept[id]) return OrderTerm::fin(0);
      return u;
    }
    if (u.kind() == Kind::Prod) {
      auto l = self(self, u.left(), letter);
      auto r = self(self, u.right(), false);
      return OrderTerm::prod(std::move(l), std::move(r));
    }
    std::vector<OrderTerm> kids;
    for (const auto& c : u.children()) kids.push_back(self(self, c, letter));
    return u.with_children(std::move(kids));
  };
  return normalize(go(go, t.term(), true));
}

}  // namespace pcalc
