#pragma once

// Pigeonhole arrows L -> (l1,..,ln)^1: finite thresholds, indecomposability,
// and the decision of L -> (Z,..,Z)^1 through the pair {w.w*, w*.w}.

#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "pcalc/pattern.hpp"

namespace pcalc {

/// total -> (parts)^1 for finite orders: true iff total >= 1 + sum(l_i - 1).
inline bool finite_pigeonhole(std::uint64_t total, const std::vector<std::uint64_t>& parts) {
  if (parts.empty()) throw ContractViolation("finite_pigeonhole: empty parts list");
  std::uint64_t slack = 0;
  for (auto l : parts) {
    if (l == 0) throw ContractViolation("finite_pigeonhole: part sizes must be at least 1");
    if (__builtin_add_overflow(slack, l - 1, &slack)) return false;
  }
  return slack < total;
}

// ---------------------------------------------------------------------------
// Indecomposability

struct IndecomposableYes {
  std::string reason;
};

struct IndecomposableNo {
  std::vector<LeafId> first_piece;  // leaves of the left piece; empty when the split is inside one leaf
  std::string reason;
};

struct IndecomposableUnknown {};

using IndecomposabilityVerdict = std::variant<IndecomposableYes, IndecomposableNo, IndecomposableUnknown>;

inline bool is_yes(const IndecomposabilityVerdict& v) { return std::holds_alternative<IndecomposableYes>(v); }
inline bool is_no(const IndecomposabilityVerdict& v) { return std::holds_alternative<IndecomposableNo>(v); }

namespace detail {

inline std::optional<std::string> indecomposable_trace(const OrderTerm& t) {
  switch (t.kind()) {
    case Kind::Fin:
      if (t.count() == 0) return std::string("empty order");
      if (t.count() == 1) return std::string("one point");
      return std::nullopt;
    case Kind::Omega: return std::string("w");
    case Kind::OmegaStar: return std::string("w*");
    case Kind::Prod: {
      auto a = indecomposable_trace(t.left());
      if (!a) return std::nullopt;
      auto b = indecomposable_trace(t.right());
      if (!b) return std::nullopt;
      return "product of indecomposables (" + *a + ")·(" + *b + ")";
    }
    default: return std::nullopt;
  }
}

}  // namespace detail

/// Yes via the closed rule set (1, w, w*, products of indecomposables); No for
/// finite orders with two or more points and for the catalogued sums w*+w and
/// w+w*; Unknown otherwise.
inline IndecomposabilityVerdict is_indecomposable(const NormalTerm& t) {
  const auto& u = t.term();
  if (auto trace = detail::indecomposable_trace(u)) return IndecomposableYes{*trace};
  if (u.is_fin())
    return IndecomposableNo{{}, "split " + std::to_string(u.count()) + " points into a first point and the rest; "
                                "neither piece has " + std::to_string(u.count()) + " points"};
  if (u.kind() == Kind::Sum && u.children().size() == 2) {
    const auto& a = u.child(0);
    const auto& b = u.child(1);
    if (a.kind() == Kind::OmegaStar && b.kind() == Kind::Omega)
      return IndecomposableNo{{LeafId{0}}, "seam split of w*+w into w* and w: w* has no w-chain, w has no w*-chain"};
    if (a.kind() == Kind::Omega && b.kind() == Kind::OmegaStar)
      return IndecomposableNo{{LeafId{0}}, "seam split of w+w* into w and w*: w has no w*-chain, w* has no w-chain"};
  }
  return IndecomposableUnknown{};
}

// ---------------------------------------------------------------------------
// L -> (Z,..,Z)^1

struct PigeonholeDecision {
  bool holds = false;
  std::optional<Pattern> certificate;
};

/// pieces = 1: L contains Z. pieces >= 2: L contains w.w* or w*.w (independent of pieces).
inline PigeonholeDecision decide_pigeonhole_Z(const NormalTerm& t, int pieces) {
  if (pieces < 1) throw ContractViolation("decide_pigeonhole_Z: pieces must be at least 1");
  if (pieces == 1) {
    bool z = contains(Pattern::Z, t);
    return {z, z ? std::optional<Pattern>(Pattern::Z) : std::nullopt};
  }
  auto found = contains_any(kSeparationPair, t);
  return {found.has_value(), found};
}

/// L -> (w, w*)^1; equivalent to L -> (Z,Z)^1.
inline bool decide_pigeonhole_omega_omegastar(const NormalTerm& t) { return decide_pigeonhole_Z(t, 2).holds; }

// ---------------------------------------------------------------------------
// Witness partitions for L -/-> (w, w*)^1

/// Split of the letter leaves into an A side with no w-chain and a B side with no w*-chain.
struct PartitionWitness {
  NormalTerm subject;
  std::vector<LeafId> a_leaves;
  std::vector<LeafId> b_leaves;
  NormalTerm a_term;
  NormalTerm b_term;
};

namespace detail {

enum class Side : std::uint8_t { A, B };

inline PatternSet profile_of(const OrderTerm& t) {
  ContainmentProfiler p;
  return p.profile(t);
}

// Letters inside a product's left factor all follow the direction of its right
// factor (w* -> A, w -> B): a pattern-free product cannot have a right factor
// with chains in both directions, and its left factor has no chain against it.
inline void assign_sides(const OrderTerm& t, std::optional<Side> forced, std::uint32_t& next, std::vector<Side>& out) {
  switch (t.kind()) {
    case Kind::Fin:
      out[next++] = forced.value_or(Side::B);
      return;
    case Kind::Omega:
      out[next++] = forced.value_or(Side::B);
      return;
    case Kind::OmegaStar:
      out[next++] = forced.value_or(Side::A);
      return;
    case Kind::Sum:
      for (const auto& c : t.children()) assign_sides(c, forced, next, out);
      return;
    case Kind::Prod: {
      auto side = forced;
      if (!side) side = profile_of(t.right()).test(bit(Pattern::OmegaStar)) ? Side::A : Side::B;
      assign_sides(t.left(), side, next, out);
      // right-factor leaves own no points; record them by kind
      assign_sides(t.right(), std::nullopt, next, out);
      return;
    }
    case Kind::Rev: throw ContractViolation("witness_partition: term is not normalized");
  }
}

}  // namespace detail

/// The partition attesting L -/-> (w, w*)^1, checked before it is returned.
inline PartitionWitness witness_partition(const NormalTerm& t) {
  if (auto found = contains_any(kSeparationPair, t))
    throw PatternPresent("witness_partition: " + render(t.term()) + " contains " +
                         std::string(pattern_name(*found)));
  std::vector<detail::Side> sides(t.leaf_count(), detail::Side::B);
  std::uint32_t next = 0;
  detail::assign_sides(t.term(), std::nullopt, next, sides);

  std::vector<LeafId> a, b;
  for (std::uint32_t i = 0; i < sides.size(); ++i) (sides[i] == detail::Side::A ? a : b).push_back(LeafId{i});
  auto a_term = restrict(t, a);
  auto b_term = restrict(t, b);
  if (contains(Pattern::Omega, a_term) || contains(Pattern::OmegaStar, b_term))
    throw InternalContradiction("witness_partition: leaf split of " + render(t.term()) +
                                " fails its check (A = " + render(a_term.term()) + ", B = " +
                                render(b_term.term()) + ")");
  return PartitionWitness{t, std::move(a), std::move(b), std::move(a_term), std::move(b_term)};
}

}  // namespace pcalc
