#pragma once

// Containment of seven fixed order types, decided by structural recursion over
// normal forms. Every product in a normal form has an infinite right factor,
// which is what makes the product rules complete.
//
// Rules (A.B a product, "A≠0" meaning A is nonempty):
//   w     : w leaf; sum: some part; A.B: (w<A and B≠0) or (A≠0 and w<B)
//   z     : sum: some part, or w* in Ti and w in Tj with i<j;
//           A.B: z<A, or A≠0 and z<B, or w<A and w*<B, or w*<A and w<B
//   w.w*  : sum: some part; A.B: w.w*<A, or A≠0 and w.w*<B, or w<A and w*<B
//   w.w   : sum: some part; A.B: w.w<A, or A≠0 and w.w<B, or w<A and w<B
// and the mirror images for w*, w*.w and w*.w*. Single-part reduction for sums
// is valid for the indecomposable patterns; z is decomposable and needs the
// two-index rule.

#include <array>
#include <bitset>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "pcalc/normalize.hpp"

namespace pcalc {

enum class Pattern : std::uint8_t {
  Omega,                // ω
  OmegaStar,            // ω*
  Z,                    // ω*+ω
  OmegaTimesOmegaStar,  // ω·ω*
  OmegaStarTimesOmega,  // ω*·ω
  OmegaSquared,         // ω·ω
  OmegaSquaredStar,     // (ω·ω)* = ω*·ω*
};

inline constexpr std::array<Pattern, 7> kAllPatterns = {
    Pattern::Omega,        Pattern::OmegaStar,        Pattern::Z, Pattern::OmegaTimesOmegaStar,
    Pattern::OmegaStarTimesOmega, Pattern::OmegaSquared, Pattern::OmegaSquaredStar};

/// The pair whose presence decides L -> (Z,Z)^1 and L -> (Z,n)^2 for n >= 3.
inline constexpr std::array<Pattern, 2> kSeparationPair = {Pattern::OmegaTimesOmegaStar,
                                                           Pattern::OmegaStarTimesOmega};

inline Pattern dual(Pattern p) {
  switch (p) {
    case Pattern::Omega: return Pattern::OmegaStar;
    case Pattern::OmegaStar: return Pattern::Omega;
    case Pattern::Z: return Pattern::Z;
    case Pattern::OmegaTimesOmegaStar: return Pattern::OmegaStarTimesOmega;
    case Pattern::OmegaStarTimesOmega: return Pattern::OmegaTimesOmegaStar;
    case Pattern::OmegaSquared: return Pattern::OmegaSquaredStar;
    case Pattern::OmegaSquaredStar: return Pattern::OmegaSquared;
  }
  return p;
}

/// Serialized names: w, w*, z, w.w*, w*.w, w.w, w*.w*.
inline std::string_view pattern_name(Pattern p) {
  switch (p) {
    case Pattern::Omega: return "w";
    case Pattern::OmegaStar: return "w*";
    case Pattern::Z: return "z";
    case Pattern::OmegaTimesOmegaStar: return "w.w*";
    case Pattern::OmegaStarTimesOmega: return "w*.w";
    case Pattern::OmegaSquared: return "w.w";
    case Pattern::OmegaSquaredStar: return "w*.w*";
  }
  return "?";
}

inline std::optional<Pattern> parse_pattern(std::string_view name) {
  for (auto p : kAllPatterns)
    if (pattern_name(p) == name) return p;
  return std::nullopt;
}

/// A normal term denoting the pattern itself.
inline NormalTerm term_of(Pattern p) {
  if (p == Pattern::Z) return normalize(sum({omega_star(), omega()}));
  return normalize(parse(pattern_name(p)));
}

using PatternSet = std::bitset<7>;

namespace detail {

inline std::size_t bit(Pattern p) { return static_cast<std::size_t>(p); }

class ContainmentProfiler {
 public:
  PatternSet profile(const OrderTerm& t) {
    if (auto it = memo_.find(t.identity()); it != memo_.end()) return it->second;
    PatternSet out;
    switch (t.kind()) {
      case Kind::Fin: break;
      case Kind::Omega: out.set(bit(Pattern::Omega)); break;
      case Kind::OmegaStar: out.set(bit(Pattern::OmegaStar)); break;
      case Kind::Sum: {
        bool seen_omega_star = false;
        for (const auto& c : t.children()) {
          auto pc = profile(c);
          out |= pc;
          if (seen_omega_star && pc.test(bit(Pattern::Omega))) out.set(bit(Pattern::Z));
          seen_omega_star |= pc.test(bit(Pattern::OmegaStar));
        }
        break;
      }
      case Kind::Prod: {
        auto a = profile(t.left());
        auto b = profile(t.right());
        bool a_nonempty = !cardinality_of(t.left()).is_empty();
        bool b_nonempty = !cardinality_of(t.right()).is_empty();
        if (!a_nonempty || !b_nonempty) break;
        out = a | b;
        bool aw = a.test(bit(Pattern::Omega)), aws = a.test(bit(Pattern::OmegaStar));
        bool bw = b.test(bit(Pattern::Omega)), bws = b.test(bit(Pattern::OmegaStar));
        if ((aw && bws) || (aws && bw)) out.set(bit(Pattern::Z));
        if (aw && bws) out.set(bit(Pattern::OmegaTimesOmegaStar));
        if (aws && bw) out.set(bit(Pattern::OmegaStarTimesOmega));
        if (aw && bw) out.set(bit(Pattern::OmegaSquared));
        if (aws && bws) out.set(bit(Pattern::OmegaSquaredStar));
        break;
      }
      case Kind::Rev: throw ContractViolation("contains: term is not normalized");
    }
    memo_.emplace(t.identity(), out);
    return out;
  }

 private:
  std::unordered_map<const void*, PatternSet> memo_;
};

}  // namespace detail

/// Every pattern contained in t.
inline PatternSet containment_profile(const NormalTerm& t) {
  detail::ContainmentProfiler profiler;
  return profiler.profile(t.term());
}

inline bool contains(Pattern p, const NormalTerm& t) { return containment_profile(t).test(detail::bit(p)); }

/// Raw-term overload: the term must already be normal.
inline bool contains(Pattern p, const OrderTerm& t) { return contains(p, NormalTerm::adopt(t)); }

/// First pattern of `ps` (in order) that t contains.
inline std::optional<Pattern> contains_any(std::span<const Pattern> ps, const NormalTerm& t) {
  auto profile = containment_profile(t);
  for (auto p : ps)
    if (profile.test(detail::bit(p))) return p;
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Embedding sketches

struct SketchAssignment {
  std::string component;  // "w-chain", "w*-chain", "anchor"
  LeafId leaf;
  Kind leaf_kind = Kind::Fin;
  bool indexes_copies = false;  // the leaf sits in a product's right factor

  friend bool operator==(const SketchAssignment&, const SketchAssignment&) = default;
};

/// Which branch of each containment rule fired, as leaf assignments.
struct EmbeddingSketch {
  Pattern pattern = Pattern::Omega;
  std::vector<SketchAssignment> assignments;
  std::string note;

  friend bool operator==(const EmbeddingSketch&, const EmbeddingSketch&) = default;
};

namespace detail {

class SketchTracer {
 public:
  explicit SketchTracer(EmbeddingSketch& out) : out_(out) {}

  void trace(Pattern p, const OrderTerm& t, std::uint32_t offset, bool via_copies, const std::string& role) {
    switch (t.kind()) {
      case Kind::Omega:
      case Kind::OmegaStar:
        emit(role.empty() ? chain_name(p) : role, t, offset, via_copies);
        note("leaf " + std::to_string(offset) + " is itself a " + std::string(pattern_name(p)) + "-chain");
        return;
      case Kind::Sum: trace_sum(p, t, offset, via_copies, role); return;
      case Kind::Prod: trace_prod(p, t, offset, via_copies, role); return;
      default: throw ContractViolation("embedding_sketch: no embedding in this subterm");
    }
  }

 private:
  static std::string chain_name(Pattern p) {
    return p == Pattern::OmegaStar ? "w*-chain" : "w-chain";
  }

  bool has(Pattern p, const OrderTerm& t) { return profiler_.profile(t).test(bit(p)); }

  void emit(const std::string& component, const OrderTerm& leaf, std::uint32_t id, bool via) {
    out_.assignments.push_back({component, LeafId{id}, leaf.kind(), via});
  }

  void note(const std::string& s) {
    if (!out_.note.empty()) out_.note += "; ";
    out_.note += s;
  }

  // First letter leaf of a nonempty term: one point per copy sits there.
  void anchor(const OrderTerm& t, std::uint32_t offset, bool via) {
    switch (t.kind()) {
      case Kind::Fin:
      case Kind::Omega:
      case Kind::OmegaStar: emit("anchor", t, offset, via); return;
      case Kind::Sum:
        for (const auto& c : t.children()) {
          if (!cardinality_of(c).is_empty()) {
            anchor(c, offset, via);
            return;
          }
          offset += static_cast<std::uint32_t>(c.leaf_count());
        }
        return;
      case Kind::Prod: anchor(t.left(), offset, via); return;
      case Kind::Rev: return;
    }
  }

  void trace_sum(Pattern p, const OrderTerm& t, std::uint32_t offset, bool via, const std::string& role) {
    std::uint32_t off = offset;
    for (std::size_t i = 0; i < t.children().size(); ++i) {
      const auto& c = t.child(i);
      if (has(p, c)) {
        note("summand " + std::to_string(i) + " contains " + std::string(pattern_name(p)));
        trace(p, c, off, via, role);
        return;
      }
      off += static_cast<std::uint32_t>(c.leaf_count());
    }
    if (p != Pattern::Z) throw ContractViolation("embedding_sketch: pattern not contained");
    // w* in an earlier summand, w in a later one
    off = offset;
    std::optional<std::pair<std::size_t, std::uint32_t>> star;
    for (std::size_t i = 0; i < t.children().size(); ++i) {
      const auto& c = t.child(i);
      if (!star && has(Pattern::OmegaStar, c)) {
        star = {i, off};
      } else if (star && has(Pattern::Omega, c)) {
        note("w* in summand " + std::to_string(star->first) + " precedes w in summand " + std::to_string(i));
        trace(Pattern::OmegaStar, t.child(star->first), star->second, via, "w*-chain");
        trace(Pattern::Omega, c, off, via, "w-chain");
        return;
      }
      off += static_cast<std::uint32_t>(c.leaf_count());
    }
    throw ContractViolation("embedding_sketch: pattern not contained");
  }

  void trace_prod(Pattern p, const OrderTerm& t, std::uint32_t offset, bool via, const std::string& role) {
    const auto& a = t.left();
    const auto& b = t.right();
    const auto b_off = offset + static_cast<std::uint32_t>(a.leaf_count());
    if (has(p, a)) {
      note("one copy of the left factor contains " + std::string(pattern_name(p)));
      trace(p, a, offset, via, role);
      return;
    }
    if (has(p, b)) {
      note("the copies follow a " + std::string(pattern_name(p)) + " in the right factor");
      trace(p, b, b_off, true, role);
      anchor(a, offset, via);
      return;
    }
    auto cross = [&](Pattern in_copy, Pattern across, const std::string& copy_role,
                     const std::string& across_role) {
      if (!has(in_copy, a) || !has(across, b)) return false;
      note(std::string(pattern_name(in_copy)) + " inside a copy, copies ordered as " +
           std::string(pattern_name(across)));
      trace(in_copy, a, offset, via, copy_role);
      trace(across, b, b_off, true, across_role);
      return true;
    };
    switch (p) {
      case Pattern::Z:
        if (cross(Pattern::Omega, Pattern::OmegaStar, "w-chain", "w*-chain")) return;
        if (cross(Pattern::OmegaStar, Pattern::Omega, "w*-chain", "w-chain")) return;
        break;
      case Pattern::OmegaTimesOmegaStar:
        if (cross(Pattern::Omega, Pattern::OmegaStar, "copy of w", "w*-chain")) return;
        break;
      case Pattern::OmegaStarTimesOmega:
        if (cross(Pattern::OmegaStar, Pattern::Omega, "copy of w*", "w-chain")) return;
        break;
      case Pattern::OmegaSquared:
        if (cross(Pattern::Omega, Pattern::Omega, "copy of w", "w-chain")) return;
        break;
      case Pattern::OmegaSquaredStar:
        if (cross(Pattern::OmegaStar, Pattern::OmegaStar, "copy of w*", "w*-chain")) return;
        break;
      default: break;
    }
    throw ContractViolation("embedding_sketch: pattern not contained");
  }

  EmbeddingSketch& out_;
  ContainmentProfiler profiler_;
};

}  // namespace detail

/// Certificate for a true containment. Throws ContractViolation when t does not contain p.
inline EmbeddingSketch embedding_sketch(Pattern p, const NormalTerm& t) {
  if (!contains(p, t))
    throw ContractViolation("embedding_sketch: " + render(t.term()) + " does not contain " +
                            std::string(pattern_name(p)));
  EmbeddingSketch sketch{p, {}, {}};
  detail::SketchTracer(sketch).trace(p, t.term(), 0, false, "");
  return sketch;
}

/// Checks leaf existence, leaf kinds per component, and that the trace reproduces.
inline bool verify_sketch(const EmbeddingSketch& sketch, const NormalTerm& t) {
  if (!contains(sketch.pattern, t)) return false;
  auto ls = t.leaves();
  for (const auto& a : sketch.assignments) {
    if (a.leaf.value >= ls.size()) return false;
    const auto& leaf = ls[a.leaf.value];
    if (leaf.kind != a.leaf_kind || leaf.letter == a.indexes_copies) return false;
    bool up = a.component == "w-chain" || a.component == "copy of w";
    bool down = a.component == "w*-chain" || a.component == "copy of w*";
    if (up && leaf.kind != Kind::Omega) return false;
    if (down && leaf.kind != Kind::OmegaStar) return false;
    if (a.component == "anchor" && leaf.kind == Kind::Fin && leaf.count == 0) return false;
  }
  return embedding_sketch(sketch.pattern, t) == sketch;
}

}  // namespace pcalc
