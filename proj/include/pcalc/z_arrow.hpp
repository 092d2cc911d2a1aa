#pragma once

// L -> (Z, n)^2.
//
// n = 0 and n = 1 are trivial, n = 2 is containment of Z, and for n >= 3 the
// answer is containment of w.w* or w*.w. The positive side cites Specker's
// theorem through the pattern embedding; the negative side is constructive: the
// witness partition gives a coloring (red inside a part, blue across) that is
// checked on every finite truncation we can afford.

#include <bit>
#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "pcalc/coloring.hpp"
#include "pcalc/pigeonhole.hpp"
#include "pcalc/realize.hpp"

namespace pcalc {

struct PatternCert {
  EmbeddingSketch sketch;
};

struct TrivialCert {
  std::string label;
};

struct NoZCert {
  std::string statement;
};

inline constexpr std::string_view kSeparationRecipe = "red within parts, blue across";

struct SeparationCert {
  PartitionWitness witness;
  std::string recipe{kSeparationRecipe};
};

using ZCertificate = std::variant<PatternCert, TrivialCert, NoZCert, SeparationCert>;

struct ZArrowDecision {
  NormalTerm term;
  std::uint64_t n = 0;
  bool holds = false;
  ZCertificate certificate;
};

inline std::string_view certificate_kind(const ZCertificate& c) {
  switch (c.index()) {
    case 0: return "PatternCert";
    case 1: return "TrivialCert";
    case 2: return "NoZCert";
    default: return "SeparationCert";
  }
}

inline ZArrowDecision decide_arrow_Z(const NormalTerm& t, std::uint64_t n) {
  if (n == 0) return {t, n, true, TrivialCert{"n = 0: the empty set is a blue K_0"}};
  if (n == 1) {
    bool nonempty = !cardinality(t).is_empty();
    return {t, n, nonempty,
            TrivialCert{nonempty ? "n = 1: any point is a blue K_1" : "n = 1: the empty order has no point"}};
  }
  if (n == 2) {
    if (contains(Pattern::Z, t)) return {t, n, true, PatternCert{embedding_sketch(Pattern::Z, t)}};
    return {t, n, false, NoZCert{render(t.term()) + " contains no copy of Z"}};
  }
  if (auto p = contains_any(kSeparationPair, t)) return {t, n, true, PatternCert{embedding_sketch(*p, t)}};
  return {t, n, false, SeparationCert{witness_partition(t)}};
}

/// L -> (w, w*)^2 holds for no order L.
inline bool decide_arrow_omega_omegastar_2(const NormalTerm&) { return false; }

// ---------------------------------------------------------------------------
// Separation colorings

enum class PartSide : std::uint8_t { A, B };

/// Side of every realized point, read off its origin leaf.
inline std::vector<PartSide> point_sides(const Realization& r, const PartitionWitness& w) {
  if (!(r.source == w.subject))
    throw ConsistencyError("separation coloring: realization of " + render(r.source.term()) +
                           " does not match witness for " + render(w.subject.term()));
  std::vector<int> side_of(w.subject.leaf_count(), -1);
  for (auto id : w.a_leaves)
    if (id.value < side_of.size()) side_of[id.value] = 0;
  for (auto id : w.b_leaves)
    if (id.value < side_of.size()) side_of[id.value] = 1;
  std::vector<PartSide> out;
  out.reserve(r.size());
  for (const auto& p : r.points) {
    if (p.origin.value >= side_of.size() || side_of[p.origin.value] < 0)
      throw ConsistencyError("separation coloring: leaf " + std::to_string(p.origin.value) +
                             " is on neither side of the witness");
    out.push_back(side_of[p.origin.value] == 0 ? PartSide::A : PartSide::B);
  }
  return out;
}

inline Coloring build_separation_coloring(const Realization& r, const PartitionWitness& w) {
  auto sides = point_sides(r, w);
  Coloring c(sides.size());
  for (std::size_t j = 1; j < sides.size(); ++j)
    for (std::size_t i = 0; i < j; ++i) c.set(i, j, sides[i] == sides[j] ? Color::Red : Color::Blue);
  return c;
}

struct SeparationReport {
  bool no_blue_triangles = true;
  bool red_edges_within_sides = true;
  bool red_cliques_within_sides = true;
  std::size_t blue_triangles = 0;  // counted up to the first one only
  std::size_t maximal_red_cliques = 0;

  bool passed() const { return no_blue_triangles && red_edges_within_sides && red_cliques_within_sides; }
};

namespace detail {

class VertexSet {
 public:
  explicit VertexSet(std::size_t n = 0) : words_((n + 63) / 64, 0) {}

  void insert(std::size_t v) { words_[v / 64] |= std::uint64_t{1} << (v % 64); }
  void erase(std::size_t v) { words_[v / 64] &= ~(std::uint64_t{1} << (v % 64)); }
  bool empty() const {
    for (auto w : words_)
      if (w != 0) return false;
    return true;
  }
  bool intersects(const VertexSet& o) const {
    for (std::size_t k = 0; k < words_.size(); ++k)
      if (words_[k] & o.words_[k]) return true;
    return false;
  }
  VertexSet operator&(const VertexSet& o) const {
    VertexSet r = *this;
    for (std::size_t k = 0; k < words_.size(); ++k) r.words_[k] &= o.words_[k];
    return r;
  }
  VertexSet minus(const VertexSet& o) const {
    VertexSet r = *this;
    for (std::size_t k = 0; k < words_.size(); ++k) r.words_[k] &= ~o.words_[k];
    return r;
  }
  std::size_t count_and(const VertexSet& o) const {
    std::size_t c = 0;
    for (std::size_t k = 0; k < words_.size(); ++k) c += static_cast<std::size_t>(std::popcount(words_[k] & o.words_[k]));
    return c;
  }
  template <class F>
  void for_each(F&& f) const {
    for (std::size_t k = 0; k < words_.size(); ++k)
      for (auto w = words_[k]; w != 0; w &= w - 1) f(k * 64 + static_cast<std::size_t>(std::countr_zero(w)));
  }

 private:
  std::vector<std::uint64_t> words_;
};

// Bron-Kerbosch with pivoting; calls `visit` on each maximal clique.
template <class F>
void maximal_cliques(const std::vector<VertexSet>& adj, std::vector<std::size_t>& r, VertexSet p, VertexSet x,
                     F& visit) {
  if (p.empty() && x.empty()) {
    visit(r);
    return;
  }
  std::size_t pivot = 0, best = 0;
  bool have = false;
  auto consider = [&](std::size_t u) {
    auto c = p.count_and(adj[u]);
    if (!have || c > best) {
      pivot = u;
      best = c;
      have = true;
    }
  };
  p.for_each(consider);
  x.for_each(consider);
  p.minus(adj[pivot]).for_each([&](std::size_t v) {
    r.push_back(v);
    maximal_cliques(adj, r, p & adj[v], x & adj[v], visit);
    r.pop_back();
    p.erase(v);
    x.insert(v);
  });
}

}  // namespace detail

/// Exhaustive check of the three separation properties.
inline SeparationReport check_separation_properties(const Coloring& c, const std::vector<PartSide>& sides) {
  const auto n = c.vertices();
  if (sides.size() != n)
    throw ContractViolation("check_separation_properties: " + std::to_string(sides.size()) + " sides for " +
                            std::to_string(n) + " vertices");
  SeparationReport report;
  std::vector<detail::VertexSet> red(n, detail::VertexSet(n)), blue(n, detail::VertexSet(n));
  for (std::size_t j = 1; j < n; ++j)
    for (std::size_t i = 0; i < j; ++i) {
      if (c.at(i, j) == Color::Red) {
        red[i].insert(j);
        red[j].insert(i);
        if (sides[i] != sides[j]) report.red_edges_within_sides = false;
      } else {
        blue[i].insert(j);
        blue[j].insert(i);
      }
    }

  // a blue edge {i,j} closes a blue triangle iff i and j share a blue neighbour
  for (std::size_t j = 1; j < n && report.no_blue_triangles; ++j)
    blue[j].for_each([&](std::size_t i) {
      if (i < j && report.no_blue_triangles && blue[i].intersects(blue[j])) {
        report.no_blue_triangles = false;
        report.blue_triangles = 1;
      }
    });

  detail::VertexSet all(n);
  for (std::size_t v = 0; v < n; ++v) all.insert(v);
  std::vector<std::size_t> r;
  auto visit = [&](const std::vector<std::size_t>& clique) {
    ++report.maximal_red_cliques;
    for (auto v : clique)
      if (sides[v] != sides[clique.front()]) report.red_cliques_within_sides = false;
  };
  if (n > 0) detail::maximal_cliques(red, r, all, detail::VertexSet(n), visit);
  return report;
}

}  // namespace pcalc
