#pragma once

// Exhaustive decision of N -> (a,b)^2.
//
// Edges are colored depth-first in the fixed edge order of coloring.hpp, Red
// before Blue. Coloring {i,j} red is rejected when the red common neighbourhood
// of i and j (restricted to already-colored edges) holds a red K_{a-2}; blue
// likewise with b. Vertex 0's edges are forced into the shape R..RB..B, and when
// a = b at least half of them are red (colour swap). Both restrictions only
// remove colorings isomorphic to ones that are kept.

#include <algorithm>
#include <atomic>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <thread>
#include <variant>
#include <vector>

#include "pcalc/coloring.hpp"

namespace pcalc {

struct SearchOptions {
  std::size_t max_vertices = 13;
  unsigned threads = 1;  // > 1 fans out top-level branches; the result is identical
};

inline constexpr std::size_t kEngineHardLimit = 32;

struct ArrowHolds {
  std::string proof_note;
};

struct ArrowFails {
  Coloring witness;
};

using FiniteArrowResult = std::variant<ArrowHolds, ArrowFails>;

inline bool holds(const FiniteArrowResult& r) { return std::holds_alternative<ArrowHolds>(r); }

namespace detail {

using Mask = std::uint32_t;

inline bool has_clique(Mask candidates, std::size_t k, const Mask* adj) {
  if (k == 0) return true;
  if (static_cast<std::size_t>(std::popcount(candidates)) < k) return false;
  while (candidates != 0) {
    if (static_cast<std::size_t>(std::popcount(candidates)) < k) return false;
    auto v = static_cast<std::size_t>(std::countr_zero(candidates));
    candidates &= candidates - 1;
    if (has_clique(candidates & adj[v], k - 1, adj)) return true;
  }
  return false;
}

class RamseySearch {
 public:
  RamseySearch(std::size_t n, std::size_t a, std::size_t b) : n_(n), a_(a), b_(b) {
    std::fill(std::begin(adj_[0]), std::end(adj_[0]), Mask{0});
    std::fill(std::begin(adj_[1]), std::end(adj_[1]), Mask{0});
  }

  struct Edge {
    std::size_t i, j;
  };

  std::size_t edge_total() const { return n_ < 2 ? 0 : n_ * (n_ - 1) / 2; }

  static Edge edge_at(std::size_t e) {
    std::size_t j = 1;
    while ((j + 1) * j / 2 <= e) ++j;
    return {e - j * (j - 1) / 2, j};
  }

  // Colors `prefix` onto the first edges; false if the prefix is itself rejected.
  bool apply_prefix(const std::vector<Color>& prefix) {
    for (std::size_t e = 0; e < prefix.size(); ++e) {
      auto [i, j] = edge_at(e);
      if (!admissible(i, j, prefix[e])) return false;
      paint(i, j, prefix[e]);
    }
    return true;
  }

  // Depth-first completion from edge index `e`. `stop` is polled between nodes.
  bool complete(std::size_t e, const std::atomic<bool>* stop = nullptr) {
    if (e == edge_total()) return true;
    if (stop != nullptr && (++polls_ & 0x3FF) == 0 && stop->load(std::memory_order_relaxed)) return false;
    ++nodes_;
    auto [i, j] = edge_at_fast(e);
    for (auto c : {Color::Red, Color::Blue}) {
      if (!admissible(i, j, c)) continue;
      paint(i, j, c);
      if (complete(e + 1, stop)) return true;
      unpaint(i, j, c);
    }
    return false;
  }

  // All admissible colorings of the first `depth` edges, in search order.
  void enumerate_prefixes(std::size_t depth, std::vector<Color>& current, std::vector<std::vector<Color>>& out) {
    if (current.size() == depth) {
      out.push_back(current);
      return;
    }
    auto [i, j] = edge_at(current.size());
    for (auto c : {Color::Red, Color::Blue}) {
      if (!admissible(i, j, c)) continue;
      paint(i, j, c);
      current.push_back(c);
      enumerate_prefixes(depth, current, out);
      current.pop_back();
      unpaint(i, j, c);
    }
  }

  Coloring coloring() const {
    Coloring g(n_);
    for (std::size_t j = 1; j < n_; ++j)
      for (std::size_t i = 0; i < j; ++i)
        g.set(i, j, (adj_[1][j] >> i) & 1U ? Color::Blue : Color::Red);
    return g;
  }

  std::uint64_t nodes() const { return nodes_; }

 private:
  Edge edge_at_fast(std::size_t e) {
    if (edges_.empty()) {
      for (std::size_t j = 1; j < n_; ++j)
        for (std::size_t i = 0; i < j; ++i) edges_.push_back({i, j});
    }
    return edges_[e];
  }

  bool admissible(std::size_t i, std::size_t j, Color c) const {
    if (i == 0) {
      bool prev_blue = j >= 2 && ((adj_[1][0] >> (j - 1)) & 1U);
      if (c == Color::Red && prev_blue) return false;
      if (c == Color::Blue && a_ == b_ && !prev_blue && 2 * (j - 1) < n_ - 1) return false;
    }
    const auto k = c == Color::Red ? a_ : b_;
    const auto side = c == Color::Red ? 0 : 1;
    if (k < 2) return false;
    Mask common = adj_[side][i] & adj_[side][j];
    return !has_clique(common, k - 2, adj_[side]);
  }

  void paint(std::size_t i, std::size_t j, Color c) {
    auto side = c == Color::Red ? 0 : 1;
    adj_[side][i] |= Mask{1} << j;
    adj_[side][j] |= Mask{1} << i;
  }

  void unpaint(std::size_t i, std::size_t j, Color c) {
    auto side = c == Color::Red ? 0 : 1;
    adj_[side][i] &= ~(Mask{1} << j);
    adj_[side][j] &= ~(Mask{1} << i);
  }

  std::size_t n_, a_, b_;
  Mask adj_[2][kEngineHardLimit];
  std::vector<Edge> edges_;
  std::uint64_t nodes_ = 0;
  std::uint64_t polls_ = 0;
};

inline std::optional<Coloring> search_sequential(std::size_t n, std::size_t a, std::size_t b, std::uint64_t& nodes) {
  RamseySearch s(n, a, b);
  bool found = s.complete(0);
  nodes = s.nodes();
  if (found) return s.coloring();
  return std::nullopt;
}

inline std::optional<Coloring> search_parallel(std::size_t n, std::size_t a, std::size_t b, unsigned threads,
                                               std::uint64_t& nodes) {
  RamseySearch root(n, a, b);
  std::vector<std::vector<Color>> prefixes;
  std::vector<Color> current;
  root.enumerate_prefixes(std::min<std::size_t>(root.edge_total(), 12), current, prefixes);

  const std::size_t none = std::numeric_limits<std::size_t>::max();
  std::atomic<std::size_t> next{0};
  std::atomic<std::size_t> best{none};
  std::vector<std::optional<Coloring>> results(prefixes.size());
  std::atomic<std::uint64_t> total_nodes{0};

  auto worker = [&] {
    for (;;) {
      auto k = next.fetch_add(1);
      if (k >= prefixes.size() || k > best.load()) return;
      RamseySearch s(n, a, b);
      s.apply_prefix(prefixes[k]);
      // stop early only once a lower-indexed branch has a witness
      std::atomic<bool> stop{false};
      bool found = false;
      {
        std::jthread watcher([&](std::stop_token st) {
          while (!st.stop_requested()) {
            if (best.load() < k) {
              stop = true;
              return;
            }
            std::this_thread::sleep_for(std::chrono::milliseconds(2));
          }
        });
        found = s.complete(prefixes[k].size(), &stop);
      }
      total_nodes += s.nodes();
      if (found) {
        results[k] = s.coloring();
        auto cur = best.load();
        while (k < cur && !best.compare_exchange_weak(cur, k)) {
        }
      }
    }
  };
  {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  }
  nodes = total_nodes.load();
  auto k = best.load();
  if (k == none) return std::nullopt;
  return results[k];
}

}  // namespace detail

/// N -> (a,b)^2 by exhaustive search. Fails carries a coloring avoiding red K_a
/// and blue K_b, verified before it is returned.
inline FiniteArrowResult decide_arrow_finite(std::size_t n, std::size_t a, std::size_t b,
                                             const SearchOptions& options = {}) {
  if (a < 1 || b < 1) throw ContractViolation("decide_arrow_finite: a and b must be at least 1");
  if (n < 1) throw ContractViolation("decide_arrow_finite: N must be at least 1");
  const auto limit = std::min(options.max_vertices, kEngineHardLimit);
  if (n > limit)
    throw ResourceLimit("decide_arrow_finite: N = " + std::to_string(n) + " exceeds the vertex limit " +
                        std::to_string(limit));
  if (a == 1) return ArrowHolds{"any single vertex is a red K_1"};
  if (b == 1) return ArrowHolds{"any single vertex is a blue K_1"};

  std::uint64_t nodes = 0;
  auto witness = options.threads > 1 ? detail::search_parallel(n, a, b, options.threads, nodes)
                                     : detail::search_sequential(n, a, b, nodes);
  if (!witness)
    return ArrowHolds{"exhaustive search: no coloring of K_" + std::to_string(n) + " avoids red K_" +
                      std::to_string(a) + " and blue K_" + std::to_string(b) + " (" + std::to_string(nodes) +
                      " search nodes)"};
  if (!avoids(*witness, a, b))
    throw InternalContradiction("decide_arrow_finite: search produced a coloring with a forbidden clique");
  return ArrowFails{std::move(*witness)};
}

struct RamseyResult {
  std::optional<std::size_t> value;
  std::optional<Coloring> witness_below;  // K_{value-1} coloring avoiding both cliques
};

/// Least N <= max_n with N -> (a,b)^2, scanning upward; stops at the first Holds.
inline RamseyResult ramsey_number(std::size_t a, std::size_t b, std::size_t max_n, const SearchOptions& options = {}) {
  if (a < 1 || b < 1) throw ContractViolation("ramsey_number: a and b must be at least 1");
  const auto limit = std::min(options.max_vertices, kEngineHardLimit);
  if (max_n > limit)
    throw ResourceLimit("ramsey_number: max N = " + std::to_string(max_n) + " exceeds the vertex limit " +
                        std::to_string(limit));
  std::size_t start = (a == 1 || b == 1) ? 1 : std::max(a, b);
  std::optional<Coloring> last;
  for (std::size_t n = start; n <= max_n; ++n) {
    auto r = decide_arrow_finite(n, a, b, options);
    if (holds(r)) {
      if (!last && n >= 2) last = std::get<ArrowFails>(decide_arrow_finite(n - 1, a, b, options)).witness;
      return {n, last};
    }
    last = std::get<ArrowFails>(r).witness;
  }
  return {std::nullopt, std::nullopt};
}

}  // namespace pcalc
