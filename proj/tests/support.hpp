#pragma once

// Shared test helpers: a seeded random term generator and oracles written
// without the library's normalizer or search engine.

#include <cstdint>
#include <random>
#include <vector>

#include "pcalc/pcalc.hpp"

namespace pcalc::testing {

inline constexpr std::uint64_t kCorpusSeed = 20261015;

class TermGenerator {
 public:
  explicit TermGenerator(std::uint64_t seed) : rng_(seed) {}

  // Random term with at most `max_size` nodes.
  OrderTerm term(std::size_t max_size = 14) {
    // small sizes mostly normalize to a handful of terms; favour the upper range
    std::uniform_int_distribution<std::size_t> size(std::max<std::size_t>(1, max_size / 3), max_size);
    return build(size(rng_));
  }

  std::mt19937_64& rng() { return rng_; }

 private:
  OrderTerm leaf() {
    switch (pick(10)) {
      case 0: return fin(0);
      case 1:
      case 2:
      case 3: return fin(1 + pick(3));
      case 4:
      case 5:
      case 6: return omega();
      default: return omega_star();
    }
  }

  OrderTerm build(std::size_t budget) {
    if (budget <= 1) return leaf();
    auto rest = budget - 1;
    switch (pick(5)) {
      case 0:
        return reverse(build(rest));
      case 1:
      case 2: {
        if (rest < 2) return leaf();
        auto l = 1 + pick(rest - 1);
        return prod(build(l), build(rest - l));
      }
      default: {
        if (rest < 2) return leaf();
        std::size_t k = rest >= 3 && pick(2) == 0 ? 3 : 2;
        std::vector<OrderTerm> parts;
        std::size_t left = rest;
        for (std::size_t i = 0; i < k; ++i) {
          std::size_t share = i + 1 == k ? left : 1 + pick(left - (k - i - 1));
          if (share > left - (k - i - 1)) share = left - (k - i - 1);
          parts.push_back(build(share));
          left -= share;
        }
        return OrderTerm::sum(std::move(parts));
      }
    }
  }

  std::size_t pick(std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng_); }

  std::mt19937_64 rng_;
};

/// The fixed 500-term corpus, normalized.
inline std::vector<NormalTerm> corpus(std::size_t count = 500, std::uint64_t seed = kCorpusSeed) {
  TermGenerator gen(seed);
  std::vector<NormalTerm> out;
  while (out.size() < count) out.push_back(normalize(gen.term()));
  return out;
}

inline std::vector<OrderTerm> raw_corpus(std::size_t count = 500, std::uint64_t seed = kCorpusSeed) {
  TermGenerator gen(seed);
  std::vector<OrderTerm> out;
  while (out.size() < count) out.push_back(gen.term());
  return out;
}

// ---------------------------------------------------------------------------
// Containment oracle on raw terms: reversal handled by a flag, finite right
// factors expanded to at most two copies, nothing normalized.

struct OracleFacts {
  bool nonempty = false;
  bool finite = true;
  bool w = false, ws = false, z = false, wws = false, wsw = false, ww = false, wsws = false;
};

inline OracleFacts oracle_facts(const OrderTerm& t, bool reversed = false) {
  OracleFacts f;
  switch (t.kind()) {
    case Kind::Fin:
      f.nonempty = t.count() > 0;
      return f;
    case Kind::Omega:
    case Kind::OmegaStar: {
      f.nonempty = true;
      f.finite = false;
      bool up = (t.kind() == Kind::Omega) != reversed;
      (up ? f.w : f.ws) = true;
      return f;
    }
    case Kind::Rev: return oracle_facts(t.inner(), !reversed);
    case Kind::Sum: {
      std::vector<OracleFacts> parts;
      for (const auto& c : t.children()) parts.push_back(oracle_facts(c, reversed));
      if (reversed) std::reverse(parts.begin(), parts.end());
      bool seen_ws = false;
      for (const auto& p : parts) {
        f.nonempty |= p.nonempty;
        f.finite &= p.finite;
        f.w |= p.w;
        f.ws |= p.ws;
        f.z |= p.z || (seen_ws && p.w);
        f.wws |= p.wws;
        f.wsw |= p.wsw;
        f.ww |= p.ww;
        f.wsws |= p.wsws;
        seen_ws |= p.ws;
      }
      return f;
    }
    case Kind::Prod: {
      auto a = oracle_facts(t.left(), reversed);
      auto b = oracle_facts(t.right(), reversed);
      if (!a.nonempty || !b.nonempty) return f;
      f.nonempty = true;
      f.finite = a.finite && b.finite;
      bool two_copies = b.finite ? cardinality_of(t.right()).value() >= 2 : true;
      f.w = a.w || b.w;
      f.ws = a.ws || b.ws;
      f.z = a.z || b.z || (a.w && b.ws) || (a.ws && b.w) || (two_copies && a.ws && a.w);
      f.wws = a.wws || b.wws || (a.w && b.ws);
      f.wsw = a.wsw || b.wsw || (a.ws && b.w);
      f.ww = a.ww || b.ww || (a.w && b.w);
      f.wsws = a.wsws || b.wsws || (a.ws && b.ws);
      return f;
    }
  }
  return f;
}

inline bool oracle_contains(Pattern p, const OrderTerm& t) {
  auto f = oracle_facts(t);
  switch (p) {
    case Pattern::Omega: return f.w;
    case Pattern::OmegaStar: return f.ws;
    case Pattern::Z: return f.z;
    case Pattern::OmegaTimesOmegaStar: return f.wws;
    case Pattern::OmegaStarTimesOmega: return f.wsw;
    case Pattern::OmegaSquared: return f.ww;
    case Pattern::OmegaSquaredStar: return f.wsws;
  }
  return false;
}

// Point count with both chains truncated to `depth`, straight from the raw term.
inline std::uint64_t oracle_truncated_size(const OrderTerm& t, std::uint64_t depth) {
  switch (t.kind()) {
    case Kind::Fin: return t.count();
    case Kind::Omega:
    case Kind::OmegaStar: return depth;
    case Kind::Rev: return oracle_truncated_size(t.inner(), depth);
    case Kind::Sum: {
      std::uint64_t s = 0;
      for (const auto& c : t.children()) s += oracle_truncated_size(c, depth);
      return s;
    }
    case Kind::Prod: return oracle_truncated_size(t.left(), depth) * oracle_truncated_size(t.right(), depth);
  }
  return 0;
}

// ---------------------------------------------------------------------------
// Finite arrow oracle: all 2^(n(n-1)/2) colorings, every vertex subset.

inline bool brute_force_arrow(std::size_t n, std::size_t a, std::size_t b) {
  const std::size_t edges = n * (n - 1) / 2;
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
  auto edge_bit = [&](std::size_t i, std::size_t j) {
    for (std::size_t e = 0; e < pairs.size(); ++e)
      if (pairs[e] == std::pair{i, j}) return e;
    return std::size_t{0};
  };
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << edges); ++mask) {
    bool forced = false;
    for (std::uint32_t s = 0; s < (1U << n) && !forced; ++s) {
      auto k = static_cast<std::size_t>(std::popcount(s));
      if (k != a && k != b) continue;
      bool all_red = true, all_blue = true;
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
          if ((s >> i & 1U) && (s >> j & 1U)) {
            bool blue = mask >> edge_bit(i, j) & 1U;
            (blue ? all_red : all_blue) = false;
          }
      if ((k == a && all_red) || (k == b && all_blue)) forced = true;
    }
    if (!forced) return false;
  }
  return true;
}

}  // namespace pcalc::testing
