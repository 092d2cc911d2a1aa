#pragma once

// Finite truncations of normal terms. Omega contributes its first `depth`
// points, OmegaStar its last `depth` points, Fin(n) exactly n points, and a
// product A.B lays out one copy of A per realized point of B.

#include <cstddef>
#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include "pcalc/normalize.hpp"

namespace pcalc {

inline constexpr std::size_t kDefaultPointBudget = 10'000;

struct RealizedPoint {
  std::size_t position = 0;
  LeafId origin;                         // letter leaf the point instantiates
  std::vector<std::uint32_t> copy_path;  // copy index per enclosing product, outermost first
};

struct Realization {
  NormalTerm source;
  unsigned depth = 1;
  std::vector<RealizedPoint> points;

  std::size_t size() const noexcept { return points.size(); }
};

namespace detail {

inline std::uint64_t sat_add(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r = 0;
  return __builtin_add_overflow(a, b, &r) ? std::numeric_limits<std::uint64_t>::max() : r;
}

inline std::uint64_t sat_mul(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r = 0;
  return __builtin_mul_overflow(a, b, &r) ? std::numeric_limits<std::uint64_t>::max() : r;
}

inline std::uint64_t truncated_size(const OrderTerm& t, std::uint64_t depth) {
  switch (t.kind()) {
    case Kind::Fin: return t.count();
    case Kind::Omega:
    case Kind::OmegaStar: return depth;
    case Kind::Rev: return truncated_size(t.inner(), depth);
    case Kind::Sum: {
      std::uint64_t total = 0;
      for (const auto& c : t.children()) total = sat_add(total, truncated_size(c, depth));
      return total;
    }
    case Kind::Prod: return sat_mul(truncated_size(t.left(), depth), truncated_size(t.right(), depth));
  }
  return 0;
}

struct PointSeed {
  std::uint32_t origin;
  std::vector<std::uint32_t> path;
};

inline void lay_out(const OrderTerm& t, std::uint32_t offset, std::uint64_t depth, std::vector<PointSeed>& out) {
  switch (t.kind()) {
    case Kind::Fin:
      for (std::uint64_t i = 0; i < t.count(); ++i) out.push_back({offset, {}});
      return;
    case Kind::Omega:
    case Kind::OmegaStar:
      for (std::uint64_t i = 0; i < depth; ++i) out.push_back({offset, {}});
      return;
    case Kind::Sum:
      for (const auto& c : t.children()) {
        lay_out(c, offset, depth, out);
        offset += static_cast<std::uint32_t>(c.leaf_count());
      }
      return;
    case Kind::Prod: {
      std::vector<PointSeed> copy;
      lay_out(t.left(), offset, depth, copy);
      auto copies = truncated_size(t.right(), depth);
      for (std::uint64_t k = 0; k < copies; ++k) {
        for (const auto& p : copy) {
          PointSeed q{p.origin, {}};
          q.path.reserve(p.path.size() + 1);
          q.path.push_back(static_cast<std::uint32_t>(k));
          q.path.insert(q.path.end(), p.path.begin(), p.path.end());
          out.push_back(std::move(q));
        }
      }
      return;
    }
    case Kind::Rev:
      throw ContractViolation("realize: term is not normalized");
  }
}

}  // namespace detail

/// Number of points realize(t, depth) produces, without building them.
inline std::uint64_t realization_size(const NormalTerm& t, unsigned depth) {
  return detail::truncated_size(t.term(), depth);
}

inline Realization realize(const NormalTerm& t, unsigned depth, std::size_t budget = kDefaultPointBudget) {
  if (depth < 1) throw ContractViolation("realize: depth must be at least 1");
  auto n = realization_size(t, depth);
  if (n > budget)
    throw BudgetExceeded("realization of " + render(t.term()) + " at depth " + std::to_string(depth) +
                         " needs " + std::to_string(n) + " points, budget is " + std::to_string(budget));
  std::vector<detail::PointSeed> seeds;
  seeds.reserve(static_cast<std::size_t>(n));
  detail::lay_out(t.term(), 0, depth, seeds);
  Realization r{t, depth, {}};
  r.points.reserve(seeds.size());
  for (std::size_t i = 0; i < seeds.size(); ++i)
    r.points.push_back({i, LeafId{seeds[i].origin}, std::move(seeds[i].path)});
  return r;
}

}  // namespace pcalc
