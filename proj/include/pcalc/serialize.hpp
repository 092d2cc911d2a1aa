#pragma once

// JSON records for colorings, realizations, witnesses and decisions.

#include <string>

#include <json.hpp>

#include "pcalc/finite_ramsey.hpp"
#include "pcalc/z_arrow.hpp"

namespace pcalc {

using json = nlohmann::ordered_json;

inline std::string_view kind_name(Kind k) {
  switch (k) {
    case Kind::Fin: return "fin";
    case Kind::Omega: return "w";
    case Kind::OmegaStar: return "w*";
    case Kind::Sum: return "sum";
    case Kind::Prod: return "prod";
    case Kind::Rev: return "rev";
  }
  return "?";
}

inline Kind parse_kind(std::string_view s) {
  for (auto k : {Kind::Fin, Kind::Omega, Kind::OmegaStar, Kind::Sum, Kind::Prod, Kind::Rev})
    if (kind_name(k) == s) return k;
  throw ConsistencyError("unknown term kind '" + std::string(s) + "'");
}

namespace detail {

inline void expect_kind(const json& j, std::string_view kind) {
  if (!j.is_object() || !j.contains("kind") || j.at("kind") != kind)
    throw ConsistencyError("expected a '" + std::string(kind) + "' record");
}

inline std::vector<std::uint32_t> leaf_values(const std::vector<LeafId>& ids) {
  std::vector<std::uint32_t> out;
  for (auto id : ids) out.push_back(id.value);
  return out;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Colorings

inline json to_json(const Coloring& c) {
  return {{"kind", "coloring"}, {"n", c.vertices()}, {"edges", c.edge_string()}};
}

inline Coloring coloring_from_json(const json& j) {
  detail::expect_kind(j, "coloring");
  try {
    return Coloring::from_edge_string(j.at("n").get<std::size_t>(), j.at("edges").get<std::string>());
  } catch (const std::invalid_argument& e) {
    throw ConsistencyError(e.what());
  }
}

// ---------------------------------------------------------------------------
// Realizations

inline json to_json(const Realization& r) {
  json points = json::array();
  for (const auto& p : r.points) points.push_back({{"position", p.position}, {"leaf", p.origin.value}, {"copies", p.copy_path}});
  return {{"kind", "realization"}, {"term", render(r.source.term())}, {"depth", r.depth}, {"points", points}};
}

inline Realization realization_from_json(const json& j) {
  detail::expect_kind(j, "realization");
  auto t = normalize(parse(j.at("term").get<std::string>()));
  auto r = realize(t, j.at("depth").get<unsigned>());
  const auto& pts = j.at("points");
  if (pts.size() != r.size()) throw ConsistencyError("realization record has the wrong number of points");
  for (std::size_t i = 0; i < r.size(); ++i)
    if (pts[i].at("leaf").get<std::uint32_t>() != r.points[i].origin.value ||
        pts[i].at("copies").get<std::vector<std::uint32_t>>() != r.points[i].copy_path)
      throw ConsistencyError("realization record disagrees with its term at point " + std::to_string(i));
  return r;
}

// ---------------------------------------------------------------------------
// Partition witnesses

inline json to_json(const PartitionWitness& w) {
  return {{"kind", "partition-witness"},
          {"term", render(w.subject.term())},
          {"aLeaves", detail::leaf_values(w.a_leaves)},
          {"bLeaves", detail::leaf_values(w.b_leaves)},
          {"aTerm", render(w.a_term.term())},
          {"bTerm", render(w.b_term.term())}};
}

/// Rebuilds the witness from its leaf lists and rechecks both sides.
inline PartitionWitness partition_witness_from_json(const json& j) {
  detail::expect_kind(j, "partition-witness");
  auto t = normalize(parse(j.at("term").get<std::string>()));
  std::vector<LeafId> a, b;
  for (auto v : j.at("aLeaves").get<std::vector<std::uint32_t>>()) a.push_back(LeafId{v});
  for (auto v : j.at("bLeaves").get<std::vector<std::uint32_t>>()) b.push_back(LeafId{v});
  auto at = restrict(t, a);
  auto bt = restrict(t, b);
  if (render(at.term()) != j.at("aTerm").get<std::string>() || render(bt.term()) != j.at("bTerm").get<std::string>())
    throw ConsistencyError("partition witness record: stored side terms do not match the leaf lists");
  if (contains(Pattern::Omega, at) || contains(Pattern::OmegaStar, bt))
    throw ConsistencyError("partition witness record: A contains w or B contains w*");
  return PartitionWitness{t, std::move(a), std::move(b), std::move(at), std::move(bt)};
}

// ---------------------------------------------------------------------------
// Sketches and decisions

inline json to_json(const EmbeddingSketch& s) {
  json as = json::array();
  for (const auto& a : s.assignments)
    as.push_back({{"component", a.component},
                  {"leaf", a.leaf.value},
                  {"leafKind", kind_name(a.leaf_kind)},
                  {"indexesCopies", a.indexes_copies}});
  return {{"pattern", pattern_name(s.pattern)}, {"assignments", as}, {"note", s.note}};
}

inline json to_json(const FiniteArrowResult& r, std::size_t n, std::size_t a, std::size_t b) {
  json j = {{"kind", "finite-arrow"}, {"n", n}, {"a", a}, {"b", b}, {"holds", holds(r)}};
  if (const auto* h = std::get_if<ArrowHolds>(&r))
    j["proofNote"] = h->proof_note;
  else
    j["witness"] = to_json(std::get<ArrowFails>(r).witness);
  return j;
}

/// `coloring_depth` > 0 attaches the separation coloring of that truncation.
inline json to_json(const ZArrowDecision& d, unsigned coloring_depth = 0) {
  json body;
  std::visit(
      [&](const auto& c) {
        using T = std::decay_t<decltype(c)>;
        if constexpr (std::is_same_v<T, PatternCert>) {
          body = to_json(c.sketch);
        } else if constexpr (std::is_same_v<T, TrivialCert>) {
          body = {{"label", c.label}};
        } else if constexpr (std::is_same_v<T, NoZCert>) {
          body = {{"statement", c.statement}};
        } else {
          body = {{"witness", to_json(c.witness)}, {"coloringRecipe", c.recipe}};
          if (coloring_depth > 0) {
            auto r = realize(d.term, coloring_depth);
            body["depth"] = coloring_depth;
            body["coloring"] = to_json(build_separation_coloring(r, c.witness));
          }
        }
      },
      d.certificate);
  return {{"kind", "z-arrow"},
          {"term", render(d.term.term())},
          {"n", d.n},
          {"holds", d.holds},
          {"certificateKind", certificate_kind(d.certificate)},
          {"certificateBody", body}};
}

}  // namespace pcalc
