#pragma once

// Order-type terms: finite orders, ω, ω*, sums, products and reversal.
//
// Prod(A, B) is "B copies of A": each point of B is replaced by a copy of A,
// so Prod(Omega, Fin(2)) denotes ω·2 = ω+ω.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <limits>
#include <memory>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "pcalc/errors.hpp"

namespace pcalc {

enum class Kind : std::uint8_t { Fin, Omega, OmegaStar, Sum, Prod, Rev };

/// Position of a leaf in the left-to-right enumeration of a term's leaves.
struct LeafId {
  std::uint32_t value = 0;

  friend auto operator<=>(const LeafId&, const LeafId&) = default;
};

inline constexpr std::uint32_t kNoTag = std::numeric_limits<std::uint32_t>::max();

class OrderTerm;

namespace detail {

struct Node {
  Kind kind = Kind::Fin;
  std::uint64_t count = 0;    // Fin only
  std::uint32_t tag = kNoTag; // provenance tag carried through rewriting; leaves only
  std::vector<OrderTerm> children;
  std::size_t leaves = 0;
  std::size_t nodes = 1;
};

}  // namespace detail

/// Immutable syntax tree. Copies share structure.
class OrderTerm {
 public:
  OrderTerm() : OrderTerm(fin(0)) {}

  static OrderTerm fin(std::uint64_t n, std::uint32_t tag = kNoTag) {
    auto node = std::make_shared<detail::Node>();
    node->kind = Kind::Fin;
    node->count = n;
    node->tag = tag;
    node->leaves = 1;
    return OrderTerm(std::move(node));
  }

  static OrderTerm omega(std::uint32_t tag = kNoTag) { return leaf(Kind::Omega, tag); }
  static OrderTerm omega_star(std::uint32_t tag = kNoTag) { return leaf(Kind::OmegaStar, tag); }

  /// Unary sums collapse to their single part; the empty sum is Fin(0).
  static OrderTerm sum(std::vector<OrderTerm> parts) {
    if (parts.empty()) return fin(0);
    if (parts.size() == 1) return std::move(parts.front());
    return composite(Kind::Sum, std::move(parts));
  }
  static OrderTerm sum(std::initializer_list<OrderTerm> parts) {
    return sum(std::vector<OrderTerm>(parts));
  }

  static OrderTerm prod(OrderTerm left, OrderTerm right) {
    std::vector<OrderTerm> kids;
    kids.reserve(2);
    kids.push_back(std::move(left));
    kids.push_back(std::move(right));
    return composite(Kind::Prod, std::move(kids));
  }

  static OrderTerm rev(OrderTerm inner) {
    std::vector<OrderTerm> kids;
    kids.push_back(std::move(inner));
    return composite(Kind::Rev, std::move(kids));
  }

  Kind kind() const noexcept { return node_->kind; }
  bool is_leaf() const noexcept {
    return node_->kind == Kind::Fin || node_->kind == Kind::Omega || node_->kind == Kind::OmegaStar;
  }
  bool is_fin() const noexcept { return node_->kind == Kind::Fin; }
  bool is_fin(std::uint64_t n) const noexcept { return is_fin() && node_->count == n; }
  std::uint64_t count() const noexcept { return node_->count; }
  std::uint32_t tag() const noexcept { return node_->tag; }

  std::span<const OrderTerm> children() const noexcept { return node_->children; }
  const OrderTerm& child(std::size_t i) const { return node_->children.at(i); }
  const OrderTerm& left() const { return child(0); }
  const OrderTerm& right() const { return child(1); }
  const OrderTerm& inner() const { return child(0); }

  std::size_t leaf_count() const noexcept { return node_->leaves; }
  std::size_t size() const noexcept { return node_->nodes; }

  bool same_node(const OrderTerm& other) const noexcept { return node_ == other.node_; }
  const void* identity() const noexcept { return node_.get(); }

  /// Structural equality. Provenance tags are ignored.
  friend bool operator==(const OrderTerm& a, const OrderTerm& b) {
    if (a.node_ == b.node_) return true;
    const auto& x = *a.node_;
    const auto& y = *b.node_;
    if (x.kind != y.kind || x.count != y.count || x.nodes != y.nodes ||
        x.children.size() != y.children.size())
      return false;
    for (std::size_t i = 0; i < x.children.size(); ++i)
      if (!(x.children[i] == y.children[i])) return false;
    return true;
  }

  /// Same term with leaf tag replaced (leaves only).
  OrderTerm with_tag(std::uint32_t tag) const {
    if (!is_leaf()) return *this;
    auto node = std::make_shared<detail::Node>(*node_);
    node->tag = tag;
    return OrderTerm(std::move(node));
  }

  /// Same operator, new children.
  OrderTerm with_children(std::vector<OrderTerm> kids) const {
    switch (kind()) {
      case Kind::Sum: return sum(std::move(kids));
      case Kind::Prod: return prod(std::move(kids.at(0)), std::move(kids.at(1)));
      case Kind::Rev: return rev(std::move(kids.at(0)));
      default: return *this;
    }
  }

 private:
  explicit OrderTerm(std::shared_ptr<const detail::Node> node) : node_(std::move(node)) {}

  static OrderTerm leaf(Kind kind, std::uint32_t tag) {
    auto node = std::make_shared<detail::Node>();
    node->kind = kind;
    node->tag = tag;
    node->leaves = 1;
    return OrderTerm(std::move(node));
  }

  static OrderTerm composite(Kind kind, std::vector<OrderTerm> kids) {
    auto node = std::make_shared<detail::Node>();
    node->kind = kind;
    node->leaves = 0;
    for (const auto& k : kids) {
      node->leaves += k.leaf_count();
      node->nodes += k.size();
    }
    node->children = std::move(kids);
    return OrderTerm(std::move(node));
  }

  std::shared_ptr<const detail::Node> node_;
};

inline OrderTerm fin(std::uint64_t n) { return OrderTerm::fin(n); }
inline OrderTerm omega() { return OrderTerm::omega(); }
inline OrderTerm omega_star() { return OrderTerm::omega_star(); }
inline OrderTerm sum(std::initializer_list<OrderTerm> parts) { return OrderTerm::sum(parts); }
inline OrderTerm prod(OrderTerm a, OrderTerm b) { return OrderTerm::prod(std::move(a), std::move(b)); }
inline OrderTerm reverse(OrderTerm t) { return OrderTerm::rev(std::move(t)); }

// ---------------------------------------------------------------------------
// Leaves

struct LeafRef {
  LeafId id;
  Kind kind = Kind::Fin;
  std::uint64_t count = 0;
  std::uint32_t tag = kNoTag;
  // Not inside the right factor of any product: the leaf owns points.
  bool letter = true;
};

namespace detail {

inline void collect_leaves(const OrderTerm& t, bool letter, std::vector<LeafRef>& out) {
  if (t.is_leaf()) {
    out.push_back(LeafRef{LeafId{static_cast<std::uint32_t>(out.size())}, t.kind(), t.count(),
                          t.tag(), letter});
    return;
  }
  if (t.kind() == Kind::Prod) {
    collect_leaves(t.left(), letter, out);
    collect_leaves(t.right(), false, out);
    return;
  }
  for (const auto& c : t.children()) collect_leaves(c, letter, out);
}

}  // namespace detail

inline std::vector<LeafRef> leaves(const OrderTerm& t) {
  std::vector<LeafRef> out;
  out.reserve(t.leaf_count());
  detail::collect_leaves(t, true, out);
  return out;
}

/// Rebuilds t with every leaf tagged by its own LeafId.
inline OrderTerm tag_leaves(const OrderTerm& t) {
  std::uint32_t next = 0;
  auto go = [&next](auto&& self, const OrderTerm& u) -> OrderTerm {
    if (u.is_leaf()) return u.with_tag(next++);
    std::vector<OrderTerm> kids;
    kids.reserve(u.children().size());
    for (const auto& c : u.children()) kids.push_back(self(self, c));
    return u.with_children(std::move(kids));
  };
  return go(go, t);
}

// ---------------------------------------------------------------------------
// Cardinality

class Cardinality {
 public:
  enum class Kind { Empty, Finite, Infinite };

  static Cardinality empty() { return Cardinality(Kind::Empty, 0); }
  static Cardinality infinite() { return Cardinality(Kind::Infinite, 0); }
  /// finite(0) is Empty.
  static Cardinality finite(std::uint64_t n) {
    return n == 0 ? empty() : Cardinality(Kind::Finite, n);
  }

  Kind kind() const noexcept { return kind_; }
  std::uint64_t value() const noexcept { return value_; }
  bool is_empty() const noexcept { return kind_ == Kind::Empty; }
  bool is_infinite() const noexcept { return kind_ == Kind::Infinite; }

  friend bool operator==(const Cardinality&, const Cardinality&) = default;

 private:
  Cardinality(Kind k, std::uint64_t v) : kind_(k), value_(v) {}
  Kind kind_;
  std::uint64_t value_;
};

/// Defined on every term; Rev does not change the size.
inline Cardinality cardinality_of(const OrderTerm& t) {
  switch (t.kind()) {
    case Kind::Fin: return Cardinality::finite(t.count());
    case Kind::Omega:
    case Kind::OmegaStar: return Cardinality::infinite();
    case Kind::Rev: return cardinality_of(t.inner());
    case Kind::Sum: {
      std::uint64_t total = 0;
      bool infinite = false;
      for (const auto& c : t.children()) {
        auto k = cardinality_of(c);
        if (k.is_infinite()) infinite = true;
        else if (__builtin_add_overflow(total, k.value(), &total))
          throw std::overflow_error("cardinality overflows 64 bits");
      }
      return infinite ? Cardinality::infinite() : Cardinality::finite(total);
    }
    case Kind::Prod: {
      auto a = cardinality_of(t.left());
      auto b = cardinality_of(t.right());
      if (a.is_empty() || b.is_empty()) return Cardinality::empty();
      if (a.is_infinite() || b.is_infinite()) return Cardinality::infinite();
      std::uint64_t n = 0;
      if (__builtin_mul_overflow(a.value(), b.value(), &n))
        throw std::overflow_error("cardinality overflows 64 bits");
      return Cardinality::finite(n);
    }
  }
  return Cardinality::empty();
}

// ---------------------------------------------------------------------------
// Text form
//
//   term := sum ; sum := prod ("+" prod)* ; prod := rev ("." rev)*   (left-assoc)
//   rev  := atom "~"* ; atom := NAT | "w*" | "w" | "(" term ")"

namespace detail {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  OrderTerm parse_all() {
    auto t = parse_sum();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected character '" + std::string(1, text_[pos_]) + "'");
    return t;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const { throw SyntaxError(msg, pos_); }

  void skip_ws() {
    while (pos_ < text_.size() &&
           (text_[pos_] == ' ' || text_[pos_] == '\t' || text_[pos_] == '\n' || text_[pos_] == '\r'))
      ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  OrderTerm parse_sum() {
    std::vector<OrderTerm> parts;
    parts.push_back(parse_prod());
    while (accept('+')) parts.push_back(parse_prod());
    return OrderTerm::sum(std::move(parts));
  }

  OrderTerm parse_prod() {
    auto acc = parse_rev();
    while (accept('.')) acc = OrderTerm::prod(std::move(acc), parse_rev());
    return acc;
  }

  OrderTerm parse_rev() {
    auto t = parse_atom();
    while (accept('~')) t = OrderTerm::rev(std::move(t));
    return t;
  }

  OrderTerm parse_atom() {
    skip_ws();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      auto t = parse_sum();
      if (!accept(')')) fail("expected ')'");
      return t;
    }
    if (c == 'w') {
      ++pos_;
      if (pos_ < text_.size() && text_[pos_] == '*') {
        ++pos_;
        return OrderTerm::omega_star();
      }
      return OrderTerm::omega();
    }
    if (c >= '0' && c <= '9') {
      std::size_t start = pos_;
      std::uint64_t value = 0;
      while (pos_ < text_.size() && text_[pos_] >= '0' && text_[pos_] <= '9') {
        auto digit = static_cast<std::uint64_t>(text_[pos_] - '0');
        if (__builtin_mul_overflow(value, std::uint64_t{10}, &value) ||
            __builtin_add_overflow(value, digit, &value))
          throw SyntaxError("natural number overflows 64 bits", start);
        ++pos_;
      }
      return OrderTerm::fin(value);
    }
    fail("unexpected character '" + std::string(1, c) + "'");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace detail

inline OrderTerm parse(std::string_view text) { return detail::Parser(text).parse_all(); }

enum class RenderFormat { Text, Unicode };

namespace detail {

inline void render_into(const OrderTerm& t, RenderFormat fmt, std::string& out) {
  const bool uni = fmt == RenderFormat::Unicode;
  auto wrapped = [&](const OrderTerm& u, bool parens) {
    if (parens) out += '(';
    render_into(u, fmt, out);
    if (parens) out += ')';
  };
  switch (t.kind()) {
    case Kind::Fin: out += std::to_string(t.count()); return;
    case Kind::Omega: out += uni ? "ω" : "w"; return;
    case Kind::OmegaStar: out += uni ? "ω*" : "w*"; return;
    case Kind::Sum: {
      bool first = true;
      for (const auto& c : t.children()) {
        if (!first) out += '+';
        first = false;
        wrapped(c, c.kind() == Kind::Sum);
      }
      return;
    }
    case Kind::Prod:
      wrapped(t.left(), t.left().kind() == Kind::Sum);
      out += uni ? "·" : ".";
      wrapped(t.right(), t.right().kind() == Kind::Sum || t.right().kind() == Kind::Prod);
      return;
    case Kind::Rev:
      if (uni) {
        wrapped(t.inner(), true);
        out += '*';
      } else {
        wrapped(t.inner(), !(t.inner().is_leaf() || t.inner().kind() == Kind::Rev));
        out += '~';
      }
      return;
  }
}

}  // namespace detail

/// Text output reparses to an identical tree.
inline std::string render(const OrderTerm& t, RenderFormat fmt = RenderFormat::Text) {
  std::string out;
  detail::render_into(t, fmt, out);
  return out;
}

}  // namespace pcalc
