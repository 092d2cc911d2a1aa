#pragma once

// Red/Blue colorings of complete graphs.
//
// Edges are ordered by (larger endpoint, smaller endpoint): {0,1}, {0,2}, {1,2},
// {0,3}, ... so every vertex's edges to earlier vertices are contiguous. The
// serialized form is one 'R'/'B' character per edge in that order.

#include <bit>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "pcalc/errors.hpp"

namespace pcalc {

enum class Color : std::uint8_t { Red, Blue };

inline Color other(Color c) { return c == Color::Red ? Color::Blue : Color::Red; }
inline char color_char(Color c) { return c == Color::Red ? 'R' : 'B'; }

/// Index of edge {i, j} in the fixed edge order.
inline std::size_t edge_index(std::size_t i, std::size_t j) {
  if (i > j) std::swap(i, j);
  return j * (j - 1) / 2 + i;
}

class Coloring {
 public:
  Coloring() = default;
  explicit Coloring(std::size_t n, Color fill = Color::Red)
      : n_(n), bits_((edge_count() + 63) / 64, fill == Color::Blue ? ~std::uint64_t{0} : 0) {}

  std::size_t vertices() const noexcept { return n_; }
  std::size_t edge_count() const noexcept { return n_ < 2 ? 0 : n_ * (n_ - 1) / 2; }

  Color at(std::size_t i, std::size_t j) const {
    check(i, j);
    auto e = edge_index(i, j);
    return (bits_[e / 64] >> (e % 64)) & 1U ? Color::Blue : Color::Red;
  }

  void set(std::size_t i, std::size_t j, Color c) {
    check(i, j);
    auto e = edge_index(i, j);
    if (c == Color::Blue)
      bits_[e / 64] |= std::uint64_t{1} << (e % 64);
    else
      bits_[e / 64] &= ~(std::uint64_t{1} << (e % 64));
  }

  /// Colors swapped on every edge.
  Coloring swapped() const {
    Coloring out(n_);
    for (std::size_t j = 1; j < n_; ++j)
      for (std::size_t i = 0; i < j; ++i) out.set(i, j, other(at(i, j)));
    return out;
  }

  std::string edge_string() const {
    std::string s;
    s.reserve(edge_count());
    for (std::size_t j = 1; j < n_; ++j)
      for (std::size_t i = 0; i < j; ++i) s += color_char(at(i, j));
    return s;
  }

  static Coloring from_edge_string(std::size_t n, std::string_view edges) {
    Coloring c(n);
    if (edges.size() != c.edge_count())
      throw std::invalid_argument("coloring of K_" + std::to_string(n) + " needs " + std::to_string(c.edge_count()) +
                                  " edge colors, got " + std::to_string(edges.size()));
    std::size_t e = 0;
    for (std::size_t j = 1; j < n; ++j)
      for (std::size_t i = 0; i < j; ++i, ++e) {
        if (edges[e] == 'R') c.set(i, j, Color::Red);
        else if (edges[e] == 'B') c.set(i, j, Color::Blue);
        else throw std::invalid_argument("edge color must be 'R' or 'B'");
      }
    return c;
  }

  friend bool operator==(const Coloring& a, const Coloring& b) {
    return a.n_ == b.n_ && a.edge_string() == b.edge_string();
  }

 private:
  void check(std::size_t i, std::size_t j) const {
    if (i == j || i >= n_ || j >= n_)
      throw std::out_of_range("no edge {" + std::to_string(i) + "," + std::to_string(j) + "} in K_" +
                              std::to_string(n_));
  }

  std::size_t n_ = 0;
  std::vector<std::uint64_t> bits_;
};

// ---------------------------------------------------------------------------
// Clique search

struct RedClique {
  std::vector<std::size_t> vertices;
};
struct BlueClique {
  std::vector<std::size_t> vertices;
};
struct NoClique {};

using CliqueVerdict = std::variant<RedClique, BlueClique, NoClique>;

namespace detail {

// Lexicographically least k-subset of `candidates` that is a clique in color c.
inline bool least_clique(const Coloring& g, Color c, std::size_t k, std::size_t from,
                         std::vector<std::size_t>& chosen) {
  if (chosen.size() == k) return true;
  for (std::size_t v = from; v + (k - chosen.size()) <= g.vertices(); ++v) {
    bool ok = true;
    for (auto u : chosen)
      if (g.at(u, v) != c) {
        ok = false;
        break;
      }
    if (!ok) continue;
    chosen.push_back(v);
    if (least_clique(g, c, k, v + 1, chosen)) return true;
    chosen.pop_back();
  }
  return false;
}

}  // namespace detail

/// Red K_a first, then blue K_b, each the lexicographically least; NoClique if neither.
inline CliqueVerdict verify_coloring(const Coloring& g, std::size_t a, std::size_t b) {
  if (a < 1 || b < 1) throw ContractViolation("verify_coloring: clique sizes must be at least 1");
  std::vector<std::size_t> chosen;
  if (a <= g.vertices() && detail::least_clique(g, Color::Red, a, 0, chosen)) return RedClique{chosen};
  chosen.clear();
  if (b <= g.vertices() && detail::least_clique(g, Color::Blue, b, 0, chosen)) return BlueClique{chosen};
  return NoClique{};
}

inline bool avoids(const Coloring& g, std::size_t a, std::size_t b) {
  return std::holds_alternative<NoClique>(verify_coloring(g, a, b));
}

/// K_5 with the 5-cycle 0-1-2-3-4 red and the diagonals blue.
inline Coloring pentagon_witness() {
  Coloring c(5, Color::Blue);
  for (std::size_t i = 0; i < 5; ++i) c.set(i, (i + 1) % 5, Color::Red);
  return c;
}

// ---------------------------------------------------------------------------
// Rendering

inline std::string to_dot(const Coloring& g, std::string_view name = "coloring") {
  std::ostringstream os;
  os << "graph " << name << " {\n";
  for (std::size_t v = 0; v < g.vertices(); ++v) os << "  " << v << ";\n";
  for (std::size_t j = 1; j < g.vertices(); ++j)
    for (std::size_t i = 0; i < j; ++i)
      os << "  " << i << " -- " << j << " [color=" << (g.at(i, j) == Color::Red ? "red" : "blue") << "];\n";
  os << "}\n";
  return os.str();
}

inline std::string to_tikz(const Coloring& g) {
  std::ostringstream os;
  const auto n = g.vertices();
  os << "\\begin{tikzpicture}\n";
  for (std::size_t v = 0; v < n; ++v) {
    double angle = n == 0 ? 90.0 : 90.0 + 360.0 * static_cast<double>(v) / static_cast<double>(n);
    os << "  \\node[circle,fill,inner sep=1.5pt] (v" << v << ") at (" << angle << ":2) {};\n";
  }
  for (std::size_t j = 1; j < n; ++j)
    for (std::size_t i = 0; i < j; ++i)
      os << "  \\draw[" << (g.at(i, j) == Color::Red ? "red" : "blue") << "] (v" << i << ") -- (v" << j << ");\n";
  os << "\\end{tikzpicture}\n";
  return os.str();
}

}  // namespace pcalc
