#pragma once

/**
 * Red/blue edge colorings of complete hosts K_N and pendant-star hosts
 * K_N + K_{1,k}. Vertices are 0-based; the pendant vertex, when present,
 * has index N and is joined to core vertices 0..k-1.
 *
 * Adjacency rows are 64-bit masks, so a host has at most 64 vertices.
 */

#include <bit>
#include <compare>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

namespace starcrit {

using Vertex = int;
using VertexMask = std::uint64_t;

inline constexpr int kMaxVertices = 64;

class InvalidVertex : public std::out_of_range {
public:
  using std::out_of_range::out_of_range;
};

class InvalidHost : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

class InvalidColoring : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

constexpr VertexMask bit(Vertex v) { return VertexMask{1} << v; }

/// Mask with the lowest `count` bits set.
constexpr VertexMask low_mask(int count) {
  return count >= 64 ? ~VertexMask{0} : (VertexMask{1} << count) - 1;
}

constexpr int popcount(VertexMask m) { return std::popcount(m); }

/// Calls f(v) for every set bit of `m`, lowest first.
template <class F> void for_each_bit(VertexMask m, F &&f) {
  while (m) {
    f(static_cast<Vertex>(std::countr_zero(m)));
    m &= m - 1;
  }
}

struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  /// Endpoints ordered so that u < v.
  static constexpr Edge normalized(Vertex a, Vertex b) {
    return a < b ? Edge{a, b} : Edge{b, a};
  }

  friend constexpr auto operator<=>(const Edge &, const Edge &) = default;
};

/// K_{n_core}, plus one pendant vertex joined to the first pendant_k core
/// vertices when pendant_k > 0.
struct HostSpec {
  int n_core = 0;
  int pendant_k = 0;

  static HostSpec complete(int n_core);
  static HostSpec pendant_star(int n_core, int pendant_k);

  /// Throws InvalidHost unless 1 <= n_core, 0 <= pendant_k <= n_core and the
  /// vertex count fits a mask.
  void validate() const;

  bool has_pendant() const { return pendant_k > 0; }
  Vertex pendant() const { return n_core; }
  int vertex_count() const { return n_core + (has_pendant() ? 1 : 0); }
  int edge_count() const { return n_core * (n_core - 1) / 2 + pendant_k; }

  bool contains(Vertex v) const { return v >= 0 && v < vertex_count(); }
  VertexMask vertices() const { return low_mask(vertex_count()); }
  VertexMask neighbors(Vertex v) const;
  bool adjacent(Vertex a, Vertex b) const;
  int degree(Vertex v) const { return popcount(neighbors(v)); }

  /// Host edges in lexicographic order.
  std::vector<Edge> edges() const;

  friend bool operator==(const HostSpec &, const HostSpec &) = default;
};

/**
 * Immutable red/blue coloring of a host. Only the red graph is stored; an
 * edge of the host is blue exactly when it is not red, and non-adjacent
 * pairs are neither.
 */
class TwoColoring {
public:
  /// Throws InvalidColoring if the rows are asymmetric, contain loops or
  /// leave the host.
  TwoColoring(HostSpec host, std::vector<VertexMask> red_rows);

  static TwoColoring all_red(HostSpec host);
  static TwoColoring all_blue(HostSpec host);
  static TwoColoring from_red_edges(HostSpec host, std::span<const Edge> red);

  const HostSpec &host() const { return host_; }
  int vertex_count() const { return host_.vertex_count(); }

  VertexMask red_row(Vertex v) const;
  VertexMask blue_row(Vertex v) const;

  bool is_red(Vertex a, Vertex b) const;
  bool is_blue(Vertex a, Vertex b) const;

  std::vector<Edge> red_edges() const;
  std::vector<Edge> blue_edges() const;

  friend bool operator==(const TwoColoring &, const TwoColoring &) = default;

private:
  void check_vertex(Vertex v) const;

  HostSpec host_;
  std::vector<VertexMask> red_;
};

int red_degree(const TwoColoring &c, Vertex v);
int blue_degree(const TwoColoring &c, Vertex v);

std::vector<Vertex> red_neighborhood(const TwoColoring &c, Vertex v);
std::vector<Vertex> blue_neighborhood(const TwoColoring &c, Vertex v);

/// Same host, colors swapped on every host edge.
TwoColoring complemented(const TwoColoring &c);

/**
 * Induced coloring on `keep`, relabeled to 0..|keep|-1 in ascending order.
 * The induced host must again be K_N or K_N + K_{1,k} with k >= 1; keeping
 * the pendant vertex without any of its attachments is rejected.
 */
TwoColoring restrict(const TwoColoring &c, std::span<const Vertex> keep);

/// Vertices of a mask in ascending order.
std::vector<Vertex> to_vertices(VertexMask m);

} // namespace starcrit
