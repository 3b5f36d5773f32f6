#include "starcrit/colored_graph.hpp"

#include <algorithm>
#include <string>

namespace starcrit {

HostSpec HostSpec::complete(int n_core) {
  HostSpec h{n_core, 0};
  h.validate();
  return h;
}

HostSpec HostSpec::pendant_star(int n_core, int pendant_k) {
  HostSpec h{n_core, pendant_k};
  h.validate();
  return h;
}

void HostSpec::validate() const {
  if (n_core < 1)
    throw InvalidHost("host core order must be positive, got " + std::to_string(n_core));
  if (pendant_k < 0 || pendant_k > n_core)
    throw InvalidHost("pendant attachment count " + std::to_string(pendant_k) +
                      " outside [0, " + std::to_string(n_core) + "]");
  if (vertex_count() > kMaxVertices)
    throw InvalidHost("host has " + std::to_string(vertex_count()) +
                      " vertices; at most " + std::to_string(kMaxVertices) + " supported");
}

VertexMask HostSpec::neighbors(Vertex v) const {
  if (!contains(v))
    throw InvalidVertex("vertex " + std::to_string(v) + " not in host");
  if (has_pendant() && v == pendant())
    return low_mask(pendant_k);
  VertexMask row = low_mask(n_core) & ~bit(v);
  if (has_pendant() && v < pendant_k)
    row |= bit(pendant());
  return row;
}

bool HostSpec::adjacent(Vertex a, Vertex b) const {
  if (!contains(b))
    throw InvalidVertex("vertex " + std::to_string(b) + " not in host");
  return (neighbors(a) & bit(b)) != 0;
}

std::vector<Edge> HostSpec::edges() const {
  std::vector<Edge> out;
  out.reserve(static_cast<std::size_t>(edge_count()));
  for (Vertex u = 0; u < vertex_count(); ++u)
    for_each_bit(neighbors(u) & ~low_mask(u + 1), [&](Vertex v) { out.push_back({u, v}); });
  return out;
}

TwoColoring::TwoColoring(HostSpec host, std::vector<VertexMask> red_rows)
    : host_(host), red_(std::move(red_rows)) {
  host_.validate();
  if (static_cast<int>(red_.size()) != host_.vertex_count())
    throw InvalidColoring("expected " + std::to_string(host_.vertex_count()) +
                          " adjacency rows, got " + std::to_string(red_.size()));
  for (Vertex v = 0; v < host_.vertex_count(); ++v) {
    const VertexMask row = red_[static_cast<std::size_t>(v)];
    if (row & bit(v))
      throw InvalidColoring("self-loop at vertex " + std::to_string(v));
    if (row & ~host_.neighbors(v))
      throw InvalidColoring("red edge at vertex " + std::to_string(v) + " is not a host edge");
    for_each_bit(row, [&](Vertex u) {
      if (!(red_[static_cast<std::size_t>(u)] & bit(v)))
        throw InvalidColoring("asymmetric red edge {" + std::to_string(v) + ", " +
                              std::to_string(u) + "}");
    });
  }
}

TwoColoring TwoColoring::all_red(HostSpec host) {
  host.validate();
  std::vector<VertexMask> rows(static_cast<std::size_t>(host.vertex_count()));
  for (Vertex v = 0; v < host.vertex_count(); ++v)
    rows[static_cast<std::size_t>(v)] = host.neighbors(v);
  return TwoColoring(host, std::move(rows));
}

TwoColoring TwoColoring::all_blue(HostSpec host) {
  host.validate();
  return TwoColoring(host, std::vector<VertexMask>(static_cast<std::size_t>(host.vertex_count()), 0));
}

TwoColoring TwoColoring::from_red_edges(HostSpec host, std::span<const Edge> red) {
  host.validate();
  std::vector<VertexMask> rows(static_cast<std::size_t>(host.vertex_count()), 0);
  for (const Edge &e : red) {
    if (!host.contains(e.u) || !host.contains(e.v))
      throw InvalidVertex("edge {" + std::to_string(e.u) + ", " + std::to_string(e.v) +
                          "} leaves the host");
    if (e.u == e.v)
      throw InvalidColoring("self-loop at vertex " + std::to_string(e.u));
    rows[static_cast<std::size_t>(e.u)] |= bit(e.v);
    rows[static_cast<std::size_t>(e.v)] |= bit(e.u);
  }
  return TwoColoring(host, std::move(rows));
}

void TwoColoring::check_vertex(Vertex v) const {
  if (!host_.contains(v))
    throw InvalidVertex("vertex " + std::to_string(v) + " not in host of order " +
                        std::to_string(host_.vertex_count()));
}

VertexMask TwoColoring::red_row(Vertex v) const {
  check_vertex(v);
  return red_[static_cast<std::size_t>(v)];
}

VertexMask TwoColoring::blue_row(Vertex v) const {
  check_vertex(v);
  return host_.neighbors(v) & ~red_[static_cast<std::size_t>(v)];
}

bool TwoColoring::is_red(Vertex a, Vertex b) const {
  check_vertex(b);
  return (red_row(a) & bit(b)) != 0;
}

bool TwoColoring::is_blue(Vertex a, Vertex b) const {
  check_vertex(b);
  return (blue_row(a) & bit(b)) != 0;
}

std::vector<Edge> TwoColoring::red_edges() const {
  std::vector<Edge> out;
  for (Vertex u = 0; u < vertex_count(); ++u)
    for_each_bit(red_row(u) & ~low_mask(u + 1), [&](Vertex v) { out.push_back({u, v}); });
  return out;
}

std::vector<Edge> TwoColoring::blue_edges() const {
  std::vector<Edge> out;
  for (Vertex u = 0; u < vertex_count(); ++u)
    for_each_bit(blue_row(u) & ~low_mask(u + 1), [&](Vertex v) { out.push_back({u, v}); });
  return out;
}

int red_degree(const TwoColoring &c, Vertex v) { return popcount(c.red_row(v)); }

int blue_degree(const TwoColoring &c, Vertex v) { return popcount(c.blue_row(v)); }

std::vector<Vertex> to_vertices(VertexMask m) {
  std::vector<Vertex> out;
  out.reserve(static_cast<std::size_t>(popcount(m)));
  for_each_bit(m, [&](Vertex v) { out.push_back(v); });
  return out;
}

std::vector<Vertex> red_neighborhood(const TwoColoring &c, Vertex v) {
  return to_vertices(c.red_row(v));
}

std::vector<Vertex> blue_neighborhood(const TwoColoring &c, Vertex v) {
  return to_vertices(c.blue_row(v));
}

TwoColoring complemented(const TwoColoring &c) {
  std::vector<VertexMask> rows(static_cast<std::size_t>(c.vertex_count()));
  for (Vertex v = 0; v < c.vertex_count(); ++v)
    rows[static_cast<std::size_t>(v)] = c.blue_row(v);
  return TwoColoring(c.host(), std::move(rows));
}

TwoColoring restrict(const TwoColoring &c, std::span<const Vertex> keep) {
  const HostSpec &host = c.host();
  VertexMask kept = 0;
  for (Vertex v : keep) {
    if (!host.contains(v))
      throw InvalidVertex("vertex " + std::to_string(v) + " not in host");
    if (kept & bit(v))
      throw InvalidHost("vertex " + std::to_string(v) + " listed twice");
    kept |= bit(v);
  }

  const VertexMask core = low_mask(host.n_core);
  const int new_core = popcount(kept & core);
  int new_k = 0;
  bool keeps_pendant = host.has_pendant() && (kept & bit(host.pendant()));
  if (keeps_pendant) {
    new_k = popcount(kept & low_mask(host.pendant_k));
    if (new_k == 0)
      throw InvalidHost("restriction keeps the pendant vertex without any attachment edge");
  }
  if (new_core == 0)
    throw InvalidHost("restriction keeps no core vertex");

  // Ascending order keeps attached core vertices first, so the induced host
  // is already in normal form.
  const std::vector<Vertex> order = to_vertices(kept);
  std::vector<int> relabel(static_cast<std::size_t>(host.vertex_count()), -1);
  for (std::size_t i = 0; i < order.size(); ++i)
    relabel[static_cast<std::size_t>(order[i])] = static_cast<int>(i);

  const HostSpec induced{new_core, new_k};
  std::vector<VertexMask> rows(order.size(), 0);
  for (std::size_t i = 0; i < order.size(); ++i)
    for_each_bit(c.red_row(order[i]) & kept, [&](Vertex u) {
      rows[i] |= bit(relabel[static_cast<std::size_t>(u)]);
    });
  return TwoColoring(induced, std::move(rows));
}

} // namespace starcrit
