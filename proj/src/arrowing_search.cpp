#include "starcrit/arrowing_search.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <bit>
#include <mutex>
#include <string>
#include <thread>

namespace starcrit {

void SearchConfig::validate() const {
  if (node_budget && *node_budget < 1)
    throw std::invalid_argument("node budget must be at least 1");
  if (parallel_width < 0)
    throw std::invalid_argument("parallel width must be non-negative");
}

std::string_view to_string(Verdict v) {
  switch (v) {
  case Verdict::arrows:
    return "arrows";
  case Verdict::not_arrows:
    return "not_arrows";
  case Verdict::budget_exhausted:
    return "budget_exhausted";
  }
  return "unknown";
}

namespace {

using Clock = std::chrono::steady_clock;

struct Problem {
  HostSpec host;
  int order = 0;
  int n = 0;
  int m = 0;
  std::array<VertexMask, kMaxVertices> adjacency{};
  Vertex sym_vertex = -1;
  std::vector<Vertex> sym_slots;
};

// Partial coloring; an edge in neither row is still open.
struct State {
  std::array<VertexMask, kMaxVertices> red{};
  std::array<VertexMask, kMaxVertices> blue{};
};

Problem make_problem(const HostSpec &host, TargetPair t, bool symmetry_breaking) {
  Problem p;
  p.host = host;
  p.order = host.vertex_count();
  p.n = t.n;
  p.m = t.m;
  for (Vertex v = 0; v < p.order; ++v)
    p.adjacency[static_cast<std::size_t>(v)] = host.neighbors(v);
  if (symmetry_breaking) {
    if (host.has_pendant()) {
      p.sym_vertex = host.pendant();
      for (Vertex v = 0; v < host.pendant_k; ++v)
        p.sym_slots.push_back(v);
    } else {
      p.sym_vertex = 0;
      for (Vertex v = 1; v < host.n_core; ++v)
        p.sym_slots.push_back(v);
    }
  }
  return p;
}

void paint_red(State &s, Vertex a, Vertex b) {
  s.red[static_cast<std::size_t>(a)] |= bit(b);
  s.red[static_cast<std::size_t>(b)] |= bit(a);
}

void paint_blue(State &s, Vertex a, Vertex b) {
  s.blue[static_cast<std::size_t>(a)] |= bit(b);
  s.blue[static_cast<std::size_t>(b)] |= bit(a);
}

VertexMask open_row(const Problem &p, const State &s, Vertex v) {
  const auto i = static_cast<std::size_t>(v);
  return p.adjacency[i] & ~(s.red[i] | s.blue[i]);
}

bool propagate_symmetry(const Problem &p, State &s, bool &changed) {
  const auto x = static_cast<std::size_t>(p.sym_vertex);
  for (std::size_t j = 1; j < p.sym_slots.size(); ++j) {
    const Vertex prev = p.sym_slots[j - 1];
    const Vertex cur = p.sym_slots[j];
    const bool cur_red = s.red[x] & bit(cur);
    const bool prev_blue = s.blue[x] & bit(prev);
    if (cur_red && prev_blue)
      return false;
    if (cur_red && !(s.red[x] & bit(prev))) {
      paint_red(s, p.sym_vertex, prev);
      changed = true;
    }
    if (prev_blue && !(s.blue[x] & bit(cur))) {
      paint_blue(s, p.sym_vertex, cur);
      changed = true;
    }
  }
  return true;
}

/// Runs the forcing rules to a fixpoint. Returns false on a conflict.
bool propagate(const Problem &p, State &s) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (Vertex v = 0; v < p.order; ++v) {
      const auto vi = static_cast<std::size_t>(v);
      const int red = popcount(s.red[vi]);
      if (red >= p.n)
        return false;
      VertexMask open = open_row(p, s, v);
      if (red == p.n - 1 && open) {
        for_each_bit(open, [&](Vertex u) { paint_blue(s, v, u); });
        open = 0;
        changed = true;
      }

      const VertexMask nb = s.blue[vi];
      const int slack = p.n - 1 - red;
      const int final_blue_floor = popcount(nb) + std::max(0, popcount(open) - slack);
      if (final_blue_floor < p.m)
        continue;

      // v ends up with >= m blue neighbors, which must then be pairwise
      // non-blue. Core members are pairwise adjacent, so they form a red
      // clique; at most one member is the pendant vertex.
      const bool may_hold_pendant = p.host.has_pendant() && v != p.host.pendant();
      const int core_floor = final_blue_floor - (may_hold_pendant ? 1 : 0);
      if (core_floor - 1 >= p.n)
        return false;
      bool conflict = false;
      for_each_bit(nb, [&](Vertex u) {
        const auto ui = static_cast<std::size_t>(u);
        if (s.blue[ui] & nb)
          conflict = true;
        const VertexMask inside = open_row(p, s, u) & nb;
        if (inside) {
          for_each_bit(inside, [&](Vertex w) { paint_red(s, u, w); });
          changed = true;
        }
      });
      if (conflict)
        return false;
    }
    if (p.sym_vertex >= 0 && !propagate_symmetry(p, s, changed))
      return false;
  }
  return true;
}

/// First open edge in lexicographic order.
std::optional<Edge> first_open_edge(const Problem &p, const State &s) {
  for (Vertex u = 0; u < p.order; ++u) {
    const VertexMask later = open_row(p, s, u) & ~low_mask(u + 1);
    if (later)
      return Edge{u, static_cast<Vertex>(std::countr_zero(later))};
  }
  return std::nullopt;
}

struct Shared {
  std::optional<std::uint64_t> budget;
  std::atomic<bool> stop{false};
  std::atomic<bool> budget_hit{false};
  std::atomic<std::uint64_t> nodes{0};
  std::mutex witness_mutex;
  std::optional<State> witness;

  /// Counts a node; false once the budget is spent.
  bool enter() {
    const std::uint64_t count = nodes.fetch_add(1, std::memory_order_relaxed) + 1;
    if (budget && count > *budget) {
      budget_hit.store(true);
      stop.store(true);
      return false;
    }
    return true;
  }

  void offer(const State &s) {
    std::lock_guard lock(witness_mutex);
    if (!witness)
      witness = s;
    stop.store(true);
  }
};

class Searcher {
public:
  Searcher(const Problem &p, Shared &shared) : p_(p), shared_(shared) {}

  /// Depth-first search below `s`; true once a good completion is found.
  bool run(State s) {
    if (shared_.stop.load(std::memory_order_relaxed) || !shared_.enter())
      return false;
    if (!propagate(p_, s))
      return false;
    const auto e = first_open_edge(p_, s);
    if (!e) {
      shared_.offer(s);
      return true;
    }
    State red = s;
    paint_red(red, e->u, e->v);
    if (run(red))
      return true;
    paint_blue(s, e->u, e->v);
    return run(s);
  }

  /// Expands the top `depth` decision levels into independent subproblems.
  void split(State s, int depth, std::vector<State> &out) {
    if (!shared_.enter())
      return;
    if (!propagate(p_, s))
      return;
    const auto e = first_open_edge(p_, s);
    if (!e) {
      shared_.offer(s);
      return;
    }
    if (depth == 0) {
      out.push_back(s);
      return;
    }
    State red = s;
    paint_red(red, e->u, e->v);
    split(red, depth - 1, out);
    paint_blue(s, e->u, e->v);
    split(s, depth - 1, out);
  }

private:
  const Problem &p_;
  Shared &shared_;
};

void run_parallel(const Problem &p, Shared &shared, int width) {
  const int depth = std::bit_width(static_cast<unsigned>(width - 1));
  std::vector<State> tasks;
  Searcher(p, shared).split(State{}, depth, tasks);
  if (shared.stop.load())
    return;

  std::atomic<std::size_t> next{0};
  {
    std::vector<std::jthread> workers;
    const auto count = std::min<std::size_t>(static_cast<std::size_t>(width), tasks.size());
    for (std::size_t w = 0; w < count; ++w)
      workers.emplace_back([&] {
        Searcher searcher(p, shared);
        for (std::size_t i = next.fetch_add(1); i < tasks.size(); i = next.fetch_add(1)) {
          if (shared.stop.load())
            return;
          searcher.run(tasks[i]);
        }
      });
  }
}

TwoColoring to_coloring(const Problem &p, const State &s) {
  std::vector<VertexMask> rows(s.red.begin(), s.red.begin() + p.order);
  return TwoColoring(p.host, std::move(rows));
}

std::string describe(const HostSpec &h) {
  std::string out = "K_" + std::to_string(h.n_core);
  if (h.has_pendant())
    out += " + K_{1," + std::to_string(h.pendant_k) + "}";
  return out;
}

std::string describe(TargetPair t) {
  return "(K_{1," + std::to_string(t.n) + "}, K_{1," + std::to_string(t.m) + "}+e)";
}

} // namespace

SearchOutcome find_good_coloring(const HostSpec &host, TargetPair t, const SearchConfig &cfg) {
  host.validate();
  t.validate();
  cfg.validate();
  const auto start = Clock::now();

  const Problem problem = make_problem(host, t, cfg.symmetry_breaking);
  Shared shared;
  shared.budget = cfg.node_budget;
  if (cfg.parallel_width > 1)
    run_parallel(problem, shared, cfg.parallel_width);
  else
    Searcher(problem, shared).run(State{});

  SearchOutcome out;
  out.nodes_explored = shared.nodes.load();
  if (shared.witness) {
    TwoColoring witness = to_coloring(problem, *shared.witness);
    if (!is_good_coloring(witness, t))
      throw std::logic_error("search produced a coloring containing a target on " + describe(host));
    out.verdict = Verdict::not_arrows;
    out.witness = std::move(witness);
  } else if (shared.budget_hit.load()) {
    out.verdict = Verdict::budget_exhausted;
  } else {
    out.verdict = Verdict::arrows;
  }
  out.elapsed = std::chrono::duration_cast<std::chrono::nanoseconds>(Clock::now() - start);
  return out;
}

bool arrows(const HostSpec &host, TargetPair t, const SearchConfig &cfg) {
  const SearchOutcome out = find_good_coloring(host, t, cfg);
  if (out.verdict == Verdict::budget_exhausted)
    throw SearchIndeterminate("node budget exhausted deciding " + describe(host) + " -> " +
                              describe(t));
  return out.verdict == Verdict::arrows;
}

RamseyCertificate certify_ramsey(TargetPair t, int n_max, const SearchConfig &cfg) {
  t.validate();
  if (n_max < 2)
    throw std::invalid_argument("n_max must be at least 2, got " + std::to_string(n_max));
  RamseyCertificate cert{t, 0, {}};
  const int limit = std::min(n_max, kMaxVertices);
  for (int order = 1; order <= limit; ++order) {
    const HostSpec host = HostSpec::complete(order);
    SearchOutcome out = find_good_coloring(host, t, cfg);
    const Verdict verdict = out.verdict;
    cert.probes.push_back({host, std::move(out)});
    if (verdict == Verdict::budget_exhausted)
      throw SearchIndeterminate("node budget exhausted deciding " + describe(host) + " -> " +
                                describe(t));
    if (verdict == Verdict::arrows) {
      cert.value = order;
      return cert;
    }
  }
  throw SearchRangeError("no K_N with N <= " + std::to_string(n_max) + " arrows " + describe(t));
}

int compute_ramsey(TargetPair t, int n_max, const SearchConfig &cfg) {
  return certify_ramsey(t, n_max, cfg).value;
}

StarCriticalCertificate certify_star_critical(TargetPair t, int r, const SearchConfig &cfg) {
  t.validate();
  if (r < 2 || r > kMaxVertices)
    throw InconsistentRamseyValue("Ramsey value " + std::to_string(r) + " out of range");

  auto decide = [&](const HostSpec &host) {
    SearchOutcome out = find_good_coloring(host, t, cfg);
    if (out.verdict == Verdict::budget_exhausted)
      throw SearchIndeterminate("node budget exhausted deciding " + describe(host) + " -> " +
                                describe(t));
    return Probe{host, std::move(out)};
  };

  StarCriticalCertificate cert;
  cert.target = t;
  cert.ramsey = r;
  cert.below_ramsey = decide(HostSpec::complete(r - 1));
  if (cert.below_ramsey.outcome.verdict == Verdict::arrows)
    throw InconsistentRamseyValue("K_" + std::to_string(r - 1) + " already arrows " +
                                  describe(t) + "; r = " + std::to_string(r) + " is too large");
  cert.at_ramsey = decide(HostSpec::complete(r));
  if (cert.at_ramsey.outcome.verdict != Verdict::arrows)
    throw InconsistentRamseyValue("K_" + std::to_string(r) + " does not arrow " + describe(t) +
                                  "; r = " + std::to_string(r) + " is too small");

  for (int k = 1; k <= r - 1; ++k) {
    cert.probes.push_back(decide(HostSpec::pendant_star(r - 1, k)));
    if (cert.probes.back().outcome.verdict == Verdict::arrows) {
      cert.value = k;
      return cert;
    }
  }
  // K_{r-1} + K_{1,r-1} is K_r, which arrows.
  throw std::logic_error("search disagrees with itself on K_" + std::to_string(r));
}

int compute_star_critical(TargetPair t, int r, const SearchConfig &cfg) {
  return certify_star_critical(t, r, cfg).value;
}

} // namespace starcrit
