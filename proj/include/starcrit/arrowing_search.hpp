#pragma once

/**
 * Exhaustive search for good colorings of a host, i.e. colorings with no red
 * K_{1,n} and no blue K_{1,m}+e. A host arrows the pair exactly when the
 * search space is exhausted without finding one.
 *
 * The search assigns edges in lexicographic order, red before blue, and
 * propagates after every decision:
 *  - a vertex with red degree n is a conflict; at red degree n-1 its open
 *    edges are forced blue;
 *  - a vertex whose blue degree is bound to reach m is a future K_{1,m}+e
 *    center, so a blue edge inside its blue neighborhood is a conflict, open
 *    host edges inside that neighborhood are forced red, and a neighborhood
 *    large enough to force a red K_{1,n} is a conflict.
 * Both targets are monotone in their own color, so every pruned branch
 * contains no good completion.
 *
 * With symmetry breaking on, the red neighborhood of one vertex is forced to
 * be a prefix of its neighbor order: vertex 0 of a complete host, or the
 * pendant vertex (over its attachments) of a pendant host.
 */

#include "starcrit/colored_graph.hpp"
#include "starcrit/detectors.hpp"

#include <chrono>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string_view>
#include <vector>

namespace starcrit {

struct SearchConfig {
  std::optional<std::uint64_t> node_budget;
  bool symmetry_breaking = true;
  /// Top-level branches explored concurrently; 0 or 1 runs sequentially.
  int parallel_width = 0;

  void validate() const;
};

enum class Verdict { arrows, not_arrows, budget_exhausted };

std::string_view to_string(Verdict v);

struct SearchOutcome {
  Verdict verdict = Verdict::budget_exhausted;
  /// Present iff verdict == not_arrows; always passes is_good_coloring.
  std::optional<TwoColoring> witness;
  std::uint64_t nodes_explored = 0;
  std::chrono::nanoseconds elapsed{0};
};

/// Raised when a node budget stops a search that needed a definite answer.
class SearchIndeterminate : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// No arrowing host found up to the requested bound.
class SearchRangeError : public std::range_error {
public:
  using std::range_error::range_error;
};

/// A Ramsey value handed to the star-critical search is not consistent with
/// the oracle.
class InconsistentRamseyValue : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

SearchOutcome find_good_coloring(const HostSpec &host, TargetPair t, const SearchConfig &cfg = {});

/// Throws SearchIndeterminate when the budget runs out first.
bool arrows(const HostSpec &host, TargetPair t, const SearchConfig &cfg = {});

struct Probe {
  HostSpec host;
  SearchOutcome outcome;
};

struct RamseyCertificate {
  TargetPair target;
  int value = 0;
  /// One probe per complete host K_1 .. K_value; all but the last carry a
  /// witness, the last is an exhaustive refutation.
  std::vector<Probe> probes;
};

struct StarCriticalCertificate {
  TargetPair target;
  int ramsey = 0;
  int value = 0;
  Probe below_ramsey; ///< K_{r-1}, does not arrow
  Probe at_ramsey;    ///< K_r, arrows
  /// K_{r-1} + K_{1,k} for k = 1 .. value.
  std::vector<Probe> probes;
};

/// Smallest N <= n_max with K_N arrowing t, found by probing N upward.
RamseyCertificate certify_ramsey(TargetPair t, int n_max, const SearchConfig &cfg = {});
int compute_ramsey(TargetPair t, int n_max, const SearchConfig &cfg = {});

/// Smallest k with K_{r-1} + K_{1,k} arrowing t. Throws
/// InconsistentRamseyValue if K_{r-1} arrows or K_r does not.
StarCriticalCertificate certify_star_critical(TargetPair t, int r, const SearchConfig &cfg = {});
int compute_star_critical(TargetPair t, int r, const SearchConfig &cfg = {});

} // namespace starcrit
