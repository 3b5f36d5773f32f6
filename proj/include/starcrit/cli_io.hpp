#pragma once

/**
 * Coloring documents and graph-description export.
 *
 * A coloring document is JSON text with keys in a fixed order:
 *
 *   {
 *     "schema_version": "starcrit-coloring/1",
 *     "host": {"n_core": 8, "pendant_k": 7},
 *     "red_edges": [[0,1],[0,7],...],
 *     "metadata": {"generator": "l2c1", "n": 4, "m": 6, "case": "both_even_small_n"}
 *   }
 *
 * Only red edges are listed; every other host edge is blue. The pendant
 * vertex has index n_core. Edges are sorted and the text ends in a newline,
 * so equal colorings serialize to identical bytes.
 */

#include "starcrit/colored_graph.hpp"
#include "starcrit/formulas.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace starcrit {

inline constexpr std::string_view kColoringSchema = "starcrit-coloring/1";

struct ColoringMetadata {
  std::optional<std::string> generator;
  std::optional<int> n;
  std::optional<int> m;
  std::optional<CaseTag> case_tag;

  bool empty() const { return !generator && !n && !m && !case_tag; }
  friend bool operator==(const ColoringMetadata &, const ColoringMetadata &) = default;
};

struct ColoringDocument {
  TwoColoring coloring;
  ColoringMetadata metadata;
};

class ParseError : public std::runtime_error {
public:
  enum class Kind {
    malformed,         ///< not JSON, or a key has the wrong type
    unsupported_schema,
    invalid_host,      ///< e.g. pendant_k > n_core
    out_of_range,      ///< edge endpoint outside the host
    self_loop,
    duplicate_edge,
    not_host_edge,     ///< pair not joined in the host (pendant non-attachment)
  };

  ParseError(Kind kind, const std::string &what) : std::runtime_error(what), kind_(kind) {}
  Kind kind() const { return kind_; }

private:
  Kind kind_;
};

std::string serialize(const TwoColoring &c, const ColoringMetadata &meta = {});

ColoringDocument parse_document(std::string_view text);
TwoColoring parse(std::string_view text);

/**
 * Graphviz description for neato: core vertices on a circle in index order,
 * counter-clockwise from the right, pendant vertex outside the circle. Red
 * edges are solid red, blue edges solid blue, blue pendant edges dashed.
 */
std::string export_dot(const TwoColoring &c, std::string_view graph_name = "coloring");

} // namespace starcrit
