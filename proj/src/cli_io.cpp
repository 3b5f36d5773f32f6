#include "starcrit/cli_io.hpp"

#include <json.hpp>

#include <cmath>
#include <numbers>
#include <set>
#include <sstream>

namespace starcrit {

using json = nlohmann::json;

namespace {

std::string edge_text(Edge e) {
  return "[" + std::to_string(e.u) + "," + std::to_string(e.v) + "]";
}

json metadata_json(const ColoringMetadata &meta) {
  json out = json::object();
  if (meta.generator)
    out["generator"] = *meta.generator;
  if (meta.n)
    out["n"] = *meta.n;
  if (meta.m)
    out["m"] = *meta.m;
  if (meta.case_tag)
    out["case"] = std::string(to_string(*meta.case_tag));
  return out;
}

using Kind = ParseError::Kind;

const json &require_key(const json &obj, const char *key) {
  if (!obj.is_object() || !obj.contains(key))
    throw ParseError(Kind::malformed, std::string("missing key \"") + key + "\"");
  return obj.at(key);
}

int require_int(const json &value, const char *what) {
  if (!value.is_number_integer())
    throw ParseError(Kind::malformed, std::string(what) + " must be an integer");
  return value.get<int>();
}

ColoringMetadata parse_metadata(const json &doc) {
  ColoringMetadata meta;
  if (!doc.contains("metadata"))
    return meta;
  const json &obj = doc.at("metadata");
  if (!obj.is_object())
    throw ParseError(Kind::malformed, "metadata must be an object");
  if (obj.contains("generator")) {
    if (!obj.at("generator").is_string())
      throw ParseError(Kind::malformed, "metadata.generator must be a string");
    meta.generator = obj.at("generator").get<std::string>();
  }
  if (obj.contains("n"))
    meta.n = require_int(obj.at("n"), "metadata.n");
  if (obj.contains("m"))
    meta.m = require_int(obj.at("m"), "metadata.m");
  if (obj.contains("case")) {
    const json &tag = obj.at("case");
    const auto parsed = tag.is_string() ? parse_case_tag(tag.get<std::string>()) : std::nullopt;
    if (!parsed)
      throw ParseError(Kind::malformed, "metadata.case is not a known case tag");
    meta.case_tag = parsed;
  }
  return meta;
}

} // namespace

std::string serialize(const TwoColoring &c, const ColoringMetadata &meta) {
  std::ostringstream out;
  out << "{\n";
  out << "  \"schema_version\": " << json(std::string(kColoringSchema)).dump() << ",\n";
  out << "  \"host\": {\"n_core\": " << c.host().n_core << ", \"pendant_k\": " << c.host().pendant_k
      << "},\n";
  out << "  \"red_edges\": [";
  bool first = true;
  for (const Edge &e : c.red_edges()) {
    out << (first ? "" : ",") << edge_text(e);
    first = false;
  }
  out << "]";
  if (!meta.empty())
    out << ",\n  \"metadata\": " << metadata_json(meta).dump();
  out << "\n}\n";
  return out.str();
}

ColoringDocument parse_document(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error &e) {
    throw ParseError(Kind::malformed, std::string("not valid JSON: ") + e.what());
  }
  if (!doc.is_object())
    throw ParseError(Kind::malformed, "document must be a JSON object");

  const json &version = require_key(doc, "schema_version");
  if (!version.is_string() || version.get<std::string>() != kColoringSchema)
    throw ParseError(Kind::unsupported_schema,
                     "unsupported schema_version " + version.dump() + ", expected " +
                         std::string(kColoringSchema));

  const json &host_obj = require_key(doc, "host");
  const HostSpec host{require_int(require_key(host_obj, "n_core"), "host.n_core"),
                      require_int(require_key(host_obj, "pendant_k"), "host.pendant_k")};
  try {
    host.validate();
  } catch (const InvalidHost &e) {
    throw ParseError(Kind::invalid_host, e.what());
  }

  const json &edges = require_key(doc, "red_edges");
  if (!edges.is_array())
    throw ParseError(Kind::malformed, "red_edges must be an array");
  std::set<Edge> seen;
  std::vector<Edge> red;
  for (const json &pair : edges) {
    if (!pair.is_array() || pair.size() != 2)
      throw ParseError(Kind::malformed, "each red edge must be a pair [i, j]");
    const int a = require_int(pair[0], "edge endpoint");
    const int b = require_int(pair[1], "edge endpoint");
    const Edge e{a, b};
    if (!host.contains(a) || !host.contains(b))
      throw ParseError(Kind::out_of_range, "edge " + edge_text(e) + " has an endpoint outside 0.." +
                                               std::to_string(host.vertex_count() - 1));
    if (a == b)
      throw ParseError(Kind::self_loop, "edge " + edge_text(e) + " is a loop");
    if (a > b)
      throw ParseError(Kind::malformed, "edge " + edge_text(e) + " must list the smaller endpoint first");
    if (!seen.insert(e).second)
      throw ParseError(Kind::duplicate_edge, "edge " + edge_text(e) + " listed twice");
    if (!host.adjacent(a, b))
      throw ParseError(Kind::not_host_edge, "edge " + edge_text(e) + " is not an edge of the host");
    red.push_back(e);
  }
  return {TwoColoring::from_red_edges(host, red), parse_metadata(doc)};
}

TwoColoring parse(std::string_view text) { return parse_document(text).coloring; }

std::string export_dot(const TwoColoring &c, std::string_view graph_name) {
  const HostSpec &host = c.host();
  const double radius = std::max(2.0, host.n_core * 0.35);
  std::ostringstream out;
  out.setf(std::ios::fixed);
  out.precision(3);
  out << "graph " << json(std::string(graph_name)).dump() << " {\n";
  out << "  layout=neato;\n";
  out << "  node [shape=circle, width=0.3, fixedsize=true, fontsize=9];\n";
  for (Vertex v = 0; v < host.n_core; ++v) {
    const double angle = 2.0 * std::numbers::pi * v / host.n_core;
    out << "  " << v << " [label=\"v" << v << "\", pos=\"" << radius * std::cos(angle) << ","
        << radius * std::sin(angle) << "!\"];\n";
  }
  if (host.has_pendant())
    out << "  " << host.pendant() << " [label=\"x\", pos=\"" << radius * 1.6 << ",0.000!\"];\n";

  for (const Edge &e : host.edges()) {
    const bool pendant_edge = host.has_pendant() && e.v == host.pendant();
    out << "  " << e.u << " -- " << e.v;
    if (c.is_red(e.u, e.v))
      out << " [color=red];\n";
    else if (pendant_edge)
      out << " [color=blue, style=dashed];\n";
    else
      out << " [color=blue];\n";
  }
  out << "}\n";
  return out.str();
}

} // namespace starcrit
