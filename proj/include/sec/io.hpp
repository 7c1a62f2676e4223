#pragma once

#include "sec/cdc.hpp"
#include "sec/coloring.hpp"
#include "sec/graph.hpp"
#include "sec/latin.hpp"

#include <json.hpp>

#include <string>
#include <string_view>

// Line format for graphs:
//   p sec <n> <m>     header, once, before any edge
//   b <k>             optional: vertices 1..k form side X
//   e <u> <v>         one per edge, 1-based
//   c ...             comment
// Structured objects are JSON with a "kind" field and the host graph
// inlined as "vertices", optional "side_x" and "edges" (1-based pairs).
namespace sec {

using Json = nlohmann::ordered_json;

Graph parse_graph(std::string_view text);
std::string emit_graph(const Graph & g);

/// Reads a file, or stdin for "-".
std::string read_text(const std::string & path);
/// True when the text looks like a JSON document rather than a graph file.
bool looks_like_json(std::string_view text);
Json parse_json(std::string_view text);
/// "graph", "coloring", "trade", "cdc", "ocdc" or "flow".
std::string object_kind(const Json & j);

Json graph_to_json(const Graph & g);
Graph graph_from_json(const Json & j);

Json coloring_to_json(const Graph & g, const SimultaneousColoring & sc);
SimultaneousColoring coloring_from_json(const Json & j);

Json trade_to_json(const LatinTrade & t);
LatinTrade trade_from_json(const Json & j);

Json cdc_to_json(const Graph & g, const CycleDoubleCover & cover);
CycleDoubleCover cdc_from_json(const Json & j);

Json ocdc_to_json(const Graph & g, const OrientedCDC & cover);
OrientedCDC ocdc_from_json(const Json & j);

Json flow_to_json(const Graph & g, const IntegerFlow & flow, int k);
IntegerFlow flow_from_json(const Graph & g, const Json & j);

/// Two-space indented dump with a trailing newline.
std::string dump(const Json & j);

} // namespace sec
