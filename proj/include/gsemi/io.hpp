#ifndef GSEMI_IO_HPP
#define GSEMI_IO_HPP

#include <string>

#include <json.hpp>

#include "gsemi/cayley.hpp"
#include "gsemi/graph.hpp"
#include "gsemi/pair_partition.hpp"
#include "gsemi/trace_monoid.hpp"

namespace gsemi {

// Graph JSON: {"n": <int>, "edges": [[u, v], ...]} with u < v sorted.
nlohmann::json graph_to_json(const SimpleGraph& g);
SimpleGraph graph_from_json(const nlohmann::json& j);

// Text format: optional header line "n <N>", then one edge "u v" per line.
// The writer always emits the header so isolated vertices survive.
std::string graph_to_text(const SimpleGraph& g);
SimpleGraph graph_from_text(const std::string& text);

// Dispatch on extension: .json is JSON, anything else the text format.
SimpleGraph load_graph_file(const std::string& path);
void save_graph_file(const SimpleGraph& g, const std::string& path);

// Inline constructor specs: turan:L,omega | minimizer:L,omega |
// complete:L | edgeless:L | cycle:L | file:path.
SimpleGraph graph_from_spec(const std::string& spec);

nlohmann::json word_to_json(const TraceWord& w);
TraceWord word_from_json(const nlohmann::json& j, const SimpleGraph& g);

nlohmann::json path_to_json(const CayleyPath& path);
nlohmann::json partition_to_json(const PairPartition& pi);

// RFC 4180 quoting: fields with commas, quotes or newlines get quoted,
// embedded quotes doubled.
std::string csv_field(const std::string& s);

// Temp-file-and-rename write; the report never exists half-written.
void write_atomic(const std::string& path, const std::string& content);

}  // namespace gsemi

#endif
