#pragma once

#include "amoeba/area.hpp"
#include "amoeba/classify.hpp"
#include "amoeba/engine.hpp"

#include <json.hpp>

#include <string>
#include <variant>

namespace amoeba::io {

using nlohmann::json;

// Tree:   {"vertices": n, "edges": [[u,v], ...]}           (u < v, sorted)
// Amoeba: tree fields plus "mult": [m_0, ..., m_{n-1}]
// Colony: {"members": [amoeba, ...]}
json to_json(const Tree& t);
json to_json(const Amoeba& a);
json to_json(const Colony& c);
json to_json(const CopyEmbedding& c);
json to_json(const DegreeReport& r);
json to_json(const CaterpillarSpec& s);
json to_json(const SlowVerdict& v);
json to_json(const CaterpillarResult& r);
json to_json(const Classification& c);
json to_json(const Violation& v);
json to_json(const VertexPartition& p);
json edges_to_json(const std::vector<Edge>& edges);

Tree tree_from_json(const json& j);
Amoeba amoeba_from_json(const json& j);
Colony colony_from_json(const json& j);
CopyEmbedding copy_from_json(const json& edges, const json& mult);
std::vector<Edge> edges_from_json(const json& j);

/// Parses text; throws Error(MalformedInput) on bad JSON.
json parse_document(const std::string& text);
Tree parse_tree(const std::string& text);

/// An input document is a tree, an amoeba, or a colony.
using Document = std::variant<Tree, Amoeba, Colony>;
Document parse_any(const std::string& text);

/// JSON-lines: header {"amoeba"|"colony", "ell", "start"}, then one line per
/// step {"copy_edges", "copy_mult", "new_edges"} (plus "member" for colonies).
std::string log_to_jsonl(const SequenceLog& log);
SequenceLog log_from_jsonl(const std::string& text);

} // namespace amoeba::io
