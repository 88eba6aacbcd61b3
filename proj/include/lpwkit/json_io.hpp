#pragma once

#include <string>

#include <json.hpp>

#include "lpwkit/graph_core.hpp"

namespace lpwkit {

// Interchange format, format_version 1.  Field names are pinned in
// docs/interchange-format.md; every document carries "format_version" and a
// "kind" tag.  Parsing a document of the wrong kind throws MalformedInputError.

inline constexpr int kFormatVersion = 1;

nlohmann::json to_json(const Graph& g);
nlohmann::json to_json(const Layering& l);
nlohmann::json to_json(const PathDecomposition& d);
nlohmann::json to_json(const LayeredPathDecomposition& lpd);
nlohmann::json to_json(const TrackLayout& t);
nlohmann::json to_json(const StackLayout& s);
nlohmann::json to_json(const Verdict& v);

Graph graph_from_json(const nlohmann::json& doc);
Layering layering_from_json(const nlohmann::json& doc);
PathDecomposition path_decomposition_from_json(const nlohmann::json& doc);
LayeredPathDecomposition layered_path_decomposition_from_json(const nlohmann::json& doc);
TrackLayout track_layout_from_json(const nlohmann::json& doc);
StackLayout stack_layout_from_json(const nlohmann::json& doc);

/// Parses text, checks format_version, and returns the document.
nlohmann::json parse_document(const std::string& text);

/// Returns `doc` itself when it has the requested kind, or looks it up inside
/// a {"kind":"bundle"} document.  Throws MalformedInputError when absent.
nlohmann::json extract_kind(const nlohmann::json& doc, const std::string& kind);

std::string dump_document(const nlohmann::json& doc);

}  // namespace lpwkit
