#pragma once

#include <effdom/domination.hpp>
#include <effdom/graph.hpp>
#include <effdom/hamming.hpp>
#include <effdom/partition.hpp>

#include <json.hpp>

namespace effdom::io {

using nlohmann::json;

inline constexpr int schema_version = 1;

/// Every document carries {"v": 1}. Readers accept a missing "v" and reject
/// any other version with Errc::Parse.
auto document() -> json;

auto to_json(const Graph & g) -> json;
auto graph_from_json(const json & doc) -> Graph;

auto to_json(const DominatingFunction & f) -> json;
auto function_from_json(const json & doc) -> DominatingFunction;

/// Cells in canonical order.
auto to_json(const VertexPartition & pi) -> json;
auto partition_from_json(const json & doc, std::size_t n) -> VertexPartition;

auto to_json(const CharacteristicMatrix & m) -> json;
auto to_json(const CoverCertificate & cert) -> json;
auto to_json(const FeasibilityProfile & profile) -> json;
/// Integers that fit in 64 bits become numbers, larger ones decimal strings.
auto to_json(const IntVector & v) -> json;

/// Parses a file; throws Errc::Parse with the path on failure.
auto read_file(const std::string & path) -> json;

}
