#include <effdom/error.hpp>
#include <effdom_tools/io.hpp>

#include <fstream>

namespace effdom::io {

namespace {

auto check_version(const json & doc) -> void
{
    if (! doc.is_object())
        throw Error(Errc::Parse, "expected a JSON object");
    if (doc.contains("v") && doc.at("v") != schema_version)
        throw Error(Errc::Parse, "unsupported schema version " + doc.at("v").dump());
}

template <class T>
auto field(const json & doc, const char * key) -> T
{
    if (! doc.contains(key))
        throw Error(Errc::Parse, std::string("missing field \"") + key + "\"");
    try {
        return doc.at(key).get<T>();
    } catch (const json::exception & e) {
        throw Error(Errc::Parse, std::string("field \"") + key + "\": " + e.what());
    }
}

}

auto document() -> json
{
    return json{{"v", schema_version}};
}

auto to_json(const Graph & g) -> json
{
    auto doc = document();
    doc["name"] = g.name();
    doc["n"] = g.order();
    auto edges = json::array();
    for (const auto & [u, v] : g.edges())
        edges.push_back({u, v});
    doc["edges"] = std::move(edges);
    return doc;
}

auto graph_from_json(const json & doc) -> Graph
{
    check_version(doc);
    const auto name = doc.contains("name") ? field<std::string>(doc, "name") : std::string("graph");
    const auto n = field<std::size_t>(doc, "n");
    const auto pairs = field<std::vector<std::array<std::int64_t, 2>>>(doc, "edges");
    std::vector<Edge> edges;
    edges.reserve(pairs.size());
    for (const auto & [u, v] : pairs) {
        if (u < 0 || v < 0 || static_cast<std::uint64_t>(u) >= n || static_cast<std::uint64_t>(v) >= n)
            throw Error(Errc::Parse, "edge endpoint out of range");
        edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
    }
    try {
        return Graph(name, n, edges);
    } catch (const Error & e) {
        throw Error(Errc::Parse, e.what());
    }
}

auto to_json(const DominatingFunction & f) -> json
{
    auto doc = document();
    doc["j"] = f.j;
    doc["k"] = f.k;
    doc["values"] = f.values;
    return doc;
}

auto function_from_json(const json & doc) -> DominatingFunction
{
    check_version(doc);
    DominatingFunction f;
    f.j = field<std::int64_t>(doc, "j");
    f.k = field<std::int64_t>(doc, "k");
    f.values = field<std::vector<std::int64_t>>(doc, "values");
    return f;
}

auto to_json(const VertexPartition & pi) -> json
{
    auto doc = document();
    doc["cells"] = pi.canonical().cells();
    return doc;
}

auto partition_from_json(const json & doc, std::size_t n) -> VertexPartition
{
    check_version(doc);
    return VertexPartition(n, field<std::vector<std::vector<Vertex>>>(doc, "cells"));
}

auto to_json(const CharacteristicMatrix & m) -> json
{
    return json{{"rows", m.size()}, {"cols", m.size()}, {"entries", std::vector<std::int64_t>(m.entries().begin(), m.entries().end())}};
}

auto to_json(const CoverCertificate & cert) -> json
{
    auto doc = document();
    doc["kind"] = cert.kind == CoverKind::Cover ? "cover" : "multicover";
    doc["base_size"] = cert.base_size;
    doc["fibre_size"] = cert.fibre_size ? json(*cert.fibre_size) : json(nullptr);
    doc["multiplicity"] = cert.multiplicity;
    return doc;
}

auto to_json(const FeasibilityProfile & profile) -> json
{
    auto doc = document();
    doc["q"] = profile.q;
    doc["p"] = profile.p;
    doc["b"] = profile.b;
    doc["d"] = profile.d;
    doc["r"] = profile.r;
    doc["expression"] = "(q-1)d+1";
    doc["value"] = profile.r + 1;
    doc["a_q"] = profile.a_q;
    doc["m_q"] = profile.m_q;
    doc["a_p"] = profile.a_p;
    doc["m_p"] = profile.m_p;
    doc["necessary_k"] = profile.necessary_k;
    doc["constructed_k"] = profile.constructed_k;
    doc["open_k"] = profile.open_k;
    doc["partition"] = profile.partition_description();
    return doc;
}

auto to_json(const IntVector & v) -> json
{
    auto out = json::array();
    for (const auto & e : v)
        out.push_back(e.fits_slong_p() ? json(e.get_si()) : json(e.get_str()));
    return out;
}

auto read_file(const std::string & path) -> json
{
    std::ifstream in(path);
    if (! in)
        throw Error(Errc::Parse, "cannot open " + path);
    try {
        return json::parse(in);
    } catch (const json::exception & e) {
        throw Error(Errc::Parse, path + ": " + e.what());
    }
}

}
