#pragma once

#include <effdom/domination.hpp>
#include <effdom/graph.hpp>

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace effdom {

inline constexpr std::uint64_t default_node_limit = 100'000'000;

struct SearchConfig
{
    std::int64_t j = 1;
    std::int64_t k = 1;
    std::uint64_t node_limit = default_node_limit;
    /// Branching order; empty means breadth-first from vertex 0.
    std::vector<Vertex> order;
    /// Count solutions without storing them.
    bool count_only = false;
    /// Worker threads for the first branching level; results do not depend on it.
    unsigned threads = 1;
};

struct SearchOutcome
{
    /// Sorted lexicographically by value vector; empty when counting only.
    std::vector<DominatingFunction> functions;
    std::uint64_t count = 0;
    /// False when the node limit stopped the search; the findings are then partial.
    bool exhausted = true;
    std::uint64_t nodes = 0;
    std::string diagnostic;
};

struct ExistsOutcome
{
    std::optional<DominatingFunction> witness;
    bool exhausted = true;
    std::uint64_t nodes = 0;
    std::string diagnostic;
};

/// Breadth-first order from vertex 0, restarting at the smallest unvisited
/// vertex for each further component.
auto bfs_order(const Graph & g) -> std::vector<Vertex>;

/// Every f : V -> {0..j} with (A + I) f = k 1. Branches on vertices in the
/// configured order, values ascending, and after each assignment propagates
/// two bounds per closed neighbourhood: the partial sum stays at most k and
/// can still reach k with j on each unassigned vertex. Throws
/// Errc::BadParameter for negative j or an order that is not a permutation.
auto enumerate_efficient(const Graph & g, const SearchConfig & config) -> SearchOutcome;

/// As enumerate_efficient, stopping at the first solution found.
auto exists_efficient(const Graph & g, const SearchConfig & config) -> ExistsOutcome;

struct KSpectrum
{
    std::map<std::int64_t, std::uint64_t> counts;
    /// k values whose enumeration hit the node limit.
    std::vector<std::int64_t> incomplete;
};

/// Solution counts for k = 0..j(r + 1). Throws Errc::NotRegular.
auto k_spectrum(const Graph & g, std::int64_t j, std::uint64_t node_limit = default_node_limit, unsigned threads = 1) -> KSpectrum;

}
