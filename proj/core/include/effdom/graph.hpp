#pragma once

#include <effdom/fields.hpp>
#include <effdom/linalg.hpp>

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace effdom {

using Vertex = std::uint32_t;
using Edge = std::pair<Vertex, Vertex>;

inline constexpr std::uint64_t default_size_cap = std::uint64_t{1} << 21;

/// Finite simple undirected graph on vertices 0..n-1, stored as sorted
/// neighbour lists. Immutable once built.
class Graph
{
public:
    /// Throws Errc::BadParameter on self-loops, repeated edges or
    /// out-of-range endpoints.
    Graph(std::string name, std::size_t n, std::span<const Edge> edges);

    /// Throws Errc::BadParameter unless the lists describe a simple undirected graph.
    static auto from_adjacency(std::string name, std::vector<std::vector<Vertex>> adjacency) -> Graph;

    auto name() const noexcept -> const std::string & { return _name; }
    auto order() const noexcept -> std::size_t { return _offsets.size() - 1; }
    auto degree(Vertex v) const -> std::size_t { return _offsets[v + 1] - _offsets[v]; }
    auto neighbors(Vertex v) const -> std::span<const Vertex>
    {
        return {_neighbors.data() + _offsets[v], _neighbors.data() + _offsets[v + 1]};
    }
    auto adjacent(Vertex u, Vertex v) const -> bool;
    auto edge_count() const noexcept -> std::size_t { return _neighbors.size() / 2; }
    /// Edges (u, v) with u < v, in lexicographic order.
    auto edges() const -> std::vector<Edge>;

    /// The common degree, or nullopt if the graph is not regular. The empty graph has none.
    auto regular_degree() const -> std::optional<std::size_t>;
    auto min_degree() const -> std::size_t;
    auto max_degree() const -> std::size_t;

    friend auto operator==(const Graph & a, const Graph & b) -> bool
    {
        return a._offsets == b._offsets && a._neighbors == b._neighbors;
    }

    /// Builds from per-vertex sorted, symmetric, duplicate-free lists produced by
    /// a generator; only cheap shape checks are made.
    struct Trusted
    {
    };
    Graph(Trusted, std::string name, const std::vector<std::vector<Vertex>> & adjacency);

private:
    Graph() = default;

    std::string _name;
    std::vector<std::size_t> _offsets{0};
    std::vector<Vertex> _neighbors;
};

/// A(X) as an integer matrix.
auto adjacency_matrix(const Graph & g) -> IntMatrix;

/// sum over i of code(tuple[i]) * q^i.
auto vertex_rank(const Field & field, std::span<const Field::Code> tuple) -> std::uint64_t;
auto vertex_tuple(const Field & field, std::size_t d, std::uint64_t rank) -> FieldVector;

/// A Cayley graph X(GF(q)^d, C) for an inverse-closed connection set C.
struct CayleyPresentation
{
    Field field;
    std::size_t d;
    std::vector<FieldVector> connection;

    /// Throws Errc::BadConnectionSet (zero vector, wrong length, repeated
    /// element or not closed under negation).
    auto validate() const -> void;
};

/// Connection set {alpha e_i : alpha != 0}, giving H(q, d).
auto hamming_presentation(const Field & field, std::size_t d) -> CayleyPresentation;
/// GF(2)^{d-1} with connection set {e_1, ..., e_{d-1}, all-ones}, giving F_d.
auto folded_cube_presentation(std::size_t d) -> CayleyPresentation;

/// H(q, d) over an alphabet of q symbols (no field structure needed):
/// vertices are base-q digit strings, adjacent iff they differ in one digit.
/// Throws Errc::BadParameter or Errc::SizeCapExceeded.
auto hamming_graph(std::uint64_t q, std::size_t d, std::uint64_t size_cap = default_size_cap) -> Graph;

/// Q_{d-1} plus the antipodal matching. For d = 2 the two generators
/// coincide and the result is K_2.
auto folded_cube(std::size_t d, std::uint64_t size_cap = default_size_cap) -> Graph;

auto cayley_graph(const CayleyPresentation & pres, std::uint64_t size_cap = default_size_cap) -> Graph;

auto complete_graph(std::size_t n) -> Graph;
auto cycle_graph(std::size_t n) -> Graph;
/// Part A = {0..m-1}, part B = {m..m+n-1}.
auto complete_bipartite_graph(std::size_t m, std::size_t n) -> Graph;

/// values[v] plus the values on the neighbours of v.
auto closed_neighborhood_sum(const Graph & g, std::span<const std::int64_t> values, Vertex v) -> std::int64_t;

}
