#include <effdom/error.hpp>
#include <effdom/graph.hpp>

#include <algorithm>
#include <limits>
#include <set>
#include <string>

namespace effdom {

namespace {
    auto check_cap(std::uint64_t n, std::uint64_t cap, const std::string & what) -> void
    {
        if (n > cap)
            throw Error(Errc::SizeCapExceeded, what + " has " + std::to_string(n) + " vertices, above the cap of " + std::to_string(cap));
        if (n > std::numeric_limits<Vertex>::max())
            throw Error(Errc::SizeCapExceeded, what + " has more vertices than a vertex index can address");
    }

    // q^d, or cap + 1 if that exceeds the cap
    auto bounded_power(std::uint64_t q, std::size_t d, std::uint64_t cap) -> std::uint64_t
    {
        std::uint64_t n = 1;
        for (std::size_t i = 0; i < d; ++i) {
            if (n > cap / q + 1)
                return cap + 1;
            n *= q;
        }
        return n;
    }
}

Graph::Graph(std::string name, std::size_t n, std::span<const Edge> edges) :
    _name(std::move(name))
{
    std::vector<std::vector<Vertex>> adjacency(n);
    for (auto [u, v] : edges) {
        if (u >= n || v >= n)
            throw Error(Errc::BadParameter, "edge (" + std::to_string(u) + ", " + std::to_string(v) + ") has an endpoint outside 0.." + std::to_string(n == 0 ? 0 : n - 1));
        if (u == v)
            throw Error(Errc::BadParameter, "self-loop at vertex " + std::to_string(u));
        adjacency[u].push_back(v);
        adjacency[v].push_back(u);
    }
    _offsets.assign(1, 0);
    for (auto & list : adjacency) {
        std::sort(list.begin(), list.end());
        if (std::adjacent_find(list.begin(), list.end()) != list.end())
            throw Error(Errc::BadParameter, "repeated edge");
        _neighbors.insert(_neighbors.end(), list.begin(), list.end());
        _offsets.push_back(_neighbors.size());
    }
}

Graph::Graph(Trusted, std::string name, const std::vector<std::vector<Vertex>> & adjacency) :
    _name(std::move(name))
{
    std::size_t total = 0;
    for (const auto & list : adjacency)
        total += list.size();
    _neighbors.reserve(total);
    _offsets.reserve(adjacency.size() + 1);
    for (const auto & list : adjacency) {
        _neighbors.insert(_neighbors.end(), list.begin(), list.end());
        _offsets.push_back(_neighbors.size());
    }
}

auto Graph::from_adjacency(std::string name, std::vector<std::vector<Vertex>> adjacency) -> Graph
{
    const auto n = adjacency.size();
    for (Vertex v = 0; v < n; ++v) {
        auto & list = adjacency[v];
        std::sort(list.begin(), list.end());
        if (std::adjacent_find(list.begin(), list.end()) != list.end())
            throw Error(Errc::BadParameter, "repeated neighbour of vertex " + std::to_string(v));
        for (auto u : list) {
            if (u >= n)
                throw Error(Errc::BadParameter, "neighbour " + std::to_string(u) + " out of range");
            if (u == v)
                throw Error(Errc::BadParameter, "self-loop at vertex " + std::to_string(v));
        }
    }
    for (Vertex v = 0; v < n; ++v)
        for (auto u : adjacency[v])
            if (! std::binary_search(adjacency[u].begin(), adjacency[u].end(), v))
                throw Error(Errc::BadParameter, "edge " + std::to_string(v) + "-" + std::to_string(u) + " is not symmetric");
    return Graph(Trusted{}, std::move(name), adjacency);
}

auto Graph::adjacent(Vertex u, Vertex v) const -> bool
{
    auto list = neighbors(u);
    return std::binary_search(list.begin(), list.end(), v);
}

auto Graph::edges() const -> std::vector<Edge>
{
    std::vector<Edge> result;
    result.reserve(edge_count());
    for (Vertex u = 0; u < order(); ++u)
        for (auto v : neighbors(u))
            if (u < v)
                result.emplace_back(u, v);
    return result;
}

auto Graph::regular_degree() const -> std::optional<std::size_t>
{
    if (order() == 0)
        return std::nullopt;
    const auto r = degree(0);
    for (Vertex v = 1; v < order(); ++v)
        if (degree(v) != r)
            return std::nullopt;
    return r;
}

auto Graph::min_degree() const -> std::size_t
{
    std::size_t result = order() == 0 ? 0 : degree(0);
    for (Vertex v = 1; v < order(); ++v)
        result = std::min(result, degree(v));
    return result;
}

auto Graph::max_degree() const -> std::size_t
{
    std::size_t result = 0;
    for (Vertex v = 0; v < order(); ++v)
        result = std::max(result, degree(v));
    return result;
}

auto adjacency_matrix(const Graph & g) -> IntMatrix
{
    IntMatrix m(g.order(), g.order());
    for (Vertex u = 0; u < g.order(); ++u)
        for (auto v : g.neighbors(u))
            m(u, v) = 1;
    return m;
}

auto vertex_rank(const Field & field, std::span<const Field::Code> tuple) -> std::uint64_t
{
    std::uint64_t rank = 0;
    for (auto i = tuple.size(); i-- > 0;)
        rank = rank * field.order() + tuple[i];
    return rank;
}

auto vertex_tuple(const Field & field, std::size_t d, std::uint64_t rank) -> FieldVector
{
    FieldVector tuple(d);
    for (std::size_t i = 0; i < d; ++i) {
        tuple[i] = static_cast<Field::Code>(rank % field.order());
        rank /= field.order();
    }
    return tuple;
}

auto CayleyPresentation::validate() const -> void
{
    std::set<FieldVector> seen;
    for (const auto & c : connection) {
        if (c.size() != d)
            throw Error(Errc::BadConnectionSet, "connection element of length " + std::to_string(c.size()) + " in dimension " + std::to_string(d));
        if (std::any_of(c.begin(), c.end(), [&](Field::Code x) { return x >= field.order(); }))
            throw Error(Errc::BadConnectionSet, "connection element has an entry outside the field");
        if (std::all_of(c.begin(), c.end(), [](Field::Code x) { return x == 0; }))
            throw Error(Errc::BadConnectionSet, "connection set contains the zero vector");
        if (! seen.insert(c).second)
            throw Error(Errc::BadConnectionSet, "connection set has a repeated element");
    }
    for (const auto & c : connection) {
        FieldVector negated(c.size());
        std::transform(c.begin(), c.end(), negated.begin(), [&](Field::Code x) { return field.neg(x); });
        if (! seen.contains(negated))
            throw Error(Errc::BadConnectionSet, "connection set is not closed under negation");
    }
}

auto hamming_presentation(const Field & field, std::size_t d) -> CayleyPresentation
{
    CayleyPresentation pres{field, d, {}};
    for (std::size_t i = 0; i < d; ++i)
        for (Field::Code alpha = 1; alpha < field.order(); ++alpha) {
            FieldVector c(d, 0);
            c[i] = alpha;
            pres.connection.push_back(std::move(c));
        }
    return pres;
}

auto folded_cube_presentation(std::size_t d) -> CayleyPresentation
{
    if (d < 2)
        throw Error(Errc::BadParameter, "folded cube needs d >= 2");
    CayleyPresentation pres{Field(2), d - 1, {}};
    for (std::size_t i = 0; i + 1 < d; ++i) {
        FieldVector c(d - 1, 0);
        c[i] = 1;
        pres.connection.push_back(std::move(c));
    }
    FieldVector ones(d - 1, 1);
    if (std::find(pres.connection.begin(), pres.connection.end(), ones) == pres.connection.end())
        pres.connection.push_back(std::move(ones));
    return pres;
}

auto hamming_graph(std::uint64_t q, std::size_t d, std::uint64_t size_cap) -> Graph
{
    if (q < 2 || d < 1)
        throw Error(Errc::BadParameter, "Hamming graph needs q >= 2 and d >= 1");
    const auto n = bounded_power(q, d, size_cap);
    const std::string name = "H(" + std::to_string(q) + "," + std::to_string(d) + ")";
    check_cap(n, size_cap, name);

    std::vector<std::vector<Vertex>> adjacency(n);
    for (std::uint64_t v = 0; v < n; ++v) {
        auto & list = adjacency[v];
        list.reserve((q - 1) * d);
        std::uint64_t place = 1, rest = v;
        for (std::size_t i = 0; i < d; ++i, place *= q, rest /= q) {
            const auto digit = rest % q;
            const auto base = v - digit * place;
            for (std::uint64_t s = 0; s < q; ++s)
                if (s != digit)
                    list.push_back(static_cast<Vertex>(base + s * place));
        }
        std::sort(list.begin(), list.end());
    }
    return Graph(Graph::Trusted{}, name, adjacency);
}

auto folded_cube(std::size_t d, std::uint64_t size_cap) -> Graph
{
    if (d < 2)
        throw Error(Errc::BadParameter, "folded cube needs d >= 2");
    if (d - 1 >= 63)
        throw Error(Errc::SizeCapExceeded, "folded cube is far above the size cap");
    const std::uint64_t n = std::uint64_t{1} << (d - 1);
    const std::string name = "F" + std::to_string(d);
    check_cap(n, size_cap, name);

    const std::uint64_t all_ones = n - 1;
    std::vector<std::vector<Vertex>> adjacency(n);
    for (std::uint64_t v = 0; v < n; ++v) {
        auto & list = adjacency[v];
        for (std::size_t i = 0; i + 1 < d; ++i)
            list.push_back(static_cast<Vertex>(v ^ (std::uint64_t{1} << i)));
        list.push_back(static_cast<Vertex>(v ^ all_ones));
        std::sort(list.begin(), list.end());
        list.erase(std::unique(list.begin(), list.end()), list.end());
    }
    return Graph(Graph::Trusted{}, name, adjacency);
}

auto cayley_graph(const CayleyPresentation & pres, std::uint64_t size_cap) -> Graph
{
    pres.validate();
    const Field & f = pres.field;
    const auto n = bounded_power(f.order(), pres.d, size_cap);
    const std::string name = "Cay(GF(" + std::to_string(f.order()) + ")^" + std::to_string(pres.d) + ")";
    check_cap(n, size_cap, name);

    std::vector<std::vector<Vertex>> adjacency(n);
    FieldVector sum(pres.d);
    for (std::uint64_t v = 0; v < n; ++v) {
        const auto tuple = vertex_tuple(f, pres.d, v);
        auto & list = adjacency[v];
        list.reserve(pres.connection.size());
        for (const auto & c : pres.connection) {
            for (std::size_t i = 0; i < pres.d; ++i)
                sum[i] = f.add(tuple[i], c[i]);
            list.push_back(static_cast<Vertex>(vertex_rank(f, sum)));
        }
        std::sort(list.begin(), list.end());
    }
    return Graph(Graph::Trusted{}, name, adjacency);
}

auto complete_graph(std::size_t n) -> Graph
{
    if (n < 1)
        throw Error(Errc::BadParameter, "complete graph needs n >= 1");
    std::vector<std::vector<Vertex>> adjacency(n);
    for (Vertex v = 0; v < n; ++v)
        for (Vertex u = 0; u < n; ++u)
            if (u != v)
                adjacency[v].push_back(u);
    return Graph(Graph::Trusted{}, "K" + std::to_string(n), adjacency);
}

auto cycle_graph(std::size_t n) -> Graph
{
    if (n < 3)
        throw Error(Errc::BadParameter, "cycle needs n >= 3");
    std::vector<std::vector<Vertex>> adjacency(n);
    for (Vertex v = 0; v < n; ++v) {
        adjacency[v] = {static_cast<Vertex>((v + 1) % n), static_cast<Vertex>((v + n - 1) % n)};
        std::sort(adjacency[v].begin(), adjacency[v].end());
    }
    return Graph(Graph::Trusted{}, "C" + std::to_string(n), adjacency);
}

auto complete_bipartite_graph(std::size_t m, std::size_t n) -> Graph
{
    if (m < 1 || n < 1)
        throw Error(Errc::BadParameter, "complete bipartite graph needs both parts nonempty");
    std::vector<std::vector<Vertex>> adjacency(m + n);
    for (Vertex a = 0; a < m; ++a)
        for (Vertex b = 0; b < n; ++b) {
            adjacency[a].push_back(static_cast<Vertex>(m + b));
            adjacency[m + b].push_back(a);
        }
    return Graph(Graph::Trusted{}, "K" + std::to_string(m) + "," + std::to_string(n), adjacency);
}

auto closed_neighborhood_sum(const Graph & g, std::span<const std::int64_t> values, Vertex v) -> std::int64_t
{
    if (values.size() != g.order())
        throw Error(Errc::LengthMismatch, "function has " + std::to_string(values.size()) + " values for " + std::to_string(g.order()) + " vertices");
    std::int64_t sum = values[v];
    for (auto u : g.neighbors(v))
        sum += values[u];
    return sum;
}

}
