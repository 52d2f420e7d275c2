#include <effdom/error.hpp>
#include <effdom/partition.hpp>

#include <algorithm>
#include <string>

namespace effdom {

VertexPartition::VertexPartition(std::size_t n, std::vector<std::vector<Vertex>> cells) :
    _cells(std::move(cells)),
    _cell_of(n, n)
{
    std::size_t seen = 0;
    for (std::size_t i = 0; i < _cells.size(); ++i) {
        if (_cells[i].empty())
            throw Error(Errc::BadPartition, "cell " + std::to_string(i) + " is empty");
        for (auto v : _cells[i]) {
            if (v >= n)
                throw Error(Errc::BadPartition, "vertex " + std::to_string(v) + " out of range");
            if (_cell_of[v] != n)
                throw Error(Errc::BadPartition, "vertex " + std::to_string(v) + " lies in two cells");
            _cell_of[v] = i;
            ++seen;
        }
    }
    if (seen != n)
        throw Error(Errc::BadPartition, "cells cover " + std::to_string(seen) + " of " + std::to_string(n) + " vertices");
}

auto VertexPartition::from_labels(std::span<const std::size_t> labels) -> VertexPartition
{
    std::size_t s = 0;
    for (auto l : labels)
        s = std::max(s, l + 1);
    std::vector<std::vector<Vertex>> cells(s);
    for (std::size_t v = 0; v < labels.size(); ++v)
        cells[labels[v]].push_back(static_cast<Vertex>(v));
    return VertexPartition(labels.size(), std::move(cells));
}

auto VertexPartition::canonical() const -> VertexPartition
{
    auto cells = _cells;
    for (auto & c : cells)
        std::sort(c.begin(), c.end());
    std::sort(cells.begin(), cells.end(), [](const auto & a, const auto & b) { return a.front() < b.front(); });
    return VertexPartition(order(), std::move(cells));
}

CharacteristicMatrix::CharacteristicMatrix(std::size_t s, std::vector<std::int64_t> entries) :
    _s(s),
    _entries(std::move(entries))
{
    if (_entries.size() != s * s)
        throw Error(Errc::DimensionMismatch, "characteristic matrix needs " + std::to_string(s * s) + " entries");
}

auto CharacteristicMatrix::row_sum() const -> std::optional<std::int64_t>
{
    std::optional<std::int64_t> common;
    for (std::size_t i = 0; i < _s; ++i) {
        std::int64_t sum = 0;
        for (std::size_t l = 0; l < _s; ++l)
            sum += (*this)(i, l);
        if (common && *common != sum)
            return std::nullopt;
        common = sum;
    }
    return common;
}

auto CharacteristicMatrix::to_int_matrix() const -> IntMatrix
{
    IntMatrix m(_s, _s);
    for (std::size_t i = 0; i < _s * _s; ++i)
        m(i / _s, i % _s) = static_cast<long>(_entries[i]);
    return m;
}

namespace {
    auto check_partition_of(const Graph & g, const VertexPartition & pi) -> void
    {
        if (pi.order() != g.order())
            throw Error(Errc::BadPartition, "partition of " + std::to_string(pi.order()) + " vertices applied to a graph with " + std::to_string(g.order()));
    }
}

auto characteristic_matrix(const Graph & g, const VertexPartition & pi) -> std::optional<CharacteristicMatrix>
{
    check_partition_of(g, pi);
    const auto s = pi.size();
    std::vector<std::int64_t> entries(s * s, -1);
    std::vector<std::int64_t> counts(s, 0);
    for (Vertex v = 0; v < g.order(); ++v) {
        std::fill(counts.begin(), counts.end(), 0);
        for (auto u : g.neighbors(v))
            ++counts[pi.cell_of(u)];
        const auto i = pi.cell_of(v);
        for (std::size_t l = 0; l < s; ++l) {
            auto & b = entries[i * s + l];
            if (b == -1)
                b = counts[l];
            else if (b != counts[l])
                return std::nullopt;
        }
    }
    return CharacteristicMatrix(s, std::move(entries));
}

auto dominatable_columns(const CharacteristicMatrix & a) -> std::optional<std::vector<std::int64_t>>
{
    const auto s = a.size();
    std::vector<std::int64_t> columns(s);
    for (std::size_t l = 0; l < s; ++l) {
        columns[l] = a(l, l) + 1;
        for (std::size_t i = 0; i < s; ++i)
            if (i != l && a(i, l) != columns[l])
                return std::nullopt;
    }
    return columns;
}

auto is_dominatable(const Graph & g, const VertexPartition & pi) -> std::optional<std::vector<std::int64_t>>
{
    auto a = characteristic_matrix(g, pi);
    if (! a)
        return std::nullopt;
    return dominatable_columns(*a);
}

auto function_from_dominatable(const Graph & g, const VertexPartition & pi, std::span<const std::int64_t> alpha, std::int64_t j) -> DominatingFunction
{
    if (alpha.size() != pi.size())
        throw Error(Errc::LengthMismatch, std::to_string(alpha.size()) + " cell values for " + std::to_string(pi.size()) + " cells");
    for (auto x : alpha)
        if (x < 0 || x > j)
            throw Error(Errc::AlphaOutOfRange, "cell value " + std::to_string(x) + " outside [0, " + std::to_string(j) + "]");
    const auto columns = is_dominatable(g, pi);
    if (! columns)
        throw Error(Errc::NotDominatable, "partition is not dominatable");

    DominatingFunction f{std::vector<std::int64_t>(g.order()), j, 0};
    for (std::size_t l = 0; l < pi.size(); ++l) {
        f.k += alpha[l] * (*columns)[l];
        for (auto v : pi.cell(l))
            f.values[v] = alpha[l];
    }
    return f;
}

auto dominatable_eigen_check(const CharacteristicMatrix & a) -> bool
{
    const auto r = a.row_sum();
    if (! r)
        throw Error(Errc::NonConstantRowSums, "characteristic matrix has unequal row sums");
    IntPolynomial expected = IntPolynomial::linear(static_cast<long>(*r));
    for (std::size_t i = 1; i < a.size(); ++i)
        expected = expected * IntPolynomial::linear(-1);
    return char_poly(a.to_int_matrix()) == expected;
}

auto charpoly_divides_graph(const Graph & g, const VertexPartition & pi, std::size_t cap) -> bool
{
    const auto a = characteristic_matrix(g, pi);
    if (! a)
        throw Error(Errc::NotEquitable, "partition is not equitable");
    if (g.order() > cap)
        throw Error(Errc::SizeCapExceeded, "graph order " + std::to_string(g.order()) + " exceeds the characteristic polynomial cap " + std::to_string(cap));
    return poly_divides(char_poly(a->to_int_matrix(), cap), char_poly(adjacency_matrix(g), cap));
}

auto verify_kcover(const Graph & x, const VertexPartition & fibres, const Graph & y, std::int64_t k) -> std::optional<CoverCertificate>
{
    check_partition_of(x, fibres);
    if (fibres.size() != y.order())
        throw Error(Errc::CellCountMismatch, std::to_string(fibres.size()) + " fibres for a base graph on " + std::to_string(y.order()) + " vertices");
    if (k < 1)
        throw Error(Errc::BadK, "k-cover needs k >= 1");

    const auto s = fibres.size();
    std::vector<std::int64_t> counts(s, 0);
    std::vector<std::size_t> touched;
    for (Vertex v = 0; v < x.order(); ++v) {
        const auto a = fibres.cell_of(v);
        for (auto u : x.neighbors(v)) {
            const auto b = fibres.cell_of(u);
            if (counts[b]++ == 0)
                touched.push_back(b);
        }
        bool ok = counts[a] == k - 1;
        std::size_t satisfied = 0;
        for (auto b : touched) {
            if (b == a)
                continue;
            if (counts[b] != k || ! y.adjacent(static_cast<Vertex>(a), static_cast<Vertex>(b)))
                ok = false;
            else
                ++satisfied;
        }
        if (satisfied != y.degree(static_cast<Vertex>(a)))
            ok = false;
        for (auto b : touched)
            counts[b] = 0;
        touched.clear();
        if (! ok)
            return std::nullopt;
    }

    CoverCertificate cert;
    cert.kind = k == 1 ? CoverKind::Cover : CoverKind::MultiCover;
    cert.base_size = s;
    cert.multiplicity = k;
    cert.fibre_of.assign(fibres.labels().begin(), fibres.labels().end());
    const auto size0 = fibres.cell(0).size();
    if (std::all_of(fibres.cells().begin(), fibres.cells().end(), [&](const auto & c) { return c.size() == size0; }))
        cert.fibre_size = size0;
    return cert;
}

auto verify_cover(const Graph & x, const VertexPartition & fibres, const Graph & y) -> std::optional<CoverCertificate>
{
    check_partition_of(x, fibres);
    if (fibres.size() != y.order())
        throw Error(Errc::CellCountMismatch, std::to_string(fibres.size()) + " fibres for a base graph on " + std::to_string(y.order()) + " vertices");
    const auto size0 = fibres.cell(0).size();
    for (const auto & c : fibres.cells())
        if (c.size() != size0)
            return std::nullopt;
    return verify_kcover(x, fibres, y, 1);
}

auto lift(const DominatingFunction & base_function, const CoverCertificate & cert) -> DominatingFunction
{
    if (base_function.values.size() != cert.base_size)
        throw Error(Errc::LengthMismatch, "base function has " + std::to_string(base_function.values.size()) + " values for " + std::to_string(cert.base_size) + " base vertices");
    DominatingFunction lifted{std::vector<std::int64_t>(cert.fibre_of.size()), base_function.j, base_function.k};
    for (std::size_t u = 0; u < cert.fibre_of.size(); ++u)
        lifted.values[u] = base_function.values[cert.fibre_of[u]];
    return lifted;
}

auto push(const DominatingFunction & cover_function, const CoverCertificate & cert) -> std::optional<DominatingFunction>
{
    if (cover_function.values.size() != cert.fibre_of.size())
        throw Error(Errc::LengthMismatch, "cover function has " + std::to_string(cover_function.values.size()) + " values for " + std::to_string(cert.fibre_of.size()) + " cover vertices");
    DominatingFunction pushed{std::vector<std::int64_t>(cert.base_size, -1), cover_function.j, cover_function.k};
    for (std::size_t u = 0; u < cert.fibre_of.size(); ++u) {
        auto & slot = pushed.values[cert.fibre_of[u]];
        if (slot == -1)
            slot = cover_function.values[u];
        else if (slot != cover_function.values[u])
            return std::nullopt;
    }
    return pushed;
}

auto lee_translates(const CayleyPresentation & pres, std::span<const Vertex> set, std::uint64_t size_cap) -> LeeTranslates
{
    const auto g = cayley_graph(pres, size_cap);
    const auto indicator = indicator_function(g.order(), set, 1);
    if (! verify_efficient(g, indicator).efficient)
        throw Error(Errc::NotPerfectCode, "vertex set is not a perfect code of " + g.name());

    const Field & f = pres.field;
    std::vector<std::vector<Vertex>> cells;
    cells.emplace_back(set.begin(), set.end());
    std::sort(cells.front().begin(), cells.front().end());
    FieldVector sum(pres.d);
    for (const auto & c : pres.connection) {
        std::vector<Vertex> translate;
        translate.reserve(set.size());
        for (auto v : set) {
            const auto tuple = vertex_tuple(f, pres.d, v);
            for (std::size_t i = 0; i < pres.d; ++i)
                sum[i] = f.add(tuple[i], c[i]);
            translate.push_back(static_cast<Vertex>(vertex_rank(f, sum)));
        }
        std::sort(translate.begin(), translate.end());
        cells.push_back(std::move(translate));
    }

    std::optional<VertexPartition> partition;
    try {
        partition.emplace(g.order(), std::move(cells));
    }
    catch (const Error & e) {
        throw Error(Errc::Internal, std::string("translates of a perfect code do not partition the group: ") + e.what());
    }
    auto cert = verify_cover(g, *partition, complete_graph(partition->size()));
    if (! cert)
        throw Error(Errc::Internal, "translates of a perfect code are not the fibres of a cover");
    return {std::move(*partition), std::move(*cert)};
}

}
