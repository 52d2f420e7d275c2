#pragma once

#include <effdom/domination.hpp>
#include <effdom/graph.hpp>
#include <effdom/linalg.hpp>

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace effdom {

/// A partition of 0..n-1 into nonempty cells. Cell order is kept as given,
/// since covers match cell i with base vertex i.
class VertexPartition
{
public:
    /// Throws Errc::BadPartition unless the cells are nonempty, disjoint and cover 0..n-1.
    VertexPartition(std::size_t n, std::vector<std::vector<Vertex>> cells);

    /// Cells {v : labels[v] = i}; every label in 0..max must occur.
    static auto from_labels(std::span<const std::size_t> labels) -> VertexPartition;

    auto order() const noexcept -> std::size_t { return _cell_of.size(); }
    auto size() const noexcept -> std::size_t { return _cells.size(); }
    auto cells() const noexcept -> const std::vector<std::vector<Vertex>> & { return _cells; }
    auto cell(std::size_t i) const -> std::span<const Vertex> { return _cells[i]; }
    auto cell_of(Vertex v) const -> std::size_t { return _cell_of[v]; }
    auto labels() const noexcept -> std::span<const std::size_t> { return _cell_of; }

    /// Cells sorted internally and ordered by their minimum element.
    auto canonical() const -> VertexPartition;

    friend auto operator==(const VertexPartition & a, const VertexPartition & b) -> bool
    {
        return a._cells == b._cells;
    }

private:
    std::vector<std::vector<Vertex>> _cells;
    std::vector<std::size_t> _cell_of;
};

/// s x s matrix whose (i, l) entry counts the neighbours in cell l of any vertex of cell i.
class CharacteristicMatrix
{
public:
    CharacteristicMatrix(std::size_t s, std::vector<std::int64_t> entries);

    auto size() const noexcept -> std::size_t { return _s; }
    auto operator()(std::size_t i, std::size_t l) const -> std::int64_t { return _entries[i * _s + l]; }
    auto entries() const noexcept -> std::span<const std::int64_t> { return _entries; }
    /// The common row sum, if there is one.
    auto row_sum() const -> std::optional<std::int64_t>;
    auto to_int_matrix() const -> IntMatrix;

    friend auto operator==(const CharacteristicMatrix &, const CharacteristicMatrix &) -> bool = default;

private:
    std::size_t _s;
    std::vector<std::int64_t> _entries;
};

/// A_pi if the partition is equitable, otherwise nullopt. Throws
/// Errc::BadPartition if the partition is not of the graph's vertex set.
auto characteristic_matrix(const Graph & g, const VertexPartition & pi) -> std::optional<CharacteristicMatrix>;

/// (a_1..a_s) if b_il = a_l for i != l and b_ll = a_l - 1, i.e. A + I = 1 [a_1 .. a_s].
auto dominatable_columns(const CharacteristicMatrix & a) -> std::optional<std::vector<std::int64_t>>;

/// dominatable_columns of A_pi when pi is equitable, otherwise nullopt.
auto is_dominatable(const Graph & g, const VertexPartition & pi) -> std::optional<std::vector<std::int64_t>>;

/// The function equal to alpha_l on cell l, with k = sum alpha_l a_l.
/// Throws Errc::NotDominatable, Errc::AlphaOutOfRange or Errc::LengthMismatch.
auto function_from_dominatable(const Graph & g, const VertexPartition & pi, std::span<const std::int64_t> alpha, std::int64_t j) -> DominatingFunction;

/// Whether det(xI - A) = (x - r)(x + 1)^(s-1), r the common row sum.
/// Throws Errc::NonConstantRowSums.
auto dominatable_eigen_check(const CharacteristicMatrix & a) -> bool;

/// Whether the characteristic polynomial of A_pi divides that of A(X).
/// Throws Errc::NotEquitable or Errc::SizeCapExceeded (order above cap).
auto charpoly_divides_graph(const Graph & g, const VertexPartition & pi, std::size_t cap = default_char_poly_cap) -> bool;

enum class CoverKind
{
    Cover,
    MultiCover,
};

struct CoverCertificate
{
    CoverKind kind = CoverKind::Cover;
    std::size_t base_size = 0;
    /// Common fibre size; always set for ordinary covers.
    std::optional<std::size_t> fibre_size;
    /// Edges between adjacent fibres form a multiplicity-regular bipartite
    /// graph and each fibre induces a (multiplicity - 1)-regular graph.
    std::int64_t multiplicity = 1;
    /// Base vertex of each cover vertex.
    std::vector<std::size_t> fibre_of;
};

/// Certificate that X covers Y with fibre i over base vertex i, or nullopt.
/// Throws Errc::CellCountMismatch or Errc::BadPartition.
auto verify_cover(const Graph & x, const VertexPartition & fibres, const Graph & y) -> std::optional<CoverCertificate>;

/// As verify_cover for k-covers; k = 1 coincides with verify_cover.
auto verify_kcover(const Graph & x, const VertexPartition & fibres, const Graph & y, std::int64_t k) -> std::optional<CoverCertificate>;

/// f on the base pulled back along the fibre map. Throws Errc::LengthMismatch.
auto lift(const DominatingFunction & base_function, const CoverCertificate & cert) -> DominatingFunction;

/// f on the cover pushed down to the base, or nullopt if f is not constant
/// on some fibre. Throws Errc::LengthMismatch.
auto push(const DominatingFunction & cover_function, const CoverCertificate & cert) -> std::optional<DominatingFunction>;

struct LeeTranslates
{
    VertexPartition partition;
    CoverCertificate certificate;
};

/// Cells S, c_1 + S, ..., c_t + S for the connection set {c_i}, certified
/// as the fibres of a cover of K_{t+1}. Throws Errc::NotPerfectCode when the
/// indicator of S is not efficient (1, 1) on the Cayley graph.
auto lee_translates(const CayleyPresentation & pres, std::span<const Vertex> set, std::uint64_t size_cap = default_size_cap) -> LeeTranslates;

}
