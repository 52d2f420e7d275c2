#pragma once

#include <effdom/graph.hpp>

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace effdom {

/// f : V -> {0..j} with declared domination constant k, indexed by vertex.
struct DominatingFunction
{
    std::vector<std::int64_t> values;
    std::int64_t j = 0;
    std::int64_t k = 0;

    /// Throws Errc::BadParameter for negative j or k, Errc::ValueOutOfRange
    /// if some value lies outside [0, j].
    auto validate() const -> void;

    /// Constant functions (including the empty one) are the trivial ones.
    auto is_constant() const -> bool;
    auto is_zero_one() const -> bool;
    /// True iff the largest value equals j.
    auto is_tight() const -> bool;
    /// Vertices with value > 0.
    auto support() const -> std::vector<Vertex>;

    friend auto operator==(const DominatingFunction &, const DominatingFunction &) -> bool = default;
};

struct Violation
{
    Vertex vertex;
    std::int64_t sum;

    friend auto operator==(const Violation &, const Violation &) -> bool = default;
};

struct VerificationReport
{
    bool efficient = false;
    /// The common closed-neighbourhood sum, when all sums agree.
    std::optional<std::int64_t> observed_k;
    /// Every vertex whose closed-neighbourhood sum differs from the declared k.
    std::vector<Violation> violations;
    bool tight = false;
};

struct DominationReport
{
    bool dominating = false;
    /// Every vertex whose closed-neighbourhood sum is below k.
    std::vector<Violation> violations;
};

/// Checks (A + I) f = k 1. Throws Errc::LengthMismatch or Errc::ValueOutOfRange.
auto verify_efficient(const Graph & g, const DominatingFunction & f) -> VerificationReport;

/// Checks f(N[v]) >= k at every vertex.
auto verify_dominating(const Graph & g, const DominatingFunction & f) -> DominationReport;

/// (r + 1) | n k. Throws Errc::BadParameter unless n >= 1 and k <= r + 1.
auto divisibility_feasible(std::uint64_t n, std::uint64_t r, std::uint64_t k) -> bool;

/// k <= j (1 + minimum degree).
auto value_bound_holds(const Graph & g, std::int64_t j, std::int64_t k) -> bool;

/// 1 - f, an efficient (1, r - k + 1) function when f is efficient (1, k)
/// on an r-regular graph. Throws Errc::NotRegular, Errc::NotZeroOne or
/// Errc::NotEfficient.
auto complement_dual(const Graph & g, const DominatingFunction & f) -> DominatingFunction;

/// Whether X[S] is (k-1)-regular and X[V \ S] is (r-k)-regular; equivalently
/// whether the indicator of S is an efficient (1, k) function. Throws
/// Errc::NotRegular, Errc::BadK (k outside 1..r) or Errc::BadParameter.
auto two_cell_partition_check(const Graph & g, std::span<const Vertex> set, std::int64_t k) -> bool;

/// 0/1 indicator of a vertex set as a (1, k) function.
auto indicator_function(std::size_t n, std::span<const Vertex> set, std::int64_t k) -> DominatingFunction;

}
