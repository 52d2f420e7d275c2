#pragma once

#include <effdom/domination.hpp>
#include <effdom/graph.hpp>
#include <effdom/linalg.hpp>

#include <optional>
#include <span>

namespace effdom {

inline constexpr std::size_t default_rank_cap = 4096;

/// Multiplicity of -1 as an eigenvalue of A(X), i.e. n - rank(A + I), with
/// the first canonical nullspace vector of A + I as witness.
struct MinusOneReport
{
    std::size_t multiplicity = 0;
    std::optional<IntVector> witness;
};

/// Throws Errc::NotRegular or Errc::SizeCapExceeded (order above cap).
auto minus_one_multiplicity(const Graph & g, std::size_t cap = default_rank_cap) -> MinusOneReport;

/// Shifts an integral (-1)-eigenvector x to x + a1 with a = -min(x); the
/// result is an efficient (max, a(r + 1))-dominating function.
/// Throws Errc::NotRegular, Errc::LengthMismatch, Errc::ZeroVector,
/// Errc::NotEigenvector or Errc::Overflow.
auto function_from_eigenvector(const Graph & g, std::span<const mpz_class> x) -> DominatingFunction;

}
