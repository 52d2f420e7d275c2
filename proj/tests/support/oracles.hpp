#pragma once

// Independent reference computations for the unit and acceptance tests.
// Nothing here calls into the library's algorithms; each oracle recomputes
// its answer from the definitions by the most direct method available.

#include <effdom/graph.hpp>

#include <gmpxx.h>

#include <algorithm>
#include <cstdint>
#include <functional>
#include <random>
#include <vector>

namespace oracle {

using effdom::Vertex;
using Adjacency = std::vector<std::vector<Vertex>>;

inline auto binomial(std::uint64_t n, std::uint64_t k) -> std::uint64_t
{
    if (k > n)
        return 0;
    std::uint64_t result = 1;
    for (std::uint64_t i = 1; i <= k; ++i)
        result = result * (n - k + i) / i;
    return result;
}

inline auto ipow(std::uint64_t base, std::uint64_t e) -> std::uint64_t
{
    std::uint64_t r = 1;
    while (e-- > 0)
        r *= base;
    return r;
}

/// Base-q digits of x, least significant first.
inline auto digits(std::uint64_t x, std::uint64_t q, std::size_t d) -> std::vector<std::uint64_t>
{
    std::vector<std::uint64_t> out(d);
    for (std::size_t i = 0; i < d; ++i) {
        out[i] = x % q;
        x /= q;
    }
    return out;
}

inline auto hamming_distance(std::uint64_t u, std::uint64_t v, std::uint64_t q, std::size_t d) -> std::size_t
{
    std::size_t distance = 0;
    for (std::size_t i = 0; i < d; ++i, u /= q, v /= q)
        distance += (u % q) != (v % q);
    return distance;
}

/// Adjacency lists by testing every pair against a predicate.
inline auto adjacency_from(std::size_t n, const std::function<bool(Vertex, Vertex)> & adjacent) -> Adjacency
{
    Adjacency adj(n);
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = 0; v < n; ++v)
            if (u != v && adjacent(u, v))
                adj[u].push_back(v);
    return adj;
}

inline auto hamming_adjacency(std::uint64_t q, std::size_t d) -> Adjacency
{
    return adjacency_from(ipow(q, d), [&](Vertex u, Vertex v) { return hamming_distance(u, v, q, d) == 1; });
}

/// Q_{d-1} plus antipodes: u ~ v iff they differ in one bit or in all d-1 bits.
inline auto folded_cube_adjacency(std::size_t d) -> Adjacency
{
    const std::size_t bits = d - 1;
    const Vertex all = static_cast<Vertex>((std::uint64_t{1} << bits) - 1);
    return adjacency_from(std::size_t{1} << bits, [&](Vertex u, Vertex v) {
        const auto weight = static_cast<std::size_t>(__builtin_popcount(u ^ v));
        return weight == 1 || (u ^ v) == all;
    });
}

inline auto adjacency_of(const effdom::Graph & g) -> Adjacency
{
    Adjacency adj(g.order());
    for (Vertex v = 0; v < g.order(); ++v)
        adj[v].assign(g.neighbors(v).begin(), g.neighbors(v).end());
    return adj;
}

inline auto closed_sum(const Adjacency & adj, const std::vector<std::int64_t> & f, Vertex v) -> std::int64_t
{
    std::int64_t s = f[v];
    for (auto u : adj[v])
        s += f[u];
    return s;
}

inline auto is_efficient(const Adjacency & adj, const std::vector<std::int64_t> & f, std::int64_t k) -> bool
{
    for (Vertex v = 0; v < adj.size(); ++v)
        if (closed_sum(adj, f, v) != k)
            return false;
    return true;
}

/// Every f in {0..j}^n with all closed-neighbourhood sums equal to k, by a
/// plain odometer sweep over the whole product space. Lexicographic order.
inline auto sweep_efficient(const Adjacency & adj, std::int64_t j, std::int64_t k) -> std::vector<std::vector<std::int64_t>>
{
    const std::size_t n = adj.size();
    std::vector<std::vector<std::int64_t>> found;
    std::vector<std::int64_t> f(n, 0);
    while (true) {
        if (is_efficient(adj, f, k))
            found.push_back(f);
        std::size_t i = n;
        while (i > 0 && f[i - 1] == j)
            f[--i] = 0;
        if (i == 0)
            break;
        ++f[i - 1];
    }
    return found;
}

/// Rank over Q by Gaussian elimination on rationals.
inline auto rational_rank(std::vector<std::vector<mpq_class>> m) -> std::size_t
{
    std::size_t rank = 0;
    const std::size_t rows = m.size();
    const std::size_t cols = rows == 0 ? 0 : m[0].size();
    for (std::size_t c = 0; c < cols && rank < rows; ++c) {
        std::size_t pivot = rank;
        while (pivot < rows && m[pivot][c] == 0)
            ++pivot;
        if (pivot == rows)
            continue;
        std::swap(m[pivot], m[rank]);
        for (std::size_t r = rank + 1; r < rows; ++r) {
            if (m[r][c] == 0)
                continue;
            const mpq_class factor = m[r][c] / m[rank][c];
            for (std::size_t e = c; e < cols; ++e)
                m[r][e] -= factor * m[rank][e];
        }
        ++rank;
    }
    return rank;
}

/// Polynomials over GF(p) as coefficient vectors, constant term first.
struct PrimePoly
{
    unsigned p;

    auto trim(std::vector<unsigned> a) const -> std::vector<unsigned>
    {
        while (! a.empty() && a.back() == 0)
            a.pop_back();
        return a;
    }
    auto mul(const std::vector<unsigned> & a, const std::vector<unsigned> & b) const -> std::vector<unsigned>
    {
        if (a.empty() || b.empty())
            return {};
        std::vector<unsigned> out(a.size() + b.size() - 1, 0);
        for (std::size_t i = 0; i < a.size(); ++i)
            for (std::size_t j = 0; j < b.size(); ++j)
                out[i + j] = (out[i + j] + a[i] * b[j]) % p;
        return trim(out);
    }
    /// Remainder modulo a monic polynomial.
    auto rem(std::vector<unsigned> a, const std::vector<unsigned> & monic) const -> std::vector<unsigned>
    {
        a = trim(a);
        const std::size_t b = monic.size() - 1;
        while (a.size() > b) {
            const unsigned lead = a.back();
            const std::size_t shift = a.size() - 1 - b;
            for (std::size_t i = 0; i <= b; ++i)
                a[shift + i] = (a[shift + i] + (p - lead) * monic[i]) % p;
            a = trim(a);
        }
        return a;
    }
    auto decode(std::uint32_t code) const -> std::vector<unsigned>
    {
        std::vector<unsigned> out;
        for (; code > 0; code /= p)
            out.push_back(code % p);
        return out;
    }
    auto encode(const std::vector<unsigned> & a) const -> std::uint32_t
    {
        std::uint32_t code = 0;
        for (std::size_t i = a.size(); i-- > 0;)
            code = code * p + a[i];
        return code;
    }
};

/// Deterministic generator for hand-rolled property tests.
class Rng
{
public:
    explicit Rng(std::uint64_t seed) : _engine(seed) {}

    auto below(std::uint64_t n) -> std::uint64_t { return std::uniform_int_distribution<std::uint64_t>(0, n - 1)(_engine); }
    auto between(std::int64_t lo, std::int64_t hi) -> std::int64_t { return std::uniform_int_distribution<std::int64_t>(lo, hi)(_engine); }
    auto coin(double p = 0.5) -> bool { return std::bernoulli_distribution(p)(_engine); }
    auto engine() -> std::mt19937_64 & { return _engine; }

private:
    std::mt19937_64 _engine;
};

/// Erdos-Renyi edge list.
inline auto random_edges(Rng & rng, std::size_t n, double p) -> std::vector<effdom::Edge>
{
    std::vector<effdom::Edge> edges;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            if (rng.coin(p))
                edges.emplace_back(u, v);
    return edges;
}

}
