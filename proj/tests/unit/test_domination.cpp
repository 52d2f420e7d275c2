#include "../support/oracles.hpp"

#include <effdom/domination.hpp>
#include <effdom/error.hpp>

#include <doctest.h>

using namespace effdom;

namespace {

auto throws_code(Errc expected, auto && fn) -> bool
{
    try {
        fn();
    } catch (const Error & e) {
        return e.code() == expected;
    }
    return false;
}

const std::vector<std::int64_t> fig1_c6 = {1, 0, 0, 1, 0, 0};
const std::vector<std::int64_t> fig1_k23 = {2, 2, 1, 1, 1};

}

TEST_CASE("verify_efficient examples")
{
    const auto c6 = cycle_graph(6);
    auto report = verify_efficient(c6, {fig1_c6, 1, 1});
    CHECK(report.efficient);
    CHECK(report.observed_k == 1);
    CHECK(report.violations.empty());
    CHECK(report.tight);

    CHECK(verify_efficient(complete_bipartite_graph(2, 3), {fig1_k23, 2, 5}).efficient);
    CHECK(verify_efficient(complete_graph(4), {{1, 0, 2, 0}, 2, 3}).efficient);

    for (const auto & g : {cycle_graph(7), hamming_graph(3, 2), folded_cube(5)}) {
        const auto r = static_cast<std::int64_t>(*g.regular_degree());
        CHECK(verify_efficient(g, {std::vector<std::int64_t>(g.order(), 1), 1, r + 1}).efficient);
    }
}

TEST_CASE("verify_efficient reports every violation and non-tight j")
{
    const auto c6 = cycle_graph(6);
    const auto report = verify_efficient(c6, {fig1_c6, 1, 2});
    CHECK(! report.efficient);
    CHECK(report.observed_k == 1);
    CHECK(report.violations.size() == 6);

    const auto mixed = verify_efficient(c6, {{1, 1, 0, 0, 0, 0}, 1, 1});
    CHECK(! mixed.efficient);
    CHECK(! mixed.observed_k);
    CHECK(mixed.violations == std::vector<Violation>{{0, 2}, {1, 2}, {3, 0}, {4, 0}});

    const auto loose = verify_efficient(c6, {fig1_c6, 3, 1});
    CHECK(loose.efficient);
    CHECK(! loose.tight);
}

TEST_CASE("verify_efficient validates input")
{
    const auto c6 = cycle_graph(6);
    CHECK(throws_code(Errc::LengthMismatch, [&] { verify_efficient(c6, {{1, 0}, 1, 1}); }));
    CHECK(throws_code(Errc::ValueOutOfRange, [&] { verify_efficient(c6, {{2, 0, 0, 1, 0, 0}, 1, 1}); }));
    CHECK(throws_code(Errc::ValueOutOfRange, [&] { verify_efficient(c6, {{-1, 0, 0, 1, 0, 0}, 1, 1}); }));
}

TEST_CASE("figure functions break under every single-value perturbation")
{
    const auto c6 = cycle_graph(6);
    for (std::size_t v = 0; v < 6; ++v) {
        auto f = fig1_c6;
        f[v] = 1 - f[v];
        CHECK(! verify_efficient(c6, {f, 1, 1}).efficient);
    }
    const auto k23 = complete_bipartite_graph(2, 3);
    for (std::size_t v = 0; v < 5; ++v)
        for (std::int64_t x = 0; x <= 2; ++x) {
            if (x == fig1_k23[v])
                continue;
            auto f = fig1_k23;
            f[v] = x;
            CHECK(! verify_efficient(k23, {f, 2, 5}).efficient);
        }
}

TEST_CASE("verify_dominating examples")
{
    const auto c6 = cycle_graph(6);
    CHECK(verify_dominating(c6, {std::vector<std::int64_t>(6, 1), 1, 2}).dominating);
    const auto r = verify_dominating(c6, {fig1_c6, 1, 2});
    CHECK(! r.dominating);
    CHECK(r.violations.size() == 6);
    CHECK(verify_dominating(c6, {std::vector<std::int64_t>(6, 0), 0, 0}).dominating);
}

TEST_CASE("divisibility_feasible examples")
{
    CHECK(divisibility_feasible(6, 2, 1));
    CHECK(! divisibility_feasible(9, 4, 1));
    for (std::uint64_t n = 1; n < 20; ++n)
        CHECK(divisibility_feasible(n, 5, 6));
    CHECK(throws_code(Errc::BadParameter, [] { divisibility_feasible(0, 2, 1); }));
    CHECK(throws_code(Errc::BadParameter, [] { divisibility_feasible(6, 2, 4); }));
    // Products above 64 bits stay exact.
    CHECK(divisibility_feasible(std::uint64_t{1} << 62, (std::uint64_t{1} << 62) - 1, std::uint64_t{1} << 62));
}

TEST_CASE("value_bound_holds examples")
{
    const auto c6 = cycle_graph(6);
    CHECK(value_bound_holds(c6, 1, 3));
    CHECK(! value_bound_holds(c6, 1, 4));
    CHECK(value_bound_holds(complete_bipartite_graph(2, 3), 2, 5));
}

TEST_CASE("complement_dual examples")
{
    const auto c6 = cycle_graph(6);
    const auto dual = complement_dual(c6, {fig1_c6, 1, 1});
    CHECK(dual == DominatingFunction{{0, 1, 1, 0, 1, 1}, 1, 2});
    CHECK(verify_efficient(c6, dual).efficient);

    const auto q3 = hamming_graph(2, 3);
    CHECK(complement_dual(q3, {std::vector<std::int64_t>(8, 1), 1, 4}) == DominatingFunction{std::vector<std::int64_t>(8, 0), 1, 0});

    const auto code = indicator_function(8, std::vector<Vertex>{0, 7}, 1);
    const auto code_dual = complement_dual(q3, code);
    CHECK(code_dual.k == 3);
    CHECK(verify_efficient(q3, code_dual).efficient);

    CHECK(throws_code(Errc::NotRegular, [] { complement_dual(complete_bipartite_graph(2, 3), {fig1_k23, 2, 5}); }));
    CHECK(throws_code(Errc::NotZeroOne, [] { complement_dual(complete_graph(4), {{1, 0, 2, 0}, 2, 3}); }));
    CHECK(throws_code(Errc::NotEfficient, [&] { complement_dual(c6, {fig1_c6, 1, 2}); }));
}

TEST_CASE("two_cell_partition_check examples")
{
    const auto c6 = cycle_graph(6);
    CHECK(two_cell_partition_check(c6, std::vector<Vertex>{0, 3}, 1));
    CHECK(two_cell_partition_check(c6, std::vector<Vertex>{0, 1, 3, 4}, 2));
    CHECK(! two_cell_partition_check(c6, std::vector<Vertex>{0, 1}, 1));
    CHECK(throws_code(Errc::BadK, [&] { two_cell_partition_check(c6, std::vector<Vertex>{0}, 0); }));
    CHECK(throws_code(Errc::BadK, [&] { two_cell_partition_check(c6, std::vector<Vertex>{0}, 3); }));
}

TEST_CASE("property: 0/1 efficiency, the two-cell check, divisibility and duality agree")
{
    // Every 0/1 function on several small regular graphs.
    for (const auto & g : {cycle_graph(6), hamming_graph(2, 3), complete_graph(4), folded_cube(4), hamming_graph(3, 2), cycle_graph(9)}) {
        const auto n = g.order();
        const auto r = static_cast<std::int64_t>(*g.regular_degree());
        const auto adj = oracle::adjacency_of(g);
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
            std::vector<std::int64_t> values(n);
            std::vector<Vertex> set;
            for (Vertex v = 0; v < n; ++v)
                if ((values[v] = (mask >> v) & 1))
                    set.push_back(v);
            for (std::int64_t k = 1; k <= r; ++k) {
                const DominatingFunction f{values, 1, k};
                const bool efficient = verify_efficient(g, f).efficient;
                REQUIRE(efficient == oracle::is_efficient(adj, values, k));
                REQUIRE(two_cell_partition_check(g, set, k) == efficient);
                if (efficient) {
                    CHECK(divisibility_feasible(n, static_cast<std::uint64_t>(r), static_cast<std::uint64_t>(k)));
                    CHECK(static_cast<std::int64_t>(set.size()) * (r + 1) == static_cast<std::int64_t>(n) * k);
                    const auto dual = complement_dual(g, f);
                    CHECK(verify_efficient(g, dual).efficient);
                    CHECK(complement_dual(g, dual) == f);
                }
            }
        }
    }
}

TEST_CASE("function helpers")
{
    const DominatingFunction f{{0, 2, 0, 1}, 2, 3};
    CHECK(f.support() == std::vector<Vertex>{1, 3});
    CHECK(! f.is_constant());
    CHECK(! f.is_zero_one());
    CHECK(f.is_tight());
    CHECK(DominatingFunction{{1, 1}, 1, 2}.is_constant());
    CHECK(throws_code(Errc::BadParameter, [] { DominatingFunction{{0}, -1, 0}.validate(); }));
    CHECK(indicator_function(4, std::vector<Vertex>{2}, 1) == DominatingFunction{{0, 0, 1, 0}, 1, 1});
}
