#include <effdom/domination.hpp>
#include <effdom/error.hpp>

#include <gmpxx.h>

#include <algorithm>
#include <functional>
#include <string>

namespace effdom {

auto DominatingFunction::validate() const -> void
{
    if (j < 0 || k < 0)
        throw Error(Errc::BadParameter, "j and k must be non-negative");
    for (std::size_t v = 0; v < values.size(); ++v)
        if (values[v] < 0 || values[v] > j)
            throw Error(Errc::ValueOutOfRange, "value " + std::to_string(values[v]) + " at vertex " + std::to_string(v) + " outside [0, " + std::to_string(j) + "]");
}

auto DominatingFunction::is_constant() const -> bool
{
    return std::adjacent_find(values.begin(), values.end(), std::not_equal_to<>{}) == values.end();
}

auto DominatingFunction::is_zero_one() const -> bool
{
    return std::all_of(values.begin(), values.end(), [](std::int64_t x) { return x == 0 || x == 1; });
}

auto DominatingFunction::is_tight() const -> bool
{
    return ! values.empty() && *std::max_element(values.begin(), values.end()) == j;
}

auto DominatingFunction::support() const -> std::vector<Vertex>
{
    std::vector<Vertex> result;
    for (std::size_t v = 0; v < values.size(); ++v)
        if (values[v] > 0)
            result.push_back(static_cast<Vertex>(v));
    return result;
}

namespace {
    auto check_shape(const Graph & g, const DominatingFunction & f) -> void
    {
        if (f.values.size() != g.order())
            throw Error(Errc::LengthMismatch, "function has " + std::to_string(f.values.size()) + " values for " + std::to_string(g.order()) + " vertices");
        f.validate();
    }
}

auto verify_efficient(const Graph & g, const DominatingFunction & f) -> VerificationReport
{
    check_shape(g, f);
    VerificationReport report;
    report.tight = f.is_tight();
    bool uniform = true;
    std::optional<std::int64_t> first;
    for (Vertex v = 0; v < g.order(); ++v) {
        const auto sum = closed_neighborhood_sum(g, f.values, v);
        if (! first)
            first = sum;
        else if (sum != *first)
            uniform = false;
        if (sum != f.k)
            report.violations.push_back({v, sum});
    }
    if (g.order() == 0)
        first = f.k;
    if (uniform)
        report.observed_k = first;
    report.efficient = report.violations.empty() && report.observed_k.has_value();
    return report;
}

auto verify_dominating(const Graph & g, const DominatingFunction & f) -> DominationReport
{
    check_shape(g, f);
    DominationReport report;
    for (Vertex v = 0; v < g.order(); ++v) {
        const auto sum = closed_neighborhood_sum(g, f.values, v);
        if (sum < f.k)
            report.violations.push_back({v, sum});
    }
    report.dominating = report.violations.empty();
    return report;
}

auto divisibility_feasible(std::uint64_t n, std::uint64_t r, std::uint64_t k) -> bool
{
    if (n < 1)
        throw Error(Errc::BadParameter, "n must be at least 1");
    if (k > r + 1)
        throw Error(Errc::BadParameter, "k = " + std::to_string(k) + " exceeds r + 1 = " + std::to_string(r + 1));
    mpz_class product = mpz_class(static_cast<unsigned long>(n)) * static_cast<unsigned long>(k);
    return mpz_divisible_ui_p(product.get_mpz_t(), static_cast<unsigned long>(r + 1)) != 0;
}

auto value_bound_holds(const Graph & g, std::int64_t j, std::int64_t k) -> bool
{
    return k <= j * (1 + static_cast<std::int64_t>(g.min_degree()));
}

auto complement_dual(const Graph & g, const DominatingFunction & f) -> DominatingFunction
{
    const auto r = g.regular_degree();
    if (! r)
        throw Error(Errc::NotRegular, g.name() + " is not regular");
    if (f.j != 1 || ! f.is_zero_one())
        throw Error(Errc::NotZeroOne, "complement needs a 0/1 function with j = 1");
    if (! verify_efficient(g, f).efficient)
        throw Error(Errc::NotEfficient, "function is not an efficient (1, " + std::to_string(f.k) + ")-dominating function");
    DominatingFunction dual{f.values, 1, static_cast<std::int64_t>(*r) - f.k + 1};
    for (auto & x : dual.values)
        x = 1 - x;
    return dual;
}

auto two_cell_partition_check(const Graph & g, std::span<const Vertex> set, std::int64_t k) -> bool
{
    const auto r = g.regular_degree();
    if (! r)
        throw Error(Errc::NotRegular, g.name() + " is not regular");
    if (k < 1 || k > static_cast<std::int64_t>(*r))
        throw Error(Errc::BadK, "k = " + std::to_string(k) + " outside 1.." + std::to_string(*r));

    std::vector<bool> in_set(g.order(), false);
    for (auto v : set) {
        if (v >= g.order())
            throw Error(Errc::BadParameter, "vertex " + std::to_string(v) + " out of range");
        if (in_set[v])
            throw Error(Errc::BadParameter, "vertex " + std::to_string(v) + " repeated");
        in_set[v] = true;
    }
    for (Vertex v = 0; v < g.order(); ++v) {
        std::int64_t same = 0;
        for (auto u : g.neighbors(v))
            if (in_set[u] == in_set[v])
                ++same;
        const std::int64_t want = in_set[v] ? k - 1 : static_cast<std::int64_t>(*r) - k;
        if (same != want)
            return false;
    }
    return true;
}

auto indicator_function(std::size_t n, std::span<const Vertex> set, std::int64_t k) -> DominatingFunction
{
    DominatingFunction f{std::vector<std::int64_t>(n, 0), 1, k};
    for (auto v : set) {
        if (v >= n)
            throw Error(Errc::BadParameter, "vertex " + std::to_string(v) + " out of range");
        f.values[v] = 1;
    }
    return f;
}

}
