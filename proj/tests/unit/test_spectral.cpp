#include "../support/oracles.hpp"

#include <effdom/error.hpp>
#include <effdom/spectral.hpp>

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

auto ints(std::initializer_list<long> values) -> IntVector
{
    IntVector out;
    for (auto v : values)
        out.emplace_back(v);
    return out;
}

// Multiplicity of -1 in F_d: the eigenvalues of F_d are d - 4i with
// multiplicity C(d, 2i), so -1 needs d + 1 = 4i.
auto folded_cube_oracle(std::size_t d) -> std::uint64_t
{
    return (d + 1) % 4 == 0 ? oracle::binomial(d, (d + 1) / 2) : 0;
}

auto check_witness(const Graph & g, const IntVector & x) -> void
{
    mpz_class sum = 0;
    bool positive = false, negative = false;
    for (Vertex v = 0; v < g.order(); ++v) {
        mpz_class s = x[v];
        for (auto u : g.neighbors(v))
            s += x[u];
        CHECK(s == 0);
        sum += x[v];
        positive = positive || sgn(x[v]) > 0;
        negative = negative || sgn(x[v]) < 0;
    }
    CHECK(sum == 0);
    CHECK(positive);
    CHECK(negative);
}

}

TEST_CASE("minus_one_multiplicity examples")
{
    for (std::size_t n = 2; n <= 7; ++n)
        CHECK(minus_one_multiplicity(complete_graph(n)).multiplicity == n - 1);
    CHECK(minus_one_multiplicity(hamming_graph(2, 5)).multiplicity == 10);
    CHECK(minus_one_multiplicity(folded_cube(5)).multiplicity == 0);
    CHECK(minus_one_multiplicity(folded_cube(7)).multiplicity > 0);
    CHECK(minus_one_multiplicity(hamming_graph(3, 2)).multiplicity == 0);
    CHECK(! minus_one_multiplicity(hamming_graph(3, 2)).witness);
}

TEST_CASE("hypercube multiplicities match C(d, (d+1)/2)")
{
    for (std::size_t d = 1; d <= 7; ++d) {
        const auto expected = d % 2 == 1 ? oracle::binomial(d, (d + 1) / 2) : 0;
        CHECK(minus_one_multiplicity(hamming_graph(2, d)).multiplicity == expected);
    }
}

TEST_CASE("folded cube multiplicities match the closed form")
{
    for (std::size_t d = 3; d <= 10; ++d)
        CHECK(minus_one_multiplicity(folded_cube(d)).multiplicity == folded_cube_oracle(d));
}

TEST_CASE("Hamming graph multiplicities match the Krawtchouk count")
{
    // H(q,d) has eigenvalue (q-1)d - qi with multiplicity C(d,i)(q-1)^i.
    for (const auto & [q, d] : std::vector<std::pair<std::uint64_t, std::size_t>>{{3, 2}, {3, 3}, {4, 2}, {5, 2}, {2, 5}, {4, 3}}) {
        std::uint64_t expected = 0;
        for (std::size_t i = 0; i <= d; ++i)
            if ((q - 1) * d + 1 == q * i)
                expected = oracle::binomial(d, i) * oracle::ipow(q - 1, i);
        CHECK(minus_one_multiplicity(hamming_graph(q, d)).multiplicity == expected);
    }
}

TEST_CASE("witnesses are eigenvectors orthogonal to the all-ones vector")
{
    for (const auto & g : {cycle_graph(6), hamming_graph(2, 3), hamming_graph(2, 5), folded_cube(3), folded_cube(7), complete_graph(5)}) {
        const auto report = minus_one_multiplicity(g);
        REQUIRE(report.witness);
        check_witness(g, *report.witness);
        const auto f = function_from_eigenvector(g, *report.witness);
        CHECK(verify_efficient(g, f).efficient);
        CHECK(f.is_tight());
        CHECK(! f.is_constant());
    }
}

TEST_CASE("minus_one_multiplicity errors")
{
    CHECK(throws_code(Errc::NotRegular, [] { minus_one_multiplicity(complete_bipartite_graph(2, 3)); }));
    CHECK(throws_code(Errc::SizeCapExceeded, [] { minus_one_multiplicity(hamming_graph(2, 6), 32); }));
}

TEST_CASE("function_from_eigenvector examples")
{
    const auto k2 = function_from_eigenvector(complete_graph(2), ints({1, -1}));
    CHECK(k2 == DominatingFunction{{2, 0}, 2, 2});

    const auto c6 = cycle_graph(6);
    const auto f = function_from_eigenvector(c6, ints({1, -1, 0, 1, -1, 0}));
    CHECK(f == DominatingFunction{{2, 0, 1, 2, 0, 1}, 2, 3});
    CHECK(verify_efficient(c6, f).efficient);

    const auto doubled = function_from_eigenvector(c6, ints({2, -2, 0, 2, -2, 0}));
    CHECK(doubled.k == 2 * f.k);
    CHECK(verify_efficient(c6, doubled).efficient);
}

TEST_CASE("function_from_eigenvector errors")
{
    const auto c6 = cycle_graph(6);
    CHECK(throws_code(Errc::ZeroVector, [&] { function_from_eigenvector(c6, ints({0, 0, 0, 0, 0, 0})); }));
    CHECK(throws_code(Errc::NotEigenvector, [&] { function_from_eigenvector(c6, ints({1, 0, 0, 0, 0, -1})); }));
    CHECK(throws_code(Errc::LengthMismatch, [&] { function_from_eigenvector(c6, ints({1, -1})); }));
    CHECK(throws_code(Errc::NotRegular, [] { function_from_eigenvector(complete_bipartite_graph(1, 2), ints({1, -1, 0})); }));
    mpz_class huge("100000000000000000000000");
    CHECK(throws_code(Errc::Overflow, [&] { function_from_eigenvector(complete_graph(2), IntVector{huge, -huge}); }));
}

TEST_CASE("property: random integer combinations of kernel vectors give efficient functions")
{
    oracle::Rng rng(31);
    for (const auto & g : {hamming_graph(2, 5), folded_cube(7), cycle_graph(12)}) {
        auto a = adjacency_matrix(g);
        for (std::size_t v = 0; v < g.order(); ++v)
            a(v, v) = 1;
        const auto basis = int_kernel_basis(a);
        REQUIRE(! basis.empty());
        for (int trial = 0; trial < 10; ++trial) {
            IntVector x(g.order(), 0);
            for (const auto & b : basis) {
                const auto c = rng.between(-2, 2);
                for (std::size_t v = 0; v < x.size(); ++v)
                    x[v] += c * b[v];
            }
            if (std::all_of(x.begin(), x.end(), [](const mpz_class & e) { return sgn(e) == 0; }))
                continue;
            const auto f = function_from_eigenvector(g, x);
            CHECK(verify_efficient(g, f).efficient);
        }
    }
}
