#include "../support/oracles.hpp"

#include <effdom/error.hpp>
#include <effdom/hamming.hpp>
#include <effdom/search.hpp>
#include <effdom/spectral.hpp>

#include <doctest.h>

#include <set>

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

auto multiples(std::uint64_t step, std::uint64_t limit) -> std::vector<std::uint64_t>
{
    std::vector<std::uint64_t> out;
    for (std::uint64_t k = 0; k <= limit; k += step)
        out.push_back(k);
    return out;
}

// Instances with q^d <= 2^18 where q divides (q-1)d + 1.
auto plan_instances() -> std::vector<std::tuple<unsigned, unsigned, std::size_t>>
{
    std::vector<std::tuple<unsigned, unsigned, std::size_t>> out;
    for (const auto & [p, b] : std::vector<std::pair<unsigned, unsigned>>{{2, 1}, {3, 1}, {5, 1}, {7, 1}, {2, 2}, {3, 2}, {2, 3}}) {
        const std::uint64_t q = oracle::ipow(p, b);
        for (std::size_t d = 1; oracle::ipow(q, d) <= (1U << 18); ++d)
            if (((q - 1) * d + 1) % q == 0)
                out.emplace_back(p, b, d);
    }
    return out;
}

auto label_of(const MCoverPlan & plan, const FieldVector & v) -> FieldVector
{
    return plan.fibre_label(v);
}

}

TEST_CASE("feasibility examples")
{
    const auto q2d7 = feasibility(Field(2), 7);
    CHECK(q2d7.a_q == 3);
    CHECK(q2d7.m_q == 1);
    CHECK(q2d7.constructed_k == multiples(1, 8));

    const auto q2d5 = feasibility(Field(2), 5);
    CHECK(q2d5.m_q == 3);
    CHECK(q2d5.constructed_k == std::vector<std::uint64_t>{0, 3, 6});

    const auto q4d13 = feasibility(Field(2, 2), 13);
    CHECK(q4d13.a_q == 1);
    CHECK(q4d13.m_q == 10);
    CHECK(q4d13.a_p == 3);
    CHECK(q4d13.m_p == 5);
    CHECK(q4d13.constructed_k == std::vector<std::uint64_t>{0, 10, 20, 30, 40});
    CHECK(q4d13.necessary_k == multiples(5, 40));
    CHECK(q4d13.open_k == std::vector<std::uint64_t>{5, 15, 25, 35});
    CHECK(q4d13.partition_description() == "10-cover of K_4");

    const auto q3d2 = feasibility(Field(3), 2);
    CHECK(q3d2.a_q == 0);
    CHECK(q3d2.constructed_k == std::vector<std::uint64_t>{0, 5});

    CHECK(feasibility(Field(2, 2), 5).partition_description() == "cover of K_16");
    CHECK(feasibility(Field(2, 2), 9).partition_description() == "7-cover of K_4");
    CHECK(throws_code(Errc::BadParameter, [] { feasibility(Field(2), 0); }));
}

TEST_CASE("property: the two factorizations are consistent")
{
    for (const auto & [p, b] : std::vector<std::pair<unsigned, unsigned>>{{2, 1}, {3, 1}, {5, 1}, {2, 2}, {2, 3}, {3, 2}, {2, 4}, {5, 2}, {3, 3}, {2, 5}}) {
        const Field f(p, b);
        for (std::size_t d = 1; d <= 40; ++d) {
            const auto prof = feasibility(f, d);
            CHECK(oracle::ipow(prof.q, prof.a_q) * prof.m_q == prof.r + 1);
            CHECK(oracle::ipow(p, prof.a_p) * prof.m_p == prof.r + 1);
            CHECK(prof.m_q % prof.q != 0);
            CHECK(prof.m_p % p != 0);
            if (b == 1)
                CHECK(prof.necessary_k == prof.constructed_k);
            for (auto k : prof.constructed_k)
                CHECK(std::find(prof.necessary_k.begin(), prof.necessary_k.end(), k) != prof.necessary_k.end());
            // necessary_k is exactly the divisibility condition (r + 1) | q^d k.
            for (std::uint64_t k = 0; k <= prof.r + 1; ++k) {
                const bool necessary = std::find(prof.necessary_k.begin(), prof.necessary_k.end(), k) != prof.necessary_k.end();
                mpz_class nk;
                mpz_ui_pow_ui(nk.get_mpz_t(), prof.q, d);
                nk *= static_cast<unsigned long>(k);
                CHECK(necessary == (nk % static_cast<unsigned long>(prof.r + 1) == 0));
            }
        }
    }
}

TEST_CASE("classify_k")
{
    const auto prof = feasibility(Field(2, 2), 13);
    CHECK(classify_k(prof, 10) == KStatus::Constructed);
    CHECK(classify_k(prof, 5) == KStatus::Open);
    CHECK(classify_k(prof, 7) == KStatus::RuledOut);
    CHECK(classify_k(prof, 41) == KStatus::OutOfRange);
}

TEST_CASE("hamming_code examples")
{
    const auto c7 = hamming_code(Field(2), 3);
    CHECK(c7.length == 7);
    CHECK(c7.dimension() == 4);
    CHECK(minimum_distance(c7) == 3);

    const auto c1 = hamming_code(Field(2), 1);
    CHECK(c1.length == 1);
    CHECK(c1.dimension() == 0);
    CHECK(c1.parity_check == FieldMatrix::identity(Field(2), 1));
    CHECK(! minimum_distance(c1));

    const auto t = hamming_code(Field(3), 2);
    CHECK(t.length == 4);
    CHECK(t.dimension() == 2);
    CHECK(throws_code(Errc::BadParameter, [] { hamming_code(Field(2), 0); }));
}

TEST_CASE("parity-check columns are the canonical projective points in rank order")
{
    const Field f(3);
    const auto c = hamming_code(f, 2);
    // Ranks 1, 3, 4, 7 are the vectors whose lowest-index nonzero coordinate is 1.
    const std::vector<FieldVector> expected = {{1, 0}, {0, 1}, {1, 1}, {1, 2}};
    for (std::size_t col = 0; col < 4; ++col)
        CHECK(FieldVector{c.parity_check(0, col), c.parity_check(1, col)} == expected[col]);
}

TEST_CASE("property: Hamming codes are perfect single-error-correcting codes")
{
    for (const auto & [p, b, a] : std::vector<std::tuple<unsigned, unsigned, unsigned>>{{2, 1, 2}, {2, 1, 3}, {2, 1, 4}, {3, 1, 2}, {3, 1, 3}, {2, 2, 2}, {5, 1, 2}, {2, 3, 2}}) {
        const Field f(p, b);
        const auto code = hamming_code(f, a);
        const std::uint64_t q = f.order();
        CHECK(code.length == (oracle::ipow(q, a) - 1) / (q - 1));
        CHECK(code.dimension() == code.length - a);
        for (const auto & v : code.basis)
            CHECK(code.contains(v));
        CHECK(syndromes_separate_single_errors(code));
        if (oracle::ipow(q, code.length) <= (1U << 16)) {
            // Sphere packing by enumeration: balls of radius 1 around codewords tile the space.
            std::vector<std::uint64_t> words;
            for (std::uint64_t x = 0; x < oracle::ipow(q, code.length); ++x)
                if (code.contains(vertex_tuple(f, code.length, x)))
                    words.push_back(x);
            CHECK(words.size() == oracle::ipow(q, code.dimension()));
            std::vector<int> covered(oracle::ipow(q, code.length), 0);
            for (std::uint64_t x = 0; x < covered.size(); ++x)
                for (auto w : words)
                    covered[x] += oracle::hamming_distance(x, w, q, code.length) <= 1;
            CHECK(std::all_of(covered.begin(), covered.end(), [](int c) { return c == 1; }));
            std::size_t best = code.length;
            for (auto u : words)
                for (auto w : words)
                    if (u != w)
                        best = std::min(best, oracle::hamming_distance(u, w, q, code.length));
            CHECK(minimum_distance(code) == best);
        }
    }
}

TEST_CASE("build_plan examples")
{
    const auto p5 = build_plan(Field(2), 5);
    CHECK(p5.l == 1);
    CHECK(p5.blocks == std::vector<std::vector<std::size_t>>{{0, 1}, {2, 3, 4}});
    CHECK(p5.phi == FieldMatrix(Field(2), 1, 5, {0, 0, 1, 1, 1}));
    CHECK(p5.fibre_count() == 2);

    const auto p7 = build_plan(Field(2), 7);
    CHECK(p7.l == 7);
    CHECK(p7.blocks[0].empty());
    CHECK(p7.phi == FieldMatrix::identity(Field(2), 7));
    CHECK(p7.fibre_count() == 8);

    const auto p9 = build_plan(Field(2, 2), 9);
    CHECK(p9.a == 1);
    CHECK(p9.m == 7);
    CHECK(p9.l == 1);
    CHECK(p9.blocks[0].size() == 2);
    CHECK(p9.blocks[1].size() == 7);
    CHECK(p9.fibre_count() == 4);

    CHECK(throws_code(Errc::TrivialCase, [] { build_plan(Field(3), 2); }));
}

TEST_CASE("property: plans for every small instance")
{
    for (const auto & [p, b, d] : plan_instances()) {
        CAPTURE(p);
        CAPTURE(b);
        CAPTURE(d);
        const Field f(p, b);
        const auto plan = build_plan(f, d);
        const std::uint64_t q = f.order();
        CHECK(plan.blocks[0].size() == (plan.m - 1) / (q - 1));
        for (std::size_t i = 1; i <= plan.l; ++i)
            CHECK(plan.blocks[i].size() == plan.m);

        // Fibre sizes by enumeration.
        const std::uint64_t n = oracle::ipow(q, d);
        std::vector<std::uint64_t> sizes(plan.fibre_count(), 0);
        for (std::uint64_t v = 0; v < n; ++v)
            ++sizes[plan.fibre_of(v)];
        for (auto s : sizes)
            CHECK(s == n / plan.fibre_count());

        if (n <= (1U << 12)) {
            const auto verified = verify_plan_full(plan);
            CHECK(verified.certificate.multiplicity == static_cast<std::int64_t>(plan.m));
            CHECK(verified.certificate.base_size == plan.fibre_count());

            // The m-cover partition is dominatable with every column equal to m.
            const auto g = hamming_graph(q, d);
            std::vector<std::size_t> labels(n);
            for (std::uint64_t v = 0; v < n; ++v)
                labels[v] = plan.fibre_of(v);
            const auto columns = is_dominatable(g, VertexPartition::from_labels(labels));
            REQUIRE(columns);
            for (auto a : *columns)
                CHECK(a == static_cast<std::int64_t>(plan.m));

            for (auto k : plan.profile.constructed_k) {
                const auto built = construct_function(f, d, k);
                CHECK(verify_efficient(g, built.function).efficient);
                CHECK(built.function.k == static_cast<std::int64_t>(k));
            }
        }
        const auto audit = basis_audit(plan);
        CHECK(audit.kernel_size == audit.expected_kernel_size);
        CHECK(audit.total_size == d - plan.a);
    }
}

TEST_CASE("property: fibre labels agree exactly on cosets of T")
{
    oracle::Rng rng(5);
    for (const auto & [p, b, d] : std::vector<std::tuple<unsigned, unsigned, std::size_t>>{{2, 1, 5}, {2, 1, 9}, {3, 1, 7}, {2, 2, 9}, {2, 2, 13}, {5, 1, 6}}) {
        const Field f(p, b);
        const auto plan = build_plan(f, d);
        for (int trial = 0; trial < 200; ++trial) {
            FieldVector u(d), v(d);
            for (std::size_t i = 0; i < d; ++i) {
                u[i] = static_cast<Field::Code>(rng.below(f.order()));
                v[i] = rng.coin(0.8) ? u[i] : static_cast<Field::Code>(rng.below(f.order()));
            }
            // Membership of u - v in T: phi(u - v) is a codeword.
            FieldVector diff(d);
            for (std::size_t i = 0; i < d; ++i)
                diff[i] = f.sub(u[i], v[i]);
            const bool in_t = plan.code.contains(plan.phi.apply(diff));
            CHECK((label_of(plan, u) == label_of(plan, v)) == in_t);
        }
    }
}

TEST_CASE("verify_plan examples")
{
    const auto q2 = verify_plan_full(build_plan(Field(2), 5));
    CHECK(q2.certificate.kind == CoverKind::MultiCover);
    CHECK(q2.certificate.multiplicity == 3);
    CHECK(q2.certificate.base_size == 2);

    const auto q4 = verify_plan_full(build_plan(Field(2, 2), 5));
    CHECK(q4.certificate.kind == CoverKind::Cover);
    CHECK(q4.certificate.base_size == 16);
    CHECK(q4.certificate.fibre_size == 64);

    const auto sampled = verify_plan_sampled(build_plan(Field(2, 2), 13), 2000, 42);
    CHECK(sampled.sampled);
    CHECK(sampled.certificate.multiplicity == 10);
    CHECK(sampled.certificate.base_size == 4);

    CHECK(throws_code(Errc::SizeCapExceeded, [] { verify_plan_full(build_plan(Field(2, 2), 13)); }));
}

TEST_CASE("verify_plan reports the lowest violating vertex of a broken plan")
{
    auto plan = build_plan(Field(2), 5);
    plan.syndrome_map(0, 0) = 1;  // coordinate 0 now moves vertices between fibres
    try {
        verify_plan_full(plan);
        FAIL("expected a certificate violation");
    } catch (const Error & e) {
        CHECK(e.code() == Errc::CertificateViolation);
        CHECK(std::string(e.what()).find("vertex 0 ") != std::string::npos);
    }
    CHECK(throws_code(Errc::CertificateViolation, [&] { verify_plan_sampled(plan, 50, 1); }));
}

TEST_CASE("sampled verification is reproducible and agrees with the full check")
{
    const auto plan = build_plan(Field(3), 4);
    const auto a = verify_plan_sampled(plan, 100, 7);
    const auto b = verify_plan_sampled(plan, 100, 7);
    CHECK(a.vertices_checked == b.vertices_checked);
    for (std::uint64_t v = 0; v < 81; ++v) {
        const auto counts = fibre_neighbour_counts(plan, v);
        const auto own = plan.fibre_of(v);
        for (std::uint64_t l = 0; l < counts.size(); ++l)
            CHECK(counts[l] == (l == own ? plan.m - 1 : plan.m));
    }
}

TEST_CASE("construct_function examples")
{
    const auto five = construct_function(Field(2), 5, 3);
    const auto q5 = hamming_graph(2, 5);
    CHECK(verify_efficient(q5, five.function).efficient);
    CHECK(five.function.support().size() == 16);
    // The support is the fibre where coordinates 2, 3, 4 sum to zero.
    for (auto v : five.function.support())
        CHECK((((v >> 2) & 1) + ((v >> 3) & 1) + ((v >> 4) & 1)) % 2 == 0);

    const auto code = construct_function(Field(2), 7, 1);
    CHECK(code.function.support().size() == 16);
    CHECK(code.a == 3);
    CHECK(code.fibres == 8);
    CHECK(verify_efficient(hamming_graph(2, 7), code.function).efficient);

    const auto ternary = construct_function(Field(3), 4, 1);
    CHECK(ternary.function.support().size() == 9);
    CHECK(verify_efficient(hamming_graph(3, 4), ternary.function).efficient);

    const auto zero = construct_function(Field(3), 2, 0);
    CHECK(zero.function.is_constant());
    CHECK(construct_function(Field(3), 2, 5).function.values == std::vector<std::int64_t>(9, 1));
}

TEST_CASE("construct_function distinguishes open from ruled-out k")
{
    auto message = [](std::uint64_t k) {
        try {
            construct_function(Field(2, 2), 13, k);
        } catch (const Error & e) {
            CHECK(e.code() == Errc::InfeasibleK);
            return std::string(e.what());
        }
        return std::string();
    };
    for (std::uint64_t k : {5, 15, 25, 35})
        CHECK(message(k).find("open") != std::string::npos);
    for (std::uint64_t k : {1, 7, 12, 39})
        CHECK(message(k).find("ruled out by divisibility") != std::string::npos);
    CHECK(throws_code(Errc::InfeasibleK, [] { construct_function(Field(2), 5, 7); }));
    CHECK(throws_code(Errc::SizeCapExceeded, [] { construct_function(Field(2, 2), 13, 10); }));
}

TEST_CASE("basis_audit examples")
{
    const auto a5 = basis_audit(build_plan(Field(2), 5));
    CHECK(a5.kernel_size == 4);
    CHECK(a5.expected_kernel_size == 4);
    CHECK(a5.total_size == 4);

    const auto a7 = basis_audit(build_plan(Field(2), 7));
    CHECK(a7.kernel_size == 0);
    CHECK(a7.code_dimension == 4);
    CHECK(a7.total_size == 4);

    const auto t7 = basis_audit(build_plan(Field(3), 7));
    CHECK(t7.kernel_size == 6);
    CHECK(t7.total_size == 6);

    const auto big = basis_audit(build_plan(Field(2, 2), 13));
    CHECK(big.kernel_size == 12);
    CHECK(big.total_size == 12);
}

TEST_CASE("basis_audit rejects a corrupted plan")
{
    auto plan = build_plan(Field(2), 5);
    plan.blocks[1].pop_back();
    CHECK(throws_code(Errc::AuditFailure, [&] { basis_audit(plan); }));
}

TEST_CASE("prime case: no efficient (1,k) functions outside the multiples of m")
{
    for (const auto & [q, d] : std::vector<std::pair<unsigned, std::size_t>>{{2, 3}, {2, 5}, {3, 2}, {2, 4}, {3, 3}}) {
        const auto prof = feasibility(Field(q), d);
        const auto g = hamming_graph(q, d);
        for (std::uint64_t k = 1; k <= prof.r; ++k) {
            if (k % prof.m_q == 0)
                continue;
            SearchConfig config;
            config.j = 1;
            config.k = static_cast<std::int64_t>(k);
            config.count_only = true;
            const auto outcome = enumerate_efficient(g, config);
            CHECK(outcome.exhausted);
            CHECK(outcome.count == 0);
        }
    }
}
