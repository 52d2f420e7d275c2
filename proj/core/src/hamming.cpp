#include <effdom/error.hpp>
#include <effdom/hamming.hpp>

#include <algorithm>
#include <iterator>
#include <random>
#include <string>
#include <tuple>

namespace effdom {

namespace {

constexpr std::uint64_t code_enumeration_cap = std::uint64_t{1} << 20;

auto split_power(std::uint64_t value, std::uint64_t base) -> std::pair<unsigned, std::uint64_t>
{
    unsigned exponent = 0;
    while (value % base == 0) {
        value /= base;
        ++exponent;
    }
    return {exponent, value};
}

auto ipow(std::uint64_t base, std::size_t e) -> std::uint64_t
{
    std::uint64_t result = 1;
    for (std::size_t i = 0; i < e; ++i)
        result *= base;
    return result;
}

// q^e, or nullopt when it exceeds cap.
auto bounded_pow(std::uint64_t base, std::size_t e, std::uint64_t cap) -> std::optional<std::uint64_t>
{
    std::uint64_t result = 1;
    for (std::size_t i = 0; i < e; ++i) {
        if (result > cap / base)
            return std::nullopt;
        result *= base;
    }
    return result;
}

auto multiples(std::uint64_t step, std::uint64_t limit) -> std::vector<std::uint64_t>
{
    std::vector<std::uint64_t> out;
    for (std::uint64_t k = 0; k <= limit; k += step)
        out.push_back(k);
    return out;
}

auto is_zero(std::span<const Field::Code> v) -> bool
{
    return std::all_of(v.begin(), v.end(), [](Field::Code c) { return c == 0; });
}

}

auto FeasibilityProfile::partition_description() const -> std::string
{
    if (a_q == 0)
        return "no cover (only trivial functions)";
    const auto base = "K_" + std::to_string(ipow(q, a_q));
    if (m_q == 1)
        return "cover of " + base;
    return std::to_string(m_q) + "-cover of " + base;
}

auto feasibility(const Field & field, std::size_t d) -> FeasibilityProfile
{
    if (d == 0)
        throw Error(Errc::BadParameter, "d must be at least 1");
    FeasibilityProfile profile;
    profile.q = field.order();
    profile.p = field.characteristic();
    profile.b = field.degree();
    profile.d = d;
    profile.r = (profile.q - 1) * d;
    std::tie(profile.a_q, profile.m_q) = split_power(profile.r + 1, profile.q);
    std::tie(profile.a_p, profile.m_p) = split_power(profile.r + 1, profile.p);
    profile.necessary_k = multiples(profile.m_p, profile.r + 1);
    profile.constructed_k = multiples(profile.m_q, profile.r + 1);
    std::set_difference(profile.necessary_k.begin(), profile.necessary_k.end(),
                        profile.constructed_k.begin(), profile.constructed_k.end(),
                        std::back_inserter(profile.open_k));
    return profile;
}

auto classify_k(const FeasibilityProfile & profile, std::uint64_t k) -> KStatus
{
    if (k > profile.r + 1)
        return KStatus::OutOfRange;
    if (k % profile.m_q == 0)
        return KStatus::Constructed;
    if (k % profile.m_p == 0)
        return KStatus::Open;
    return KStatus::RuledOut;
}

auto to_string(KStatus status) -> std::string_view
{
    switch (status) {
    case KStatus::Constructed:
        return "constructed";
    case KStatus::Open:
        return "open";
    case KStatus::RuledOut:
        return "ruled_out";
    case KStatus::OutOfRange:
        return "out_of_range";
    }
    return "unknown";
}

auto CodeSubspace::contains(std::span<const Field::Code> v) const -> bool
{
    return is_zero(parity_check.apply(v));
}

auto hamming_code(const Field & field, unsigned a) -> CodeSubspace
{
    if (a == 0)
        throw Error(Errc::BadParameter, "a Hamming code needs redundancy a >= 1");
    const auto count = bounded_pow(field.order(), a, code_enumeration_cap);
    if (! count)
        throw Error(Errc::SizeCapExceeded, "q^a is too large for a Hamming code");

    std::vector<FieldVector> columns;
    for (std::uint64_t rank = 1; rank < *count; ++rank) {
        auto column = vertex_tuple(field, a, rank);
        const auto first = std::find_if(column.begin(), column.end(), [](Field::Code c) { return c != 0; });
        if (*first == 1)
            columns.push_back(std::move(column));
    }

    const std::size_t length = columns.size();
    FieldMatrix h(field, a, length);
    for (std::size_t c = 0; c < length; ++c)
        for (std::size_t r = 0; r < a; ++r)
            h(r, c) = columns[c][r];

    return CodeSubspace{field, length, kernel_basis(h), std::move(h)};
}

auto minimum_distance(const CodeSubspace & code) -> std::optional<std::size_t>
{
    if (code.basis.empty())
        return std::nullopt;
    const auto count = bounded_pow(code.field.order(), code.dimension(), code_enumeration_cap);
    if (! count)
        throw Error(Errc::SizeCapExceeded, "too many codewords to list");

    const auto & f = code.field;
    std::size_t best = code.length;
    for (std::uint64_t index = 1; index < *count; ++index) {
        const auto coefficients = vertex_tuple(f, code.dimension(), index);
        FieldVector word(code.length, 0);
        for (std::size_t i = 0; i < code.dimension(); ++i)
            for (std::size_t c = 0; c < code.length; ++c)
                word[c] = f.add(word[c], f.mul(coefficients[i], code.basis[i][c]));
        const auto weight = static_cast<std::size_t>(std::count_if(word.begin(), word.end(), [](Field::Code c) { return c != 0; }));
        best = std::min(best, weight);
    }
    return best;
}

auto syndromes_separate_single_errors(const CodeSubspace & code) -> bool
{
    const auto & h = code.parity_check;
    const auto & f = code.field;
    std::vector<FieldVector> columns(h.cols(), FieldVector(h.rows()));
    for (std::size_t c = 0; c < h.cols(); ++c)
        for (std::size_t r = 0; r < h.rows(); ++r)
            columns[c][r] = h(r, c);
    for (std::size_t c = 0; c < columns.size(); ++c) {
        if (is_zero(columns[c]))
            return false;
        for (std::size_t e = c + 1; e < columns.size(); ++e) {
            const FieldMatrix pair = FieldMatrix::from_rows(f, h.rows(), std::vector<FieldVector>{columns[c], columns[e]});
            if (rank(pair) < 2)
                return false;
        }
    }
    return true;
}

auto MCoverPlan::fibre_count() const -> std::uint64_t
{
    return ipow(field.order(), a);
}

auto MCoverPlan::fibre_label(std::span<const Field::Code> vertex) const -> FieldVector
{
    return syndrome_map.apply(vertex);
}

auto MCoverPlan::fibre_of(std::uint64_t vertex) const -> std::uint64_t
{
    return vertex_rank(field, fibre_label(vertex_tuple(field, profile.d, vertex)));
}

auto build_plan(const Field & field, std::size_t d) -> MCoverPlan
{
    auto profile = feasibility(field, d);
    if (profile.a_q == 0)
        throw Error(Errc::TrivialCase, "q does not divide (q-1)d+1 = " + std::to_string(profile.r + 1) + "; only the constant functions exist");

    const std::uint64_t q = profile.q;
    const unsigned a = profile.a_q;
    const std::uint64_t m = profile.m_q;
    const std::size_t l = (ipow(q, a) - 1) / (q - 1);
    const std::size_t s0 = (m - 1) / (q - 1);
    if (s0 + l * m != d)
        throw Error(Errc::Internal, "coordinate blocks do not add up to d");

    std::vector<std::vector<std::size_t>> blocks(l + 1);
    for (std::size_t j = 0; j < s0; ++j)
        blocks[0].push_back(j);
    for (std::size_t i = 1; i <= l; ++i)
        for (std::size_t t = 0; t < m; ++t)
            blocks[i].push_back(s0 + (i - 1) * m + t);

    FieldMatrix phi(field, l, d);
    for (std::size_t i = 1; i <= l; ++i)
        for (auto j : blocks[i])
            phi(i - 1, j) = 1;

    auto code = hamming_code(field, a);
    auto syndrome_map = code.parity_check.multiply(phi);
    return MCoverPlan{std::move(profile), field, a, m, l, std::move(blocks), std::move(phi), std::move(code), std::move(syndrome_map)};
}

auto fibre_neighbour_counts(const MCoverPlan & plan, std::uint64_t vertex) -> std::vector<std::uint64_t>
{
    const auto & f = plan.field;
    const auto & s = plan.syndrome_map;
    const auto tuple = vertex_tuple(f, plan.profile.d, vertex);
    const auto label = plan.fibre_label(tuple);

    std::vector<std::uint64_t> counts(plan.fibre_count(), 0);
    FieldVector shifted(label.size());
    for (std::size_t i = 0; i < tuple.size(); ++i) {
        for (Field::Code symbol = 0; symbol < f.order(); ++symbol) {
            if (symbol == tuple[i])
                continue;
            const auto delta = f.sub(symbol, tuple[i]);
            for (std::size_t r = 0; r < label.size(); ++r)
                shifted[r] = f.add(label[r], f.mul(delta, s(r, i)));
            ++counts[vertex_rank(f, shifted)];
        }
    }
    return counts;
}

namespace {

auto check_vertex(const MCoverPlan & plan, std::uint64_t vertex) -> bool
{
    const auto own = plan.fibre_of(vertex);
    const auto counts = fibre_neighbour_counts(plan, vertex);
    for (std::uint64_t label = 0; label < counts.size(); ++label)
        if (counts[label] != (label == own ? plan.m - 1 : plan.m))
            return false;
    return true;
}

auto violation(std::uint64_t vertex) -> Error
{
    return Error(Errc::CertificateViolation, "vertex " + std::to_string(vertex) + " does not see the m-cover fibre counts");
}

auto check_degree_identity(const MCoverPlan & plan) -> void
{
    // Each vertex sees m - 1 neighbours in its own fibre and m in each of the
    // other q^a - 1, which accounts for all (q - 1) d neighbours.
    if (plan.m * (plan.fibre_count() - 1) != plan.profile.r - (plan.m - 1))
        throw Error(Errc::CertificateViolation, "degree identity m(q^a - 1) = (q - 1)d - (m - 1) fails");
}

}

auto verify_plan_full(const MCoverPlan & plan, std::uint64_t size_cap) -> PlanVerification
{
    check_degree_identity(plan);
    const auto g = hamming_graph(plan.field.order(), plan.profile.d, size_cap);
    const std::uint64_t fibres = plan.fibre_count();

    std::vector<std::vector<Vertex>> cells(fibres);
    for (Vertex v = 0; v < g.order(); ++v)
        cells[plan.fibre_of(v)].push_back(v);
    if (std::any_of(cells.begin(), cells.end(), [](const auto & c) { return c.empty(); }))
        throw Error(Errc::CertificateViolation, "some syndrome labels label no vertex");

    const VertexPartition partition(g.order(), std::move(cells));
    auto certificate = verify_kcover(g, partition, complete_graph(fibres), static_cast<std::int64_t>(plan.m));
    if (! certificate) {
        for (Vertex v = 0; v < g.order(); ++v)
            if (! check_vertex(plan, v))
                throw violation(v);
        throw Error(Errc::CertificateViolation, "fibres fail the m-cover check");
    }
    return PlanVerification{std::move(*certificate), false, g.order()};
}

auto verify_plan_sampled(const MCoverPlan & plan, std::uint64_t samples, std::uint64_t seed) -> PlanVerification
{
    check_degree_identity(plan);
    const std::uint64_t n = ipow(plan.field.order(), plan.profile.d);

    std::linear_congruential_engine<std::uint64_t, 6364136223846793005ULL, 1442695040888963407ULL, 0> engine(seed);
    std::optional<std::uint64_t> worst;
    for (std::uint64_t i = 0; i < samples; ++i) {
        const std::uint64_t v = (engine() >> 16) % n;
        if (! check_vertex(plan, v) && (! worst || v < *worst))
            worst = v;
    }
    if (worst)
        throw violation(*worst);

    CoverCertificate certificate;
    certificate.kind = plan.m == 1 ? CoverKind::Cover : CoverKind::MultiCover;
    certificate.base_size = plan.fibre_count();
    certificate.fibre_size = n / plan.fibre_count();
    certificate.multiplicity = static_cast<std::int64_t>(plan.m);
    return PlanVerification{std::move(certificate), true, samples};
}

auto construct_function(const Field & field, std::size_t d, std::uint64_t k, std::uint64_t size_cap) -> ConstructedFunction
{
    const auto profile = feasibility(field, d);
    const auto status = classify_k(profile, k);
    const auto n = bounded_pow(profile.q, d, size_cap);

    switch (status) {
    case KStatus::OutOfRange:
        throw Error(Errc::InfeasibleK, "k = " + std::to_string(k) + " exceeds (q-1)d+1 = " + std::to_string(profile.r + 1));
    case KStatus::RuledOut:
        throw Error(Errc::InfeasibleK, "k = " + std::to_string(k) + " is ruled out by divisibility: " + std::to_string(profile.m_p) + " does not divide it");
    case KStatus::Open:
        throw Error(Errc::InfeasibleK, "k = " + std::to_string(k) + " is open: allowed by divisibility, not reached by the construction");
    case KStatus::Constructed:
        break;
    }
    if (! n)
        throw Error(Errc::SizeCapExceeded, "H(q, d) has more than " + std::to_string(size_cap) + " vertices");

    ConstructedFunction out;
    out.function.j = 1;
    out.function.k = static_cast<std::int64_t>(k);
    if (k == 0 || k == profile.r + 1) {
        out.function.values.assign(*n, k == 0 ? 0 : 1);
        out.a = profile.a_q;
        out.m = profile.m_q;
        out.fibres = 1;
        return out;
    }

    const auto plan = build_plan(field, d);
    const std::uint64_t chosen = k / plan.m;
    out.function.values.resize(*n);
    for (std::uint64_t v = 0; v < *n; ++v)
        out.function.values[v] = plan.fibre_of(v) < chosen ? 1 : 0;
    out.a = plan.a;
    out.m = plan.m;
    out.fibres = plan.fibre_count();
    return out;
}

auto basis_audit(const MCoverPlan & plan) -> BasisAudit
{
    const auto & f = plan.field;
    const std::size_t d = plan.profile.d;
    const std::uint64_t q = f.order();
    auto fail = [](const std::string & what) { return Error(Errc::AuditFailure, what); };
    auto unit = [d](std::size_t j) {
        FieldVector e(d, 0);
        e[j] = 1;
        return e;
    };

    BasisAudit audit;
    for (auto j : plan.blocks[0])
        audit.kernel_basis.push_back(unit(j));
    for (std::size_t i = 1; i <= plan.l; ++i) {
        const auto & block = plan.blocks[i];
        for (std::size_t t = 1; t < block.size(); ++t) {
            auto v = unit(block[0]);
            v[block[t]] = f.neg(1);
            audit.kernel_basis.push_back(std::move(v));
        }
    }
    for (const auto & v : audit.kernel_basis)
        if (! is_zero(plan.phi.apply(v)))
            throw fail("a kernel basis vector is not in ker(phi)");

    audit.kernel_size = audit.kernel_basis.size();
    audit.expected_kernel_size = static_cast<std::size_t>(ipow(q, plan.a) * (plan.m - 1) / (q - 1));
    if (audit.kernel_size != plan.l * (plan.m - 1) + (plan.m - 1) / (q - 1))
        throw fail("|B| != l(m-1) + (m-1)/(q-1)");
    if (audit.kernel_size != audit.expected_kernel_size)
        throw fail("|B| != q^a(m-1)/(q-1)");

    for (const auto & c : plan.code.basis) {
        auto lifted = solve_affine(plan.phi, c);
        if (! lifted)
            throw fail("phi is not surjective onto a code basis vector");
        if (plan.phi.apply(*lifted) != c)
            throw fail("lifted code vector does not map back under phi");
        audit.lifted_code_basis.push_back(std::move(*lifted));
    }
    audit.code_dimension = plan.code.dimension();
    if (audit.code_dimension != plan.l - plan.a)
        throw fail("|B_C| != l - a");

    std::vector<FieldVector> all = audit.kernel_basis;
    all.insert(all.end(), audit.lifted_code_basis.begin(), audit.lifted_code_basis.end());
    audit.total_size = all.size();
    audit.expected_total_size = d - plan.a;
    if (audit.total_size != audit.expected_total_size)
        throw fail("|B'| != d - a");

    for (const auto & v : all)
        if (! is_zero(plan.syndrome_map.apply(v)))
            throw fail("a vector of B' lies outside T");
    if (! all.empty() && rank(FieldMatrix::from_rows(f, d, all)) != all.size())
        throw fail("B' is linearly dependent");
    if (kernel_basis(plan.syndrome_map).size() != all.size())
        throw fail("dim T != |B'|");
    return audit;
}

}
