#pragma once

#include <effdom/domination.hpp>
#include <effdom/fields.hpp>
#include <effdom/graph.hpp>
#include <effdom/linalg.hpp>
#include <effdom/partition.hpp>

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace effdom {

/// Which k admit an efficient (1, k)-dominating function on H(q, d), split
/// into what divisibility allows and what the m-cover construction reaches.
struct FeasibilityProfile
{
    std::uint64_t q = 0;
    unsigned p = 0;
    unsigned b = 0;
    std::size_t d = 0;
    /// (q - 1) d, the degree of H(q, d).
    std::uint64_t r = 0;
    /// (q - 1) d + 1 = q^a_q m_q with q not dividing m_q.
    unsigned a_q = 0;
    std::uint64_t m_q = 0;
    /// (q - 1) d + 1 = p^a_p m_p with p not dividing m_p.
    unsigned a_p = 0;
    std::uint64_t m_p = 0;
    /// Multiples of m_p in [0, r + 1].
    std::vector<std::uint64_t> necessary_k;
    /// Multiples of m_q in [0, r + 1].
    std::vector<std::uint64_t> constructed_k;
    /// necessary_k minus constructed_k.
    std::vector<std::uint64_t> open_k;

    /// "cover of K_16", "7-cover of K_4", or "no cover (only trivial functions)".
    auto partition_description() const -> std::string;
};

/// Throws Errc::BadParameter for d = 0.
auto feasibility(const Field & field, std::size_t d) -> FeasibilityProfile;

enum class KStatus
{
    Constructed,
    Open,
    RuledOut,
    OutOfRange,
};

auto classify_k(const FeasibilityProfile & profile, std::uint64_t k) -> KStatus;
auto to_string(KStatus status) -> std::string_view;

/// A linear code given by a basis and an a x length parity-check matrix.
struct CodeSubspace
{
    Field field;
    std::size_t length = 0;
    std::vector<FieldVector> basis;
    FieldMatrix parity_check;

    auto dimension() const noexcept -> std::size_t { return basis.size(); }
    auto contains(std::span<const Field::Code> v) const -> bool;
};

/// The Hamming code of redundancy a over GF(q). The parity-check columns are
/// the nonzero vectors of GF(q)^a whose lowest-index nonzero coordinate is 1,
/// taken in increasing rank. For a = 1 this is the zero code of length 1.
/// Throws Errc::BadParameter (a = 0) or Errc::SizeCapExceeded (q^a above 2^20).
auto hamming_code(const Field & field, unsigned a) -> CodeSubspace;

/// Smallest weight of a nonzero codeword, found by listing all q^dim
/// codewords; nullopt for the zero code. Throws Errc::SizeCapExceeded when
/// q^dim exceeds 2^20.
auto minimum_distance(const CodeSubspace & code) -> std::optional<std::size_t>;

/// Whether the parity-check columns are nonzero and pairwise non-parallel,
/// which is equivalent to minimum distance at least 3.
auto syndromes_separate_single_errors(const CodeSubspace & code) -> bool;

/// The construction for H(q, d) when q divides (q - 1) d + 1: coordinates are
/// split into S_0 (size (m - 1)/(q - 1)) and S_1..S_l (size m each), phi sums
/// the coordinates of each S_i, and a vertex lies in the fibre labelled by
/// the syndrome H phi(v).
struct MCoverPlan
{
    FeasibilityProfile profile;
    Field field;
    unsigned a = 0;
    std::uint64_t m = 0;
    std::size_t l = 0;
    /// blocks[i] lists the coordinates of S_i.
    std::vector<std::vector<std::size_t>> blocks;
    /// l x d
    FieldMatrix phi;
    CodeSubspace code;
    /// H phi, a x d.
    FieldMatrix syndrome_map;

    auto fibre_count() const -> std::uint64_t;
    auto fibre_label(std::span<const Field::Code> vertex) const -> FieldVector;
    /// Rank of the label of the vertex with the given rank.
    auto fibre_of(std::uint64_t vertex) const -> std::uint64_t;
};

/// Throws Errc::TrivialCase when q does not divide (q - 1) d + 1.
auto build_plan(const Field & field, std::size_t d) -> MCoverPlan;

struct PlanVerification
{
    CoverCertificate certificate;
    bool sampled = false;
    std::uint64_t vertices_checked = 0;
};

/// Materializes H(q, d) and certifies the fibres as an m-cover of K_{q^a}.
/// Throws Errc::SizeCapExceeded or Errc::CertificateViolation naming the
/// lowest violating vertex.
auto verify_plan_full(const MCoverPlan & plan, std::uint64_t size_cap = default_size_cap) -> PlanVerification;

/// Checks the fibre counts around `samples` pseudo-random vertices without
/// building the graph. Vertices are drawn from a 64-bit linear congruential
/// generator (Knuth's MMIX constants) seeded with `seed`, taking bits 16..63
/// of each output modulo q^d. The certificate carries no fibre map. Throws
/// Errc::CertificateViolation naming the lowest violating sampled vertex.
auto verify_plan_sampled(const MCoverPlan & plan, std::uint64_t samples, std::uint64_t seed) -> PlanVerification;

/// Number of neighbours of the vertex in each fibre, indexed by label rank.
auto fibre_neighbour_counts(const MCoverPlan & plan, std::uint64_t vertex) -> std::vector<std::uint64_t>;

struct ConstructedFunction
{
    DominatingFunction function;
    unsigned a = 0;
    std::uint64_t m = 0;
    std::uint64_t fibres = 0;
};

/// An efficient (1, k) function on H(q, d): k = 0 and k = r + 1 give the
/// constants, other k take value 1 on the k/m fibres of smallest label.
/// Throws Errc::InfeasibleK or Errc::SizeCapExceeded.
auto construct_function(const Field & field, std::size_t d, std::uint64_t k, std::uint64_t size_cap = default_size_cap) -> ConstructedFunction;

/// Explicit bases for T = phi^{-1}(C): the kernel pieces B_0..B_l and lifts
/// of a code basis through phi.
struct BasisAudit
{
    std::size_t kernel_size = 0;
    std::size_t expected_kernel_size = 0;
    std::size_t code_dimension = 0;
    std::size_t total_size = 0;
    std::size_t expected_total_size = 0;
    std::vector<FieldVector> kernel_basis;
    std::vector<FieldVector> lifted_code_basis;
};

/// Throws Errc::AuditFailure naming the identity that fails.
auto basis_audit(const MCoverPlan & plan) -> BasisAudit;

}
