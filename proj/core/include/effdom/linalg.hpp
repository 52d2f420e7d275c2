#pragma once

#include <effdom/fields.hpp>

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace effdom {

using FieldVector = std::vector<Field::Code>;
using IntVector = std::vector<mpz_class>;

/// Dense row-major matrix over GF(q), entries stored as element codes.
class FieldMatrix
{
public:
    FieldMatrix(const Field & field, std::size_t rows, std::size_t cols);
    /// Throws Errc::DimensionMismatch or Errc::ValueOutOfRange.
    FieldMatrix(const Field & field, std::size_t rows, std::size_t cols, std::vector<Field::Code> entries);

    static auto identity(const Field & field, std::size_t n) -> FieldMatrix;
    /// Matrix whose rows are the given vectors (all of length cols).
    static auto from_rows(const Field & field, std::size_t cols, std::span<const FieldVector> rows) -> FieldMatrix;

    auto field() const noexcept -> const Field & { return _field; }
    auto rows() const noexcept -> std::size_t { return _rows; }
    auto cols() const noexcept -> std::size_t { return _cols; }
    auto entries() const noexcept -> std::span<const Field::Code> { return _entries; }

    auto operator()(std::size_t r, std::size_t c) const -> Field::Code { return _entries[r * _cols + c]; }
    auto operator()(std::size_t r, std::size_t c) -> Field::Code & { return _entries[r * _cols + c]; }

    /// Matrix-vector product; throws Errc::DimensionMismatch.
    auto apply(std::span<const Field::Code> v) const -> FieldVector;
    auto multiply(const FieldMatrix & other) const -> FieldMatrix;

    friend auto operator==(const FieldMatrix &, const FieldMatrix &) -> bool = default;

private:
    Field _field;
    std::size_t _rows, _cols;
    std::vector<Field::Code> _entries;
};

struct RowEchelon
{
    FieldMatrix reduced;
    std::vector<std::size_t> pivots;
};

/// Reduced row-echelon form; pivot columns strictly increasing.
auto rref(const FieldMatrix & m) -> RowEchelon;
auto rank(const FieldMatrix & m) -> std::size_t;

/// Basis of {v : Mv = 0}, one vector per free column in increasing order:
/// 1 in its free column, 0 in the other free columns, pivot entries completed.
auto kernel_basis(const FieldMatrix & m) -> std::vector<FieldVector>;

/// The solution of Mx = target with every free variable set to zero, or
/// nullopt when inconsistent. Throws Errc::DimensionMismatch.
auto solve_affine(const FieldMatrix & m, std::span<const Field::Code> target) -> std::optional<FieldVector>;

/// Dense row-major matrix of arbitrary-precision integers.
class IntMatrix
{
public:
    IntMatrix(std::size_t rows, std::size_t cols);
    /// Throws Errc::DimensionMismatch.
    IntMatrix(std::size_t rows, std::size_t cols, std::vector<mpz_class> entries);

    static auto identity(std::size_t n) -> IntMatrix;

    auto rows() const noexcept -> std::size_t { return _rows; }
    auto cols() const noexcept -> std::size_t { return _cols; }
    auto entries() const noexcept -> std::span<const mpz_class> { return _entries; }

    auto operator()(std::size_t r, std::size_t c) const -> const mpz_class & { return _entries[r * _cols + c]; }
    auto operator()(std::size_t r, std::size_t c) -> mpz_class & { return _entries[r * _cols + c]; }

    auto apply(std::span<const mpz_class> v) const -> IntVector;
    auto multiply(const IntMatrix & other) const -> IntMatrix;

    friend auto operator==(const IntMatrix &, const IntMatrix &) -> bool = default;

private:
    std::size_t _rows, _cols;
    std::vector<mpz_class> _entries;
};

/// Polynomial with integer coefficients, constant term first, no trailing zeros.
class IntPolynomial
{
public:
    IntPolynomial() = default;
    explicit IntPolynomial(std::vector<mpz_class> coefficients);

    /// x - root
    static auto linear(const mpz_class & root) -> IntPolynomial;

    auto coefficients() const noexcept -> std::span<const mpz_class> { return _coefficients; }
    auto is_zero() const noexcept -> bool { return _coefficients.empty(); }
    /// -1 for the zero polynomial.
    auto degree() const noexcept -> long { return static_cast<long>(_coefficients.size()) - 1; }

    auto evaluate(const mpz_class & x) const -> mpz_class;
    auto to_string() const -> std::string;

    friend auto operator*(const IntPolynomial & a, const IntPolynomial & b) -> IntPolynomial;
    friend auto operator==(const IntPolynomial &, const IntPolynomial &) -> bool = default;

private:
    std::vector<mpz_class> _coefficients;
};

/// Rank and nullspace of an integer matrix, computed together. The basis is
/// the rational reduced-echelon nullspace basis (one vector per free column,
/// increasing), each vector scaled to be primitive: content 1, first nonzero
/// entry positive.
struct IntNullspace
{
    std::size_t rank;
    std::vector<std::size_t> pivots;
    std::vector<IntVector> basis;
};

/// Matrices with more rows or columns than this go through the multimodular
/// route first.
inline constexpr std::size_t bareiss_dimension_limit = 64;

/// Rank over the rationals. Small matrices use Bareiss elimination; larger
/// ones use modular_nullspace, falling back to Bareiss if it gives up.
auto int_rank(const IntMatrix & m) -> std::size_t;

/// Primitive integer vectors spanning the rational nullspace, in the
/// canonical form described at IntNullspace. Dispatches like int_rank.
auto int_kernel_basis(const IntMatrix & m) -> std::vector<IntVector>;
auto int_nullspace(const IntMatrix & m) -> IntNullspace;

/// Fraction-free (Bareiss) forward elimination with exact integers.
auto bareiss_rank(const IntMatrix & m) -> std::size_t;
/// Fraction-free Gauss-Jordan elimination with exact integers.
auto bareiss_nullspace(const IntMatrix & m) -> IntNullspace;

/// Certified multimodular nullspace. Reduces modulo word-size primes,
/// lifts the echelon form by Chinese remaindering and rational
/// reconstruction, and accepts only when every lifted vector satisfies
/// Mv = 0 exactly over the integers. Since rank mod p never exceeds the
/// rational rank, a verified set of (cols - rank mod p) vectors pins both the
/// rank and the nullspace. Returns nullopt if no certificate is found within
/// max_primes primes.
auto modular_nullspace(const IntMatrix & m, std::size_t max_primes = 64) -> std::optional<IntNullspace>;

inline constexpr std::size_t default_char_poly_cap = 512;

/// det(xI - M) by Faddeev-LeVerrier. Throws Errc::DimensionMismatch for
/// non-square input and Errc::SizeCapExceeded above the cap.
auto char_poly(const IntMatrix & m, std::size_t cap = default_char_poly_cap) -> IntPolynomial;

/// True iff divisor | dividend over the rationals. Throws Errc::ZeroDivisor.
auto poly_divides(const IntPolynomial & divisor, const IntPolynomial & dividend) -> bool;

}
