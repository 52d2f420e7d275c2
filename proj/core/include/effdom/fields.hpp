#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <vector>

namespace effdom {

class FieldElement;

/// The finite field GF(p^b) with elements encoded as integers in [0, q).
///
/// For b = 1 the code of an element is its residue. For b > 1 the code packs
/// the coefficients of the polynomial representative as base-p digits, the
/// constant term being the least significant digit. Extension fields use a
/// fixed built-in modulus for q in {4, 8, 9, 16, 25, 27, 32}.
///
/// The code-level operations below do not range-check their operands; use
/// FieldElement for checked arithmetic.
class Field
{
public:
    using Code = std::uint32_t;

    static constexpr Code max_order = Code{1} << 16;
    static constexpr unsigned max_degree = 16;

    /// Throws Errc::NonPrimeP, Errc::UnsupportedExtension or Errc::FieldTooLarge.
    explicit Field(unsigned p, unsigned b = 1);

    auto characteristic() const noexcept -> unsigned { return _p; }
    auto degree() const noexcept -> unsigned { return _b; }
    auto order() const noexcept -> Code { return _q; }

    /// Monic modulus coefficients, constant term first (b + 1 entries); empty for prime fields.
    auto modulus() const noexcept -> std::span<const Code>;

    auto add(Code x, Code y) const -> Code;
    auto sub(Code x, Code y) const -> Code;
    auto neg(Code x) const -> Code;
    auto mul(Code x, Code y) const -> Code;
    /// Throws Errc::DivisionByZero for x = 0.
    auto inv(Code x) const -> Code;
    auto div(Code x, Code y) const -> Code;
    auto pow(Code x, std::uint64_t e) const -> Code;

    auto element(Code code) const -> FieldElement;
    /// All q elements in increasing code order.
    auto elements() const -> std::vector<FieldElement>;

    friend auto operator==(const Field & a, const Field & b) noexcept -> bool
    {
        return a._p == b._p && a._b == b._b;
    }

private:
    unsigned _p;
    unsigned _b;
    Code _q;
    std::array<Code, max_degree + 1> _modulus{};
};

auto is_prime(std::uint64_t n) -> bool;

/// True iff the monic polynomial (coefficients constant-first) has no monic
/// factor of degree 1..deg/2 over GF(p).
auto is_irreducible(std::span<const Field::Code> monic, unsigned p) -> bool;

/// A field element carrying its field, with checked arithmetic.
/// Mixing elements of different fields throws Errc::FieldMismatch.
class FieldElement
{
public:
    FieldElement(const Field & field, Field::Code code);

    auto field() const noexcept -> const Field & { return _field; }
    auto code() const noexcept -> Field::Code { return _code; }

    auto inv() const -> FieldElement;
    auto pow(std::uint64_t e) const -> FieldElement;

    friend auto operator+(const FieldElement & x, const FieldElement & y) -> FieldElement;
    friend auto operator-(const FieldElement & x, const FieldElement & y) -> FieldElement;
    friend auto operator*(const FieldElement & x, const FieldElement & y) -> FieldElement;
    friend auto operator/(const FieldElement & x, const FieldElement & y) -> FieldElement;
    friend auto operator-(const FieldElement & x) -> FieldElement;

    friend auto operator==(const FieldElement & x, const FieldElement & y) noexcept -> bool
    {
        return x._field == y._field && x._code == y._code;
    }

private:
    Field _field;
    Field::Code _code;
};

}
