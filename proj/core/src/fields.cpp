#include <effdom/error.hpp>
#include <effdom/fields.hpp>

#include <algorithm>
#include <string>
#include <utility>

namespace effdom {

namespace {

    using Code = Field::Code;

    struct BuiltinModulus
    {
        unsigned p, b;
        std::array<Code, Field::max_degree + 1> coefficients;
    };

    // Conway polynomials, constant term first.
    constexpr std::array builtin_moduli{
        BuiltinModulus{2, 2, {1, 1, 1}},
        BuiltinModulus{2, 3, {1, 1, 0, 1}},
        BuiltinModulus{3, 2, {2, 2, 1}},
        BuiltinModulus{2, 4, {1, 1, 0, 0, 1}},
        BuiltinModulus{5, 2, {2, 4, 1}},
        BuiltinModulus{3, 3, {1, 2, 0, 1}},
        BuiltinModulus{2, 5, {1, 0, 1, 0, 0, 1}},
    };

    // Remainder of a modulo monic b over GF(p); both constant-first.
    auto poly_mod(std::vector<Code> a, std::span<const Code> b, unsigned p) -> std::vector<Code>
    {
        const auto db = b.size() - 1;
        for (auto deg = a.size(); deg-- > db;) {
            const Code c = a[deg];
            if (c == 0)
                continue;
            for (std::size_t t = 0; t <= db; ++t)
                a[deg - db + t] = static_cast<Code>((a[deg - db + t] + (p - c) * std::uint64_t{b[t]}) % p);
        }
        a.resize(std::min(a.size(), db));
        return a;
    }
}

auto is_prime(std::uint64_t n) -> bool
{
    if (n < 2)
        return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0)
            return false;
    return true;
}

auto is_irreducible(std::span<const Code> monic, unsigned p) -> bool
{
    if (monic.size() < 2 || monic.back() != 1)
        return false;
    const auto deg = monic.size() - 1;
    std::vector<Code> a(monic.begin(), monic.end());
    for (std::size_t t = 1; t <= deg / 2; ++t) {
        // every monic polynomial of degree t, lower coefficients enumerated as a base-p counter
        std::vector<Code> factor(t + 1, 0);
        factor[t] = 1;
        while (true) {
            auto rem = poly_mod(a, factor, p);
            if (std::all_of(rem.begin(), rem.end(), [](Code c) { return c == 0; }))
                return false;
            std::size_t i = 0;
            while (i < t && ++factor[i] == p)
                factor[i++] = 0;
            if (i == t)
                break;
        }
    }
    return true;
}

Field::Field(unsigned p, unsigned b) :
    _p(p),
    _b(b),
    _q(0)
{
    if (! is_prime(p))
        throw Error(Errc::NonPrimeP, std::to_string(p) + " is not prime");
    if (b == 0)
        throw Error(Errc::BadParameter, "extension degree must be at least 1");

    std::uint64_t q = 1;
    for (unsigned i = 0; i < b; ++i) {
        q *= p;
        if (q > max_order)
            throw Error(Errc::FieldTooLarge, "field order exceeds 2^16");
    }
    _q = static_cast<Code>(q);

    if (b > 1) {
        auto it = std::find_if(builtin_moduli.begin(), builtin_moduli.end(),
            [&](const BuiltinModulus & m) { return m.p == p && m.b == b; });
        if (it == builtin_moduli.end())
            throw Error(Errc::UnsupportedExtension, "no built-in modulus for GF(" + std::to_string(q) + ")");
        _modulus = it->coefficients;
        if (! is_irreducible(modulus(), p))
            throw Error(Errc::Internal, "built-in modulus for GF(" + std::to_string(q) + ") is reducible");
    }
}

auto Field::modulus() const noexcept -> std::span<const Code>
{
    if (_b == 1)
        return {};
    return {_modulus.data(), _b + 1};
}

auto Field::add(Code x, Code y) const -> Code
{
    if (_b == 1)
        return (x + y) % _p;
    if (_p == 2)
        return x ^ y;
    Code result = 0, place = 1;
    for (unsigned i = 0; i < _b; ++i) {
        result += ((x % _p + y % _p) % _p) * place;
        x /= _p;
        y /= _p;
        place *= _p;
    }
    return result;
}

auto Field::neg(Code x) const -> Code
{
    if (_b == 1)
        return x == 0 ? 0 : _p - x;
    if (_p == 2)
        return x;
    Code result = 0, place = 1;
    for (unsigned i = 0; i < _b; ++i) {
        result += ((_p - x % _p) % _p) * place;
        x /= _p;
        place *= _p;
    }
    return result;
}

auto Field::sub(Code x, Code y) const -> Code
{
    return add(x, neg(y));
}

auto Field::mul(Code x, Code y) const -> Code
{
    if (_b == 1)
        return static_cast<Code>(std::uint64_t{x} * y % _p);

    std::array<Code, max_degree> xd{}, yd{};
    for (unsigned i = 0; i < _b; ++i) {
        xd[i] = x % _p;
        yd[i] = y % _p;
        x /= _p;
        y /= _p;
    }
    std::array<Code, 2 * max_degree> prod{};
    for (unsigned i = 0; i < _b; ++i) {
        if (xd[i] == 0)
            continue;
        for (unsigned j = 0; j < _b; ++j)
            prod[i + j] = (prod[i + j] + xd[i] * yd[j]) % _p;
    }
    for (unsigned deg = 2 * _b - 2; deg >= _b; --deg) {
        const Code c = prod[deg];
        if (c == 0)
            continue;
        for (unsigned t = 0; t <= _b; ++t)
            prod[deg - _b + t] = (prod[deg - _b + t] + (_p - c) * _modulus[t]) % _p;
    }
    Code result = 0;
    for (unsigned i = _b; i-- > 0;)
        result = result * _p + prod[i];
    return result;
}

auto Field::pow(Code x, std::uint64_t e) const -> Code
{
    Code result = 1, base = x;
    while (e > 0) {
        if (e & 1)
            result = mul(result, base);
        base = mul(base, base);
        e >>= 1;
    }
    return result;
}

auto Field::inv(Code x) const -> Code
{
    if (x == 0)
        throw Error(Errc::DivisionByZero, "inverse of zero");
    if (_b > 1)
        return pow(x, _q - 2);
    std::int64_t r0 = _p, r1 = x, t0 = 0, t1 = 1;
    while (r1 != 0) {
        const auto quotient = r0 / r1;
        r0 = std::exchange(r1, r0 - quotient * r1);
        t0 = std::exchange(t1, t0 - quotient * t1);
    }
    return static_cast<Code>((t0 % std::int64_t{_p} + _p) % _p);
}

auto Field::div(Code x, Code y) const -> Code
{
    return mul(x, inv(y));
}

auto Field::element(Code code) const -> FieldElement
{
    return FieldElement{*this, code};
}

auto Field::elements() const -> std::vector<FieldElement>
{
    std::vector<FieldElement> result;
    result.reserve(_q);
    for (Code c = 0; c < _q; ++c)
        result.emplace_back(*this, c);
    return result;
}

FieldElement::FieldElement(const Field & field, Field::Code code) :
    _field(field),
    _code(code)
{
    if (code >= field.order())
        throw Error(Errc::ValueOutOfRange, "code " + std::to_string(code) + " is not an element of GF(" + std::to_string(field.order()) + ")");
}

namespace {
    auto check_same(const FieldElement & x, const FieldElement & y) -> void
    {
        if (! (x.field() == y.field()))
            throw Error(Errc::FieldMismatch, "operands belong to GF(" + std::to_string(x.field().order()) + ") and GF(" + std::to_string(y.field().order()) + ")");
    }
}

auto FieldElement::inv() const -> FieldElement
{
    return {_field, _field.inv(_code)};
}

auto FieldElement::pow(std::uint64_t e) const -> FieldElement
{
    return {_field, _field.pow(_code, e)};
}

auto operator+(const FieldElement & x, const FieldElement & y) -> FieldElement
{
    check_same(x, y);
    return {x._field, x._field.add(x._code, y._code)};
}

auto operator-(const FieldElement & x, const FieldElement & y) -> FieldElement
{
    check_same(x, y);
    return {x._field, x._field.sub(x._code, y._code)};
}

auto operator*(const FieldElement & x, const FieldElement & y) -> FieldElement
{
    check_same(x, y);
    return {x._field, x._field.mul(x._code, y._code)};
}

auto operator/(const FieldElement & x, const FieldElement & y) -> FieldElement
{
    check_same(x, y);
    return {x._field, x._field.div(x._code, y._code)};
}

auto operator-(const FieldElement & x) -> FieldElement
{
    return {x._field, x._field.neg(x._code)};
}

}
