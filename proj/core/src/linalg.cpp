#include <effdom/error.hpp>
#include <effdom/linalg.hpp>

#include <gmpxx.h>

#include <algorithm>
#include <cstdint>
#include <string>
#include <utility>

namespace effdom {

using Code = Field::Code;

FieldMatrix::FieldMatrix(const Field & field, std::size_t rows, std::size_t cols) :
    _field(field),
    _rows(rows),
    _cols(cols),
    _entries(rows * cols, 0)
{
}

FieldMatrix::FieldMatrix(const Field & field, std::size_t rows, std::size_t cols, std::vector<Code> entries) :
    _field(field),
    _rows(rows),
    _cols(cols),
    _entries(std::move(entries))
{
    if (_entries.size() != rows * cols)
        throw Error(Errc::DimensionMismatch, "expected " + std::to_string(rows * cols) + " entries, got " + std::to_string(_entries.size()));
    for (auto e : _entries)
        if (e >= field.order())
            throw Error(Errc::ValueOutOfRange, "entry " + std::to_string(e) + " is not an element of GF(" + std::to_string(field.order()) + ")");
}

auto FieldMatrix::identity(const Field & field, std::size_t n) -> FieldMatrix
{
    FieldMatrix m(field, n, n);
    for (std::size_t i = 0; i < n; ++i)
        m(i, i) = 1;
    return m;
}

auto FieldMatrix::from_rows(const Field & field, std::size_t cols, std::span<const FieldVector> rows) -> FieldMatrix
{
    std::vector<Code> entries;
    entries.reserve(rows.size() * cols);
    for (const auto & row : rows) {
        if (row.size() != cols)
            throw Error(Errc::DimensionMismatch, "row length " + std::to_string(row.size()) + " differs from " + std::to_string(cols));
        entries.insert(entries.end(), row.begin(), row.end());
    }
    return FieldMatrix(field, rows.size(), cols, std::move(entries));
}

auto FieldMatrix::apply(std::span<const Code> v) const -> FieldVector
{
    if (v.size() != _cols)
        throw Error(Errc::DimensionMismatch, "vector length " + std::to_string(v.size()) + " but matrix has " + std::to_string(_cols) + " columns");
    FieldVector result(_rows, 0);
    for (std::size_t r = 0; r < _rows; ++r) {
        Code acc = 0;
        for (std::size_t c = 0; c < _cols; ++c)
            if (v[c] != 0 && (*this)(r, c) != 0)
                acc = _field.add(acc, _field.mul((*this)(r, c), v[c]));
        result[r] = acc;
    }
    return result;
}

auto FieldMatrix::multiply(const FieldMatrix & other) const -> FieldMatrix
{
    if (! (other._field == _field))
        throw Error(Errc::FieldMismatch, "matrices over different fields");
    if (other._rows != _cols)
        throw Error(Errc::DimensionMismatch, "inner dimensions differ");
    FieldMatrix result(_field, _rows, other._cols);
    for (std::size_t r = 0; r < _rows; ++r)
        for (std::size_t t = 0; t < _cols; ++t) {
            const Code a = (*this)(r, t);
            if (a == 0)
                continue;
            for (std::size_t c = 0; c < other._cols; ++c)
                result(r, c) = _field.add(result(r, c), _field.mul(a, other(t, c)));
        }
    return result;
}

auto rref(const FieldMatrix & input) -> RowEchelon
{
    FieldMatrix m = input;
    const Field & f = m.field();
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
        std::size_t sel = row;
        while (sel < m.rows() && m(sel, col) == 0)
            ++sel;
        if (sel == m.rows())
            continue;
        if (sel != row)
            for (std::size_t c = 0; c < m.cols(); ++c)
                std::swap(m(sel, c), m(row, c));

        const Code scale = f.inv(m(row, col));
        for (std::size_t c = col; c < m.cols(); ++c)
            m(row, c) = f.mul(m(row, c), scale);

        for (std::size_t r = 0; r < m.rows(); ++r) {
            if (r == row || m(r, col) == 0)
                continue;
            const Code factor = f.neg(m(r, col));
            for (std::size_t c = col; c < m.cols(); ++c)
                if (m(row, c) != 0)
                    m(r, c) = f.add(m(r, c), f.mul(factor, m(row, c)));
        }
        pivots.push_back(col);
        ++row;
    }
    return {std::move(m), std::move(pivots)};
}

auto rank(const FieldMatrix & m) -> std::size_t
{
    return rref(m).pivots.size();
}

auto kernel_basis(const FieldMatrix & m) -> std::vector<FieldVector>
{
    const auto [reduced, pivots] = rref(m);
    const Field & f = m.field();
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto p : pivots)
        is_pivot[p] = true;

    std::vector<FieldVector> basis;
    for (std::size_t free = 0; free < m.cols(); ++free) {
        if (is_pivot[free])
            continue;
        FieldVector v(m.cols(), 0);
        v[free] = 1;
        for (std::size_t i = 0; i < pivots.size(); ++i)
            v[pivots[i]] = f.neg(reduced(i, free));
        basis.push_back(std::move(v));
    }
    return basis;
}

auto solve_affine(const FieldMatrix & m, std::span<const Code> target) -> std::optional<FieldVector>
{
    if (target.size() != m.rows())
        throw Error(Errc::DimensionMismatch, "target length " + std::to_string(target.size()) + " but matrix has " + std::to_string(m.rows()) + " rows");
    const Field & f = m.field();
    FieldMatrix augmented(f, m.rows(), m.cols() + 1);
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c)
            augmented(r, c) = m(r, c);
        if (target[r] >= f.order())
            throw Error(Errc::ValueOutOfRange, "target entry is not a field element");
        augmented(r, m.cols()) = target[r];
    }
    const auto [reduced, pivots] = rref(augmented);
    if (! pivots.empty() && pivots.back() == m.cols())
        return std::nullopt;
    FieldVector x(m.cols(), 0);
    for (std::size_t i = 0; i < pivots.size(); ++i)
        x[pivots[i]] = reduced(i, m.cols());
    return x;
}

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols) :
    _rows(rows),
    _cols(cols),
    _entries(rows * cols)
{
}

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols, std::vector<mpz_class> entries) :
    _rows(rows),
    _cols(cols),
    _entries(std::move(entries))
{
    if (_entries.size() != rows * cols)
        throw Error(Errc::DimensionMismatch, "expected " + std::to_string(rows * cols) + " entries, got " + std::to_string(_entries.size()));
}

auto IntMatrix::identity(std::size_t n) -> IntMatrix
{
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        m(i, i) = 1;
    return m;
}

auto IntMatrix::apply(std::span<const mpz_class> v) const -> IntVector
{
    if (v.size() != _cols)
        throw Error(Errc::DimensionMismatch, "vector length " + std::to_string(v.size()) + " but matrix has " + std::to_string(_cols) + " columns");
    IntVector result(_rows);
    for (std::size_t r = 0; r < _rows; ++r)
        for (std::size_t c = 0; c < _cols; ++c)
            if (sgn((*this)(r, c)) != 0)
                result[r] += (*this)(r, c) * v[c];
    return result;
}

auto IntMatrix::multiply(const IntMatrix & other) const -> IntMatrix
{
    if (other._rows != _cols)
        throw Error(Errc::DimensionMismatch, "inner dimensions differ");
    IntMatrix result(_rows, other._cols);
    for (std::size_t r = 0; r < _rows; ++r)
        for (std::size_t t = 0; t < _cols; ++t) {
            const auto & a = (*this)(r, t);
            if (sgn(a) == 0)
                continue;
            for (std::size_t c = 0; c < other._cols; ++c)
                result(r, c) += a * other(t, c);
        }
    return result;
}

IntPolynomial::IntPolynomial(std::vector<mpz_class> coefficients) :
    _coefficients(std::move(coefficients))
{
    while (! _coefficients.empty() && sgn(_coefficients.back()) == 0)
        _coefficients.pop_back();
}

auto IntPolynomial::linear(const mpz_class & root) -> IntPolynomial
{
    return IntPolynomial({-root, mpz_class{1}});
}

auto IntPolynomial::evaluate(const mpz_class & x) const -> mpz_class
{
    mpz_class acc = 0;
    for (auto it = _coefficients.rbegin(); it != _coefficients.rend(); ++it)
        acc = acc * x + *it;
    return acc;
}

auto IntPolynomial::to_string() const -> std::string
{
    if (_coefficients.empty())
        return "0";
    std::string out;
    for (auto i = _coefficients.size(); i-- > 0;) {
        const auto & c = _coefficients[i];
        if (sgn(c) == 0)
            continue;
        mpz_class mag = abs(c);
        if (out.empty())
            out += sgn(c) < 0 ? "-" : "";
        else
            out += sgn(c) < 0 ? " - " : " + ";
        if (mag != 1 || i == 0)
            out += mag.get_str();
        if (i >= 1)
            out += "x";
        if (i >= 2)
            out += "^" + std::to_string(i);
    }
    return out;
}

auto operator*(const IntPolynomial & a, const IntPolynomial & b) -> IntPolynomial
{
    if (a.is_zero() || b.is_zero())
        return {};
    std::vector<mpz_class> out(a._coefficients.size() + b._coefficients.size() - 1);
    for (std::size_t i = 0; i < a._coefficients.size(); ++i)
        for (std::size_t j = 0; j < b._coefficients.size(); ++j)
            out[i + j] += a._coefficients[i] * b._coefficients[j];
    return IntPolynomial(std::move(out));
}

namespace {
    auto make_primitive(IntVector & v) -> void
    {
        mpz_class g = 0;
        for (const auto & x : v)
            mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
        if (sgn(g) == 0)
            return;
        auto first = std::find_if(v.begin(), v.end(), [](const mpz_class & x) { return sgn(x) != 0; });
        if (sgn(*first) < 0)
            g = -g;
        for (auto & x : v)
            mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
    }

    auto swap_rows(IntMatrix & m, std::size_t a, std::size_t b) -> void
    {
        for (std::size_t c = 0; c < m.cols(); ++c)
            std::swap(m(a, c), m(b, c));
    }
}

auto bareiss_rank(const IntMatrix & input) -> std::size_t
{
    IntMatrix m = input;
    mpz_class prev = 1, t;
    std::size_t row = 0;
    for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
        std::size_t sel = row;
        while (sel < m.rows() && sgn(m(sel, col)) == 0)
            ++sel;
        if (sel == m.rows())
            continue;
        if (sel != row)
            swap_rows(m, sel, row);
        const mpz_class pivot = m(row, col);
        for (std::size_t r = row + 1; r < m.rows(); ++r) {
            const mpz_class factor = m(r, col);
            for (std::size_t c = col + 1; c < m.cols(); ++c) {
                // m(r,c) = (pivot * m(r,c) - factor * m(row,c)) / prev
                mpz_mul(t.get_mpz_t(), pivot.get_mpz_t(), m(r, c).get_mpz_t());
                if (sgn(factor) != 0)
                    mpz_submul(t.get_mpz_t(), factor.get_mpz_t(), m(row, c).get_mpz_t());
                mpz_divexact(m(r, c).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            m(r, col) = 0;
        }
        prev = pivot;
        ++row;
    }
    return row;
}

auto bareiss_nullspace(const IntMatrix & input) -> IntNullspace
{
    // Fraction-free Gauss-Jordan: on exit every pivot entry equals the last
    // pivot d and the matrix is d times the rational reduced row-echelon form.
    IntMatrix m = input;
    std::vector<std::size_t> pivots;
    mpz_class prev = 1, t;
    std::size_t row = 0;
    for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
        std::size_t sel = row;
        while (sel < m.rows() && sgn(m(sel, col)) == 0)
            ++sel;
        if (sel == m.rows())
            continue;
        if (sel != row)
            swap_rows(m, sel, row);
        const mpz_class pivot = m(row, col);
        for (std::size_t r = 0; r < m.rows(); ++r) {
            if (r == row)
                continue;
            const mpz_class factor = m(r, col);
            if (sgn(factor) == 0 && prev == pivot)
                continue;
            for (std::size_t c = 0; c < m.cols(); ++c) {
                if (c == col)
                    continue;
                mpz_mul(t.get_mpz_t(), pivot.get_mpz_t(), m(r, c).get_mpz_t());
                if (sgn(factor) != 0)
                    mpz_submul(t.get_mpz_t(), factor.get_mpz_t(), m(row, c).get_mpz_t());
                mpz_divexact(m(r, c).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            m(r, col) = 0;
        }
        prev = pivot;
        pivots.push_back(col);
        ++row;
    }

    IntNullspace result{pivots.size(), pivots, {}};
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto p : pivots)
        is_pivot[p] = true;
    for (std::size_t free = 0; free < m.cols(); ++free) {
        if (is_pivot[free])
            continue;
        IntVector v(m.cols());
        v[free] = prev;
        for (std::size_t i = 0; i < pivots.size(); ++i)
            v[pivots[i]] = -m(i, free);
        make_primitive(v);
        result.basis.push_back(std::move(v));
    }
    return result;
}

namespace {
    struct ModularEchelon
    {
        std::uint64_t p;
        std::vector<std::size_t> pivots;
        std::vector<std::uint64_t> reduced; // first pivots.size() rows, row-major
    };

    auto pow_mod(std::uint64_t base, std::uint64_t e, std::uint64_t p) -> std::uint64_t
    {
        std::uint64_t result = 1;
        base %= p;
        while (e > 0) {
            if (e & 1)
                result = result * base % p;
            base = base * base % p;
            e >>= 1;
        }
        return result;
    }

    auto modular_rref(const IntMatrix & input, std::uint64_t p) -> ModularEchelon
    {
        const std::size_t rows = input.rows(), cols = input.cols();
        std::vector<std::uint64_t> m(rows * cols);
        for (std::size_t i = 0; i < rows * cols; ++i)
            m[i] = mpz_fdiv_ui(input.entries()[i].get_mpz_t(), p);

        std::vector<std::size_t> pivots;
        std::size_t row = 0;
        for (std::size_t col = 0; col < cols && row < rows; ++col) {
            std::size_t sel = row;
            while (sel < rows && m[sel * cols + col] == 0)
                ++sel;
            if (sel == rows)
                continue;
            if (sel != row)
                std::swap_ranges(m.begin() + static_cast<long>(sel * cols), m.begin() + static_cast<long>((sel + 1) * cols),
                    m.begin() + static_cast<long>(row * cols));
            auto * pivot_row = &m[row * cols];
            const std::uint64_t scale = pow_mod(pivot_row[col], p - 2, p);
            for (std::size_t c = col; c < cols; ++c)
                pivot_row[c] = pivot_row[c] * scale % p;
            for (std::size_t r = 0; r < rows; ++r) {
                auto * target = &m[r * cols];
                if (r == row || target[col] == 0)
                    continue;
                const std::uint64_t factor = p - target[col];
                for (std::size_t c = col; c < cols; ++c)
                    if (pivot_row[c] != 0)
                        target[c] = (target[c] + factor * pivot_row[c]) % p;
            }
            pivots.push_back(col);
            ++row;
        }
        m.resize(row * cols);
        return {p, std::move(pivots), std::move(m)};
    }

    // a/b with a = b*u (mod n), |a|, b <= floor(sqrt(n/2)), gcd(a, b) = 1
    auto rational_reconstruct(const mpz_class & u, const mpz_class & n, const mpz_class & bound, mpz_class & num, mpz_class & den) -> bool
    {
        mpz_class r0 = n, r1 = u, t0 = 0, t1 = 1, q, tmp;
        while (r1 > bound) {
            mpz_fdiv_q(q.get_mpz_t(), r0.get_mpz_t(), r1.get_mpz_t());
            tmp = r0 - q * r1;
            r0 = r1;
            r1 = tmp;
            tmp = t0 - q * t1;
            t0 = t1;
            t1 = tmp;
        }
        if (sgn(t1) == 0 || abs(t1) > bound)
            return false;
        if (sgn(t1) < 0) {
            t1 = -t1;
            r1 = -r1;
        }
        mpz_class g;
        mpz_gcd(g.get_mpz_t(), r1.get_mpz_t(), t1.get_mpz_t());
        if (g != 1)
            return false;
        num = r1;
        den = t1;
        return true;
    }
}

auto modular_nullspace(const IntMatrix & m, std::size_t max_primes) -> std::optional<IntNullspace>
{
    const std::size_t cols = m.cols();

    std::vector<std::vector<std::size_t>> support(m.rows());
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < cols; ++c)
            if (sgn(m(r, c)) != 0)
                support[r].push_back(c);

    std::vector<std::size_t> pivots, free_cols;
    std::vector<mpz_class> residues; // pivots.size() x free_cols.size(), CRT-combined
    mpz_class modulus = 0;

    std::uint64_t p = (std::uint64_t{1} << 31) - 1;
    for (std::size_t used = 0; used < max_primes; ++used, --p) {
        while (! is_prime(p))
            --p;
        auto echelon = modular_rref(m, p);

        if (sgn(modulus) == 0 || echelon.pivots.size() > pivots.size()) {
            pivots = echelon.pivots;
            free_cols.clear();
            std::vector<bool> is_pivot(cols, false);
            for (auto c : pivots)
                is_pivot[c] = true;
            for (std::size_t c = 0; c < cols; ++c)
                if (! is_pivot[c])
                    free_cols.push_back(c);
            residues.assign(pivots.size() * free_cols.size(), 0);
            for (std::size_t i = 0; i < pivots.size(); ++i)
                for (std::size_t k = 0; k < free_cols.size(); ++k)
                    residues[i * free_cols.size() + k] = static_cast<unsigned long>(echelon.reduced[i * cols + free_cols[k]]);
            modulus = static_cast<unsigned long>(p);
        }
        else if (echelon.pivots != pivots) {
            continue;
        }
        else {
            // x' = x + N * ((r - x) * N^-1 mod p)
            const std::uint64_t n_inv = pow_mod(mpz_fdiv_ui(modulus.get_mpz_t(), p), p - 2, p);
            for (std::size_t i = 0; i < pivots.size(); ++i)
                for (std::size_t k = 0; k < free_cols.size(); ++k) {
                    auto & x = residues[i * free_cols.size() + k];
                    const std::uint64_t r = echelon.reduced[i * cols + free_cols[k]];
                    const std::uint64_t xm = mpz_fdiv_ui(x.get_mpz_t(), p);
                    const std::uint64_t delta = (r + p - xm) % p * n_inv % p;
                    if (delta != 0)
                        mpz_addmul_ui(x.get_mpz_t(), modulus.get_mpz_t(), static_cast<unsigned long>(delta));
                }
            modulus *= static_cast<unsigned long>(p);
        }

        mpz_class bound = modulus / 2;
        mpz_sqrt(bound.get_mpz_t(), bound.get_mpz_t());

        IntNullspace result{pivots.size(), pivots, {}};
        bool certified = true;
        mpz_class num, den, lcm, t;
        std::vector<mpz_class> nums(pivots.size()), dens(pivots.size());
        for (std::size_t k = 0; k < free_cols.size() && certified; ++k) {
            lcm = 1;
            for (std::size_t i = 0; i < pivots.size() && certified; ++i) {
                const auto & x = residues[i * free_cols.size() + k];
                if (sgn(x) == 0) {
                    nums[i] = 0;
                    dens[i] = 1;
                    continue;
                }
                certified = rational_reconstruct(x, modulus, bound, nums[i], dens[i]);
                if (certified)
                    mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), dens[i].get_mpz_t());
            }
            if (! certified)
                break;

            // v = lcm * (e_f - sum_i R[i][f] e_{pivot i})
            IntVector v(cols);
            v[free_cols[k]] = lcm;
            for (std::size_t i = 0; i < pivots.size(); ++i)
                if (sgn(nums[i]) != 0) {
                    mpz_divexact(t.get_mpz_t(), lcm.get_mpz_t(), dens[i].get_mpz_t());
                    v[pivots[i]] = -nums[i] * t;
                }
            make_primitive(v);

            for (std::size_t r = 0; r < m.rows() && certified; ++r) {
                t = 0;
                for (auto c : support[r])
                    if (sgn(v[c]) != 0)
                        mpz_addmul(t.get_mpz_t(), m(r, c).get_mpz_t(), v[c].get_mpz_t());
                certified = sgn(t) == 0;
            }
            result.basis.push_back(std::move(v));
        }
        if (certified)
            return result;
    }
    return std::nullopt;
}

namespace {
    auto use_bareiss(const IntMatrix & m) -> bool
    {
        return m.rows() <= bareiss_dimension_limit && m.cols() <= bareiss_dimension_limit;
    }
}

auto int_nullspace(const IntMatrix & m) -> IntNullspace
{
    if (! use_bareiss(m))
        if (auto result = modular_nullspace(m))
            return std::move(*result);
    return bareiss_nullspace(m);
}

auto int_rank(const IntMatrix & m) -> std::size_t
{
    if (! use_bareiss(m))
        if (auto result = modular_nullspace(m))
            return result->rank;
    return bareiss_rank(m);
}

auto int_kernel_basis(const IntMatrix & m) -> std::vector<IntVector>
{
    return int_nullspace(m).basis;
}

auto char_poly(const IntMatrix & a, std::size_t cap) -> IntPolynomial
{
    if (a.rows() != a.cols())
        throw Error(Errc::DimensionMismatch, "characteristic polynomial of a non-square matrix");
    const std::size_t n = a.rows();
    if (n > cap)
        throw Error(Errc::SizeCapExceeded, "matrix order " + std::to_string(n) + " exceeds the characteristic polynomial cap " + std::to_string(cap));

    // nonzero pattern of a, row by row
    std::vector<std::vector<std::size_t>> support(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (sgn(a(i, j)) != 0)
                support[i].push_back(j);

    // Faddeev-LeVerrier: M_k = A M_{k-1} + c_{n-k+1} I, c_{n-k} = -tr(A M_k) / k
    std::vector<mpz_class> c(n + 1);
    c[n] = 1;
    IntMatrix m(n, n), am(n, n);
    for (std::size_t k = 1; k <= n; ++k) {
        // am = A * m  (m = M_{k-1}); then M_k = am + c_{n-k+1} I
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                mpz_class acc = 0;
                for (auto t : support[i])
                    mpz_addmul(acc.get_mpz_t(), a(i, t).get_mpz_t(), m(t, j).get_mpz_t());
                am(i, j) = std::move(acc);
            }
        for (std::size_t i = 0; i < n; ++i)
            am(i, i) += c[n - k + 1];
        std::swap(m, am);

        mpz_class trace = 0;
        for (std::size_t i = 0; i < n; ++i)
            for (auto t : support[i])
                mpz_addmul(trace.get_mpz_t(), a(i, t).get_mpz_t(), m(t, i).get_mpz_t());
        mpz_class kk = static_cast<unsigned long>(k);
        mpz_divexact(c[n - k].get_mpz_t(), trace.get_mpz_t(), kk.get_mpz_t());
        c[n - k] = -c[n - k];
    }
    return IntPolynomial(std::move(c));
}

auto poly_divides(const IntPolynomial & divisor, const IntPolynomial & dividend) -> bool
{
    if (divisor.is_zero())
        throw Error(Errc::ZeroDivisor, "division by the zero polynomial");
    if (dividend.is_zero())
        return true;
    const auto dd = static_cast<std::size_t>(divisor.degree());
    std::vector<mpq_class> rem(dividend.coefficients().begin(), dividend.coefficients().end());
    const mpq_class lead = divisor.coefficients()[dd];
    for (auto deg = rem.size(); deg-- > dd;) {
        if (sgn(rem[deg]) == 0)
            continue;
        const mpq_class q = rem[deg] / lead;
        for (std::size_t t = 0; t <= dd; ++t)
            rem[deg - dd + t] -= q * divisor.coefficients()[t];
    }
    return std::all_of(rem.begin(), rem.begin() + static_cast<long>(std::min(dd, rem.size())),
        [](const mpq_class & x) { return sgn(x) == 0; });
}

}
