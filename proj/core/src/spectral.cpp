#include <effdom/error.hpp>
#include <effdom/spectral.hpp>

#include <algorithm>
#include <string>

namespace effdom {

auto minus_one_multiplicity(const Graph & g, std::size_t cap) -> MinusOneReport
{
    if (! g.regular_degree())
        throw Error(Errc::NotRegular, g.name() + " is not regular");
    if (g.order() > cap)
        throw Error(Errc::SizeCapExceeded, g.name() + " has " + std::to_string(g.order()) + " vertices, above the rank cap of " + std::to_string(cap));

    IntMatrix shifted = adjacency_matrix(g);
    for (std::size_t v = 0; v < g.order(); ++v)
        shifted(v, v) = 1;
    auto nullspace = int_nullspace(shifted);

    MinusOneReport report;
    report.multiplicity = g.order() - nullspace.rank;
    if (! nullspace.basis.empty())
        report.witness = std::move(nullspace.basis.front());
    return report;
}

auto function_from_eigenvector(const Graph & g, std::span<const mpz_class> x) -> DominatingFunction
{
    const auto r = g.regular_degree();
    if (! r)
        throw Error(Errc::NotRegular, g.name() + " is not regular");
    if (x.size() != g.order())
        throw Error(Errc::LengthMismatch, "vector has " + std::to_string(x.size()) + " entries for " + std::to_string(g.order()) + " vertices");
    if (std::all_of(x.begin(), x.end(), [](const mpz_class & e) { return sgn(e) == 0; }))
        throw Error(Errc::ZeroVector, "the zero vector is not an eigenvector");

    mpz_class sum;
    for (Vertex v = 0; v < g.order(); ++v) {
        sum = x[v];
        for (auto u : g.neighbors(v))
            sum += x[u];
        if (sgn(sum) != 0)
            throw Error(Errc::NotEigenvector, "(A + I)x is nonzero at vertex " + std::to_string(v));
    }

    const mpz_class shift = -*std::min_element(x.begin(), x.end());
    if (sgn(shift) <= 0)
        throw Error(Errc::NotEigenvector, "a (-1)-eigenvector of a regular graph has negative entries");

    DominatingFunction f;
    f.values.reserve(x.size());
    for (const auto & e : x) {
        const mpz_class value = e + shift;
        if (! value.fits_slong_p())
            throw Error(Errc::Overflow, "shifted eigenvector entry does not fit in 64 bits");
        f.values.push_back(value.get_si());
    }
    const mpz_class k = shift * static_cast<unsigned long>(*r + 1);
    if (! k.fits_slong_p())
        throw Error(Errc::Overflow, "k does not fit in 64 bits");
    f.j = *std::max_element(f.values.begin(), f.values.end());
    f.k = k.get_si();
    return f;
}

}
