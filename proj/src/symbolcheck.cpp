#include "symcoh/symbolcheck.hpp"

#include "symcoh/errors.hpp"
#include "symcoh/symplectic.hpp"

#include <random>

namespace symcoh {

namespace {

Vector blade_coordinates(const Form& f, const std::vector<Blade>& blades)
{
    Vector v(blades.size(), Rational(0));
    for (std::size_t i = 0; i < blades.size(); ++i) v[i] = f.coefficient(blades[i]);
    return v;
}

// 1 / (n - k): the inverse of H on degree-k forms.
Rational inverse_h(int n, int k) { return Rational(1, n - k); }

std::string describe(const char* op, int from, int to)
{
    return std::string(op) + " P" + std::to_string(from) + "->P" + std::to_string(to);
}

Form apply_symbol(int n, const Form& xi, int from, int to, const Form& mu);

} // namespace

Form symbol_del_plus(int n, const Form& xi, const Form& mu)
{
    SymplecticStructure s(standard_omega(n));
    Form x = wedge(xi, mu);
    Form lam = s.Lambda(x);
    if (lam.is_zero()) return x;
    return x - s.L(lam) * inverse_h(n, *lam.degree());
}

Form symbol_del_minus(int n, const Form& xi, const Form& mu)
{
    SymplecticStructure s(standard_omega(n));
    Form lam = s.Lambda(wedge(xi, mu));
    if (lam.is_zero()) return lam;
    return lam * inverse_h(n, *lam.degree());
}

Form symbol_del_plus_del_minus(int n, const Form& xi, const Form& mu)
{
    SymplecticStructure s(standard_omega(n));
    Form out = wedge(xi, s.Lambda(wedge(xi, mu)));
    if (out.is_zero()) return out;
    return out * Rational(1, n - *out.degree() + 1);
}

namespace {

Form apply_symbol(int n, const Form& xi, int from, int to, const Form& mu)
{
    if (to > from) return symbol_del_plus(n, xi, mu);
    if (to == from) return symbol_del_plus_del_minus(n, xi, mu);
    return symbol_del_minus(n, xi, mu);
}

} // namespace

SymbolComplex build_symbols(int n, const Form& xi)
{
    if (n < 1) throw InputError("symbol complex needs n >= 1");
    if (xi.dim() != 2 * n) throw InputError("covector dimension does not match 2n");
    if (xi.is_zero()) throw InputError("symbol complex needs a nonzero covector");
    if (!xi.is_homogeneous_of(1)) throw InputError("covector must be a 1-form");

    SymplecticStructure s(standard_omega(n));
    SymbolComplex c;
    c.n = n;
    c.xi = xi;

    std::vector<SymbolSpace> primitive;
    for (int k = 0; k <= n; ++k) {
        SymbolSpace sp{k, s.primitive_basis(k), {}};
        auto blades = blades_of_degree(2 * n, k);
        sp.embedding = RationalMatrix(blades.size(), sp.basis.size());
        for (std::size_t j = 0; j < sp.basis.size(); ++j) sp.embedding.set_column(j, blade_coordinates(sp.basis[j], blades));
        primitive.push_back(std::move(sp));
    }
    for (int k = 0; k <= n; ++k) c.spaces.push_back(primitive[static_cast<std::size_t>(k)]);
    for (int k = n; k >= 0; --k) c.spaces.push_back(primitive[static_cast<std::size_t>(k)]);

    for (std::size_t i = 0; i + 1 < c.spaces.size(); ++i) {
        const SymbolSpace& from = c.spaces[i];
        const SymbolSpace& to = c.spaces[i + 1];
        auto target = blades_of_degree(2 * n, to.degree);
        RationalMatrix m(target.size(), from.basis.size());
        for (std::size_t j = 0; j < from.basis.size(); ++j)
            m.set_column(j, blade_coordinates(apply_symbol(n, xi, from.degree, to.degree, from.basis[j]), target));
        const char* name = to.degree > from.degree ? "del+" : to.degree == from.degree ? "del+del-" : "del-";
        c.maps.push_back(std::move(m));
        c.map_names.push_back(describe(name, from.degree, to.degree));
    }
    return c;
}

CheckReport check_exactness(const SymbolComplex& c)
{
    CheckReport report;
    report.suite = "symbol";
    const std::string tag = "n=" + std::to_string(c.n) + " xi=" + format_form(c.xi) + " ";

    for (std::size_t i = 0; i < c.spaces.size(); ++i) {
        const SymbolSpace& sp = c.spaces[i];
        std::size_t ambient = sp.embedding.rows();

        std::vector<Vector> kernel_vectors;
        if (i < c.maps.size()) {
            Subspace k = kernel(c.maps[i]);
            for (std::size_t r = 0; r < k.dim(); ++r) kernel_vectors.push_back(sp.embedding.apply(k.basis_vector(r)));
        } else {
            for (std::size_t j = 0; j < sp.embedding.cols(); ++j) kernel_vectors.push_back(sp.embedding.column(j));
        }
        Subspace kernel_here = Subspace::span(ambient, kernel_vectors);
        Subspace image_here = i == 0 ? Subspace(ambient) : image(c.maps[i - 1]);

        bool ok = kernel_here == image_here;
        std::string detail;
        if (!ok)
            detail = "dim ker " + std::to_string(kernel_here.dim()) + " vs dim im " + std::to_string(image_here.dim());
        report.add(tag + "exact at position " + std::to_string(i) + " (P" + std::to_string(sp.degree) + ")", ok,
                   detail);
    }

    for (std::size_t i = 0; i + 1 < c.maps.size(); ++i) {
        const SymbolSpace& mid = c.spaces[i + 1];
        const SymbolSpace& last = c.spaces[i + 2];
        auto target = blades_of_degree(2 * c.n, mid.degree);
        bool ok = true;
        std::string detail;
        for (std::size_t j = 0; j < c.maps[i].cols() && ok; ++j) {
            Form image(2 * c.n);
            for (std::size_t r = 0; r < target.size(); ++r) image.add_term(target[r], c.maps[i](r, j));
            Form next = apply_symbol(c.n, c.xi, mid.degree, last.degree, image);
            if (!next.is_zero()) {
                ok = false;
                detail = format_form(c.spaces[i].basis[j]) + " maps to " + format_form(next);
            }
        }
        report.add(tag + "zero composition " + c.map_names[i] + " then " + c.map_names[i + 1], ok, detail);
    }

    long euler = 0;
    for (std::size_t i = 0; i < c.spaces.size(); ++i)
        euler += (i % 2 == 0 ? 1 : -1) * static_cast<long>(c.spaces[i].basis.size());
    report.add(tag + "euler characteristic", euler == 0, "got " + std::to_string(euler));
    return report;
}

std::vector<Form> sample_covectors(int n, std::size_t count, std::uint32_t seed)
{
    std::mt19937 gen(seed);
    std::vector<Form> out;
    while (out.size() < count) {
        Form xi(2 * n);
        for (int i = 1; i <= 2 * n; ++i) {
            int c = static_cast<int>(gen() % 7) - 3;
            xi.add_term(Blade::generator(i), Rational(c));
        }
        if (!xi.is_zero()) out.push_back(std::move(xi));
    }
    return out;
}

CheckReport run_symbol_suite(int max_n, std::size_t samples, std::uint32_t seed)
{
    CheckReport report;
    report.suite = "symbol";
    for (int n = 1; n <= max_n; ++n) {
        std::vector<Form> xis{Form::generator(2 * n, 1)};
        for (Form& xi : sample_covectors(n, samples, seed + static_cast<std::uint32_t>(n))) xis.push_back(std::move(xi));
        for (const Form& xi : xis) report.merge(check_exactness(build_symbols(n, xi)));
    }
    return report;
}

} // namespace symcoh
