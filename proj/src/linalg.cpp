#include "symcoh/linalg.hpp"

#include <stdexcept>
#include <utility>

namespace symcoh {

GaussianMatrix to_gaussian(const RationalMatrix& m)
{
    GaussianMatrix out(m.rows(), m.cols());
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c) out(r, c) = GaussianRational(m(r, c));
    return out;
}

bool is_zero_vector(const Vector& v)
{
    for (const Rational& x : v)
        if (!is_zero(x)) return false;
    return true;
}

Echelon reduced_row_echelon(const RationalMatrix& m)
{
    const std::size_t R = m.rows();
    const std::size_t C = m.cols();

    // Clear denominators row by row so the forward pass runs over Z.
    std::vector<std::vector<mpz_class>> a(R, std::vector<mpz_class>(C));
    for (std::size_t r = 0; r < R; ++r) {
        mpz_class common = 1;
        for (std::size_t c = 0; c < C; ++c) mpz_lcm(common.get_mpz_t(), common.get_mpz_t(), m(r, c).get_den_mpz_t());
        for (std::size_t c = 0; c < C; ++c) a[r][c] = m(r, c).get_num() * (common / m(r, c).get_den());
    }

    std::vector<std::size_t> pivots;
    mpz_class previous = 1;
    std::size_t pr = 0;
    for (std::size_t c = 0; c < C && pr < R; ++c) {
        std::size_t found = R;
        for (std::size_t i = pr; i < R; ++i)
            if (sgn(a[i][c]) != 0) {
                found = i;
                break;
            }
        if (found == R) continue;
        std::swap(a[found], a[pr]);
        const mpz_class& pivot = a[pr][c];
        for (std::size_t i = pr + 1; i < R; ++i) {
            for (std::size_t j = c + 1; j < C; ++j) {
                mpz_class t = pivot * a[i][j] - a[i][c] * a[pr][j];
                if (!mpz_divisible_p(t.get_mpz_t(), previous.get_mpz_t()))
                    throw ComplexError("Bareiss elimination lost exact divisibility");
                mpz_divexact(a[i][j].get_mpz_t(), t.get_mpz_t(), previous.get_mpz_t());
            }
            a[i][c] = 0;
        }
        previous = a[pr][c];
        pivots.push_back(c);
        ++pr;
    }

    Echelon out{RationalMatrix(pr, C), pivots};
    for (std::size_t r = 0; r < pr; ++r) {
        const Rational lead(a[r][pivots[r]]);
        for (std::size_t c = 0; c < C; ++c) out.rows(r, c) = Rational(a[r][c]) / lead;
    }
    for (std::size_t r = pr; r-- > 0;) {
        const std::size_t pc = pivots[r];
        for (std::size_t above = 0; above < r; ++above) {
            const Rational factor = out.rows(above, pc);
            if (is_zero(factor)) continue;
            for (std::size_t c = pc; c < C; ++c) out.rows(above, c) -= factor * out.rows(r, c);
        }
    }
    return out;
}

std::size_t rank(const RationalMatrix& m) { return reduced_row_echelon(m).pivots.size(); }

Rational determinant(const RationalMatrix& m)
{
    if (m.rows() != m.cols()) throw std::invalid_argument("determinant of non-square matrix");
    RationalMatrix a = m;
    const std::size_t n = a.rows();
    Rational det = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && is_zero(a(p, c))) ++p;
        if (p == n) return 0;
        if (p != c) {
            for (std::size_t j = 0; j < n; ++j) std::swap(a(p, j), a(c, j));
            det = -det;
        }
        det *= a(c, c);
        for (std::size_t i = c + 1; i < n; ++i) {
            if (is_zero(a(i, c))) continue;
            const Rational f = a(i, c) / a(c, c);
            for (std::size_t j = c; j < n; ++j) a(i, j) -= f * a(c, j);
        }
    }
    return det;
}

RationalMatrix inverse(const RationalMatrix& m)
{
    if (m.rows() != m.cols()) throw std::invalid_argument("inverse of non-square matrix");
    const std::size_t n = m.rows();
    RationalMatrix aug(n, 2 * n);
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) aug(r, c) = m(r, c);
        aug(r, n + r) = 1;
    }
    const Echelon e = reduced_row_echelon(aug);
    if (e.pivots.size() < n || e.pivots[n - 1] != n - 1) throw std::domain_error("matrix is singular");
    RationalMatrix out(n, n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) out(r, c) = e.rows(r, n + c);
    return out;
}

Subspace Subspace::full(std::size_t ambient)
{
    return row_space(RationalMatrix::identity(ambient));
}

Subspace Subspace::span(std::size_t ambient, const std::vector<Vector>& vectors)
{
    RationalMatrix m(vectors.size(), ambient);
    for (std::size_t r = 0; r < vectors.size(); ++r) {
        if (vectors[r].size() != ambient) throw std::invalid_argument("span: vector length mismatch");
        for (std::size_t c = 0; c < ambient; ++c) m(r, c) = vectors[r][c];
    }
    return row_space(m);
}

Subspace Subspace::row_space(const RationalMatrix& m)
{
    Echelon e = reduced_row_echelon(m);
    Subspace s(m.cols());
    s.basis_ = std::move(e.rows);
    s.pivots_ = std::move(e.pivots);
    return s;
}

std::vector<Vector> Subspace::basis_vectors() const
{
    std::vector<Vector> out;
    out.reserve(dim());
    for (std::size_t i = 0; i < dim(); ++i) out.push_back(basis_.row(i));
    return out;
}

Vector Subspace::reduce(Vector v) const
{
    if (v.size() != ambient_) throw std::invalid_argument("reduce: vector length mismatch");
    for (std::size_t i = 0; i < dim(); ++i) {
        const Rational f = v[pivots_[i]];
        if (is_zero(f)) continue;
        for (std::size_t c = pivots_[i]; c < ambient_; ++c) v[c] -= f * basis_(i, c);
    }
    return v;
}

bool Subspace::contains(const Vector& v) const { return is_zero_vector(reduce(v)); }

bool Subspace::contains(const Subspace& other) const
{
    if (other.ambient_ != ambient_) throw std::invalid_argument("contains: ambient mismatch");
    for (std::size_t i = 0; i < other.dim(); ++i)
        if (!contains(other.basis_vector(i))) return false;
    return true;
}

Subspace kernel(const RationalMatrix& m)
{
    const Echelon e = reduced_row_echelon(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (std::size_t p : e.pivots) is_pivot[p] = true;
    std::vector<Vector> vectors;
    for (std::size_t f = 0; f < m.cols(); ++f) {
        if (is_pivot[f]) continue;
        Vector v(m.cols(), Rational(0));
        v[f] = 1;
        for (std::size_t i = 0; i < e.pivots.size(); ++i) v[e.pivots[i]] = -e.rows(i, f);
        vectors.push_back(std::move(v));
    }
    return Subspace::span(m.cols(), vectors);
}

Subspace image(const RationalMatrix& m) { return Subspace::row_space(m.transpose()); }

Subspace subspace_sum(const Subspace& a, const Subspace& b)
{
    if (a.ambient() != b.ambient()) throw InputError("subspace_sum: ambient mismatch");
    std::vector<Vector> vectors = a.basis_vectors();
    for (Vector& v : b.basis_vectors()) vectors.push_back(std::move(v));
    return Subspace::span(a.ambient(), vectors);
}

Subspace subspace_intersect(const Subspace& a, const Subspace& b)
{
    if (a.ambient() != b.ambient()) throw InputError("subspace_intersect: ambient mismatch");
    const std::size_t n = a.ambient();
    const std::size_t da = a.dim();
    // x.A = y.B  <=>  (x, y) in ker [A^T | -B^T]
    RationalMatrix stacked(n, da + b.dim());
    for (std::size_t c = 0; c < n; ++c) {
        for (std::size_t i = 0; i < da; ++i) stacked(c, i) = a.basis()(i, c);
        for (std::size_t j = 0; j < b.dim(); ++j) stacked(c, da + j) = -b.basis()(j, c);
    }
    const Subspace relations = kernel(stacked);
    std::vector<Vector> vectors;
    for (std::size_t r = 0; r < relations.dim(); ++r) {
        Vector v(n, Rational(0));
        for (std::size_t i = 0; i < da; ++i) {
            const Rational& x = relations.basis()(r, i);
            if (is_zero(x)) continue;
            for (std::size_t c = 0; c < n; ++c) v[c] += x * a.basis()(i, c);
        }
        vectors.push_back(std::move(v));
    }
    return Subspace::span(n, vectors);
}

Quotient quotient(const Subspace& cycles, const Subspace& boundaries)
{
    if (cycles.ambient() != boundaries.ambient()) throw InputError("quotient: ambient mismatch");
    if (!cycles.contains(boundaries))
        throw ComplexError("quotient: denominator is not contained in numerator");
    Quotient out;
    std::vector<Vector> spanning = boundaries.basis_vectors();
    Subspace current = boundaries;
    for (std::size_t i = 0; i < cycles.dim(); ++i) {
        Vector z = cycles.basis_vector(i);
        if (current.contains(z)) continue;
        out.representatives.push_back(z);
        spanning.push_back(std::move(z));
        current = Subspace::span(cycles.ambient(), spanning);
    }
    out.dimension = out.representatives.size();
    if (out.dimension != cycles.dim() - boundaries.dim()) throw ComplexError("quotient: dimension bookkeeping failed");
    return out;
}

} // namespace symcoh
