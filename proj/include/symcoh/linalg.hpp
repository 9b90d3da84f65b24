#pragma once

#include "symcoh/errors.hpp"
#include "symcoh/scalar.hpp"

#include <cstddef>
#include <vector>

namespace symcoh {

// Dense row-major matrix over an exact field.
template <class S>
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, S(0)) {}

    static Matrix identity(std::size_t n)
    {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = S(1);
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    S& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const S& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    std::vector<S> row(std::size_t r) const
    {
        return std::vector<S>(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                              data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
    }

    std::vector<S> column(std::size_t c) const
    {
        std::vector<S> out;
        out.reserve(rows_);
        for (std::size_t r = 0; r < rows_; ++r) out.push_back((*this)(r, c));
        return out;
    }

    void set_column(std::size_t c, const std::vector<S>& v)
    {
        for (std::size_t r = 0; r < rows_; ++r) (*this)(r, c) = v[r];
    }

    bool is_zero() const
    {
        for (const S& x : data_)
            if (!symcoh::is_zero(x)) return false;
        return true;
    }

    Matrix transpose() const
    {
        Matrix t(cols_, rows_);
        for (std::size_t r = 0; r < rows_; ++r)
            for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
        return t;
    }

    Matrix& operator+=(const Matrix& o)
    {
        check_shape(o);
        for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
        return *this;
    }

    Matrix& operator-=(const Matrix& o)
    {
        check_shape(o);
        for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
        return *this;
    }

    Matrix& operator*=(const S& s)
    {
        for (S& x : data_) x *= s;
        return *this;
    }

    friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
    friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
    friend Matrix operator*(Matrix a, const S& s) { return a *= s; }
    friend Matrix operator*(const S& s, Matrix a) { return a *= s; }

    friend Matrix operator*(const Matrix& a, const Matrix& b)
    {
        if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product shape mismatch");
        Matrix out(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const S& aik = a(i, k);
                if (symcoh::is_zero(aik)) continue;
                for (std::size_t j = 0; j < b.cols_; ++j) {
                    if (symcoh::is_zero(b(k, j))) continue;
                    out(i, j) += aik * b(k, j);
                }
            }
        return out;
    }

    std::vector<S> apply(const std::vector<S>& v) const
    {
        if (v.size() != cols_) throw std::invalid_argument("matrix-vector shape mismatch");
        std::vector<S> out(rows_, S(0));
        for (std::size_t r = 0; r < rows_; ++r)
            for (std::size_t c = 0; c < cols_; ++c)
                if (!symcoh::is_zero(v[c])) out[r] += (*this)(r, c) * v[c];
        return out;
    }

    friend bool operator==(const Matrix& a, const Matrix& b)
    {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

private:
    void check_shape(const Matrix& o) const
    {
        if (o.rows_ != rows_ || o.cols_ != cols_) throw std::invalid_argument("matrix shape mismatch");
    }

    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<S> data_;
};

using RationalMatrix = Matrix<Rational>;
using GaussianMatrix = Matrix<GaussianRational>;
using Vector = std::vector<Rational>;

GaussianMatrix to_gaussian(const RationalMatrix& m);

// Reduced row echelon form computed by fraction-free (Bareiss) forward
// elimination followed by exact back substitution. Pivots are chosen leftmost
// column first, then first row; zero rows are dropped.
struct Echelon {
    RationalMatrix rows;           // rank x cols, RREF
    std::vector<std::size_t> pivots;
};

Echelon reduced_row_echelon(const RationalMatrix& m);
std::size_t rank(const RationalMatrix& m);
Rational determinant(const RationalMatrix& m);
// Throws std::domain_error if singular.
RationalMatrix inverse(const RationalMatrix& m);

// A linear subspace of Q^ambient, stored by its unique RREF basis.
class Subspace {
public:
    Subspace() = default;
    explicit Subspace(std::size_t ambient) : ambient_(ambient), basis_(0, ambient) {}

    static Subspace full(std::size_t ambient);
    static Subspace span(std::size_t ambient, const std::vector<Vector>& vectors);
    static Subspace row_space(const RationalMatrix& m);

    std::size_t ambient() const { return ambient_; }
    std::size_t dim() const { return basis_.rows(); }
    const RationalMatrix& basis() const { return basis_; }
    Vector basis_vector(std::size_t i) const { return basis_.row(i); }
    std::vector<Vector> basis_vectors() const;
    const std::vector<std::size_t>& pivots() const { return pivots_; }

    // v reduced against the basis; zero iff v lies in the subspace.
    Vector reduce(Vector v) const;
    bool contains(const Vector& v) const;
    bool contains(const Subspace& other) const;

    friend bool operator==(const Subspace& a, const Subspace& b)
    {
        return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
    }

private:
    std::size_t ambient_ = 0;
    RationalMatrix basis_;
    std::vector<std::size_t> pivots_;
};

Subspace kernel(const RationalMatrix& m);
Subspace image(const RationalMatrix& m);
Subspace subspace_sum(const Subspace& a, const Subspace& b);
Subspace subspace_intersect(const Subspace& a, const Subspace& b);

struct Quotient {
    std::size_t dimension = 0;
    // Vectors of Z completing the basis of Bd, taken in Z's echelon order.
    std::vector<Vector> representatives;
};

// Z / Bd; throws ComplexError unless Bd is contained in Z.
Quotient quotient(const Subspace& cycles, const Subspace& boundaries);

bool is_zero_vector(const Vector& v);

} // namespace symcoh
