#pragma once

#include "orbilat/arith.hpp"
#include "orbilat/errors.hpp"
#include "orbilat/poly.hpp"

#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <span>
#include <string>
#include <vector>

namespace orbilat {

/// Dense row-major matrix over an exact ring (Int or Rational).
template <class T>
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, T(0)) {}
    Matrix(std::initializer_list<std::initializer_list<long>> rows)
    {
        rows_ = rows.size();
        cols_ = rows_ == 0 ? 0 : rows.begin()->size();
        data_.reserve(rows_ * cols_);
        for (const auto& r : rows) {
            require(r.size() == cols_, "Matrix: ragged initializer");
            for (const long v : r)
                data_.emplace_back(v);
        }
    }

    static Matrix identity(std::size_t n)
    {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i)
            m(i, i) = 1;
        return m;
    }

    static Matrix fromRows(const std::vector<std::vector<T>>& rows)
    {
        const std::size_t c = rows.empty() ? 0 : rows.front().size();
        Matrix m(rows.size(), c);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            require(rows[i].size() == c, "Matrix: ragged rows");
            for (std::size_t j = 0; j < c; ++j)
                m(i, j) = rows[i][j];
        }
        return m;
    }

    static Matrix fromColumns(const std::vector<std::vector<T>>& cols, std::size_t rowCount)
    {
        Matrix m(rowCount, cols.size());
        for (std::size_t j = 0; j < cols.size(); ++j) {
            require(cols[j].size() == rowCount, "Matrix: column of wrong length");
            for (std::size_t i = 0; i < rowCount; ++i)
                m(i, j) = cols[j][i];
        }
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool isSquare() const { return rows_ == cols_; }

    T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    std::vector<T> row(std::size_t i) const
    {
        return std::vector<T>(data_.begin() + static_cast<long>(i * cols_),
                              data_.begin() + static_cast<long>((i + 1) * cols_));
    }
    std::vector<T> column(std::size_t j) const
    {
        std::vector<T> c(rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            c[i] = (*this)(i, j);
        return c;
    }

    Matrix transpose() const
    {
        Matrix t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j)
                t(j, i) = (*this)(i, j);
        return t;
    }

    bool isSymmetric() const
    {
        if (!isSquare())
            return false;
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = i + 1; j < cols_; ++j)
                if ((*this)(i, j) != (*this)(j, i))
                    return false;
        return true;
    }

    bool isZero() const
    {
        for (const auto& v : data_)
            if (v != 0)
                return false;
        return true;
    }

    T trace() const
    {
        require(isSquare(), "trace of a non-square matrix");
        T t(0);
        for (std::size_t i = 0; i < rows_; ++i)
            t += (*this)(i, i);
        return t;
    }

    std::vector<T> apply(std::span<const T> v) const
    {
        require(v.size() == cols_, "Matrix::apply: dimension mismatch");
        std::vector<T> out(rows_, T(0));
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j)
                out[i] += (*this)(i, j) * v[j];
        return out;
    }

    friend Matrix operator*(const Matrix& a, const Matrix& b)
    {
        require(a.cols_ == b.rows_, "Matrix product: dimension mismatch");
        Matrix c(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const T& aik = a(i, k);
                if (aik == 0)
                    continue;
                for (std::size_t j = 0; j < b.cols_; ++j)
                    c(i, j) += aik * b(k, j);
            }
        return c;
    }
    friend Matrix operator+(const Matrix& a, const Matrix& b)
    {
        require(a.rows_ == b.rows_ && a.cols_ == b.cols_, "Matrix sum: dimension mismatch");
        Matrix c = a;
        for (std::size_t k = 0; k < c.data_.size(); ++k)
            c.data_[k] += b.data_[k];
        return c;
    }
    friend Matrix operator-(const Matrix& a, const Matrix& b)
    {
        require(a.rows_ == b.rows_ && a.cols_ == b.cols_, "Matrix difference: dimension mismatch");
        Matrix c = a;
        for (std::size_t k = 0; k < c.data_.size(); ++k)
            c.data_[k] -= b.data_[k];
        return c;
    }
    friend Matrix operator*(const T& s, const Matrix& a)
    {
        Matrix c = a;
        for (auto& v : c.data_)
            v *= s;
        return c;
    }
    friend Matrix operator-(const Matrix& a)
    {
        Matrix c = a;
        for (auto& v : c.data_)
            v = -v;
        return c;
    }
    friend bool operator==(const Matrix& a, const Matrix& b)
    {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

    void swapRows(std::size_t a, std::size_t b)
    {
        for (std::size_t j = 0; j < cols_; ++j)
            std::swap((*this)(a, j), (*this)(b, j));
    }
    void swapCols(std::size_t a, std::size_t b)
    {
        for (std::size_t i = 0; i < rows_; ++i)
            std::swap((*this)(i, a), (*this)(i, b));
    }
    /// row[target] += factor * row[source]
    void addRowMultiple(std::size_t target, std::size_t source, const T& factor)
    {
        for (std::size_t j = 0; j < cols_; ++j)
            (*this)(target, j) += factor * (*this)(source, j);
    }
    void addColMultiple(std::size_t target, std::size_t source, const T& factor)
    {
        for (std::size_t i = 0; i < rows_; ++i)
            (*this)(i, target) += factor * (*this)(i, source);
    }
    void negateRow(std::size_t r)
    {
        for (std::size_t j = 0; j < cols_; ++j)
            (*this)(r, j) = -(*this)(r, j);
    }
    void negateCol(std::size_t c)
    {
        for (std::size_t i = 0; i < rows_; ++i)
            (*this)(i, c) = -(*this)(i, c);
    }

    Matrix submatrix(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const
    {
        require(r0 + nr <= rows_ && c0 + nc <= cols_, "submatrix out of range");
        Matrix m(nr, nc);
        for (std::size_t i = 0; i < nr; ++i)
            for (std::size_t j = 0; j < nc; ++j)
                m(i, j) = (*this)(r0 + i, c0 + j);
        return m;
    }

    std::string toString() const
    {
        std::string s = "[";
        for (std::size_t i = 0; i < rows_; ++i) {
            s += i == 0 ? "[" : ", [";
            for (std::size_t j = 0; j < cols_; ++j) {
                if (j)
                    s += ", ";
                s += (*this)(i, j).get_str();
            }
            s += "]";
        }
        return s + "]";
    }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<T> data_;
};

using IntMatrix = Matrix<Int>;
using RatMatrix = Matrix<Rational>;

template <class T>
std::ostream& operator<<(std::ostream& os, const Matrix<T>& m)
{
    return os << m.toString();
}

RatMatrix toRational(const IntMatrix& m);
/// Throws InconsistencyError if some entry is not integral.
IntMatrix toIntegral(const RatMatrix& m, const std::string& what = "matrix");
bool isIntegral(const RatMatrix& m);

IntMatrix matrixPower(const IntMatrix& m, std::uint64_t exponent);

/// Exact determinant by fraction-free (Bareiss) elimination.
Int determinant(const IntMatrix& m);
/// Leading principal minors d_1, ..., d_n.
std::vector<Int> leadingPrincipalMinors(const IntMatrix& m);
std::size_t rank(const IntMatrix& m);

/// det(xI - A), via Faddeev-LeVerrier over the integers (all divisions exact).
IntPoly charPoly(const IntMatrix& m);

/// Inverse over Q; PreconditionError if singular.
RatMatrix inverse(const RatMatrix& m);
RatMatrix inverse(const IntMatrix& m);

struct SNFResult {
    /// d_1 | d_2 | ... ; length min(rows, cols); zeros trail for rank-deficient input.
    std::vector<Int> diagonal;
    IntMatrix U; ///< rows x rows, unimodular
    IntMatrix V; ///< cols x cols, unimodular; U * A * V == diag
};

/// Smith normal form. Pivot rule: smallest nonzero absolute value in the active block,
/// first in row-major scan order.
SNFResult smithNormalForm(const IntMatrix& a);

/// Basis (as rows) of the Z-module spanned by the rows of `generators`, in Hermite normal form.
IntMatrix hermiteRowBasis(const IntMatrix& generators);

/// Basis (as columns) of the integer kernel {x in Z^cols : A x = 0}. The kernel is saturated.
IntMatrix integerKernel(const IntMatrix& a);

} // namespace orbilat
