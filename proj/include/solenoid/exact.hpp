#pragma once

// Exact integer / rational arithmetic and the small dense matrix type shared by
// the homology, tower and rectify modules.

#include <boost/multiprecision/gmp.hpp>

#include <cstddef>
#include <string>
#include <vector>

#include "solenoid/error.hpp"

namespace solenoid {

using Integer = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

using IntVector = std::vector<Integer>;
using RatVector = std::vector<Rational>;

/// Row-major dense matrix.
template <class T>
class Matrix
{
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols, const T& fill = T(0))
        : rows_(rows), cols_(cols), data_(rows * cols, fill)
    {
    }

    static Matrix identity(std::size_t n)
    {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i)
            m(i, i) = T(1);
        return m;
    }

    static Matrix from_rows(const std::vector<std::vector<T>>& rows)
    {
        if (rows.empty())
            return {};
        Matrix m(rows.size(), rows.front().size());
        for (std::size_t i = 0; i < rows.size(); ++i)
        {
            if (rows[i].size() != m.cols_)
                throw Error("shape_mismatch", "ragged matrix rows");
            for (std::size_t j = 0; j < m.cols_; ++j)
                m(i, j) = rows[i][j];
        }
        return m;
    }

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool empty() const noexcept { return data_.empty(); }

    T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    std::vector<T> row(std::size_t r) const
    {
        return std::vector<T>(data_.begin() + r * cols_, data_.begin() + (r + 1) * cols_);
    }

    std::vector<T> column(std::size_t c) const
    {
        std::vector<T> out(rows_);
        for (std::size_t r = 0; r < rows_; ++r)
            out[r] = (*this)(r, c);
        return out;
    }

    std::vector<std::vector<T>> to_rows() const
    {
        std::vector<std::vector<T>> out;
        for (std::size_t r = 0; r < rows_; ++r)
            out.push_back(row(r));
        return out;
    }

    void append_row(const std::vector<T>& values)
    {
        if (rows_ == 0 && cols_ == 0)
            cols_ = values.size();
        if (values.size() != cols_)
            throw Error("shape_mismatch", "appended row has wrong length");
        data_.insert(data_.end(), values.begin(), values.end());
        ++rows_;
    }

    friend bool operator==(const Matrix&, const Matrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<T> data_;
};

using IntMatrix = Matrix<Integer>;
using RatMatrix = Matrix<Rational>;

template <class T>
Matrix<T> operator*(const Matrix<T>& a, const Matrix<T>& b)
{
    if (a.cols() != b.rows())
        throw Error("shape_mismatch", "matrix product shapes are incompatible");
    Matrix<T> out(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k)
        {
            const T& aik = a(i, k);
            if (aik == 0)
                continue;
            for (std::size_t j = 0; j < b.cols(); ++j)
                out(i, j) += aik * b(k, j);
        }
    return out;
}

template <class T>
std::vector<T> operator*(const Matrix<T>& a, const std::vector<T>& x)
{
    if (a.cols() != x.size())
        throw Error("shape_mismatch", "matrix-vector shapes are incompatible");
    std::vector<T> out(a.rows(), T(0));
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            out[i] += a(i, j) * x[j];
    return out;
}

/// Upper echelon form produced by Bareiss fraction-free elimination. Entries
/// stay integral; `pivots[k]` is the pivot column of row k.
struct Echelon
{
    IntMatrix rows;
    std::vector<std::size_t> pivots;
};

Echelon fraction_free_echelon(IntMatrix m);

std::size_t rank(const IntMatrix& m);

/// Basis of {x : m x = 0} over Q, one primitive integer vector per free column,
/// in increasing free-column order (the RREF basis up to positive scaling).
std::vector<IntVector> null_space(const IntMatrix& m);

/// Scales a rational vector by a positive factor to coprime integers.
IntVector primitive(const RatVector& v);
IntVector primitive(const IntVector& v);

Integer dot(const IntVector& a, const IntVector& b);

std::string to_string(const Rational& q);
Rational parse_rational(const std::string& text);

/// Number of bits of the largest |entry|.
std::size_t max_bits(const IntMatrix& m);

} // namespace solenoid
