#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "crys/fp.hpp"
#include "crys/numeric.hpp"
#include "crys/poly.hpp"

namespace crys {

/// Dense row-major matrix over an exact coefficient domain.
template <class T>
class Matrix {
  public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols) {}
    Matrix(std::size_t rows, std::size_t cols, std::vector<T> entries)
        : rows_(rows), cols_(cols), data_(std::move(entries)) {
        if (data_.size() != rows_ * cols_)
            throw std::invalid_argument("Matrix: entry count mismatch");
    }

    static Matrix identity(std::size_t n, const T& one = T(1)) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = one;
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const {
        return data_[i * cols_ + j];
    }
    const std::vector<T>& entries() const { return data_; }
    std::vector<T>& entries() { return data_; }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }
    friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

    friend Matrix operator+(const Matrix& a, const Matrix& b) {
        a.require_same_shape(b);
        Matrix r(a.rows_, a.cols_);
        for (std::size_t i = 0; i < a.data_.size(); ++i) r.data_[i] = a.data_[i] + b.data_[i];
        return r;
    }
    friend Matrix operator-(const Matrix& a, const Matrix& b) {
        a.require_same_shape(b);
        Matrix r(a.rows_, a.cols_);
        for (std::size_t i = 0; i < a.data_.size(); ++i) r.data_[i] = a.data_[i] - b.data_[i];
        return r;
    }
    Matrix operator-() const {
        Matrix r(rows_, cols_);
        for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] = -data_[i];
        return r;
    }

    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.cols_ != b.rows_)
            throw std::invalid_argument("Matrix multiply: shape mismatch");
        Matrix r(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i) {
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const T& aik = a(i, k);
                if (aik == T{}) continue;
                for (std::size_t j = 0; j < b.cols_; ++j) {
                    const T& bkj = b(k, j);
                    if (bkj == T{}) continue;
                    r(i, j) += aik * bkj;
                }
            }
        }
        return r;
    }

    friend std::vector<T> operator*(const Matrix& a, const std::vector<T>& x) {
        if (a.cols_ != x.size())
            throw std::invalid_argument("Matrix*vector: shape mismatch");
        std::vector<T> r(a.rows_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t j = 0; j < a.cols_; ++j)
                if (!(a(i, j) == T{})) r[i] += a(i, j) * x[j];
        return r;
    }

    Matrix pow(unsigned long e) const {
        if (!is_square()) throw std::invalid_argument("Matrix::pow: not square");
        Matrix r = identity_like();
        Matrix base = *this;
        while (e) {
            if (e & 1) r = r * base;
            if (e >>= 1) base = base * base;
        }
        return r;
    }

    Matrix transpose() const {
        Matrix r(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
        return r;
    }

    bool is_zero() const {
        for (const auto& e : data_)
            if (!(e == T{})) return false;
        return true;
    }

    /// Copies `block` into this matrix with top-left corner at (i0, j0).
    void set_block(std::size_t i0, std::size_t j0, const Matrix& block) {
        if (i0 + block.rows_ > rows_ || j0 + block.cols_ > cols_)
            throw std::invalid_argument("Matrix::set_block: out of range");
        for (std::size_t i = 0; i < block.rows_; ++i)
            for (std::size_t j = 0; j < block.cols_; ++j)
                (*this)(i0 + i, j0 + j) = block(i, j);
    }

    Matrix block(std::size_t i0, std::size_t j0, std::size_t r, std::size_t c) const {
        if (i0 + r > rows_ || j0 + c > cols_)
            throw std::invalid_argument("Matrix::block: out of range");
        Matrix out(r, c);
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < c; ++j) out(i, j) = (*this)(i0 + i, j0 + j);
        return out;
    }

    void swap_rows(std::size_t i, std::size_t j) {
        for (std::size_t k = 0; k < cols_; ++k) std::swap((*this)(i, k), (*this)(j, k));
    }
    void swap_cols(std::size_t i, std::size_t j) {
        for (std::size_t k = 0; k < rows_; ++k) std::swap((*this)(k, i), (*this)(k, j));
    }

  private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<T> data_;

    Matrix identity_like() const;

    void require_same_shape(const Matrix& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_)
            throw std::invalid_argument("Matrix: shape mismatch");
    }
};

template <class T>
Matrix<T> Matrix<T>::identity_like() const {
    return Matrix<T>::identity(rows_, T(1));
}

// Square identity compatible with entries that carry a runtime modulus.
template <>
inline Matrix<Fp> Matrix<Fp>::identity_like() const {
    std::uint64_t p = 0;
    for (const auto& e : data_)
        if (e.p) {
            p = e.p;
            break;
        }
    if (p == 0) throw std::invalid_argument("Matrix<Fp>::pow: no modulus context");
    return Matrix<Fp>::identity(rows_, Fp(1, p));
}

using IntMat = Matrix<Int>;
using RatMat = Matrix<Rat>;
using FpMat = Matrix<Fp>;
using FpPolyMat = Matrix<FpPoly>;

/// Kronecker product, row-major convention: entry ((i1,i2),(j1,j2)) of
/// kron(A,B) is A(i1,j1)*B(i2,j2) at row i1*rowsB+i2, column j1*colsB+j2.
template <class T>
Matrix<T> kron(const Matrix<T>& a, const Matrix<T>& b) {
    Matrix<T> r(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i1 = 0; i1 < a.rows(); ++i1)
        for (std::size_t j1 = 0; j1 < a.cols(); ++j1) {
            const T& f = a(i1, j1);
            if (f == T{}) continue;
            for (std::size_t i2 = 0; i2 < b.rows(); ++i2)
                for (std::size_t j2 = 0; j2 < b.cols(); ++j2) {
                    const T& g = b(i2, j2);
                    if (g == T{}) continue;
                    r(i1 * b.rows() + i2, j1 * b.cols() + j2) = f * g;
                }
        }
    return r;
}

/// Direct (block-diagonal) sum.
template <class T>
Matrix<T> dsum(const Matrix<T>& a, const Matrix<T>& b) {
    Matrix<T> r(a.rows() + b.rows(), a.cols() + b.cols());
    r.set_block(0, 0, a);
    r.set_block(a.rows(), a.cols(), b);
    return r;
}

inline RatMat to_rational(const IntMat& a) {
    RatMat r(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) r(i, j) = Rat(a(i, j));
    return r;
}

/// Exact conversion; fails if any entry has a nontrivial denominator.
inline IntMat to_integer(const RatMat& a) {
    IntMat r(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) {
            if (!is_integer(a(i, j)))
                throw std::invalid_argument("to_integer: non-integral entry");
            r(i, j) = a(i, j).get_num();
        }
    return r;
}

inline FpMat reduce_mod_p(const IntMat& a, std::uint64_t p) {
    FpMat r(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) r(i, j) = to_fp(a(i, j), p);
    return r;
}

inline IntMat lift_to_int(const FpMat& a) {
    IntMat r(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            r(i, j) = Int(static_cast<unsigned long>(a(i, j).v));
    return r;
}

/// Lower-triangular Jordan block with `lambda` on the diagonal.
inline IntMat jordan_lower(std::size_t n, const Int& lambda) {
    IntMat j(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        j(i, i) = lambda;
        if (i + 1 < n) j(i + 1, i) = 1;
    }
    return j;
}

/// Upper-triangular Jordan block with `lambda` on the diagonal.
inline IntMat jordan_upper(std::size_t n, const Int& lambda) {
    IntMat j(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        j(i, i) = lambda;
        if (i + 1 < n) j(i, i + 1) = 1;
    }
    return j;
}

/// Fraction-free determinant (Bareiss).
Int det(const IntMat& a);

inline Int max_abs(const IntMat& a) {
    Int m = 0;
    for (const auto& e : a.entries())
        if (abs(e) > m) m = abs(e);
    return m;
}

}  // namespace crys
