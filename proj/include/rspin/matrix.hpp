#pragma once

// Dense matrices over Q(zeta_r) and exact Gaussian elimination.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "rspin/scalars.hpp"

namespace rspin {

class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols);

    static Matrix identity(std::size_t n);
    static Matrix column(const std::vector<CycScalar>& v);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    CycScalar& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const CycScalar& operator()(std::size_t i, std::size_t j) const {
        return data_[i * cols_ + j];
    }

    bool is_zero() const;
    Matrix transpose() const;
    Matrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
    void set_block(std::size_t r0, std::size_t c0, const Matrix& m);
    std::vector<CycScalar> col(std::size_t j) const;

    /// Rows and columns re-ordered: out(i, j) = (*this)(row_perm[i], col_perm[j]).
    Matrix permuted(const std::vector<std::size_t>& row_perm,
                    const std::vector<std::size_t>& col_perm) const;

    Matrix& operator+=(const Matrix& o);
    Matrix& operator-=(const Matrix& o);
    Matrix& operator*=(const CycScalar& s);

    friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
    friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
    friend Matrix operator*(Matrix a, const CycScalar& s) { return a *= s; }
    friend Matrix operator*(const CycScalar& s, Matrix a) { return a *= s; }
    friend Matrix operator*(const Matrix& a, const Matrix& b);
    friend bool operator==(const Matrix& a, const Matrix& b);
    friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

    std::string str() const;

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<CycScalar> data_;
};

/// lcm of the cyclotomic orders of the non-rational entries, folded into `acc`.
int field_order(const Matrix& m, int acc = 1);

Matrix kronecker(const Matrix& a, const Matrix& b);
Matrix hstack(const Matrix& a, const Matrix& b);

struct RowEchelon {
    Matrix reduced;                    // reduced row echelon form
    std::vector<std::size_t> pivots;   // pivot column of each nonzero row
};

RowEchelon row_reduce(Matrix m);
std::size_t rank(const Matrix& m);

/// Columns form a basis of the null space (canonical: one vector per free column).
Matrix kernel_basis(const Matrix& m);
/// Columns form a basis of the column space (pivot columns of m).
Matrix image_basis(const Matrix& m);

/// Some x with a*x = b, or nullopt if inconsistent.
std::optional<Matrix> solve(const Matrix& a, const Matrix& b);
Matrix inverse(const Matrix& m);

}  // namespace rspin
