#include "rspin/matrix.hpp"

#include <numeric>
#include <sstream>

namespace rspin {

Matrix::Matrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = CycScalar(1);
    return m;
}

Matrix Matrix::column(const std::vector<CycScalar>& v) {
    Matrix m(v.size(), 1);
    for (std::size_t i = 0; i < v.size(); ++i) m(i, 0) = v[i];
    return m;
}

bool Matrix::is_zero() const {
    for (const auto& x : data_) {
        if (!x.is_zero()) return false;
    }
    return true;
}

Matrix Matrix::transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

Matrix Matrix::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
    if (r0 + nr > rows_ || c0 + nc > cols_) throw ShapeMismatch("matrix block out of range");
    Matrix b(nr, nc);
    for (std::size_t i = 0; i < nr; ++i)
        for (std::size_t j = 0; j < nc; ++j) b(i, j) = (*this)(r0 + i, c0 + j);
    return b;
}

void Matrix::set_block(std::size_t r0, std::size_t c0, const Matrix& m) {
    if (r0 + m.rows_ > rows_ || c0 + m.cols_ > cols_) throw ShapeMismatch("set_block out of range");
    for (std::size_t i = 0; i < m.rows_; ++i)
        for (std::size_t j = 0; j < m.cols_; ++j) (*this)(r0 + i, c0 + j) = m(i, j);
}

std::vector<CycScalar> Matrix::col(std::size_t j) const {
    std::vector<CycScalar> v(rows_);
    for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
    return v;
}

Matrix Matrix::permuted(const std::vector<std::size_t>& row_perm,
                        const std::vector<std::size_t>& col_perm) const {
    Matrix out(row_perm.size(), col_perm.size());
    for (std::size_t i = 0; i < row_perm.size(); ++i)
        for (std::size_t j = 0; j < col_perm.size(); ++j)
            out(i, j) = (*this)(row_perm[i], col_perm[j]);
    return out;
}

Matrix& Matrix::operator+=(const Matrix& o) {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw ShapeMismatch("matrix sum shape mismatch");
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += o.data_[k];
    return *this;
}

Matrix& Matrix::operator-=(const Matrix& o) {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw ShapeMismatch("matrix difference shape mismatch");
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= o.data_[k];
    return *this;
}

Matrix& Matrix::operator*=(const CycScalar& s) {
    for (auto& x : data_) x *= s;
    return *this;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) {
        throw ShapeMismatch("matrix product " + std::to_string(a.rows_) + "x" +
                            std::to_string(a.cols_) + " * " + std::to_string(b.rows_) + "x" +
                            std::to_string(b.cols_));
    }
    Matrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const CycScalar& aik = a(i, k);
            if (aik.is_zero()) continue;
            for (std::size_t j = 0; j < b.cols_; ++j) {
                const CycScalar& bkj = b(k, j);
                if (!bkj.is_zero()) c(i, j) += aik * bkj;
            }
        }
    }
    return c;
}

bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

std::string Matrix::str() const {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < rows_; ++i) {
        os << (i ? "; " : "");
        for (std::size_t j = 0; j < cols_; ++j) os << (j ? ", " : "") << (*this)(i, j);
    }
    os << "]";
    return os.str();
}

int field_order(const Matrix& m, int acc) {
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            if (!m(i, j).is_rational()) acc = std::lcm(acc, m(i, j).order());
    return acc;
}

Matrix kronecker(const Matrix& a, const Matrix& b) {
    Matrix k(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) {
            if (a(i, j).is_zero()) continue;
            for (std::size_t p = 0; p < b.rows(); ++p)
                for (std::size_t q = 0; q < b.cols(); ++q)
                    k(i * b.rows() + p, j * b.cols() + q) = a(i, j) * b(p, q);
        }
    return k;
}

Matrix hstack(const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows()) throw ShapeMismatch("hstack row mismatch");
    Matrix m(a.rows(), a.cols() + b.cols());
    m.set_block(0, 0, a);
    m.set_block(0, a.cols(), b);
    return m;
}

RowEchelon row_reduce(Matrix m) {
    RowEchelon out;
    std::size_t row = 0;
    for (std::size_t c = 0; c < m.cols() && row < m.rows(); ++c) {
        std::size_t piv = row;
        while (piv < m.rows() && m(piv, c).is_zero()) ++piv;
        if (piv == m.rows()) continue;
        if (piv != row) {
            for (std::size_t j = c; j < m.cols(); ++j) std::swap(m(row, j), m(piv, j));
        }
        const CycScalar inv = m(row, c).inverse();
        for (std::size_t j = c; j < m.cols(); ++j) m(row, j) *= inv;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == row || m(i, c).is_zero()) continue;
            const CycScalar f = m(i, c);
            for (std::size_t j = c; j < m.cols(); ++j) {
                if (!m(row, j).is_zero()) m(i, j) -= f * m(row, j);
            }
        }
        out.pivots.push_back(c);
        ++row;
    }
    out.reduced = std::move(m);
    return out;
}

std::size_t rank(const Matrix& m) { return row_reduce(m).pivots.size(); }

Matrix kernel_basis(const Matrix& m) {
    RowEchelon e = row_reduce(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto p : e.pivots) is_pivot[p] = true;
    std::vector<std::size_t> free;
    for (std::size_t c = 0; c < m.cols(); ++c)
        if (!is_pivot[c]) free.push_back(c);
    Matrix k(m.cols(), free.size());
    for (std::size_t f = 0; f < free.size(); ++f) {
        k(free[f], f) = CycScalar(1);
        for (std::size_t r = 0; r < e.pivots.size(); ++r) k(e.pivots[r], f) = -e.reduced(r, free[f]);
    }
    return k;
}

Matrix image_basis(const Matrix& m) {
    RowEchelon e = row_reduce(m);
    Matrix b(m.rows(), e.pivots.size());
    for (std::size_t k = 0; k < e.pivots.size(); ++k)
        for (std::size_t i = 0; i < m.rows(); ++i) b(i, k) = m(i, e.pivots[k]);
    return b;
}

std::optional<Matrix> solve(const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows()) throw ShapeMismatch("solve: row mismatch");
    RowEchelon e = row_reduce(hstack(a, b));
    Matrix x(a.cols(), b.cols());
    for (std::size_t r = 0; r < e.pivots.size(); ++r) {
        if (e.pivots[r] >= a.cols()) return std::nullopt;
        for (std::size_t j = 0; j < b.cols(); ++j) x(e.pivots[r], j) = e.reduced(r, a.cols() + j);
    }
    return x;
}

Matrix inverse(const Matrix& m) {
    if (m.rows() != m.cols()) throw ShapeMismatch("inverse of a non-square matrix");
    RowEchelon e = row_reduce(hstack(m, Matrix::identity(m.rows())));
    if (e.pivots.size() < m.rows() || (m.rows() > 0 && e.pivots[m.rows() - 1] >= m.cols()))
        throw DivisionByZero("matrix is singular");
    return e.reduced.block(0, m.cols(), m.rows(), m.cols());
}

}  // namespace rspin
