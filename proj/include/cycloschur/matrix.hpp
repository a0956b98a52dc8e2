#pragma once

/* Dense matrices over an exact field, with deterministic Gaussian
 * elimination (pivot = first nonzero entry, never by magnitude). */

#include <optional>
#include <vector>

#include <cstddef>
#include <stdexcept>

namespace cycloschur {

/* uniform zero test (default-constructed T is the additive identity) */
template <class T>
bool is_zero_elem(const T& x) {
    return x == T();
}

template <class T>
class Matrix {
public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<std::size_t>(rows) * cols) {
        if (rows < 0 || cols < 0) throw std::invalid_argument("Matrix: negative dimension");
    }
    Matrix(int rows, int cols, std::vector<T> entries_row_major)
        : rows_(rows), cols_(cols), a_(std::move(entries_row_major)) {
        if (a_.size() != static_cast<std::size_t>(rows) * cols)
            throw std::invalid_argument("Matrix: wrong entry count");
    }

    static Matrix identity(int n) {
        Matrix m(n, n);
        for (int i = 0; i < n; ++i) m.at(i, i) = T(1);
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    T& at(int i, int j) { return a_[static_cast<std::size_t>(i) * cols_ + j]; }
    const T& at(int i, int j) const { return a_[static_cast<std::size_t>(i) * cols_ + j]; }
    const std::vector<T>& entries() const { return a_; }

    friend Matrix operator+(const Matrix& a, const Matrix& b) {
        a.check_same(b);
        Matrix r(a.rows_, a.cols_);
        for (std::size_t k = 0; k < a.a_.size(); ++k) r.a_[k] = a.a_[k] + b.a_[k];
        return r;
    }
    friend Matrix operator-(const Matrix& a, const Matrix& b) {
        a.check_same(b);
        Matrix r(a.rows_, a.cols_);
        for (std::size_t k = 0; k < a.a_.size(); ++k) r.a_[k] = a.a_[k] - b.a_[k];
        return r;
    }
    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.cols_ != b.rows_) throw std::invalid_argument("Matrix: shape mismatch");
        Matrix r(a.rows_, b.cols_);
        for (int i = 0; i < a.rows_; ++i)
            for (int k = 0; k < a.cols_; ++k) {
                if (a.at(i, k) == T()) continue;
                for (int j = 0; j < b.cols_; ++j)
                    r.at(i, j) = r.at(i, j) + a.at(i, k) * b.at(k, j);
            }
        return r;
    }
    friend Matrix operator*(const Matrix& a, const T& s) {
        Matrix r = a;
        for (auto& v : r.a_) v = v * s;
        return r;
    }

    Matrix transpose() const {
        Matrix r(cols_, rows_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
        return r;
    }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_) return false;
        for (std::size_t k = 0; k < a.a_.size(); ++k)
            if (!(a.a_[k] == b.a_[k])) return false;
        return true;
    }
    friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

private:
    void check_same(const Matrix& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_)
            throw std::invalid_argument("Matrix: shape mismatch");
    }
    int rows_, cols_;
    std::vector<T> a_;
};

/* A ⊗ B with component-major index order: row (i,k) of the product is
 * i*B.rows()+k, column (j,l) is j*B.cols()+l. */
template <class T>
Matrix<T> kronecker(const Matrix<T>& A, const Matrix<T>& B) {
    Matrix<T> r(A.rows() * B.rows(), A.cols() * B.cols());
    for (int i = 0; i < A.rows(); ++i)
        for (int j = 0; j < A.cols(); ++j)
            for (int k = 0; k < B.rows(); ++k)
                for (int l = 0; l < B.cols(); ++l)
                    r.at(i * B.rows() + k, j * B.cols() + l) = A.at(i, j) * B.at(k, l);
    return r;
}

/* Row echelon reduction in place; returns pivot columns. */
template <class T>
std::vector<int> row_reduce(Matrix<T>& m) {
    std::vector<int> pivots;
    int row = 0;
    for (int col = 0; col < m.cols() && row < m.rows(); ++col) {
        int pr = -1;
        for (int i = row; i < m.rows(); ++i)
            if (!(m.at(i, col) == T())) {
                pr = i;
                break;
            }
        if (pr < 0) continue;
        if (pr != row)
            for (int j = 0; j < m.cols(); ++j) std::swap(m.at(pr, j), m.at(row, j));
        T inv = T(1) / m.at(row, col);
        for (int j = 0; j < m.cols(); ++j) m.at(row, j) = m.at(row, j) * inv;
        for (int i = 0; i < m.rows(); ++i) {
            if (i == row || m.at(i, col) == T()) continue;
            T f = m.at(i, col);
            for (int j = 0; j < m.cols(); ++j) m.at(i, j) = m.at(i, j) - f * m.at(row, j);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

template <class T>
int rank(Matrix<T> m) {
    return static_cast<int>(row_reduce(m).size());
}

/* Solve A x = b; returns the solution with all free variables 0, or
 * nullopt when inconsistent. */
template <class T>
std::optional<std::vector<T>> solve(const Matrix<T>& A, const std::vector<T>& b) {
    if (static_cast<int>(b.size()) != A.rows()) throw std::invalid_argument("solve: bad rhs");
    Matrix<T> m(A.rows(), A.cols() + 1);
    for (int i = 0; i < A.rows(); ++i) {
        for (int j = 0; j < A.cols(); ++j) m.at(i, j) = A.at(i, j);
        m.at(i, A.cols()) = b[i];
    }
    auto pivots = row_reduce(m);
    if (!pivots.empty() && pivots.back() == A.cols()) return std::nullopt; /* 0 = 1 row */
    std::vector<T> x(A.cols(), T());
    for (std::size_t k = 0; k < pivots.size(); ++k) x[pivots[k]] = m.at(static_cast<int>(k), A.cols());
    return x;
}

/* Solve A X = B for all columns of B at once (free variables 0);
 * nullopt when any column is inconsistent. */
template <class T>
std::optional<Matrix<T>> solve_many(const Matrix<T>& A, const Matrix<T>& B) {
    if (B.rows() != A.rows()) throw std::invalid_argument("solve_many: bad rhs");
    Matrix<T> m(A.rows(), A.cols() + B.cols());
    for (int i = 0; i < A.rows(); ++i) {
        for (int j = 0; j < A.cols(); ++j) m.at(i, j) = A.at(i, j);
        for (int j = 0; j < B.cols(); ++j) m.at(i, A.cols() + j) = B.at(i, j);
    }
    auto pivots = row_reduce(m);
    for (int c : pivots)
        if (c >= A.cols()) return std::nullopt;
    Matrix<T> X(A.cols(), B.cols());
    for (std::size_t k = 0; k < pivots.size(); ++k)
        for (int j = 0; j < B.cols(); ++j)
            X.at(pivots[k], j) = m.at(static_cast<int>(k), A.cols() + j);
    return X;
}

/* Basis of the null space {x : A x = 0}, one vector per free column. */
template <class T>
std::vector<std::vector<T>> kernel_basis(const Matrix<T>& A) {
    Matrix<T> m = A;
    auto pivots = row_reduce(m);
    std::vector<bool> is_pivot(A.cols(), false);
    for (int c : pivots) is_pivot[c] = true;
    std::vector<std::vector<T>> out;
    for (int free = 0; free < A.cols(); ++free) {
        if (is_pivot[free]) continue;
        std::vector<T> x(A.cols(), T());
        x[free] = T(1);
        for (std::size_t k = 0; k < pivots.size(); ++k)
            x[pivots[k]] = T() - m.at(static_cast<int>(k), free);
        out.push_back(std::move(x));
    }
    return out;
}

template <class T>
std::optional<Matrix<T>> inverse(const Matrix<T>& A) {
    if (A.rows() != A.cols()) throw std::invalid_argument("inverse: not square");
    int n = A.rows();
    Matrix<T> m(n, 2 * n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) m.at(i, j) = A.at(i, j);
        m.at(i, n + i) = T(1);
    }
    auto pivots = row_reduce(m);
    if (static_cast<int>(pivots.size()) != n || pivots[n - 1] != n - 1) return std::nullopt;
    Matrix<T> inv(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) inv.at(i, j) = m.at(i, n + j);
    return inv;
}

} // namespace cycloschur
