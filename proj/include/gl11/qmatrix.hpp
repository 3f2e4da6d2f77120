#pragma once

#include "gl11/rational.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace gl11 {

/// Dense exact matrix over Q, row-major.
class QMatrix {
  public:
    QMatrix() = default;
    QMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols) {}
    static QMatrix identity(std::size_t n);
    static QMatrix diagonal(const std::vector<Rational> &d);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    Rational &operator()(std::size_t i, std::size_t j) {
        return data_[i * cols_ + j];
    }
    const Rational &operator()(std::size_t i, std::size_t j) const {
        return data_[i * cols_ + j];
    }

    bool is_zero() const;
    /// True iff this is c * identity for some c; the scalar is written to
    /// `value` when non-null.
    bool is_scalar(Rational *value = nullptr) const;
    std::size_t rank() const;
    /// Columns form a basis of the right null space.
    QMatrix nullspace() const;
    /// Vertical concatenation (column counts must agree).
    QMatrix stacked(const QMatrix &below) const;
    QMatrix transposed() const;

    QMatrix operator-() const;
    QMatrix &operator+=(const QMatrix &o);
    QMatrix &operator-=(const QMatrix &o);
    friend QMatrix operator+(QMatrix a, const QMatrix &b) { return a += b; }
    friend QMatrix operator-(QMatrix a, const QMatrix &b) { return a -= b; }
    friend QMatrix operator*(const QMatrix &a, const QMatrix &b);
    friend QMatrix operator*(const Rational &s, QMatrix a);
    friend bool operator==(const QMatrix &a, const QMatrix &b) = default;

    std::string str() const;

  private:
    /// Reduced row echelon form in place; returns pivot columns.
    std::vector<std::size_t> reduce();

    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> data_;
};

/// Kronecker product a (x) b, index (i, j) -> i * b.rows() + j.
QMatrix kron(const QMatrix &a, const QMatrix &b);

} // namespace gl11
