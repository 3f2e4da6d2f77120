#include "gl11/qmatrix.hpp"

#include <sstream>
#include <stdexcept>

namespace gl11 {

QMatrix QMatrix::identity(std::size_t n) {
    QMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        m(i, i) = 1;
    return m;
}

QMatrix QMatrix::diagonal(const std::vector<Rational> &d) {
    QMatrix m(d.size(), d.size());
    for (std::size_t i = 0; i < d.size(); ++i)
        m(i, i) = d[i];
    return m;
}

bool QMatrix::is_zero() const {
    for (const auto &x : data_)
        if (!x.is_zero())
            return false;
    return true;
}

bool QMatrix::is_scalar(Rational *value) const {
    if (rows_ != cols_)
        return false;
    Rational c = rows_ ? (*this)(0, 0) : Rational(0);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            if ((*this)(i, j) != (i == j ? c : Rational(0)))
                return false;
    if (value)
        *value = c;
    return true;
}

std::vector<std::size_t> QMatrix::reduce() {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols_ && row < rows_; ++col) {
        std::size_t p = row;
        while (p < rows_ && (*this)(p, col).is_zero())
            ++p;
        if (p == rows_)
            continue;
        for (std::size_t j = 0; j < cols_; ++j)
            std::swap((*this)(row, j), (*this)(p, j));
        Rational inv = (*this)(row, col).inverse();
        for (std::size_t j = col; j < cols_; ++j)
            (*this)(row, j) *= inv;
        for (std::size_t i = 0; i < rows_; ++i) {
            if (i == row || (*this)(i, col).is_zero())
                continue;
            Rational f = (*this)(i, col);
            for (std::size_t j = col; j < cols_; ++j)
                (*this)(i, j) -= f * (*this)(row, j);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

std::size_t QMatrix::rank() const {
    QMatrix copy = *this;
    return copy.reduce().size();
}

QMatrix QMatrix::nullspace() const {
    QMatrix r = *this;
    auto pivots = r.reduce();
    std::vector<bool> is_pivot(cols_, false);
    for (auto p : pivots)
        is_pivot[p] = true;
    std::vector<std::size_t> free_cols;
    for (std::size_t j = 0; j < cols_; ++j)
        if (!is_pivot[j])
            free_cols.push_back(j);
    QMatrix basis(cols_, free_cols.size());
    for (std::size_t k = 0; k < free_cols.size(); ++k) {
        basis(free_cols[k], k) = 1;
        for (std::size_t i = 0; i < pivots.size(); ++i)
            basis(pivots[i], k) = -r(i, free_cols[k]);
    }
    return basis;
}

QMatrix QMatrix::stacked(const QMatrix &below) const {
    if (below.cols_ != cols_)
        throw std::invalid_argument("stacked: column mismatch");
    QMatrix m(rows_ + below.rows_, cols_);
    std::copy(data_.begin(), data_.end(), m.data_.begin());
    std::copy(below.data_.begin(), below.data_.end(),
              m.data_.begin() + static_cast<std::ptrdiff_t>(data_.size()));
    return m;
}

QMatrix QMatrix::transposed() const {
    QMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            t(j, i) = (*this)(i, j);
    return t;
}

QMatrix QMatrix::operator-() const { return Rational(-1) * *this; }

QMatrix &QMatrix::operator+=(const QMatrix &o) {
    if (o.rows_ != rows_ || o.cols_ != cols_)
        throw std::invalid_argument("matrix shape mismatch");
    for (std::size_t i = 0; i < data_.size(); ++i)
        data_[i] += o.data_[i];
    return *this;
}

QMatrix &QMatrix::operator-=(const QMatrix &o) {
    if (o.rows_ != rows_ || o.cols_ != cols_)
        throw std::invalid_argument("matrix shape mismatch");
    for (std::size_t i = 0; i < data_.size(); ++i)
        data_[i] -= o.data_[i];
    return *this;
}

QMatrix operator*(const QMatrix &a, const QMatrix &b) {
    if (a.cols_ != b.rows_)
        throw std::invalid_argument("matrix product shape mismatch");
    QMatrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const Rational &aik = a(i, k);
            if (aik.is_zero())
                continue;
            for (std::size_t j = 0; j < b.cols_; ++j)
                if (!b(k, j).is_zero())
                    c(i, j) += aik * b(k, j);
        }
    return c;
}

QMatrix operator*(const Rational &s, QMatrix a) {
    for (auto &x : a.data_)
        x *= s;
    return a;
}

std::string QMatrix::str() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < rows_; ++i) {
        os << "[";
        for (std::size_t j = 0; j < cols_; ++j)
            os << (j ? " " : "") << (*this)(i, j);
        os << "]\n";
    }
    return os.str();
}

QMatrix kron(const QMatrix &a, const QMatrix &b) {
    QMatrix k(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) {
            if (a(i, j).is_zero())
                continue;
            for (std::size_t p = 0; p < b.rows(); ++p)
                for (std::size_t q = 0; q < b.cols(); ++q)
                    k(i * b.rows() + p, j * b.cols() + q) = a(i, j) * b(p, q);
        }
    return k;
}

} // namespace gl11
