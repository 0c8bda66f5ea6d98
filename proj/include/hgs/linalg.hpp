#pragma once

// Dense exact linear algebra over Q and Z (GMP-backed).

#include <gmpxx.h>

#include <algorithm>
#include <cstddef>
#include <optional>
#include <span>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hgs/errors.hpp"

namespace hgs {

using Q = mpq_class;
using Z = mpz_class;
using QVector = std::vector<Q>;
using ZVector = std::vector<Z>;

/// Parses "p", "-p" or "p/q" into a canonical rational.
inline Q parse_rational(std::string_view text) {
    std::string s(text);
    auto bad = [&] { return DomainError("malformed rational '" + s + "'"); };
    if (s.empty()) throw bad();
    auto slash = s.find('/');
    auto valid_int = [](std::string_view d) {
        if (!d.empty() && (d.front() == '-' || d.front() == '+')) d.remove_prefix(1);
        return !d.empty() && std::all_of(d.begin(), d.end(), [](char c) { return c >= '0' && c <= '9'; });
    };
    Q q;
    if (slash == std::string::npos) {
        if (!valid_int(s)) throw bad();
        q = Q(Z(s[0] == '+' ? s.substr(1) : s));
    } else {
        auto num = s.substr(0, slash), den = s.substr(slash + 1);
        if (!valid_int(num) || !valid_int(den) || den[0] == '-' || den[0] == '+') throw bad();
        Z d(den);
        if (d == 0) throw DomainError("zero denominator in '" + s + "'");
        q = Q(Z(num[0] == '+' ? num.substr(1) : num), d);
        q.canonicalize();
    }
    return q;
}

inline std::string to_string(const Q& q) { return q.get_str(); }
inline std::string to_string(const Z& z) { return z.get_str(); }

template <class T>
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols, const T& fill = T(0))
        : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
        return m;
    }

    static Matrix from_rows(const std::vector<std::vector<T>>& rows, std::size_t cols) {
        Matrix m(rows.size(), cols);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (rows[i].size() != cols) throw DomainError("ragged matrix rows");
            std::copy(rows[i].begin(), rows[i].end(), m.data_.begin() + i * cols);
        }
        return m;
    }

    static Matrix from_columns(const std::vector<std::vector<T>>& columns, std::size_t rows) {
        Matrix m(rows, columns.size());
        for (std::size_t j = 0; j < columns.size(); ++j) {
            if (columns[j].size() != rows) throw DomainError("ragged matrix columns");
            for (std::size_t i = 0; i < rows; ++i) m(i, j) = columns[j][i];
        }
        return m;
    }

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    std::span<T> row(std::size_t i) { return {data_.data() + i * cols_, cols_}; }
    std::span<const T> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }

    std::vector<T> row_vector(std::size_t i) const { return {row(i).begin(), row(i).end()}; }
    std::vector<T> column(std::size_t j) const {
        std::vector<T> c(rows_);
        for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
        return c;
    }

    void swap_rows(std::size_t a, std::size_t b) {
        if (a == b) return;
        for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
    }

    Matrix transpose() const {
        Matrix t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    bool is_square() const noexcept { return rows_ == cols_; }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.cols_ != b.rows_) throw DomainError("matrix dimension mismatch in product");
        Matrix c(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const T& aik = a(i, k);
                if (aik == 0) continue;
                for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += aik * b(k, j);
            }
        return c;
    }

    friend std::vector<T> operator*(const Matrix& a, const std::vector<T>& v) {
        if (a.cols_ != v.size()) throw DomainError("matrix-vector dimension mismatch");
        std::vector<T> out(a.rows_, T(0));
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t j = 0; j < a.cols_; ++j)
                if (v[j] != 0) out[i] += a(i, j) * v[j];
        return out;
    }

    friend Matrix operator+(Matrix a, const Matrix& b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw DomainError("matrix dimension mismatch in sum");
        for (std::size_t k = 0; k < a.data_.size(); ++k) a.data_[k] += b.data_[k];
        return a;
    }

    friend Matrix operator-(Matrix a, const Matrix& b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw DomainError("matrix dimension mismatch in difference");
        for (std::size_t k = 0; k < a.data_.size(); ++k) a.data_[k] -= b.data_[k];
        return a;
    }

    Matrix scaled(const T& c) const {
        Matrix r = *this;
        for (auto& x : r.data_) x *= c;
        return r;
    }

    T trace() const {
        T s(0);
        for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) s += (*this)(i, i);
        return s;
    }

    /// Stacks `other` below this matrix.
    void append_rows(const Matrix& other) {
        if (rows_ == 0 && cols_ == 0) cols_ = other.cols_;
        if (other.cols_ != cols_) throw DomainError("column mismatch when stacking");
        data_.insert(data_.end(), other.data_.begin(), other.data_.end());
        rows_ += other.rows_;
    }

    void append_row(std::span<const T> r) {
        if (rows_ == 0 && cols_ == 0) cols_ = r.size();
        if (r.size() != cols_) throw DomainError("column mismatch when appending row");
        data_.insert(data_.end(), r.begin(), r.end());
        ++rows_;
    }

    const std::vector<T>& data() const noexcept { return data_; }

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<T> data_;
};

using QMatrix = Matrix<Q>;
using ZMatrix = Matrix<Z>;

struct EchelonForm {
    QMatrix reduced;
    std::vector<std::size_t> pivots;  // pivot column of each nonzero row
};

/// Reduced row echelon form over Q.
inline EchelonForm rref(QMatrix m) {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t p = r;
        while (p < m.rows() && m(p, c) == 0) ++p;
        if (p == m.rows()) continue;
        m.swap_rows(p, r);
        Q inv = 1 / m(r, c);
        for (std::size_t j = c; j < m.cols(); ++j) m(r, j) *= inv;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == r || m(i, c) == 0) continue;
            Q f = m(i, c);
            for (std::size_t j = c; j < m.cols(); ++j) m(i, j) -= f * m(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    return {std::move(m), std::move(pivots)};
}

inline std::size_t rank(const QMatrix& m) { return rref(m).pivots.size(); }

/// Basis of the right kernel {v : m v = 0}; one vector per free column, with that
/// free coordinate equal to 1.
inline std::vector<QVector> nullspace(const QMatrix& m) {
    auto [r, pivots] = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto p : pivots) is_pivot[p] = true;
    std::vector<QVector> basis;
    for (std::size_t f = 0; f < m.cols(); ++f) {
        if (is_pivot[f]) continue;
        QVector v(m.cols(), Q(0));
        v[f] = 1;
        for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -r(i, f);
        basis.push_back(std::move(v));
    }
    return basis;
}

/// Solves a x = b. Returns nullopt when inconsistent; throws when the solution is not unique.
inline std::optional<QVector> solve(const QMatrix& a, const QVector& b) {
    if (b.size() != a.rows()) throw DomainError("solve: right-hand side has wrong length");
    QMatrix aug(a.rows(), a.cols() + 1);
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) aug(i, j) = a(i, j);
        aug(i, a.cols()) = b[i];
    }
    auto [r, pivots] = rref(std::move(aug));
    if (!pivots.empty() && pivots.back() == a.cols()) return std::nullopt;
    if (pivots.size() != a.cols()) throw DomainError("solve: system is underdetermined");
    QVector x(a.cols());
    for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = r(i, a.cols());
    return x;
}

inline QMatrix inverse(const QMatrix& m) {
    if (!m.is_square()) throw DomainError("inverse of a non-square matrix");
    const std::size_t n = m.rows();
    QMatrix aug(n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
        aug(i, n + i) = 1;
    }
    auto [r, pivots] = rref(std::move(aug));
    if (pivots.size() < n || pivots[n - 1] != n - 1) throw DomainError("matrix is singular");
    QMatrix inv(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv(i, j) = r(i, n + j);
    return inv;
}

inline Q determinant(QMatrix m) {
    if (!m.is_square()) throw DomainError("determinant of a non-square matrix");
    Q det = 1;
    const std::size_t n = m.rows();
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && m(p, c) == 0) ++p;
        if (p == n) return 0;
        if (p != c) {
            m.swap_rows(p, c);
            det = -det;
        }
        det *= m(c, c);
        for (std::size_t i = c + 1; i < n; ++i) {
            if (m(i, c) == 0) continue;
            Q f = m(i, c) / m(c, c);
            for (std::size_t j = c; j < n; ++j) m(i, j) -= f * m(c, j);
        }
    }
    return det;
}

/// Fraction-free (Bareiss) determinant of an integer matrix.
inline Z determinant(ZMatrix m) {
    if (!m.is_square()) throw DomainError("determinant of a non-square matrix");
    const std::size_t n = m.rows();
    if (n == 0) return 1;
    Z prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m(k, k) == 0) {
            std::size_t p = k + 1;
            while (p < n && m(p, k) == 0) ++p;
            if (p == n) return 0;
            m.swap_rows(p, k);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j) {
                m(i, j) = m(i, j) * m(k, k) - m(i, k) * m(k, j);
                mpz_divexact(m(i, j).get_mpz_t(), m(i, j).get_mpz_t(), prev.get_mpz_t());
            }
        prev = m(k, k);
    }
    return sign * m(n - 1, n - 1);
}

inline QMatrix to_rational(const ZMatrix& m) {
    QMatrix q(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) q(i, j) = m(i, j);
    return q;
}

inline bool is_integral(const Q& q) { return q.get_den() == 1; }

inline bool is_integral(const QVector& v) {
    return std::all_of(v.begin(), v.end(), [](const Q& q) { return is_integral(q); });
}

inline bool is_integral(const QMatrix& m) {
    return std::all_of(m.data().begin(), m.data().end(), [](const Q& q) { return is_integral(q); });
}

/// Least common multiple of all denominators.
inline Z common_denominator(std::span<const Q> values) {
    Z d = 1;
    for (const auto& q : values) mpz_lcm(d.get_mpz_t(), d.get_mpz_t(), q.get_den_mpz_t());
    return d;
}

/// Coordinates relative to a set of linearly independent columns.
class ColumnBasis {
public:
    ColumnBasis() = default;
    explicit ColumnBasis(QMatrix columns) : b_(std::move(columns)) {
        const std::size_t k = b_.cols();
        auto pivots = rref(b_.transpose()).pivots;
        if (pivots.size() != k) throw DomainError("basis vectors are linearly dependent");
        QMatrix square(k, k);
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < k; ++j) square(i, j) = b_(pivots[i], j);
        QMatrix inv = inverse(square);
        left_inverse_ = QMatrix(k, b_.rows());
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t r = 0; r < k; ++r) left_inverse_(i, pivots[r]) = inv(i, r);
    }

    std::size_t size() const noexcept { return b_.cols(); }
    std::size_t ambient() const noexcept { return b_.rows(); }
    const QMatrix& matrix() const noexcept { return b_; }

    /// nullopt when v is outside the span.
    std::optional<QVector> coordinates(const QVector& v) const {
        QVector c = left_inverse_ * v;
        if (b_ * c != v) return std::nullopt;
        return c;
    }

    QVector combine(const QVector& c) const { return b_ * c; }

private:
    QMatrix b_;
    QMatrix left_inverse_;
};

template <class T>
std::string to_string(const Matrix<T>& m) {
    std::ostringstream os;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        os << '[';
        for (std::size_t j = 0; j < m.cols(); ++j) os << (j ? " " : "") << m(i, j).get_str();
        os << "]\n";
    }
    return os.str();
}

}  // namespace hgs
