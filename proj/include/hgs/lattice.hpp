#pragma once

// Full-rank lattices in Q^m, stored as (1/d) * rowspan(H) with H in Hermite normal form.

#include <cstddef>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "hgs/errors.hpp"
#include "hgs/linalg.hpp"

namespace hgs {

/// Row-style Hermite normal form of the integer row span: upper triangular, positive
/// pivots, entries above each pivot reduced into [0, pivot). Zero rows are dropped.
inline ZMatrix hermite_normal_form(ZMatrix a) {
    const std::size_t rows = a.rows(), cols = a.cols();
    std::size_t r = 0;
    std::vector<std::size_t> pivot_cols;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        // Euclid down the column until only row r is nonzero.
        while (true) {
            std::size_t best = rows;
            for (std::size_t i = r; i < rows; ++i)
                if (a(i, c) != 0 && (best == rows || abs(a(i, c)) < abs(a(best, c)))) best = i;
            if (best == rows) break;
            a.swap_rows(best, r);
            bool done = true;
            for (std::size_t i = r + 1; i < rows; ++i) {
                if (a(i, c) == 0) continue;
                Z q;
                mpz_fdiv_q(q.get_mpz_t(), a(i, c).get_mpz_t(), a(r, c).get_mpz_t());
                for (std::size_t j = c; j < cols; ++j) a(i, j) -= q * a(r, j);
                if (a(i, c) != 0) done = false;
            }
            if (done) break;
        }
        if (a(r, c) == 0) continue;
        if (a(r, c) < 0)
            for (std::size_t j = c; j < cols; ++j) a(r, j) = -a(r, j);
        for (std::size_t i = 0; i < r; ++i) {
            Z q;
            mpz_fdiv_q(q.get_mpz_t(), a(i, c).get_mpz_t(), a(r, c).get_mpz_t());
            if (q != 0)
                for (std::size_t j = c; j < cols; ++j) a(i, j) -= q * a(r, j);
        }
        pivot_cols.push_back(c);
        ++r;
    }
    ZMatrix out(r, cols);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < cols; ++j) out(i, j) = a(i, j);
    return out;
}

class IntegerLattice {
public:
    /// Lattice spanned by the given vectors; they must span Q^dim.
    static IntegerLattice from_generators(const std::vector<QVector>& gens, std::size_t dim) {
        Z d = 1;
        for (const auto& v : gens) {
            if (v.size() != dim) throw DomainError("lattice generator has the wrong dimension");
            d = lcm(d, common_denominator(v));
        }
        ZMatrix a(gens.size(), dim);
        for (std::size_t i = 0; i < gens.size(); ++i)
            for (std::size_t j = 0; j < dim; ++j) {
                Q scaled = gens[i][j] * d;
                a(i, j) = scaled.get_num();
            }
        ZMatrix h = hermite_normal_form(std::move(a));
        if (h.rows() != dim) throw DomainError("lattice generators do not have full rank");
        IntegerLattice L;
        L.dim_ = dim;
        // Canonical scale: gcd(content(H), d) = 1.
        Z g = d;
        for (const auto& x : h.data()) g = gcd(g, x);
        L.denominator_ = d / g;
        L.hnf_ = ZMatrix(dim, dim);
        for (std::size_t i = 0; i < dim; ++i)
            for (std::size_t j = 0; j < dim; ++j) L.hnf_(i, j) = h(i, j) / g;
        return L;
    }

    static IntegerLattice standard(std::size_t dim) {
        std::vector<QVector> e;
        for (std::size_t i = 0; i < dim; ++i) e.push_back(QMatrix::identity(dim).column(i));
        return from_generators(e, dim);
    }

    std::size_t dim() const noexcept { return dim_; }
    const ZMatrix& hnf() const noexcept { return hnf_; }
    const Z& denominator() const noexcept { return denominator_; }

    /// Basis vectors (rows of hnf / denominator).
    std::vector<QVector> basis() const {
        std::vector<QVector> out;
        for (std::size_t i = 0; i < dim_; ++i) {
            QVector v(dim_);
            for (std::size_t j = 0; j < dim_; ++j) {
                v[j] = Q(hnf_(i, j), denominator_);
                v[j].canonicalize();
            }
            out.push_back(std::move(v));
        }
        return out;
    }

    /// Basis vectors as the columns of a matrix.
    QMatrix basis_columns() const { return QMatrix::from_columns(basis(), dim_); }

    bool contains(const QVector& v) const {
        if (v.size() != dim_) return false;
        // Back-substitution against the upper-triangular basis.
        QVector rest = v;
        for (std::size_t i = 0; i < dim_; ++i) {
            // Row i has its pivot in column i (full rank).
            Q coeff = rest[i] * denominator_ / hnf_(i, i);
            if (!is_integral(coeff)) return false;
            for (std::size_t j = i; j < dim_; ++j) rest[j] -= coeff * Q(hnf_(i, j), denominator_);
        }
        return true;
    }

    bool contains(const IntegerLattice& other) const {
        for (const auto& v : other.basis())
            if (!contains(v)) return false;
        return true;
    }

    /// {v : <v, w> in Z for all w in this lattice}.
    IntegerLattice dual() const {
        QMatrix inv = inverse(basis_columns().transpose());
        std::vector<QVector> cols;
        for (std::size_t j = 0; j < dim_; ++j) cols.push_back(inv.column(j));
        return from_generators(cols, dim_);
    }

    /// Absolute value of the determinant of a basis.
    Q covolume() const {
        Q v = 1;
        for (std::size_t i = 0; i < dim_; ++i) v *= Q(hnf_(i, i), denominator_);
        v.canonicalize();
        return v;
    }

    friend bool operator==(const IntegerLattice& a, const IntegerLattice& b) {
        return a.dim_ == b.dim_ && a.denominator_ == b.denominator_ && a.hnf_ == b.hnf_;
    }

    std::string to_string() const {
        std::ostringstream os;
        os << "denominator " << denominator_.get_str() << '\n' << hgs::to_string(hnf_);
        return os.str();
    }

private:
    IntegerLattice() = default;

    std::size_t dim_ = 0;
    ZMatrix hnf_;
    Z denominator_ = 1;
};

}  // namespace hgs
