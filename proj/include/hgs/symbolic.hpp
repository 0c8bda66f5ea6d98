#pragma once

// The transition matrix T_N with one indeterminate y_k per coset k, and its
// exact determinant as an integer polynomial.

#include <algorithm>
#include <cstddef>
#include <map>
#include <numeric>
#include <string>
#include <vector>

#include "hgs/errors.hpp"
#include "hgs/perm_core.hpp"
#include "hgs/polynomial.hpp"

namespace hgs {

inline constexpr std::size_t kMaxSymbolicSize = 8;
inline constexpr std::size_t kMaxLeibnizSize = 6;

/// Square matrix whose (row, column) entry is a coset index k, standing for y_k.
struct CosetVariableMatrix {
    std::size_t size = 0;
    std::vector<std::size_t> entries;    // row-major
    std::vector<std::size_t> row_order;  // element index in N of each row
    std::vector<std::size_t> col_order;  // coset of each column

    std::size_t operator()(std::size_t r, std::size_t c) const { return entries[r * size + c]; }
    std::vector<std::size_t> row(std::size_t r) const {
        return {entries.begin() + static_cast<std::ptrdiff_t>(r * size),
                entries.begin() + static_cast<std::ptrdiff_t>((r + 1) * size)};
    }
    friend bool operator==(const CosetVariableMatrix&, const CosetVariableMatrix&) = default;
};

/// Rows follow N's element order, columns follow X; entry(eta, k) = eta(k).
inline CosetVariableMatrix build_T(const RegularSubgroup& N) {
    CosetVariableMatrix T;
    T.size = N.size();
    T.entries.reserve(T.size * T.size);
    for (std::size_t r = 0; r < N.size(); ++r) {
        T.row_order.push_back(r);
        for (std::size_t c = 0; c < N.size(); ++c) T.entries.push_back(N.element(r)(c));
    }
    T.col_order.resize(T.size);
    std::iota(T.col_order.begin(), T.col_order.end(), std::size_t{0});
    return T;
}

/// Rows sorted lexicographically by their entry tuples (row_order permuted alongside).
inline CosetVariableMatrix sorted_rows(const CosetVariableMatrix& T) {
    std::vector<std::size_t> perm(T.size);
    std::iota(perm.begin(), perm.end(), std::size_t{0});
    std::sort(perm.begin(), perm.end(), [&](std::size_t a, std::size_t b) { return T.row(a) < T.row(b); });
    CosetVariableMatrix S;
    S.size = T.size;
    S.col_order = T.col_order;
    for (auto r : perm) {
        auto row = T.row(r);
        S.entries.insert(S.entries.end(), row.begin(), row.end());
        S.row_order.push_back(T.row_order[r]);
    }
    return S;
}

inline IntPolynomial leibniz_determinant(const CosetVariableMatrix& T) {
    const std::size_t n = T.size;
    if (n > kMaxLeibnizSize)
        throw CapabilityError("Leibniz expansion is limited to size " + std::to_string(kMaxLeibnizSize));
    std::map<Exponents, long long> acc;
    std::vector<std::size_t> sigma(n);
    std::iota(sigma.begin(), sigma.end(), std::size_t{0});
    do {
        int inversions = 0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j) inversions += sigma[i] > sigma[j];
        Exponents e(n, 0);
        for (std::size_t i = 0; i < n; ++i) ++e[T(i, sigma[i])];
        acc[e] += (inversions % 2) ? -1 : 1;
    } while (std::next_permutation(sigma.begin(), sigma.end()));
    IntPolynomial p(n);
    for (const auto& [e, c] : acc) p.add_term(e, mpz_class(static_cast<long>(c)));
    return p;
}

/// Division-free Laplace expansion over column subsets: the minor on the first k rows
/// and column set S is built from the minors on k-1 rows.
inline IntPolynomial minor_expansion_determinant(const CosetVariableMatrix& T) {
    const std::size_t n = T.size;
    if (n > kMaxSymbolicSize)
        throw CapabilityError("symbolic determinants are limited to size " + std::to_string(kMaxSymbolicSize));
    if (n == 0) return IntPolynomial::constant(1, 0);
    std::vector<IntPolynomial> minor(std::size_t{1} << n, IntPolynomial(n));
    minor[0] = IntPolynomial::constant(1, n);
    for (std::size_t S = 1; S < minor.size(); ++S) {
        const std::size_t k = static_cast<std::size_t>(__builtin_popcountll(S));
        const std::size_t r = k - 1;  // expand along the last row of the k-row block
        std::size_t pos = 0;
        for (std::size_t j = 0; j < n; ++j) {
            if (!(S >> j & 1)) continue;
            const int sign = ((r + pos) % 2) ? -1 : 1;
            minor[S] += minor[S & ~(std::size_t{1} << j)].times_variable(T(r, j), sign);
            ++pos;
        }
    }
    return minor.back();
}

inline IntPolynomial det_symbolic(const CosetVariableMatrix& T) {
    if (T.size > kMaxSymbolicSize)
        throw CapabilityError("symbolic determinants are limited to size " + std::to_string(kMaxSymbolicSize));
    return T.size <= kMaxLeibnizSize ? leibniz_determinant(T) : minor_expansion_determinant(T);
}

struct DetIdentity {
    IntPolynomial det;           // of T_N with rows sorted
    IntPolynomial det_opposite;  // of T_N' with rows sorted
    bool polynomials_equal = false;
    /// Row-sorted T_N' is the transpose of row-sorted T_N.
    bool transpose_witness = false;
    /// row_witness[k] = index in N' of the element carrying row k of sorted T_N'.
    std::vector<std::size_t> row_witness;

    bool holds() const { return polynomials_equal && transpose_witness; }
};

inline DetIdentity verify_det_identity(const RegularSubgroup& N) {
    const RegularSubgroup Np = opposite(N);
    const auto T = sorted_rows(build_T(N));
    const auto Tp = sorted_rows(build_T(Np));
    DetIdentity r{det_symbolic(T), det_symbolic(Tp), false, true, Tp.row_order};
    r.polynomials_equal = r.det == r.det_opposite;
    for (std::size_t i = 0; i < T.size && r.transpose_witness; ++i)
        for (std::size_t j = 0; j < T.size; ++j)
            if (Tp(i, j) != T(j, i)) {
                r.transpose_witness = false;
                break;
            }
    return r;
}

}  // namespace hgs
