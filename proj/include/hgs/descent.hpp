#pragma once

// The algebra M = Map(X, E), descent of E[N] to H = E[N]^G, and the action of H on L.

#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "hgs/errors.hpp"
#include "hgs/linalg.hpp"
#include "hgs/number_field.hpp"
#include "hgs/perm_core.hpp"
#include "hgs/polynomial.hpp"

namespace hgs {

/// c[i][j] = coordinates of e_i e_j in the basis e.
using StructureConstants = std::vector<std::vector<QVector>>;

/// E/Q Galois with group G, the coset space X = G/G_L and the subfield L = E^{G_L}.
class Extension {
public:
    Extension(GaloisField field, CosetSpace X)
        : field_(std::move(field)), X_(std::move(X)), lambda_(X_), L_(field_.fixed_subfield(X_.stabilizer)) {
        if (field_.group().elements() != X_.group.elements())
            throw InternalError("coset space and field were built over different groups");
    }

    const GaloisField& field() const noexcept { return field_; }
    const NumberField& E() const noexcept { return field_.field(); }
    const CosetSpace& cosets() const noexcept { return X_; }
    const LambdaEmbedding& lambda() const noexcept { return lambda_; }
    const SubfieldBasis& L() const noexcept { return L_; }
    std::size_t m() const noexcept { return L_.size(); }
    std::size_t n() const noexcept { return field_.degree(); }

    /// k[x]: the minimal representative of coset k applied to x.
    FieldElement coset_apply(std::size_t k, const FieldElement& x) const {
        return field_.apply(X_.representatives[k], x);
    }

    QVector L_coords(const FieldElement& x) const {
        auto c = L_.coordinates(x);
        if (!c) throw DomainError("element is not in L");
        return std::move(*c);
    }

    FieldElement from_L(const QVector& c) const { return L_.combine(c); }

    /// Matrix of y -> a*y on L, in L coordinates.
    QMatrix L_multiplication(const FieldElement& a) const {
        QMatrix M(m(), m());
        for (std::size_t j = 0; j < m(); ++j) {
            QVector col = L_coords(E().mul(a, L_[j]));
            for (std::size_t i = 0; i < m(); ++i) M(i, j) = col[i];
        }
        return M;
    }

private:
    GaloisField field_;
    CosetSpace X_;
    LambdaEmbedding lambda_;
    SubfieldBasis L_;
};

/// Seeded sampler for small-integer coordinates in [-9, 9].
class Sampler {
public:
    explicit Sampler(std::uint64_t seed = 0) : rng_(seed) {}

    QVector vector(std::size_t k) {
        QVector v(k);
        for (auto& q : v) q = static_cast<long>(rng_() % 19) - 9;
        return v;
    }

    FieldElement in_L(const Extension& ext) { return ext.from_L(vector(ext.m())); }
    FieldElement in_E(const NumberField& E) { return FieldElement(vector(E.degree())); }

private:
    std::mt19937_64 rng_;
};

/// Element of M = Map(X, E): one E-value per coset.
using MapAlgebraElement = std::vector<FieldElement>;

/// Indicator idempotent u_k.
inline MapAlgebraElement idempotent(const Extension& ext, std::size_t k) {
    MapAlgebraElement u(ext.m(), ext.E().zero());
    u.at(k) = ext.E().one();
    return u;
}

/// f_x = sum over cosets of g(x) u_g.
inline MapAlgebraElement embed_L_in_M(const Extension& ext, const FieldElement& x) {
    if (!ext.L().contains(x)) throw DomainError("embed_L_in_M: element is not fixed by G_L");
    MapAlgebraElement f;
    for (std::size_t k = 0; k < ext.m(); ++k) f.push_back(ext.coset_apply(k, x));
    return f;
}

inline MapAlgebraElement multiply(const Extension& ext, const MapAlgebraElement& a, const MapAlgebraElement& b) {
    MapAlgebraElement out;
    for (std::size_t k = 0; k < a.size(); ++k) out.push_back(ext.E().mul(a[k], b[k]));
    return out;
}

/// (eta . f)(k) = f(eta^-1(k)), so eta . u_k = u_{eta(k)}.
inline MapAlgebraElement permute(const Permutation& eta, const MapAlgebraElement& f) {
    MapAlgebraElement out(f.size());
    for (std::size_t k = 0; k < f.size(); ++k) out[eta(k)] = f[k];
    return out;
}

/// (g . f)(k) = g(f(lambda(g)^-1 k)): Galois on values, left translation on subscripts.
inline MapAlgebraElement galois_act(const Extension& ext, std::size_t g, const MapAlgebraElement& f) {
    const Permutation& lg = ext.lambda()(g);
    MapAlgebraElement out(f.size());
    for (std::size_t k = 0; k < f.size(); ++k) out[lg(k)] = ext.field().apply(g, f[k]);
    return out;
}

struct DescendedHopfAlgebra {
    RegularSubgroup N;
    /// Basis of H inside E[N]; entry [eta * n + i] is coordinate i of the coefficient of N.element(eta).
    std::vector<QVector> basis;
    ColumnBasis coordinates;          // H-coordinates of elements of E[N] lying in H
    std::vector<QMatrix> actions;     // action of each basis element on L
    StructureConstants structure;
    QVector identity;                 // H-coordinates of 1

    std::size_t dim() const noexcept { return basis.size(); }

    /// Action matrix of sum c_i h_i.
    QMatrix action_of(const QVector& c) const {
        QMatrix A(actions.front().rows(), actions.front().cols());
        for (std::size_t i = 0; i < c.size(); ++i)
            if (c[i] != 0) A = A + actions[i].scaled(c[i]);
        return A;
    }

    /// Coordinates of (sum a_i h_i)(sum b_j h_j).
    QVector multiply(const QVector& a, const QVector& b) const {
        QVector out(dim(), Q(0));
        for (std::size_t i = 0; i < dim(); ++i) {
            if (a[i] == 0) continue;
            for (std::size_t j = 0; j < dim(); ++j) {
                if (b[j] == 0) continue;
                const Q ab = a[i] * b[j];
                for (std::size_t k = 0; k < dim(); ++k) out[k] += ab * structure[i][j][k];
            }
        }
        return out;
    }
};

namespace detail {

inline FieldElement coefficient(const QVector& v, std::size_t eta, std::size_t n) {
    return FieldElement(QVector(v.begin() + static_cast<std::ptrdiff_t>(eta * n),
                                v.begin() + static_cast<std::ptrdiff_t>((eta + 1) * n)));
}

// Product in E[N] of flattened elements.
inline QVector group_algebra_product(const Extension& ext, const RegularSubgroup& N, const QVector& a,
                                     const QVector& b) {
    const std::size_t n = ext.n(), m = N.size();
    QVector out(m * n, Q(0));
    for (std::size_t s = 0; s < m; ++s) {
        FieldElement ca = coefficient(a, s, n);
        if (ca.is_zero()) continue;
        for (std::size_t t = 0; t < m; ++t) {
            FieldElement cb = coefficient(b, t, n);
            if (cb.is_zero()) continue;
            const std::size_t st = N.index_of(N.element(s) * N.element(t));
            FieldElement p = ext.E().mul(ca, cb);
            for (std::size_t i = 0; i < n; ++i) out[st * n + i] += p[i];
        }
    }
    return out;
}

// h . x for h flattened in E[N]: sum over eta of c_eta * (eta^-1(base))[x].
inline FieldElement act_raw(const Extension& ext, const RegularSubgroup& N, const QVector& h, const FieldElement& x) {
    const std::size_t n = ext.n();
    FieldElement y = ext.E().zero();
    for (std::size_t e = 0; e < N.size(); ++e) {
        FieldElement c = coefficient(h, e, n);
        if (c.is_zero()) continue;
        const std::size_t k = N.element(e).inverse()(N.base_point());
        y += ext.E().mul(c, ext.coset_apply(k, x));
    }
    return y;
}

}  // namespace detail

/// H = E[N]^G as the kernel of the stacked maps (g (x) conj(g) - id) over generators g.
inline DescendedHopfAlgebra descend(const Extension& ext, const RegularSubgroup& N) {
    const std::size_t m = ext.m(), n = ext.n();
    if (N.size() != m) throw DomainError("descend: N does not act regularly on X");
    if (!is_normalized_by(N, ext.lambda())) throw DomainError("descend: N is not normalized by lambda(G)");
    const FiniteGroup& G = ext.cosets().group;
    const std::size_t dim = m * n;

    QMatrix stacked(0, dim);
    for (std::size_t g : G.generators()) {
        const Permutation& lg = ext.lambda()(g);
        const QMatrix& Ag = ext.field().automorphism_matrix(g);
        QMatrix phi(dim, dim);
        for (std::size_t e = 0; e < m; ++e) {
            const std::size_t c = N.index_of(lg.conjugate(N.element(e)));
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j) phi(c * n + i, e * n + j) = Ag(i, j);
        }
        stacked.append_rows(phi - QMatrix::identity(dim));
    }
    DescendedHopfAlgebra H{N, {}, {}, {}, {}, {}};
    if (stacked.rows() == 0)
        for (std::size_t k = 0; k < dim; ++k) H.basis.push_back(QMatrix::identity(dim).column(k));
    else
        H.basis = nullspace(stacked);
    if (H.basis.size() != m)
        throw InternalError("descended algebra has dimension " + std::to_string(H.basis.size()) + ", expected " +
                            std::to_string(m));

    // E-span: the m basis elements are E-linearly independent in E[N] = E^m.
    std::vector<std::vector<FieldElement>> espan(m);
    for (std::size_t r = 0; r < m; ++r)
        for (std::size_t e = 0; e < m; ++e) espan[r].push_back(detail::coefficient(H.basis[r], e, n));
    if (ext.E().determinant(espan).is_zero()) throw InternalError("E-span of the descended basis is not E[N]");

    H.coordinates = ColumnBasis(QMatrix::from_columns(H.basis, dim));

    for (const auto& h : H.basis) {
        QMatrix A(m, m);
        for (std::size_t j = 0; j < m; ++j) {
            FieldElement y = detail::act_raw(ext, N, h, ext.L()[j]);
            auto col = ext.L().coordinates(y);
            if (!col) throw InternalError("action of H does not preserve L");
            for (std::size_t i = 0; i < m; ++i) A(i, j) = (*col)[i];
        }
        H.actions.push_back(std::move(A));
    }

    H.structure.assign(m, std::vector<QVector>(m));
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) {
            auto c = H.coordinates.coordinates(detail::group_algebra_product(ext, N, H.basis[i], H.basis[j]));
            if (!c) throw InternalError("descended algebra is not closed under multiplication");
            H.structure[i][j] = std::move(*c);
        }

    QVector one(dim, Q(0));
    one[N.index_of(Permutation::identity(m)) * n] = 1;
    auto id = H.coordinates.coordinates(one);
    if (!id) throw InternalError("identity of E[N] is not in H");
    H.identity = std::move(*id);
    return H;
}

/// h . x with h in H-coordinates and x in L.
inline FieldElement act(const Extension& ext, const DescendedHopfAlgebra& H, const QVector& h, const FieldElement& x) {
    QVector y = H.action_of(h) * ext.L_coords(x);
    return ext.from_L(y);
}

/// L (x) H -> End_Q(L), x (x) h -> (y -> x (h . y)), is bijective.
inline bool verify_hopf_galois(std::span<const QMatrix> actions, std::span<const QMatrix> L_mult) {
    const std::size_t m = L_mult.size();
    QMatrix big(0, m * m);
    for (const auto& X : L_mult)
        for (const auto& A : actions) {
            QMatrix P = X * A;
            big.append_row(P.data());
        }
    return big.rows() == m * m && rank(big) == m * m;
}

inline std::vector<QMatrix> L_multiplication_basis(const Extension& ext) {
    std::vector<QMatrix> out;
    for (const auto& b : ext.L().elements()) out.push_back(ext.L_multiplication(b));
    return out;
}

inline bool verify_hopf_galois(const Extension& ext, const DescendedHopfAlgebra& H) {
    return verify_hopf_galois(H.actions, L_multiplication_basis(ext));
}

inline bool verify_commuting(const DescendedHopfAlgebra& H1, const DescendedHopfAlgebra& H2) {
    for (const auto& A : H1.actions)
        for (const auto& B : H2.actions)
            if (A * B != B * A) return false;
    return true;
}

/// Numeric T_N(x): rows follow N, columns follow X, entry eta(k)[x].
inline std::vector<std::vector<FieldElement>> transition_matrix(const Extension& ext, const RegularSubgroup& N,
                                                               const FieldElement& x) {
    std::vector<std::vector<FieldElement>> T(N.size());
    for (std::size_t r = 0; r < N.size(); ++r)
        for (std::size_t k = 0; k < N.size(); ++k) T[r].push_back(ext.coset_apply(N.element(r)(k), x));
    return T;
}

/// Evaluates an integer polynomial in y_k at y_k = k[x].
inline FieldElement evaluate_at_cosets(const Extension& ext, const IntPolynomial& p, const FieldElement& x) {
    std::vector<FieldElement> y;
    for (std::size_t k = 0; k < p.variables(); ++k) y.push_back(ext.coset_apply(k, x));
    FieldElement sum = ext.E().zero();
    for (const auto& [e, c] : p.terms()) {
        FieldElement term = ext.E().constant(Q(c));
        for (std::size_t k = 0; k < e.size(); ++k)
            if (e[k]) term = ext.E().mul(term, ext.E().pow(y[k], e[k]));
        sum += term;
    }
    return sum;
}

/// {h_i . x} spans L. Cross-checked against det T_N(x) != 0.
inline bool is_generator(const Extension& ext, const DescendedHopfAlgebra& H, const FieldElement& x) {
    const QVector xc = ext.L_coords(x);
    std::vector<QVector> cols;
    for (const auto& A : H.actions) cols.push_back(A * xc);
    const bool by_rank = rank(QMatrix::from_columns(cols, ext.m())) == ext.m();
    const bool by_det = !ext.E().determinant(transition_matrix(ext, H.N, x)).is_zero();
    if (by_rank != by_det) throw InternalError("generator rank test disagrees with det T_N(x)");
    return by_rank;
}

struct MapLevelGenerator {
    bool over_group_algebra = false;  // f_x generates M over E[N]
    bool over_hopf_algebra = false;   // f_x generates M^G over H
};

inline MapLevelGenerator map_level_generator(const Extension& ext, const DescendedHopfAlgebra& H,
                                             const FieldElement& x) {
    const std::size_t m = ext.m(), n = ext.n();
    const MapAlgebraElement f = embed_L_in_M(ext, x);
    MapLevelGenerator r;
    std::vector<std::vector<FieldElement>> rows;
    for (const auto& eta : H.N.elements()) rows.push_back(permute(eta, f));
    r.over_group_algebra = !ext.E().determinant(rows).is_zero();

    QMatrix span(0, m * n);
    for (const auto& h : H.basis) {
        QVector flat(m * n, Q(0));
        for (std::size_t e = 0; e < m; ++e) {
            FieldElement c = detail::coefficient(h, e, n);
            if (c.is_zero()) continue;
            const MapAlgebraElement moved = permute(H.N.element(e), f);
            for (std::size_t k = 0; k < m; ++k) {
                FieldElement v = ext.E().mul(c, moved[k]);
                for (std::size_t i = 0; i < n; ++i) flat[k * n + i] += v[i];
            }
        }
        span.append_row(flat);
    }
    r.over_hopf_algebra = rank(span) == m;
    return r;
}

/// Nondegeneracy of (a, b) -> trace of left multiplication by ab.
inline bool is_separable(const StructureConstants& c) {
    const std::size_t m = c.size();
    QVector tr(m, Q(0));
    for (std::size_t k = 0; k < m; ++k)
        for (std::size_t l = 0; l < m; ++l) tr[k] += c[k][l][l];
    QMatrix gram(m, m);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j)
            for (std::size_t k = 0; k < m; ++k) gram(i, j) += c[i][j][k] * tr[k];
    return determinant(gram) != 0;
}

inline bool is_separable(const DescendedHopfAlgebra& H) { return is_separable(H.structure); }

/// Q[e]/(e^2) in the basis 1, e.
inline StructureConstants dual_numbers() {
    auto v = [](long a, long b) { return QVector{Q(a), Q(b)}; };
    return {{v(1, 0), v(0, 1)}, {v(0, 1), v(0, 0)}};
}

}  // namespace hgs
