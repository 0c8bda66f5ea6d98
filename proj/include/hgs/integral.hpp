#pragma once

// Fractional ideals of O_L, associated orders in H, bounded freeness search and the
// transfer of free generators between H and the opposite algebra.

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hgs/descent.hpp"
#include "hgs/errors.hpp"
#include "hgs/lattice.hpp"
#include "hgs/linalg.hpp"

namespace hgs {

inline constexpr int kDefaultFreenessBound = 3;

/// A full-rank O_L-stable lattice in L-coordinates.
struct FractionalIdeal {
    std::string name;
    IntegerLattice lattice;
};

/// Builds the ideal spanned by `generators` (L-coordinates) and checks O_L-stability.
inline FractionalIdeal make_ideal(const Extension& ext, std::string name, const std::vector<QVector>& generators,
                                  const IntegerLattice& OL) {
    IntegerLattice B = IntegerLattice::from_generators(generators, ext.m());
    std::vector<std::string> problems;
    const auto ob = OL.basis();
    const auto bb = B.basis();
    for (std::size_t i = 0; i < ob.size(); ++i) {
        const QMatrix M = ext.L_multiplication(ext.from_L(ob[i]));
        for (std::size_t j = 0; j < bb.size(); ++j)
            if (!B.contains(M * bb[j]))
                problems.push_back("ideal '" + name + "' is not O_L-stable: O_L basis element " + std::to_string(i) +
                                   " times ideal basis element " + std::to_string(j) + " leaves the lattice");
    }
    if (!problems.empty()) throw ValidationError(problems);
    return {std::move(name), std::move(B)};
}

/// Action matrices rewritten in the basis of B.
inline std::vector<QMatrix> actions_in_basis(const DescendedHopfAlgebra& H, const IntegerLattice& B) {
    const QMatrix P = B.basis_columns();
    const QMatrix Pinv = inverse(P);
    std::vector<QMatrix> out;
    for (const auto& A : H.actions) out.push_back(Pinv * A * P);
    return out;
}

struct AssociatedOrder {
    IntegerLattice lattice;  // in H-coordinates
};

/// {c : sum c_i A_i maps B into B}, the dual of the row lattice of the stacking map.
inline AssociatedOrder associated_order(const DescendedHopfAlgebra& H, const FractionalIdeal& B) {
    const std::size_t m = H.dim();
    const auto Abar = actions_in_basis(H, B.lattice);
    std::vector<QVector> rows;
    for (std::size_t r = 0; r < m; ++r)
        for (std::size_t c = 0; c < m; ++c) {
            QVector s(m);
            for (std::size_t i = 0; i < m; ++i) s[i] = Abar[i](r, c);
            rows.push_back(std::move(s));
        }
    if (rank(QMatrix::from_rows(rows, m)) != m) throw InternalError("stacking map of the action is not injective");
    const IntegerLattice Lambda = IntegerLattice::from_generators(rows, m);
    AssociatedOrder A{Lambda.dual()};

    const auto basis = A.lattice.basis();
    if (!A.lattice.contains(H.identity)) throw InternalError("associated order does not contain 1");
    for (const auto& a : basis) {
        QMatrix S(m, m);
        for (std::size_t i = 0; i < m; ++i)
            if (a[i] != 0) S = S + Abar[i].scaled(a[i]);
        if (!is_integral(S)) throw InternalError("associated order element does not stabilize the ideal");
        for (const auto& b : basis)
            if (!A.lattice.contains(H.multiply(a, b)))
                throw InternalError("associated order is not closed under multiplication");
    }
    // Stabilizing gives A inside Lambda^*; equal covolumes give equality, i.e. maximality.
    if (A.lattice.covolume() * Lambda.covolume() != 1) throw InternalError("associated order is not maximal");
    return A;
}

/// W_k = Abar(a_k) for the Z-basis a_k of the order; all integral.
inline std::vector<ZMatrix> witness_matrices(const DescendedHopfAlgebra& H, const AssociatedOrder& A,
                                             const FractionalIdeal& B) {
    const std::size_t m = H.dim();
    const auto Abar = actions_in_basis(H, B.lattice);
    std::vector<ZMatrix> out;
    for (const auto& a : A.lattice.basis()) {
        QMatrix S(m, m);
        for (std::size_t i = 0; i < m; ++i)
            if (a[i] != 0) S = S + Abar[i].scaled(a[i]);
        if (!is_integral(S)) throw InternalError("order element does not stabilize the ideal");
        ZMatrix Z(m, m);
        for (std::size_t r = 0; r < m; ++r)
            for (std::size_t c = 0; c < m; ++c) Z(r, c) = S(r, c).get_num();
        out.push_back(std::move(Z));
    }
    return out;
}

namespace detail {

inline Z witness_determinant(const std::vector<ZMatrix>& W, const std::vector<Z>& v) {
    const std::size_t m = v.size();
    ZMatrix M(m, m);
    for (std::size_t k = 0; k < W.size(); ++k)
        for (std::size_t r = 0; r < m; ++r) {
            Z s = 0;
            for (std::size_t c = 0; c < m; ++c)
                if (v[c] != 0) s += W[k](r, c) * v[c];
            M(r, k) = s;
        }
    return determinant(std::move(M));
}

}  // namespace detail

/// A . x = B, with x given in L-coordinates.
inline bool check_witness(const DescendedHopfAlgebra& H, const AssociatedOrder& A, const FractionalIdeal& B,
                          const QVector& x) {
    if (!B.lattice.contains(x)) return false;
    std::vector<QVector> images;
    for (const auto& a : A.lattice.basis()) images.push_back(H.action_of(a) * x);
    if (rank(QMatrix::from_rows(images, x.size())) != x.size()) return false;
    return IntegerLattice::from_generators(images, x.size()) == B.lattice;
}

struct FreenessResult {
    enum class Verdict { Free, Unknown };
    Verdict verdict = Verdict::Unknown;
    QVector witness_in_B;  // coordinates in the HNF basis of B
    QVector witness;       // L-coordinates
    std::size_t scanned = 0;

    bool free() const noexcept { return verdict == Verdict::Free; }
};

/// Scans x = sum v_j b_j over the HNF basis of B with |v|_inf <= bound, in lexicographic
/// order of v, and returns the first x with det[a_k . x] = +-1.
inline FreenessResult freeness_search(const DescendedHopfAlgebra& H, const AssociatedOrder& A,
                                      const FractionalIdeal& B, int bound = kDefaultFreenessBound) {
    FreenessResult res;
    if (bound < 1) return res;
    const std::size_t m = H.dim();
    const auto W = witness_matrices(H, A, B);
    std::vector<Z> v(m, Z(-bound));
    while (true) {
        ++res.scanned;
        Z det = detail::witness_determinant(W, v);
        if (det == 1 || det == -1) {
            for (const auto& c : v) res.witness_in_B.push_back(Q(c));
            res.witness = B.lattice.basis_columns() * res.witness_in_B;
            if (!check_witness(H, A, B, res.witness))
                throw InternalError("unit-determinant witness failed lattice re-verification");
            res.verdict = FreenessResult::Verdict::Free;
            return res;
        }
        std::size_t i = m;
        while (i > 0 && v[i - 1] == bound) v[--i] = -bound;
        if (i == 0) break;
        ++v[i - 1];
    }
    return res;
}

/// The unique z in H' with z . x = a . x; x must generate L over H'.
inline QVector z_transfer(const DescendedHopfAlgebra& H, const QVector& a, const QVector& x,
                          const DescendedHopfAlgebra& Hp) {
    const std::size_t m = x.size();
    std::vector<QVector> cols;
    for (const auto& Ap : Hp.actions) cols.push_back(Ap * x);
    const QMatrix M = QMatrix::from_columns(cols, m);
    if (rank(M) != m) throw DomainError("z_transfer: x does not generate L over the opposite algebra");
    return *solve(M, H.action_of(a) * x);
}

struct TransferCertificate {
    bool commutative = false;  // H and H' coincide
    FreenessResult side;
    FreenessResult opposite_side;
    std::optional<bool> forward_transfer;   // witness of side works for the opposite
    std::optional<bool> backward_transfer;  // and conversely
    std::optional<bool> z_lattice_identity;
    std::optional<bool> commuting_transport;
    std::optional<IntegerLattice> order;
    std::optional<IntegerLattice> opposite_order;

    bool holds() const {
        auto ok = [](const std::optional<bool>& b) { return !b || *b; };
        return side.free() == opposite_side.free() && ok(forward_transfer) && ok(backward_transfer) &&
               ok(z_lattice_identity) && ok(commuting_transport);
    }
};

/// Freeness over A_H and A_H' decided together: a witness on one side must work on the other,
/// and when one exists the z_a lattice equals A_H'.
inline TransferCertificate freeness_transfer_certificate(const DescendedHopfAlgebra& H,
                                                         const DescendedHopfAlgebra& Hp, const FractionalIdeal& B,
                                                         int bound = kDefaultFreenessBound) {
    TransferCertificate cert;
    cert.commutative = H.N == Hp.N;
    const AssociatedOrder A = associated_order(H, B);
    const AssociatedOrder Ap = associated_order(Hp, B);
    cert.order = A.lattice;
    cert.opposite_order = Ap.lattice;
    cert.side = freeness_search(H, A, B, bound);
    cert.opposite_side = freeness_search(Hp, Ap, B, bound);

    if (cert.side.free()) {
        cert.forward_transfer = check_witness(Hp, Ap, B, cert.side.witness);
        if (!*cert.forward_transfer)
            throw TransferViolationError("free generator over A_H is not a free generator over A_H'");
    }
    if (cert.opposite_side.free()) {
        cert.backward_transfer = check_witness(H, A, B, cert.opposite_side.witness);
        if (!*cert.backward_transfer)
            throw TransferViolationError("free generator over A_H' is not a free generator over A_H");
    }
    if (cert.side.free()) {
        const QVector& x = cert.side.witness;
        const auto basis = A.lattice.basis();
        std::vector<QVector> zs;
        for (const auto& a : basis) zs.push_back(z_transfer(H, a, x, Hp));
        cert.z_lattice_identity = IntegerLattice::from_generators(zs, H.dim()) == Ap.lattice;
        bool transport = true;
        for (std::size_t i = 0; i < basis.size() && transport; ++i) {
            const QMatrix Z = Hp.action_of(zs[i]);
            for (const auto& w : basis) {
                const QMatrix Wm = H.action_of(w);
                if (Z * (Wm * x) != Wm * (Z * x)) {
                    transport = false;
                    break;
                }
            }
        }
        cert.commuting_transport = transport;
    }
    return cert;
}

}  // namespace hgs
