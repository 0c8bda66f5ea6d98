#pragma once

// Exact arithmetic in E = Q[t]/(f) for a monic integer polynomial f, Galois
// automorphisms supplied as images of t, fixed subfields and traces.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hgs/errors.hpp"
#include "hgs/group.hpp"
#include "hgs/linalg.hpp"

namespace hgs {

/// Coordinates in the power basis 1, t, ..., t^(n-1).
class FieldElement {
public:
    FieldElement() = default;
    explicit FieldElement(QVector coords) : c_(std::move(coords)) {}

    std::size_t size() const noexcept { return c_.size(); }
    const QVector& coords() const noexcept { return c_; }
    const Q& operator[](std::size_t i) const { return c_[i]; }

    bool is_zero() const {
        return std::all_of(c_.begin(), c_.end(), [](const Q& q) { return q == 0; });
    }

    FieldElement& operator+=(const FieldElement& o) {
        for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
        return *this;
    }
    FieldElement& operator-=(const FieldElement& o) {
        for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
        return *this;
    }
    FieldElement& operator*=(const Q& s) {
        for (auto& x : c_) x *= s;
        return *this;
    }
    friend FieldElement operator+(FieldElement a, const FieldElement& b) { return a += b; }
    friend FieldElement operator-(FieldElement a, const FieldElement& b) { return a -= b; }
    friend FieldElement operator*(const Q& s, FieldElement a) { return a *= s; }
    FieldElement operator-() const {
        FieldElement r = *this;
        for (auto& x : r.c_) x = -x;
        return r;
    }
    friend bool operator==(const FieldElement&, const FieldElement&) = default;

    std::string to_string() const {
        std::string s = "[";
        for (std::size_t i = 0; i < c_.size(); ++i) s += (i ? ", " : "") + c_[i].get_str();
        return s + "]";
    }

private:
    QVector c_;
};

class NumberField {
public:
    /// `modulus` is low-degree-first, monic, of degree >= 1.
    explicit NumberField(ZVector modulus) : f_(std::move(modulus)) {
        if (f_.size() < 2) throw ValidationError("defining polynomial must have degree >= 1");
        if (f_.back() != 1) throw ValidationError("defining polynomial must be monic");
    }

    std::size_t degree() const noexcept { return f_.size() - 1; }
    const ZVector& modulus() const noexcept { return f_; }

    FieldElement zero() const { return FieldElement(QVector(degree(), Q(0))); }
    FieldElement one() const { return constant(1); }
    FieldElement constant(const Q& c) const {
        QVector v(degree(), Q(0));
        v[0] = c;
        return FieldElement(std::move(v));
    }
    FieldElement generator() const {
        if (degree() == 1) return constant(-Q(f_[0]));
        QVector v(degree(), Q(0));
        v[1] = 1;
        return FieldElement(std::move(v));
    }
    FieldElement element(QVector coords) const {
        if (coords.size() != degree())
            throw DomainError("element has " + std::to_string(coords.size()) + " coordinates, expected " +
                              std::to_string(degree()));
        return FieldElement(std::move(coords));
    }

    FieldElement mul(const FieldElement& a, const FieldElement& b) const {
        const std::size_t n = degree();
        QVector prod(2 * n - 1, Q(0));
        for (std::size_t i = 0; i < n; ++i) {
            if (a[i] == 0) continue;
            for (std::size_t j = 0; j < n; ++j)
                if (b[j] != 0) prod[i + j] += a[i] * b[j];
        }
        for (std::size_t k = prod.size(); k-- > n;) {
            if (prod[k] == 0) continue;
            const Q lead = prod[k];
            for (std::size_t i = 0; i < n; ++i) prod[k - n + i] -= lead * f_[i];
            prod[k] = 0;
        }
        prod.resize(n);
        return FieldElement(std::move(prod));
    }

    FieldElement pow(FieldElement a, unsigned k) const {
        FieldElement r = one();
        while (k) {
            if (k & 1) r = mul(r, a);
            a = mul(a, a);
            k >>= 1;
        }
        return r;
    }

    /// Column j holds the coordinates of a * t^j.
    QMatrix multiplication_matrix(const FieldElement& a) const {
        const std::size_t n = degree();
        QMatrix m(n, n);
        FieldElement col = a;
        const FieldElement t = generator();
        for (std::size_t j = 0; j < n; ++j) {
            for (std::size_t i = 0; i < n; ++i) m(i, j) = col[i];
            if (j + 1 < n) col = mul(col, t);
        }
        return m;
    }

    FieldElement inverse(const FieldElement& a) const {
        if (a.is_zero()) throw DomainError("inverse of zero");
        QMatrix m = multiplication_matrix(a);
        if (hgs::determinant(m) == 0) throw ValidationError("zero divisor found: the defining polynomial is reducible");
        return FieldElement(std::move(*solve(m, one().coords())));
    }

    /// Determinant of a square matrix with entries in E, by elimination.
    FieldElement determinant(std::vector<std::vector<FieldElement>> m) const {
        const std::size_t k = m.size();
        FieldElement det = one();
        for (std::size_t c = 0; c < k; ++c) {
            std::size_t p = c;
            while (p < k && m[p][c].is_zero()) ++p;
            if (p == k) return zero();
            if (p != c) {
                std::swap(m[p], m[c]);
                det = -det;
            }
            det = mul(det, m[c][c]);
            const FieldElement inv = inverse(m[c][c]);
            for (std::size_t i = c + 1; i < k; ++i) {
                if (m[i][c].is_zero()) continue;
                const FieldElement f = mul(m[i][c], inv);
                for (std::size_t j = c; j < k; ++j) m[i][j] -= mul(f, m[c][j]);
            }
        }
        return det;
    }

    /// p(a) for p given low-degree-first.
    FieldElement evaluate(std::span<const Q> p, const FieldElement& a) const {
        FieldElement r = zero();
        for (std::size_t k = p.size(); k-- > 0;) {
            r = mul(r, a);
            r += constant(p[k]);
        }
        return r;
    }

    FieldElement evaluate_modulus(const FieldElement& a) const {
        QVector p(f_.begin(), f_.end());
        return evaluate(p, a);
    }

private:
    ZVector f_;
};

enum class Irreducibility { Proved, Reducible, Inconclusive };

struct IrreducibilityResult {
    Irreducibility verdict = Irreducibility::Inconclusive;
    std::string evidence;
};

namespace detail {

// Dense polynomials over F_p, low-degree-first, always trimmed.
using PolyFp = std::vector<std::int64_t>;

inline void trim(PolyFp& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

inline std::int64_t inv_mod(std::int64_t a, std::int64_t p) {
    std::int64_t r = 1, e = p - 2;
    a %= p;
    while (e) {
        if (e & 1) r = r * a % p;
        a = a * a % p;
        e >>= 1;
    }
    return r;
}

inline PolyFp rem(PolyFp a, const PolyFp& b, std::int64_t p) {
    const std::int64_t inv = inv_mod(b.back(), p);
    while (a.size() >= b.size()) {
        const std::int64_t q = a.back() * inv % p;
        const std::size_t shift = a.size() - b.size();
        for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] = ((a[shift + i] - q * b[i]) % p + p) % p;
        trim(a);
    }
    return a;
}

inline PolyFp quo(PolyFp a, const PolyFp& b, std::int64_t p) {
    const std::int64_t inv = inv_mod(b.back(), p);
    if (a.size() < b.size()) return {};
    PolyFp q(a.size() - b.size() + 1, 0);
    while (a.size() >= b.size()) {
        const std::int64_t c = a.back() * inv % p;
        const std::size_t shift = a.size() - b.size();
        q[shift] = c;
        for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] = ((a[shift + i] - c * b[i]) % p + p) % p;
        trim(a);
    }
    return q;
}

inline PolyFp mulmod(const PolyFp& a, const PolyFp& b, const PolyFp& m, std::int64_t p) {
    if (a.empty() || b.empty()) return {};
    PolyFp c(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) c[i + j] = (c[i + j] + a[i] * b[j]) % p;
    trim(c);
    return rem(std::move(c), m, p);
}

inline PolyFp gcd(PolyFp a, PolyFp b, std::int64_t p) {
    while (!b.empty()) {
        PolyFp r = rem(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty()) {
        const std::int64_t inv = inv_mod(a.back(), p);
        for (auto& c : a) c = c * inv % p;
    }
    return a;
}

inline PolyFp sub(PolyFp a, const PolyFp& b, std::int64_t p) {
    if (a.size() < b.size()) a.resize(b.size(), 0);
    for (std::size_t i = 0; i < b.size(); ++i) a[i] = ((a[i] - b[i]) % p + p) % p;
    trim(a);
    return a;
}

// Degrees of the irreducible factors of a monic squarefree f over F_p.
inline std::vector<std::size_t> factor_degrees(PolyFp f, std::int64_t p) {
    std::vector<std::size_t> degrees;
    PolyFp h{0, 1};
    for (std::size_t d = 1; f.size() >= 2 * d + 1; ++d) {
        // h <- h^p mod f, so h = x^(p^d) mod f
        PolyFp hp{1}, base = h;
        for (std::int64_t e = p; e; e >>= 1) {
            if (e & 1) hp = mulmod(hp, base, f, p);
            base = mulmod(base, base, f, p);
        }
        h = hp;
        PolyFp g = gcd(f, sub(h, PolyFp{0, 1}, p), p);
        if (g.size() > 1) {
            for (std::size_t k = 0; k < (g.size() - 1) / d; ++k) degrees.push_back(d);
            f = quo(f, g, p);
            h = rem(h, f, p);
        }
    }
    if (f.size() > 1) degrees.push_back(f.size() - 1);
    return degrees;
}

}  // namespace detail

/// Rational-root test plus a factor-degree sieve modulo small primes (degree <= 12).
inline IrreducibilityResult check_irreducible(const ZVector& f) {
    const std::size_t n = f.size() - 1;
    if (n == 1) return {Irreducibility::Proved, "linear"};
    // A monic integer polynomial's rational roots are integers dividing f(0).
    if (f[0] == 0) return {Irreducibility::Reducible, "rational root 0"};
    Z a0 = abs(f[0]);
    if (a0 < Z(1000000000)) {
        for (Z d = 1; d * d <= a0; ++d) {
            if (a0 % d != 0) continue;
            for (Z cand : {d, Z(-d), Z(a0 / d), Z(-(a0 / d))}) {
                Z v = 0;
                for (std::size_t k = f.size(); k-- > 0;) v = v * cand + f[k];
                if (v == 0) return {Irreducibility::Reducible, "rational root " + cand.get_str()};
            }
        }
        if (n <= 3) return {Irreducibility::Proved, "no rational root (degree <= 3)"};
    }
    if (n > 12) return {Irreducibility::Inconclusive, "degree above 12"};

    // Bit d set: a factor of degree d over Q is still possible.
    std::uint32_t possible = 0;
    for (std::size_t d = 2; d + 2 <= n; ++d) possible |= 1u << d;
    if (a0 >= Z(1000000000)) possible |= 2u | (1u << (n - 1));
    std::string evidence;
    const int primes[] = {2,  3,  5,  7,  11, 13, 17, 19, 23, 29, 31, 37, 41,  43,  47,  53,  59,  61,
                          67, 71, 73, 79, 83, 89, 97, 101, 103, 107, 109, 113, 127, 131, 137, 139, 149, 151};
    for (int p : primes) {
        if (possible == 0) break;
        detail::PolyFp fp(f.size());
        for (std::size_t i = 0; i < f.size(); ++i) {
            Z r = f[i] % p;
            if (r < 0) r += p;
            fp[i] = r.get_si();
        }
        detail::trim(fp);
        detail::PolyFp deriv;
        for (std::size_t i = 1; i < fp.size(); ++i) deriv.push_back(fp[i] * static_cast<std::int64_t>(i) % p);
        detail::trim(deriv);
        if (deriv.empty() || detail::gcd(fp, deriv, p).size() != 1) continue;  // not squarefree mod p
        auto degs = detail::factor_degrees(fp, p);
        std::uint32_t sums = 1;
        for (auto d : degs) sums |= sums << d;
        const std::uint32_t before = possible;
        possible &= sums;
        if (possible != before) {
            evidence += (evidence.empty() ? "" : ", ") + std::string("mod ") + std::to_string(p) + ":";
            for (std::size_t i = 0; i < degs.size(); ++i) evidence += (i ? "+" : "") + std::to_string(degs[i]);
        }
    }
    if (possible == 0) return {Irreducibility::Proved, "factor-degree sieve (" + evidence + ")"};
    return {Irreducibility::Inconclusive, "factor-degree sieve inconclusive"};
}

/// A Galois automorphism given by the image of t, keyed by the generator label it realizes.
struct AutomorphismImage {
    std::string label;
    QVector image;
};

struct FieldDescriptor {
    ZVector minimal_polynomial;
    std::vector<AutomorphismImage> automorphisms;
    bool irreducible_asserted = false;
};

class SubfieldBasis {
public:
    SubfieldBasis() = default;
    SubfieldBasis(std::vector<FieldElement> basis, std::size_t ambient_degree) : basis_(std::move(basis)) {
        std::vector<QVector> cols;
        for (const auto& b : basis_) cols.push_back(b.coords());
        coords_ = ColumnBasis(QMatrix::from_columns(cols, ambient_degree));
    }

    std::size_t size() const noexcept { return basis_.size(); }
    const FieldElement& operator[](std::size_t i) const { return basis_[i]; }
    const std::vector<FieldElement>& elements() const noexcept { return basis_; }
    const QMatrix& matrix() const noexcept { return coords_.matrix(); }

    /// Coordinates of x in this basis, or nullopt when x lies outside the subfield.
    std::optional<QVector> coordinates(const FieldElement& x) const { return coords_.coordinates(x.coords()); }
    bool contains(const FieldElement& x) const { return coordinates(x).has_value(); }
    FieldElement combine(const QVector& c) const { return FieldElement(coords_.combine(c)); }

private:
    std::vector<FieldElement> basis_;
    ColumnBasis coords_;
};

/// A validated Galois extension E/Q with group G acting through matrices on the power basis.
class GaloisField {
public:
    /// `generator_index` gives, for each automorphism label, the element of G it realizes.
    static GaloisField load(const FieldDescriptor& desc, const FiniteGroup& G,
                            const std::vector<std::pair<std::string, std::size_t>>& generator_index) {
        NumberField E(desc.minimal_polynomial);
        const std::size_t n = E.degree();

        IrreducibilityResult irr = check_irreducible(desc.minimal_polynomial);
        if (irr.verdict == Irreducibility::Reducible)
            throw ReducibleModulusError("defining polynomial is reducible (" + irr.evidence + ")");
        if (irr.verdict == Irreducibility::Inconclusive) {
            if (!desc.irreducible_asserted)
                throw ValidationError("irreducibility of the defining polynomial could not be proved (" +
                                      irr.evidence + "); set irreducible = \"asserted\" to accept it");
            irr.evidence = "asserted by descriptor (" + irr.evidence + ")";
        }

        std::vector<std::string> problems;
        std::vector<std::pair<std::size_t, QMatrix>> gens;
        for (const auto& a : desc.automorphisms) {
            auto it = std::find_if(generator_index.begin(), generator_index.end(),
                                   [&](const auto& p) { return p.first == a.label; });
            if (it == generator_index.end()) {
                problems.push_back("automorphism '" + a.label + "' does not name a group generator");
                continue;
            }
            if (a.image.size() != n) {
                problems.push_back("automorphism '" + a.label + "' image has " + std::to_string(a.image.size()) +
                                   " coordinates, expected " + std::to_string(n));
                continue;
            }
            FieldElement s(a.image);
            if (!E.evaluate_modulus(s).is_zero()) {
                problems.push_back("automorphism '" + a.label + "': image of t is not a root of f");
                continue;
            }
            QMatrix M(n, n);
            FieldElement col = E.one();
            for (std::size_t j = 0; j < n; ++j) {
                for (std::size_t i = 0; i < n; ++i) M(i, j) = col[i];
                col = E.mul(col, s);
            }
            gens.emplace_back(it->second, std::move(M));
        }
        if (!problems.empty()) throw InvalidAutomorphismError(problems);
        for (const auto& [label, idx] : generator_index)
            if (std::none_of(desc.automorphisms.begin(), desc.automorphisms.end(),
                             [&](const auto& a) { return a.label == label; }))
                problems.push_back("group generator '" + label + "' has no automorphism image");
        if (!problems.empty()) throw InvalidAutomorphismError(problems);

        if (G.order() != n)
            throw NonGaloisError("E/Q must be Galois with group G: |G| = " + std::to_string(G.order()) +
                                 " but [E:Q] = " + std::to_string(n));

        // Extend along the Cayley graph: M(s g) = M(s) M(g); every edge must agree.
        std::vector<std::optional<QMatrix>> mats(G.order());
        mats[0] = QMatrix::identity(n);
        std::vector<std::size_t> queue{0};
        for (std::size_t i = 0; i < queue.size(); ++i)
            for (const auto& [s, Ms] : gens) {
                const std::size_t g = queue[i];
                const std::size_t sg = G.mul(s, g);
                QMatrix prod = Ms * *mats[g];
                if (!mats[sg]) {
                    mats[sg] = std::move(prod);
                    queue.push_back(sg);
                } else if (*mats[sg] != prod) {
                    throw ValidationError("automorphism composition does not match the multiplication table of G");
                }
            }
        if (queue.size() != G.order())
            throw ValidationError("automorphism generators do not generate G");
        GaloisField F(std::move(E), G, std::move(irr));
        for (auto& m : mats) F.matrices_.push_back(std::move(*m));
        for (std::size_t a = 0; a < G.order(); ++a)
            for (std::size_t b = a + 1; b < G.order(); ++b)
                if (F.matrices_[a] == F.matrices_[b])
                    throw NonGaloisError("automorphism action is not faithful: two elements of G act identically");
        return F;
    }

    const NumberField& field() const noexcept { return E_; }
    const FiniteGroup& group() const noexcept { return G_; }
    std::size_t degree() const noexcept { return E_.degree(); }
    const IrreducibilityResult& irreducibility() const noexcept { return irreducibility_; }
    const QMatrix& automorphism_matrix(std::size_t g) const { return matrices_[g]; }

    FieldElement apply(std::size_t g, const FieldElement& x) const { return FieldElement(matrices_[g] * x.coords()); }

    /// Tr_{E/Q}(x) = sum over G of g(x).
    Q trace(const FieldElement& x) const {
        FieldElement s = E_.zero();
        for (std::size_t g = 0; g < G_.order(); ++g) s += apply(g, x);
        for (std::size_t i = 1; i < s.size(); ++i)
            if (s[i] != 0) throw InternalError("trace is not rational; automorphism data is inconsistent");
        return s[0];
    }

    /// Basis of the subfield fixed by the subgroup GL (given as element indices of G).
    SubfieldBasis fixed_subfield(const Subgroup& GL) const {
        if (!G_.is_subgroup(GL)) throw StructuralError("fixed_subfield: index set is not a subgroup");
        const std::size_t n = degree();
        QMatrix stacked(0, n);
        for (std::size_t g : G_.greedy_generators(GL)) stacked.append_rows(matrices_[g] - QMatrix::identity(n));
        std::vector<QVector> kernel = stacked.rows() == 0 ? identity_basis(n) : nullspace(stacked);
        if (kernel.size() * GL.size() != G_.order())
            throw InternalError("fixed field has dimension " + std::to_string(kernel.size()) + ", expected [G:G_L] = " +
                                std::to_string(G_.order() / GL.size()));
        std::vector<FieldElement> basis;
        for (auto& v : kernel) basis.emplace_back(std::move(v));
        return SubfieldBasis(std::move(basis), n);
    }

private:
    GaloisField(NumberField E, FiniteGroup G, IrreducibilityResult irr)
        : E_(std::move(E)), G_(std::move(G)), irreducibility_(std::move(irr)) {}

    static std::vector<QVector> identity_basis(std::size_t n) {
        std::vector<QVector> out;
        for (std::size_t i = 0; i < n; ++i) {
            QVector v(n, Q(0));
            v[i] = 1;
            out.push_back(std::move(v));
        }
        return out;
    }

    NumberField E_;
    FiniteGroup G_;
    IrreducibilityResult irreducibility_;
    std::vector<QMatrix> matrices_;
};

}  // namespace hgs
