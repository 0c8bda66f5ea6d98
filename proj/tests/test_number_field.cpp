#include <gtest/gtest.h>

#include "hgs/number_field.hpp"
#include "hgs/perm_core.hpp"

using namespace hgs;

namespace {

Permutation P(std::vector<std::uint32_t> v) { return Permutation::from_images(std::move(v)); }

QVector qv(std::vector<long> v) {
    QVector out;
    for (auto x : v) out.push_back(Q(x));
    return out;
}

ZVector zv(std::vector<long> v) {
    ZVector out;
    for (auto x : v) out.push_back(Z(x));
    return out;
}

FieldDescriptor qi_descriptor() { return {zv({1, 0, 1}), {{"s", qv({0, -1})}}, false}; }

FiniteGroup c2() { return FiniteGroup::generated_by(2, std::vector<Permutation>{P({1, 0})}); }

// Splitting field of x^3 - x - 1.
FieldDescriptor s3_descriptor() {
    FieldDescriptor d;
    d.minimal_polynomial = zv({23, 0, 9, 0, -6, 0, 1});
    d.automorphisms = {{"r", {Q(2, 3), Q(-1, 2), Q(-5, 6), Q(0), Q(1, 6), Q(0)}}, {"c", qv({0, -1, 0, 0, 0, 0})}};
    return d;
}

}  // namespace

TEST(NumberField, GaussianArithmetic) {
    NumberField E(zv({1, 0, 1}));
    auto i = E.generator();
    EXPECT_EQ(E.mul(i, i), E.constant(-1));
    auto a = E.element(qv({1, 2}));
    auto inv = E.inverse(a);
    EXPECT_EQ(E.mul(a, inv), E.one());
    EXPECT_EQ(inv, E.element({Q(1, 5), Q(-2, 5)}));
    EXPECT_EQ(E.pow(i, 4), E.one());
    EXPECT_THROW(E.inverse(E.zero()), DomainError);
    EXPECT_EQ(E.evaluate_modulus(i), E.zero());
    auto M = E.multiplication_matrix(i);
    EXPECT_EQ(M * a.coords(), E.mul(i, a).coords());
}

TEST(NumberField, DeterminantOverE) {
    NumberField E(zv({1, 0, 1}));
    auto i = E.generator();
    // det [[1, i], [i, 1]] = 2.
    std::vector<std::vector<FieldElement>> m = {{E.one(), i}, {i, E.one()}};
    EXPECT_EQ(E.determinant(m), E.constant(2));
    std::vector<std::vector<FieldElement>> s = {{E.one(), i}, {-i, E.one()}};
    EXPECT_TRUE(E.determinant(s).is_zero());
}

TEST(Irreducibility, Verdicts) {
    EXPECT_EQ(check_irreducible(zv({1, 0, 1})).verdict, Irreducibility::Proved);
    EXPECT_EQ(check_irreducible(zv({-1, 0, 1})).verdict, Irreducibility::Reducible);
    EXPECT_EQ(check_irreducible(zv({-2, 0, 0, 1})).verdict, Irreducibility::Proved);
    EXPECT_EQ(check_irreducible(zv({1, 1, 1, 1, 1, 1, 1})).verdict, Irreducibility::Proved);
    // (t^2+1)(t^2+2) has no rational root and the factor-degree sieve cannot split it.
    EXPECT_NE(check_irreducible(zv({2, 0, 3, 0, 1})).verdict, Irreducibility::Proved);
    EXPECT_EQ(check_irreducible(zv({6, 0, 0, 1})).verdict, Irreducibility::Proved);
    EXPECT_EQ(check_irreducible(zv({-8, 0, 0, 1})).verdict, Irreducibility::Reducible);
    // t^4 + 1 splits modulo every prime.
    EXPECT_EQ(check_irreducible(zv({1, 0, 0, 0, 1})).verdict, Irreducibility::Inconclusive);
}

TEST(GaloisField, LoadsGaussianField) {
    auto G = c2();
    auto F = GaloisField::load(qi_descriptor(), G, {{"s", 1}});
    auto x = F.field().element(qv({3, 5}));
    EXPECT_EQ(F.apply(1, x), F.field().element(qv({3, -5})));
    EXPECT_EQ(F.trace(x), Q(6));
    EXPECT_EQ(F.fixed_subfield(Subgroup{0, 1}).size(), 1u);
    EXPECT_EQ(F.fixed_subfield(Subgroup{0}).size(), 2u);
}

TEST(GaloisField, RejectsBadInput) {
    auto G = c2();
    FieldDescriptor reducible{zv({-1, 0, 1}), {{"s", qv({0, -1})}}, false};
    EXPECT_THROW(GaloisField::load(reducible, G, {{"s", 1}}), ReducibleModulusError);
    FieldDescriptor not_root{zv({1, 0, 1}), {{"s", qv({1, 1})}}, false};
    try {
        GaloisField::load(not_root, G, {{"s", 1}});
        FAIL();
    } catch (const InvalidAutomorphismError& e) {
        EXPECT_NE(std::string(e.what()).find("'s'"), std::string::npos);
    }
    FieldDescriptor identity{zv({1, 0, 1}), {{"s", qv({0, 1})}}, false};
    EXPECT_THROW(GaloisField::load(identity, G, {{"s", 1}}), NonGaloisError);
    FieldDescriptor cubic{zv({-2, 0, 0, 1}), {{"s", qv({0, 1, 0})}}, false};
    EXPECT_THROW(GaloisField::load(cubic, G, {{"s", 1}}), NonGaloisError);
    FieldDescriptor quartic{zv({1, 0, 0, 0, 1}), {{"s", qv({0, 0, 0, -1})}}, false};
    EXPECT_THROW(GaloisField::load(quartic, G, {{"s", 1}}), ValidationError);
}

TEST(GaloisField, SexticFixedFieldIsCubic) {
    auto r = P({1, 3, 5, 0, 2, 4}), c = P({2, 4, 0, 5, 1, 3});
    auto G = FiniteGroup::generated_by(6, std::vector<Permutation>{r, c});
    auto F = GaloisField::load(s3_descriptor(), G, {{"r", *G.index_of(r)}, {"c", *G.index_of(c)}});
    const auto& E = F.field();
    auto f = *G.index_of(c);
    auto L = F.fixed_subfield(G.closure(std::vector<std::size_t>{f}));
    ASSERT_EQ(L.size(), 3u);
    for (std::size_t g = 0; g < 6; ++g)
        for (const auto& b : L.elements()) EXPECT_EQ(F.apply(g, F.apply(f, b)), F.apply(G.mul(g, f), b));
    for (const auto& b : L.elements()) EXPECT_EQ(F.apply(f, b), b);
    // Every element of L has degree dividing 3 over Q: x^3 lies in span(1, x, x^2).
    auto x = L.combine(qv({1, 2, -1}));
    std::vector<QVector> cols = {E.one().coords(), x.coords(), E.mul(x, x).coords()};
    ColumnBasis span(QMatrix::from_columns(cols, 6));
    EXPECT_TRUE(span.coordinates(E.pow(x, 3).coords()));
    EXPECT_EQ(F.trace(E.one()), Q(6));
}
