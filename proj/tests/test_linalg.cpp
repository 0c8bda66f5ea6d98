#include <gtest/gtest.h>

#include <random>

#include "hgs/lattice.hpp"
#include "hgs/linalg.hpp"

using namespace hgs;

namespace {

QMatrix qm(std::vector<std::vector<long>> rows) {
    QMatrix m(rows.size(), rows.front().size());
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < rows[i].size(); ++j) m(i, j) = rows[i][j];
    return m;
}

QVector qv(std::vector<std::string> v) {
    QVector out;
    for (auto& s : v) out.push_back(parse_rational(s));
    return out;
}

}  // namespace

TEST(Rational, ParsesCanonically) {
    EXPECT_EQ(parse_rational("4/6"), Q(2, 3));
    EXPECT_EQ(parse_rational("-1/9").get_str(), "-1/9");
    EXPECT_EQ(parse_rational("+7"), Q(7));
    EXPECT_THROW(parse_rational("1/0"), DomainError);
    EXPECT_THROW(parse_rational("1.5"), DomainError);
    EXPECT_THROW(parse_rational("2/-3"), DomainError);
    EXPECT_THROW(parse_rational(""), DomainError);
}

TEST(Matrix, ProductAndTranspose) {
    QMatrix a = qm({{1, 2}, {3, 4}});
    QMatrix b = qm({{0, 1}, {1, 0}});
    EXPECT_EQ(a * b, qm({{2, 1}, {4, 3}}));
    EXPECT_EQ(a.transpose(), qm({{1, 3}, {2, 4}}));
    EXPECT_EQ(a.trace(), Q(5));
}

TEST(Matrix, NullspaceAndRank) {
    QMatrix a = qm({{1, 2, 3}, {2, 4, 6}});
    EXPECT_EQ(rank(a), 1u);
    auto ns = nullspace(a);
    ASSERT_EQ(ns.size(), 2u);
    for (const auto& v : ns) EXPECT_EQ(a * v, QVector(2, Q(0)));
}

TEST(Matrix, SolveAndInverse) {
    QMatrix a = qm({{2, 1}, {1, 3}});
    auto x = solve(a, {Q(3), Q(5)});
    ASSERT_TRUE(x);
    EXPECT_EQ(a * *x, (QVector{Q(3), Q(5)}));
    EXPECT_EQ(a * inverse(a), QMatrix::identity(2));
    EXPECT_FALSE(solve(qm({{1, 1}, {1, 1}}), {Q(1), Q(2)}));
    EXPECT_THROW(inverse(qm({{1, 2}, {2, 4}})), DomainError);
}

TEST(Matrix, DeterminantsAgree) {
    std::mt19937_64 rng(3);
    for (int t = 0; t < 20; ++t) {
        ZMatrix z(5, 5);
        for (std::size_t i = 0; i < 5; ++i)
            for (std::size_t j = 0; j < 5; ++j) z(i, j) = static_cast<long>(rng() % 11) - 5;
        EXPECT_EQ(Q(determinant(z)), determinant(to_rational(z)));
    }
}

TEST(Matrix, ColumnBasisCoordinates) {
    ColumnBasis B(qm({{1, 0}, {1, 1}, {0, 2}}));
    auto c = B.coordinates({Q(2), Q(5), Q(6)});
    ASSERT_TRUE(c);
    EXPECT_EQ(*c, (QVector{Q(2), Q(3)}));
    EXPECT_FALSE(B.coordinates({Q(1), Q(0), Q(0)}));
}

TEST(Lattice, HermiteFormIsCanonical) {
    std::vector<QVector> gens = {qv({"1/2", "0", "1"}), qv({"0", "3", "1"}), qv({"1", "1", "1"})};
    auto L = IntegerLattice::from_generators(gens, 3);
    std::mt19937_64 rng(11);
    for (int t = 0; t < 25; ++t) {
        // Random unimodular recombination: elementary row operations.
        auto g = gens;
        for (int k = 0; k < 12; ++k) {
            std::size_t i = rng() % 3, j = rng() % 3;
            if (i == j) continue;
            Q c = static_cast<long>(rng() % 7) - 3;
            for (std::size_t x = 0; x < 3; ++x) g[i][x] += c * g[j][x];
            if (rng() % 2) std::swap(g[i], g[j]);
        }
        EXPECT_EQ(IntegerLattice::from_generators(g, 3), L);
    }
    const auto& H = L.hnf();
    for (std::size_t i = 0; i < 3; ++i) {
        EXPECT_GT(H(i, i), 0);
        for (std::size_t k = 0; k < i; ++k) {
            EXPECT_EQ(H(i, k), 0);
            EXPECT_GE(H(k, i), 0);
            EXPECT_LT(H(k, i), H(i, i));
        }
    }
}

TEST(Lattice, MembershipAndDual) {
    auto L = IntegerLattice::from_generators({qv({"2", "0"}), qv({"1", "3"})}, 2);
    EXPECT_TRUE(L.contains(qv({"3", "3"})));
    EXPECT_TRUE(L.contains(qv({"0", "6"})));
    EXPECT_FALSE(L.contains(qv({"1", "0"})));
    EXPECT_FALSE(L.contains(qv({"1/2", "0"})));
    EXPECT_EQ(L.covolume(), Q(6));
    EXPECT_EQ(L.dual().dual(), L);
    EXPECT_EQ(L.dual().covolume(), Q(1, 6));
    EXPECT_TRUE(IntegerLattice::standard(2).contains(L));
    EXPECT_FALSE(L.contains(IntegerLattice::standard(2)));
}

TEST(Lattice, RejectsDeficientRank) {
    EXPECT_THROW(IntegerLattice::from_generators({qv({"1", "2"}), qv({"2", "4"})}, 2), DomainError);
}

TEST(Lattice, PrintsDenominatorHeader) {
    auto L = IntegerLattice::from_generators({qv({"1/2", "0"}), qv({"0", "1"})}, 2);
    EXPECT_EQ(L.to_string(), "denominator 2\n[1 0]\n[0 2]\n");
}
