#include <gtest/gtest.h>

#include <algorithm>

#include "hgs/perm_core.hpp"

using namespace hgs;

namespace {

Permutation P(std::vector<std::uint32_t> v) { return Permutation::from_images(std::move(v)); }

FiniteGroup gen(std::vector<Permutation> g) { return FiniteGroup::generated_by(g.front().degree(), g); }

// S3 on {0,1,2}.
FiniteGroup s3() { return gen({P({1, 2, 0}), P({1, 0, 2})}); }
FiniteGroup c4() { return gen({P({1, 2, 3, 0})}); }
FiniteGroup v4() { return gen({P({1, 0, 3, 2}), P({2, 3, 0, 1})}); }
// <s, t | s^7 = t^3 = 1, t s t^-1 = s^2> acting on Z/7.
FiniteGroup metacyclic() { return gen({P({1, 2, 3, 4, 5, 6, 0}), P({0, 2, 4, 6, 1, 3, 5})}); }

CosetSpace galois(const FiniteGroup& G) { return build_coset_space(G, Subgroup{0}); }

// Independent oracle: every subgroup of Sym(m) of order m that is transitive and
// normalized by lambda(G).
std::vector<std::vector<Permutation>> oracle(const CosetSpace& X, const LambdaEmbedding& lambda) {
    const std::size_t m = X.size();
    auto S = FiniteGroup::from_elements(symmetric_group_elements(m));
    std::vector<std::vector<Permutation>> out;
    for (const auto& H : S.all_subgroups()) {
        if (H.size() != m) continue;
        auto elts = S.elements_of(H);
        if (!is_regular(elts, X)) continue;
        bool normal = true;
        for (const auto& g : lambda.images())
            for (const auto& h : elts) normal &= std::binary_search(elts.begin(), elts.end(), g.conjugate(h));
        if (normal) out.push_back(elts);
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

TEST(Permutation, CompositionAppliesRightFactorFirst) {
    auto a = P({1, 2, 0}), b = P({1, 0, 2});
    EXPECT_EQ((a * b)(0), a(b(0)));
    EXPECT_EQ(a * a.inverse(), Permutation::identity(3));
    EXPECT_EQ(a.order(), 3u);
    EXPECT_EQ(a.conjugate(b), a * b * a.inverse());
    EXPECT_THROW(P({0, 0, 1}), StructuralError);
}

TEST(Group, ClosureAndTables) {
    auto G = s3();
    EXPECT_EQ(G.order(), 6u);
    EXPECT_TRUE(G.element(0).is_identity());
    for (std::size_t a = 0; a < 6; ++a) EXPECT_EQ(G.mul(a, G.inverse(a)), 0u);
    EXPECT_FALSE(G.is_abelian());
    EXPECT_THROW(FiniteGroup::generated_by(7, std::vector<Permutation>{P({1, 0, 2, 3, 4, 5, 6}),
                                                                       P({1, 2, 3, 4, 5, 6, 0})}),
                 CapabilityError);
    EXPECT_EQ(FiniteGroup::from_elements(symmetric_group_elements(4)).all_subgroups().size(), 30u);
}

TEST(CosetSpace, Sizes) {
    auto G = s3();
    auto t = *G.index_of(P({1, 0, 2}));
    auto X = build_coset_space(G, G.closure(std::vector<std::size_t>{t}));
    EXPECT_EQ(X.size(), 3u);
    EXPECT_EQ(X.base_point, X.coset_of[0]);
    for (std::size_t g = 0; g < 6; ++g)
        for (std::size_t h = 0; h < 6; ++h)
            EXPECT_EQ(X.coset_of[g] == X.coset_of[h],
                      std::binary_search(X.stabilizer.begin(), X.stabilizer.end(), G.mul(G.inverse(g), h)));

    auto Xg = galois(G);
    for (std::size_t g = 0; g < 6; ++g) EXPECT_EQ(Xg.coset_of[g], g);

    auto M = metacyclic();
    auto tau = *M.index_of(P({0, 2, 4, 6, 1, 3, 5}));
    EXPECT_EQ(build_coset_space(M, M.closure(std::vector<std::size_t>{tau})).size(), 7u);
}

TEST(CosetSpace, RejectsNonSubgroup) {
    auto G = s3();
    Subgroup bad{0, *G.index_of(P({1, 2, 0}))};
    EXPECT_THROW(build_coset_space(G, bad), StructuralError);
    std::vector<Permutation> outside{P({0, 2, 1, 3})};
    EXPECT_THROW(build_coset_space(c4(), outside), StructuralError);
}

TEST(Lambda, LeftRegularAndCosetAction) {
    auto G = s3();
    auto X = galois(G);
    LambdaEmbedding lam(X);
    for (std::size_t s = 0; s < 6; ++s)
        for (std::size_t g = 0; g < 6; ++g) EXPECT_EQ(lam(s)(g), G.mul(s, g));
    EXPECT_TRUE(lam.kernel() == Subgroup{0});

    auto A = c4();
    auto XA = galois(A);
    LambdaEmbedding lamA(XA);
    EXPECT_EQ(left_regular(XA, lamA), right_regular(XA));

    auto t = *G.index_of(P({1, 0, 2}));
    auto X3 = build_coset_space(G, G.closure(std::vector<std::size_t>{t}));
    EXPECT_EQ(LambdaEmbedding(X3).image().size(), 6u);
}

TEST(Regular, Examples) {
    auto X4 = galois(c4());
    EXPECT_TRUE(is_regular(right_regular(X4).elements(), X4));
    auto G = s3();
    auto t = *G.index_of(P({1, 0, 2}));
    auto X3 = build_coset_space(G, G.closure(std::vector<std::size_t>{t}));
    std::vector<Permutation> a3{P({0, 1, 2}), P({1, 2, 0}), P({2, 0, 1})};
    EXPECT_TRUE(is_regular(a3, X3));
    std::vector<Permutation> stab{P({0, 1, 2}), P({0, 2, 1})};
    EXPECT_FALSE(is_regular(stab, X3));
    std::vector<Permutation> open{P({0, 1, 2}), P({1, 2, 0})};
    EXPECT_THROW(is_regular(open, X3), StructuralError);
}

TEST(Regular, NormalizedBy) {
    auto G = s3();
    auto X = galois(G);
    LambdaEmbedding lam(X);
    EXPECT_TRUE(is_normalized_by(right_regular(X), lam));
    EXPECT_TRUE(is_normalized_by(left_regular(X, lam), lam));

    // The cycle (0 2 1 3): regular, conjugate to rho(C4), not normalized by lambda(C4).
    auto X4 = galois(c4());
    LambdaEmbedding lam4(X4);
    auto g = P({2, 3, 1, 0});
    auto N = RegularSubgroup::from_elements(FiniteGroup::generated_by(4, std::vector<Permutation>{g}).elements());
    EXPECT_TRUE(is_regular(N.elements(), X4));
    EXPECT_FALSE(is_normalized_by(N, lam4));
}

TEST(Enumerate, MatchesSubgroupOracle) {
    for (const auto& G : {c4(), v4(), gen({P({1, 0})})}) {
        auto X = galois(G);
        LambdaEmbedding lam(X);
        std::vector<std::vector<Permutation>> got;
        for (const auto& N : enumerate_regular_normalized(X, lam)) got.push_back(N.elements());
        EXPECT_EQ(got, oracle(X, lam)) << "|G| = " << G.order();
    }
    auto G = s3();
    auto t = *G.index_of(P({1, 0, 2}));
    auto X3 = build_coset_space(G, G.closure(std::vector<std::size_t>{t}));
    LambdaEmbedding lam3(X3);
    auto Ns = enumerate_regular_normalized(X3, lam3);
    ASSERT_EQ(Ns.size(), 1u);
    EXPECT_EQ(Ns[0].elements(), (std::vector<Permutation>{P({0, 1, 2}), P({1, 2, 0}), P({2, 0, 1})}));
    EXPECT_EQ(Ns, std::vector<RegularSubgroup>(oracle(X3, lam3).size(), Ns[0]));
}

TEST(Enumerate, CountsAndBound) {
    auto Xc = galois(c4());
    EXPECT_EQ(enumerate_regular_normalized(Xc, LambdaEmbedding(Xc)).size(), 2u);
    auto Xv = galois(v4());
    EXPECT_EQ(enumerate_regular_normalized(Xv, LambdaEmbedding(Xv)).size(), 4u);
    auto Xs = galois(s3());
    LambdaEmbedding lam(Xs);
    auto Ns = enumerate_regular_normalized(Xs, lam);
    EXPECT_EQ(Ns.size(), 5u);
    EXPECT_NE(std::find(Ns.begin(), Ns.end(), left_regular(Xs, lam)), Ns.end());
    EXPECT_NE(std::find(Ns.begin(), Ns.end(), right_regular(Xs)), Ns.end());
    EXPECT_THROW(enumerate_regular_normalized(Xs, lam, 5), CapabilityError);
}

TEST(Opposite, Examples) {
    auto G = s3();
    auto X = galois(G);
    LambdaEmbedding lam(X);
    auto rho = right_regular(X);
    EXPECT_EQ(opposite(rho), left_regular(X, lam));
    EXPECT_EQ(centralizer_bruteforce(rho), left_regular(X, lam).elements());

    auto X4 = galois(c4());
    EXPECT_EQ(opposite(right_regular(X4)), right_regular(X4));

    auto c2 = RegularSubgroup::from_elements({P({0, 1}), P({1, 0})});
    EXPECT_EQ(centralizer_bruteforce(c2), symmetric_group_elements(2));
    EXPECT_THROW(centralizer_bruteforce(rho, 5), CapabilityError);
}

TEST(Opposite, PropertiesOnEveryStructure) {
    for (const auto& G : {c4(), v4(), s3()}) {
        auto X = galois(G);
        LambdaEmbedding lam(X);
        for (const auto& N : enumerate_regular_normalized(X, lam)) {
            auto Np = opposite(N);
            EXPECT_EQ(opposite(Np), N);
            EXPECT_EQ(Np.elements(), centralizer_bruteforce(N));
            EXPECT_TRUE(is_normalized_by(Np, lam));
            EXPECT_EQ(Np == N, N.is_abelian());
            auto NG = N.as_group();
            std::vector<Permutation> inter;
            for (const auto& p : N.elements())
                if (Np.contains(p)) inter.push_back(p);
            EXPECT_EQ(inter, NG.elements_of(NG.center()));
            EXPECT_TRUE(find_isomorphism(NG, Np.as_group()));
        }
    }
}

TEST(GroupQueries, Examples) {
    auto M = group_queries(metacyclic());
    EXPECT_EQ(M.center.size(), 1u);
    auto normals = M.nontrivial_proper_normal_subgroups();
    ASSERT_EQ(normals.size(), 1u);
    auto G = metacyclic();
    auto sigma = *G.index_of(P({1, 2, 3, 4, 5, 6, 0}));
    EXPECT_EQ(normals[0], G.closure(std::vector<std::size_t>{sigma}));

    auto C = group_queries(c4());
    EXPECT_EQ(C.center.size(), 4u);
    EXPECT_TRUE(C.abelian);

    auto S = group_queries(s3());
    EXPECT_EQ(S.center.size(), 1u);
    ASSERT_EQ(S.nontrivial_proper_normal_subgroups().size(), 1u);
    EXPECT_EQ(S.nontrivial_proper_normal_subgroups()[0].size(), 3u);

    EXPECT_FALSE(find_isomorphism(c4(), v4()));
    EXPECT_TRUE(find_isomorphism(c4(), gen({P({2, 3, 1, 0})})));
}
