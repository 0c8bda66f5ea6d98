// Acceptance run: one PASS/FAIL line per criterion.

#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "hgs/suite.hpp"

using namespace hgs;

namespace {

const std::vector<std::string> kFixtures = {"qi", "qzeta3", "qcbrt2", "c4", "v4", "metacyclic21", "s3sextic"};

Suite load(const std::string& name, std::uint64_t seed = 0) {
    return Suite(load_fixture(std::string(FIXTURE_DIR) + "/" + name + ".hgx"), seed);
}

struct Outcome {
    bool ok = true;
    std::ostringstream detail;

    void require(bool cond, const std::string& what) {
        if (!cond) {
            ok = false;
            detail << " [" << what << "]";
        }
    }
};

bool all_pass(const Report& r, Outcome& o, const std::string& where) {
    bool ok = true;
    for (const auto& c : r.checks)
        if (c.verdict != Verdict::Pass) {
            ok = false;
            o.require(false, where + ": " + c.name + " " + to_string(c.verdict));
        }
    return ok;
}

// Criterion 1: opposite subgroup properties against the brute-force centralizer.
void opposites(Outcome& o) {
    for (const auto& name : kFixtures) {
        auto S = load(name);
        if (S.fixture().X.size() > 6) continue;
        for (const auto& N : S.structures()) {
            const auto Np = opposite(N);
            const auto NG = N.as_group();
            std::vector<Permutation> inter;
            for (const auto& p : N.elements())
                if (Np.contains(p)) inter.push_back(p);
            o.require(Np.elements() == centralizer_bruteforce(N), name + ": opposite != centralizer");
            o.require(opposite(Np) == N, name + ": N'' != N");
            o.require(Np.size() == N.size(), name + ": |N'| != |N|");
            o.require(inter == NG.elements_of(NG.center()), name + ": N cap N' != Z(N)");
            o.require(find_isomorphism(NG, Np.as_group()).has_value(), name + ": N' not isomorphic to N");
            o.require((Np == N) == NG.is_abelian(), name + ": N' = N iff abelian");
        }
    }
}

// Criterion 2: enumeration against every subgroup of Sym(X).
void enumeration_oracle(Outcome& o) {
    for (const auto& name : kFixtures) {
        auto S = load(name);
        const auto& X = S.fixture().X;
        if (X.size() > 4) continue;
        const auto& lambda = *S.fixture().lambda;
        auto Sym = FiniteGroup::from_elements(symmetric_group_elements(X.size()));
        std::vector<std::vector<Permutation>> expected;
        for (const auto& H : Sym.all_subgroups()) {
            if (H.size() != X.size()) continue;
            auto elts = Sym.elements_of(H);
            if (!is_regular(elts, X)) continue;
            bool normal = true;
            for (const auto& g : lambda.images())
                for (const auto& h : elts)
                    normal = normal && std::binary_search(elts.begin(), elts.end(), g.conjugate(h));
            if (normal) expected.push_back(std::move(elts));
        }
        std::sort(expected.begin(), expected.end());
        std::vector<std::vector<Permutation>> got;
        for (const auto& N : S.structures()) got.push_back(N.elements());
        o.require(got == expected, name + ": enumeration differs from the subgroup scan");
    }
}

// Criterion 3: symbolic determinant identity with seeded specializations.
void det_identity(Outcome& o) {
    for (const auto& name : kFixtures) {
        auto S = load(name, 3);
        if (S.fixture().X.size() > 6) continue;
        Report r;
        S.run_det_identity(r);
        all_pass(r, o, name);
    }
}

// Criterion 4: verify_commuting(H1, H2) iff N2 = opposite(N1), over ordered pairs.
void commuting(Outcome& o) {
    for (const auto& name : kFixtures) {
        auto S = load(name);
        if (!S.fixture().has_field()) continue;
        const auto& Ns = S.structures();
        for (std::size_t i = 0; i < Ns.size(); ++i)
            for (std::size_t j = 0; j < Ns.size(); ++j)
                o.require(verify_commuting(S.hopf(i), S.hopf(j)) == (Ns[j] == opposite(Ns[i])),
                          name + ": pair (" + std::to_string(i) + "," + std::to_string(j) + ")");
    }
}

// Criterion 5: generators of L over H and over H' coincide; is_generator itself
// throws when its rank test and det T_N(x) disagree.
void generators(Outcome& o) {
    for (const auto& name : kFixtures) {
        auto S = load(name);
        if (!S.fixture().has_field()) continue;
        const auto& ext = *S.fixture().ext;
        Sampler rng(5);
        std::vector<FieldElement> xs;
        for (std::size_t s = 0; s < kGeneratorSamples; ++s) xs.push_back(rng.in_L(ext));
        for (std::size_t i = 0; i < S.structures().size(); ++i) {
            const auto& H = S.hopf(i);
            const auto& Hp = S.hopf(S.opposite_index(i));
            for (const auto& x : xs) {
                const bool a = is_generator(ext, H, x);
                const bool b = is_generator(ext, Hp, x);
                o.require(a == b, name + ": generator mismatch for structure " + std::to_string(i));
            }
        }
    }
}

// Criterion 6: Hopf-Galois and separable on every descended H; nilpotent controls fail.
void hopf_galois(Outcome& o) {
    for (const auto& name : kFixtures) {
        auto S = load(name);
        if (!S.fixture().has_field()) continue;
        for (std::size_t i = 0; i < S.structures().size(); ++i) {
            o.require(verify_hopf_galois(*S.fixture().ext, S.hopf(i)), name + ": not Hopf-Galois");
            o.require(is_separable(S.hopf(i)), name + ": not separable");
        }
    }
    o.require(!is_separable(dual_numbers()), "dual numbers reported separable");
    // Dual numbers acting on Q(i) through the augmentation: e acts as zero.
    const std::vector<QMatrix> actions = {QMatrix::identity(2), QMatrix(2, 2)};
    auto S = load("qi");
    o.require(!verify_hopf_galois(actions, L_multiplication_basis(*S.fixture().ext)),
              "dual numbers acting through the augmentation reported Hopf-Galois");
}

// Criterion 7: freeness transfer on the sextic with B = O_L and bound 3.
void freeness_transfer(Outcome& o) {
    auto S = load("s3sextic");
    const auto& ext = *S.fixture().ext;
    const auto& B = S.fixture().ideal("OL");
    const auto rho = right_regular(S.fixture().X);
    const auto lam = left_regular(S.fixture().X, *S.fixture().lambda);
    const auto& Ns = S.structures();
    for (std::size_t i = 0; i < Ns.size(); ++i) {
        const std::size_t j = S.opposite_index(i);
        if (j < i) continue;
        TransferCertificate cert;
        try {
            cert = freeness_transfer_certificate(S.hopf(i), S.hopf(j), B, 3);
        } catch (const TransferViolationError& e) {
            o.require(false, e.what());
            continue;
        }
        const std::string tag = "structures " + std::to_string(i) + "/" + std::to_string(j);
        o.require(cert.holds(), tag + ": certificate fails");
        if (Ns[i] == rho || Ns[i] == lam) {
            o.require(cert.side.free() && cert.opposite_side.free(), tag + ": expected FREE on both sides");
            o.require(cert.z_lattice_identity.value_or(false), tag + ": z-lattice identity");
            o.require(cert.commuting_transport.value_or(false), tag + ": commuting transport");
        } else if (!cert.side.free()) {
            std::cout << "  note: " << tag << " UNKNOWN on both sides within bound 3\n";
        }
    }
    o.require(ext.m() == 6, "sextic must have L = E");
}

// Criterion 8: the order-21 group has trivial center and one normal subgroup <s>.
void metacyclic(Outcome& o) {
    auto S = load("metacyclic21");
    const auto& G = S.fixture().G();
    o.require(G.order() == 21, "order");
    const auto P = group_queries(G);
    o.require(P.center.size() == 1, "center is not trivial");
    const auto normals = P.nontrivial_proper_normal_subgroups();
    o.require(normals.size() == 1, "expected one nontrivial proper normal subgroup");
    if (normals.size() != 1) return;
    const auto& gens = S.fixture().descriptor.generators;
    const auto s = evaluate_word("s", gens, S.fixture().X.size());
    const auto si = G.index_of(s);
    o.require(si && normals[0] == G.closure(std::vector<std::size_t>{*si}), "normal subgroup is not <s>");
    o.require(normals[0].size() == 7, "normal subgroup order");
}

std::string run_hgx(const std::string& args) {
    std::string out;
    FILE* p = popen((std::string(HGX_PATH) + " " + args + " 2>/dev/null").c_str(), "r");
    if (!p) return out;
    std::array<char, 4096> buf;
    while (std::size_t k = std::fread(buf.data(), 1, buf.size(), p)) out.append(buf.data(), k);
    pclose(p);
    return out;
}

// Criterion 9: byte-identical suite JSON from two runs with the same seed.
void determinism(Outcome& o) {
    for (const auto& name : kFixtures) {
        const std::string args = "suite " + std::string(FIXTURE_DIR) + "/" + name + ".hgx --json --seed 11";
        const std::string a = run_hgx(args), b = run_hgx(args);
        o.require(!a.empty() && a == b, name + ": reports differ");
    }
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<void(Outcome&)>>> criteria = {
        {"opposite construction", opposites},
        {"enumeration oracle", enumeration_oracle},
        {"determinant identity", det_identity},
        {"commuting characterization", commuting},
        {"generator transfer", generators},
        {"hopf-galois and separability", hopf_galois},
        {"freeness transfer on the sextic", freeness_transfer},
        {"order-21 group structure", metacyclic},
        {"suite determinism", determinism},
    };
    int failed = 0;
    for (std::size_t k = 0; k < criteria.size(); ++k) {
        Outcome o;
        const auto t0 = std::chrono::steady_clock::now();
        try {
            criteria[k].second(o);
        } catch (const std::exception& e) {
            o.require(false, std::string("exception: ") + e.what());
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        std::cout << (o.ok ? "PASS" : "FAIL") << "  " << (k + 1) << "  " << criteria[k].first << "  ("
                  << std::fixed << std::setprecision(1) << secs << " s)" << o.detail.str() << std::endl;
        failed += !o.ok;
    }
    return failed == 0 ? 0 : 1;
}
