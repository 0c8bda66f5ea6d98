#pragma once

// Property checks over a loaded fixture, collected into a deterministic report.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "hgs/descent.hpp"
#include "hgs/errors.hpp"
#include "hgs/fixtures.hpp"
#include "hgs/group.hpp"
#include "hgs/integral.hpp"
#include "hgs/perm_core.hpp"
#include "hgs/symbolic.hpp"

namespace hgs {

enum class Verdict { Pass, Fail, Unknown };

inline const char* to_string(Verdict v) {
    switch (v) {
        case Verdict::Pass: return "PASS";
        case Verdict::Fail: return "FAIL";
        case Verdict::Unknown: return "UNKNOWN";
    }
    return "FAIL";
}

inline Verdict verdict_of(bool ok) { return ok ? Verdict::Pass : Verdict::Fail; }

/// What a check is measured against.
enum class CheckKind { Theory, Oracle, Invariant, Assertion, Search, Output };

inline const char* to_string(CheckKind k) {
    switch (k) {
        case CheckKind::Theory: return "theory";
        case CheckKind::Oracle: return "oracle";
        case CheckKind::Invariant: return "invariant";
        case CheckKind::Assertion: return "assertion";
        case CheckKind::Search: return "search";
        case CheckKind::Output: return "output";
    }
    return "output";
}

struct CheckRecord {
    std::string name;
    Verdict verdict = Verdict::Pass;
    CheckKind kind = CheckKind::Invariant;
    Json values = Json::object();
};

struct Report {
    std::string command;
    std::string fixture;
    std::uint64_t seed = 0;
    std::vector<CheckRecord> checks;

    void add(std::string name, Verdict v, CheckKind kind, Json values = Json::object()) {
        checks.push_back({std::move(name), v, kind, std::move(values)});
    }

    std::size_t count(Verdict v) const {
        return static_cast<std::size_t>(
            std::count_if(checks.begin(), checks.end(), [&](const CheckRecord& c) { return c.verdict == v; }));
    }

    /// 0 all pass, 1 any failure, 3 only unknowns beside passes.
    int exit_code() const {
        if (count(Verdict::Fail)) return 1;
        if (count(Verdict::Unknown)) return 3;
        return 0;
    }

    Json to_json() const {
        Json j;
        j["command"] = command;
        j["fixture"] = fixture;
        j["seed"] = seed;
        Json arr = Json::array();
        for (const auto& c : checks) {
            Json r;
            r["name"] = c.name;
            r["verdict"] = to_string(c.verdict);
            r["kind"] = to_string(c.kind);
            if (!c.values.empty()) r["values"] = c.values;
            arr.push_back(std::move(r));
        }
        j["checks"] = std::move(arr);
        j["summary"] = {{"pass", count(Verdict::Pass)},
                        {"fail", count(Verdict::Fail)},
                        {"unknown", count(Verdict::Unknown)}};
        return j;
    }

    std::string to_text() const {
        std::string s;
        for (const auto& c : checks) {
            s += std::string(to_string(c.verdict)) + "  " + c.name;
            if (c.values.contains("message")) s += "  (" + c.values["message"].get<std::string>() + ")";
            s += "\n";
        }
        s += "summary: " + std::to_string(count(Verdict::Pass)) + " pass, " + std::to_string(count(Verdict::Fail)) +
             " fail, " + std::to_string(count(Verdict::Unknown)) + " unknown\n";
        return s;
    }
};

inline Json rational_array(const QVector& v) {
    Json a = Json::array();
    for (const auto& q : v) a.push_back(q.get_str());
    return a;
}

inline Json matrix_json(const QMatrix& m) {
    Json a = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) a.push_back(rational_array(m.row_vector(i)));
    return a;
}

inline Json lattice_json(const IntegerLattice& L) {
    Json rows = Json::array();
    for (std::size_t i = 0; i < L.dim(); ++i) {
        Json r = Json::array();
        for (std::size_t j = 0; j < L.dim(); ++j) r.push_back(L.hnf()(i, j).get_str());
        rows.push_back(r);
    }
    return {{"denominator", L.denominator().get_str()}, {"hnf", rows}};
}

inline Json permutations_json(const std::vector<Permutation>& ps) {
    Json a = Json::array();
    for (const auto& p : ps) a.push_back(p.images());
    return a;
}

inline constexpr std::size_t kGeneratorSamples = 200;
inline constexpr std::size_t kMapLevelSamples = 50;
inline constexpr std::size_t kSpecializationSamples = 20;
inline constexpr std::size_t kFieldAxiomSamples = 50;
inline constexpr std::size_t kOppositeOracleBound = 6;

/// Lazily computes and caches everything derived from one fixture.
class Suite {
public:
    Suite(LoadedFixture F, std::uint64_t seed = 0) : F_(std::move(F)), seed_(seed) {}

    const LoadedFixture& fixture() const noexcept { return F_; }
    std::uint64_t seed() const noexcept { return seed_; }

    const std::vector<RegularSubgroup>& structures() {
        if (!structures_) structures_ = enumerate_regular_normalized(F_.X, *F_.lambda);
        return *structures_;
    }

    std::size_t opposite_index(std::size_t i) {
        const auto& Ns = structures();
        const RegularSubgroup Np = opposite(Ns.at(i));
        auto it = std::find(Ns.begin(), Ns.end(), Np);
        if (it == Ns.end()) throw InternalError("enumeration is not closed under opposite");
        return static_cast<std::size_t>(it - Ns.begin());
    }

    const DescendedHopfAlgebra& hopf(std::size_t i) {
        require_field();
        const auto& Ns = structures();
        if (i >= Ns.size()) throw DomainError("structure index " + std::to_string(i) + " out of range (" +
                                              std::to_string(Ns.size()) + " structures)");
        if (hopf_.size() != Ns.size()) hopf_.resize(Ns.size());
        if (!hopf_[i]) hopf_[i] = descend(*F_.ext, Ns[i]);
        return *hopf_[i];
    }

    void require_field() const {
        if (!F_.ext) throw DomainError("fixture '" + F_.descriptor.name + "' has no field data");
    }

    // Group structure and the fixture's assertions about it.
    void run_group(Report& r) {
        const GroupProfile P = group_queries(F_.G());
        Json normals = Json::array();
        for (const auto& H : P.nontrivial_proper_normal_subgroups()) normals.push_back(H.size());
        r.add("group.profile", Verdict::Pass, CheckKind::Output,
              {{"order", F_.G().order()},
               {"abelian", P.abelian},
               {"center_order", P.center.size()},
               {"nontrivial_proper_normal_subgroup_orders", normals},
               {"iso_class", P.iso.to_string()},
               {"coset_space_size", F_.X.size()}});
        const auto& A = F_.descriptor.assertions;
        if (A.center_order)
            r.add("group.center_order", verdict_of(P.center.size() == *A.center_order), CheckKind::Assertion,
                  {{"expected", *A.center_order}, {"actual", P.center.size()}});
        if (A.normal_subgroup_orders) {
            std::vector<std::size_t> got;
            for (const auto& H : P.nontrivial_proper_normal_subgroups()) got.push_back(H.size());
            r.add("group.normal_subgroups", verdict_of(got == *A.normal_subgroup_orders), CheckKind::Assertion,
                  {{"expected", *A.normal_subgroup_orders}, {"actual", got}});
        }
    }

    void run_enumerate(Report& r) {
        const auto& Ns = structures();
        Json list = Json::array();
        bool all_valid = true;
        for (std::size_t i = 0; i < Ns.size(); ++i) {
            const auto& N = Ns[i];
            const bool valid = is_regular(N.elements(), F_.X) && is_normalized_by(N, *F_.lambda);
            all_valid &= valid;
            const GroupProfile P = group_queries(N.as_group());
            const std::size_t j = opposite_index(i);
            list.push_back({{"index", i},
                            {"iso_class", P.iso.to_string()},
                            {"abelian", P.abelian},
                            {"center_order", P.center.size()},
                            {"opposite", j},
                            {"self_opposite", i == j},
                            {"elements", permutations_json(N.elements())}});
        }
        r.add("enumerate.structures", verdict_of(all_valid), CheckKind::Invariant,
              {{"count", Ns.size()}, {"structures", list}});
        if (F_.descriptor.assertions.structures)
            r.add("enumerate.count", verdict_of(Ns.size() == *F_.descriptor.assertions.structures),
                  CheckKind::Assertion, {{"expected", *F_.descriptor.assertions.structures}, {"actual", Ns.size()}});
    }

    /// Properties of the opposite subgroup, with the brute-force centralizer for |X| <= 6.
    void run_opposite(Report& r) {
        const auto& Ns = structures();
        for (std::size_t i = 0; i < Ns.size(); ++i) {
            const auto& N = Ns[i];
            const RegularSubgroup Np = opposite(N);
            const std::string tag = "opposite[" + std::to_string(i) + "].";
            if (N.size() <= kOppositeOracleBound) {
                auto C = centralizer_bruteforce(N);
                r.add(tag + "equals_centralizer", verdict_of(C == Np.elements()), CheckKind::Oracle);
            }
            r.add(tag + "involution", verdict_of(opposite(Np) == N), CheckKind::Theory);
            r.add(tag + "same_order", verdict_of(Np.size() == N.size()), CheckKind::Theory);
            r.add(tag + "regular_and_normalized",
                  verdict_of(is_regular(Np.elements(), F_.X) && is_normalized_by(Np, *F_.lambda)), CheckKind::Theory);

            const FiniteGroup NG = N.as_group();
            std::vector<Permutation> inter;
            for (const auto& p : N.elements())
                if (Np.contains(p)) inter.push_back(p);
            r.add(tag + "intersection_is_center", verdict_of(inter == NG.elements_of(NG.center())),
                  CheckKind::Theory);

            // eta -> phi_{eta^-1} is an isomorphism N -> N'.
            const FiniteGroup NpG = Np.as_group();
            std::vector<std::size_t> phi(NG.order());
            for (std::size_t k = 0; k < NG.order(); ++k)
                phi[k] = *NpG.index_of(opposite_element(N, NG.element(k).inverse()));
            const bool explicit_iso = is_homomorphism(NG, NpG, phi) &&
                                      std::set<std::size_t>(phi.begin(), phi.end()).size() == phi.size();
            r.add(tag + "isomorphic", verdict_of(explicit_iso && find_isomorphism(NG, NpG).has_value()),
                  CheckKind::Theory);
            r.add(tag + "self_opposite_iff_abelian", verdict_of((Np == N) == NG.is_abelian()), CheckKind::Theory,
                  {{"abelian", NG.is_abelian()}});
        }
    }

    void run_det_identity(Report& r, std::optional<std::size_t> only = std::nullopt) {
        const auto& Ns = structures();
        Sampler rng(seed_);
        for (std::size_t i = 0; i < Ns.size(); ++i) {
            if (only && *only != i) continue;
            const auto& N = Ns[i];
            const std::string tag = "det_identity[" + std::to_string(i) + "]";
            if (N.size() > kMaxSymbolicSize) {
                r.add(tag, Verdict::Unknown, CheckKind::Theory,
                      {{"message", "symbolic determinant limited to size " + std::to_string(kMaxSymbolicSize)}});
                continue;
            }
            const DetIdentity d = verify_det_identity(N);
            r.add(tag, verdict_of(d.holds()), CheckKind::Theory,
                  {{"det", d.det.to_string()},
                   {"polynomials_equal", d.polynomials_equal},
                   {"transpose_witness", d.transpose_witness},
                   {"row_witness", d.row_witness}});

            // Specialization at rational points.
            const auto T = sorted_rows(build_T(N));
            const auto Tp = sorted_rows(build_T(opposite(N)));
            bool special = true;
            for (std::size_t s = 0; s < kSpecializationSamples; ++s) {
                const QVector y = rng.vector(N.size());
                auto numeric = [&](const CosetVariableMatrix& M) {
                    QMatrix A(M.size, M.size);
                    for (std::size_t a = 0; a < M.size; ++a)
                        for (std::size_t b = 0; b < M.size; ++b) A(a, b) = y[M(a, b)];
                    return determinant(A);
                };
                const Q v = d.det.evaluate(y);
                special &= v == numeric(T) && v == numeric(Tp) && v == d.det_opposite.evaluate(y);
            }
            // And at y_k = k[x] for x in L, against the numeric E-determinant.
            if (F_.ext) {
                for (std::size_t s = 0; s < kSpecializationSamples; ++s) {
                    const FieldElement x = rng.in_L(*F_.ext);
                    std::vector<std::vector<FieldElement>> Tx(T.size);
                    for (std::size_t a = 0; a < T.size; ++a)
                        for (std::size_t b = 0; b < T.size; ++b) Tx[a].push_back(F_.ext->coset_apply(T(a, b), x));
                    special &= evaluate_at_cosets(*F_.ext, d.det, x) == F_.ext->E().determinant(Tx);
                }
            }
            r.add(tag + ".specialization", verdict_of(special), CheckKind::Oracle,
                  {{"samples", kSpecializationSamples * (F_.ext ? 2 : 1)}});
        }
    }

    /// Field-level checks: automorphisms compose like G, fixed field, trace, axioms.
    void run_field(Report& r) {
        require_field();
        const Extension& ext = *F_.ext;
        const auto& Fd = ext.field();
        const auto& E = ext.E();
        const FiniteGroup& G = F_.G();
        Sampler rng(seed_);
        bool comp = true, mult = true, axioms = true, trace_ok = true, fixed = true;
        for (std::size_t s = 0; s < kFieldAxiomSamples; ++s) {
            const FieldElement x = rng.in_E(E), y = rng.in_E(E);
            for (std::size_t g = 0; g < G.order(); ++g) {
                for (std::size_t h : G.generators()) comp &= Fd.apply(G.mul(g, h), x) == Fd.apply(g, Fd.apply(h, x));
                mult &= Fd.apply(g, E.mul(x, y)) == E.mul(Fd.apply(g, x), Fd.apply(g, y));
            }
            const FieldElement z = rng.in_E(E);
            axioms &= E.mul(x, y + z) == E.mul(x, y) + E.mul(x, z);
            if (!x.is_zero()) axioms &= E.mul(x, E.inverse(x)) == E.one();
            trace_ok &= Fd.trace(x) == E.multiplication_matrix(x).trace();
            const FieldElement l = rng.in_L(ext);
            for (std::size_t g0 : F_.X.stabilizer) fixed &= Fd.apply(g0, l) == l;
            for (std::size_t g = 0; g < G.order(); ++g)
                fixed &= Fd.apply(g, l) == ext.coset_apply(F_.X.coset_of[g], l);
        }
        r.add("field.irreducible", Verdict::Pass, CheckKind::Output,
              {{"evidence", Fd.irreducibility().evidence}});
        r.add("field.composition", verdict_of(comp), CheckKind::Invariant);
        r.add("field.multiplicative", verdict_of(mult), CheckKind::Invariant);
        r.add("field.axioms", verdict_of(axioms), CheckKind::Invariant);
        r.add("field.trace", verdict_of(trace_ok && Fd.trace(E.one()) == Q(static_cast<long>(E.degree()))),
              CheckKind::Oracle);
        r.add("field.fixed_subfield", verdict_of(fixed && ext.m() == F_.X.size()), CheckKind::Invariant,
              {{"dimension", ext.m()}});
    }

    void run_descend(Report& r, std::size_t i) {
        const DescendedHopfAlgebra& H = hopf(i);
        const std::size_t n = F_.ext->n();
        Json basis = Json::array();
        for (const auto& h : H.basis) {
            Json coeffs = Json::array();
            for (std::size_t e = 0; e < H.N.size(); ++e) {
                QVector c(h.begin() + static_cast<std::ptrdiff_t>(e * n),
                          h.begin() + static_cast<std::ptrdiff_t>((e + 1) * n));
                coeffs.push_back({{"element", H.N.element(e).images()}, {"coefficient", rational_array(c)}});
            }
            basis.push_back(coeffs);
        }
        Json actions = Json::array();
        for (const auto& A : H.actions) actions.push_back(matrix_json(A));
        r.add("descend[" + std::to_string(i) + "]", verdict_of(H.dim() == F_.X.size()), CheckKind::Output,
              {{"dimension", H.dim()}, {"basis", basis}, {"action_matrices", actions},
               {"identity", rational_array(H.identity)}});
    }

    /// Module structure of the action, the idempotent algebra M and the embedding of L.
    void run_descent_properties(Report& r) {
        require_field();
        const Extension& ext = *F_.ext;
        Sampler rng(seed_);
        for (std::size_t i = 0; i < structures().size(); ++i) {
            const DescendedHopfAlgebra& H = hopf(i);
            const std::string tag = "descent[" + std::to_string(i) + "].";
            const std::size_t m = H.dim();
            bool identity = H.action_of(H.identity) == QMatrix::identity(m);
            bool hom = true;
            for (std::size_t a = 0; a < m; ++a)
                for (std::size_t b = 0; b < m; ++b) {
                    QVector ea(m, Q(0)), eb(m, Q(0));
                    ea[a] = 1;
                    eb[b] = 1;
                    hom &= H.action_of(H.multiply(ea, eb)) == H.actions[a] * H.actions[b];
                }
            r.add(tag + "dimension", verdict_of(m == F_.X.size()), CheckKind::Theory, {{"dimension", m}});
            r.add(tag + "identity_acts_trivially", verdict_of(identity), CheckKind::Invariant);
            r.add(tag + "module_action", verdict_of(hom), CheckKind::Invariant);

            bool idem = true;
            for (const auto& eta : H.N.elements())
                for (std::size_t k = 0; k < m; ++k) idem &= permute(eta, idempotent(ext, k)) == idempotent(ext, eta(k));
            r.add(tag + "idempotents_permuted", verdict_of(idem), CheckKind::Theory);
        }
        bool embed_hom = true, embed_fixed = true;
        for (std::size_t s = 0; s < kMapLevelSamples; ++s) {
            const FieldElement x = rng.in_L(ext), y = rng.in_L(ext);
            const auto fx = embed_L_in_M(ext, x);
            embed_hom &= embed_L_in_M(ext, ext.E().mul(x, y)) == multiply(ext, fx, embed_L_in_M(ext, y));
            for (std::size_t g : F_.G().generators()) embed_fixed &= galois_act(ext, g, fx) == fx;
        }
        embed_hom &= embed_L_in_M(ext, ext.E().one()) == MapAlgebraElement(ext.m(), ext.E().one());
        r.add("embedding.homomorphism", verdict_of(embed_hom), CheckKind::Invariant);
        r.add("embedding.galois_fixed", verdict_of(embed_fixed), CheckKind::Theory);
    }

    void run_hopf_galois(Report& r) {
        require_field();
        const auto Lm = L_multiplication_basis(*F_.ext);
        for (std::size_t i = 0; i < structures().size(); ++i)
            r.add("hopf_galois[" + std::to_string(i) + "]", verdict_of(verify_hopf_galois(hopf(i).actions, Lm)),
                  CheckKind::Theory);
        std::vector<QMatrix> zero(F_.ext->m(), QMatrix(F_.ext->m(), F_.ext->m()));
        r.add("hopf_galois.zero_action_rejected", verdict_of(!verify_hopf_galois(zero, Lm)), CheckKind::Oracle);
    }

    void run_separable(Report& r) {
        require_field();
        for (std::size_t i = 0; i < structures().size(); ++i)
            r.add("separable[" + std::to_string(i) + "]", verdict_of(is_separable(hopf(i))), CheckKind::Theory);
        r.add("separable.dual_numbers_rejected", verdict_of(!is_separable(dual_numbers())), CheckKind::Oracle);
    }

    /// verify_commuting(H_i, H_j) holds exactly when N_j = N_i'.
    void run_commuting(Report& r) {
        require_field();
        const std::size_t k = structures().size();
        bool all = true;
        Json pairs = Json::array();
        for (std::size_t i = 0; i < k; ++i) {
            const std::size_t opp = opposite_index(i);
            for (std::size_t j = 0; j < k; ++j) {
                const bool commute = verify_commuting(hopf(i), hopf(j));
                all &= commute == (j == opp);
                if (commute) pairs.push_back({i, j});
            }
        }
        r.add("commuting.characterization", verdict_of(all), CheckKind::Theory, {{"commuting_pairs", pairs}});
    }

    /// Generator transfer between H and H', plus the generator criterion on M.
    void run_generators(Report& r) {
        require_field();
        const Extension& ext = *F_.ext;
        for (std::size_t i = 0; i < structures().size(); ++i) {
            const std::size_t j = opposite_index(i);
            if (j < i) continue;
            Sampler rng(seed_);
            std::size_t agree = 0, generators = 0;
            bool one_rejected = true;
            for (std::size_t s = 0; s < kGeneratorSamples; ++s) {
                const FieldElement x = rng.in_L(ext);
                const bool a = is_generator(ext, hopf(i), x), b = is_generator(ext, hopf(j), x);
                agree += a == b;
                generators += a;
            }
            if (ext.m() > 1) one_rejected = !is_generator(ext, hopf(i), ext.E().one());
            const std::string tag = "generators[" + std::to_string(i) + "," + std::to_string(j) + "]";
            r.add(tag + ".transfer", verdict_of(agree == kGeneratorSamples && one_rejected), CheckKind::Theory,
                  {{"samples", kGeneratorSamples}, {"agreeing", agree}, {"generators", generators}});
            std::size_t map_agree = 0;
            for (std::size_t s = 0; s < kMapLevelSamples; ++s) {
                const FieldElement x = rng.in_L(ext);
                const auto g = map_level_generator(ext, hopf(i), x);
                map_agree += g.over_group_algebra == g.over_hopf_algebra &&
                             g.over_hopf_algebra == is_generator(ext, hopf(i), x);
            }
            r.add(tag + ".map_algebra", verdict_of(map_agree == kMapLevelSamples), CheckKind::Theory,
                  {{"samples", kMapLevelSamples}, {"agreeing", map_agree}});
        }
    }

    void run_assoc_order(Report& r, std::size_t i, const std::string& ideal) {
        const DescendedHopfAlgebra& H = hopf(i);
        const AssociatedOrder A = associated_order(H, F_.ideal(ideal));
        r.add("assoc_order[" + std::to_string(i) + "," + ideal + "]", Verdict::Pass, CheckKind::Invariant,
              lattice_json(A.lattice));
    }

    void run_freeness(Report& r, std::size_t i, const std::string& ideal, int bound) {
        const DescendedHopfAlgebra& H = hopf(i);
        const FractionalIdeal& B = F_.ideal(ideal);
        const AssociatedOrder A = associated_order(H, B);
        const FreenessResult f = freeness_search(H, A, B, bound);
        Json v = {{"bound", bound}, {"scanned", f.scanned}, {"order", lattice_json(A.lattice)}};
        if (f.free()) {
            v["witness"] = rational_array(f.witness);
            v["witness_in_ideal_basis"] = rational_array(f.witness_in_B);
        }
        r.add("freeness[" + std::to_string(i) + "," + ideal + "]", f.free() ? Verdict::Pass : Verdict::Unknown,
              CheckKind::Search, v);
    }

    /// Freeness over A_H and A_H' for each pair {N, N'}; a witness must transfer.
    void run_transfer(Report& r, const std::string& ideal, int bound) {
        const FractionalIdeal& B = F_.ideal(ideal);
        for (std::size_t i = 0; i < structures().size(); ++i) {
            const std::size_t j = opposite_index(i);
            if (j < i) continue;
            const std::string tag = "transfer[" + std::to_string(i) + "," + std::to_string(j) + "," + ideal + "]";
            try {
                const TransferCertificate c = freeness_transfer_certificate(hopf(i), hopf(j), B, bound);
                auto side = [](const FreenessResult& f) {
                    Json s = {{"verdict", f.free() ? "FREE" : "UNKNOWN"}, {"scanned", f.scanned}};
                    if (f.free()) s["witness"] = rational_array(f.witness);
                    return s;
                };
                Json v = {{"bound", bound}, {"commutative", c.commutative}, {"side", side(c.side)},
                          {"opposite_side", side(c.opposite_side)}};
                if (c.z_lattice_identity) v["z_lattice_identity"] = *c.z_lattice_identity;
                if (c.commuting_transport) v["commuting_transport"] = *c.commuting_transport;
                r.add(tag + ".consistent", verdict_of(c.holds()), CheckKind::Theory, v);
                if (c.side.free() || c.opposite_side.free()) {
                    r.add(tag + ".witness_transfers",
                          verdict_of(c.forward_transfer.value_or(true) && c.backward_transfer.value_or(true) &&
                                     c.side.free() && c.opposite_side.free()),
                          CheckKind::Theory);
                    r.add(tag + ".z_lattice_identity", verdict_of(c.z_lattice_identity.value_or(false)),
                          CheckKind::Theory);
                    r.add(tag + ".commuting_transport", verdict_of(c.commuting_transport.value_or(false)),
                          CheckKind::Theory);
                } else {
                    r.add(tag + ".freeness", Verdict::Unknown, CheckKind::Search,
                          {{"message", "no witness within bound " + std::to_string(bound) + " on either side"}});
                }
            } catch (const TransferViolationError& e) {
                r.add(tag + ".consistent", Verdict::Fail, CheckKind::Theory, {{"message", e.what()}});
            }
        }
    }

    /// Every check that applies to the fixture.
    void run_all(Report& r, int bound = kDefaultFreenessBound) {
        guarded(r, "group", [&] { run_group(r); });
        guarded(r, "enumerate", [&] { run_enumerate(r); });
        guarded(r, "opposite", [&] { run_opposite(r); });
        guarded(r, "det_identity", [&] { run_det_identity(r); });
        if (!F_.ext) return;
        guarded(r, "field", [&] { run_field(r); });
        guarded(r, "descent", [&] { run_descent_properties(r); });
        guarded(r, "hopf_galois", [&] { run_hopf_galois(r); });
        guarded(r, "separable", [&] { run_separable(r); });
        guarded(r, "commuting", [&] { run_commuting(r); });
        guarded(r, "generators", [&] { run_generators(r); });
        for (const auto& B : F_.ideals) guarded(r, "transfer", [&] { run_transfer(r, B.name, bound); });
    }

    static void guarded(Report& r, const std::string& section, const std::function<void()>& body) {
        try {
            body();
        } catch (const Error& e) {
            r.add(section + ".error", Verdict::Fail, CheckKind::Invariant, {{"message", e.what()}});
        }
    }

private:
    LoadedFixture F_;
    std::uint64_t seed_;
    std::optional<std::vector<RegularSubgroup>> structures_;
    std::vector<std::optional<DescendedHopfAlgebra>> hopf_;
};

}  // namespace hgs
