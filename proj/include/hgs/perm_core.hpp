#pragma once

// Coset spaces X = G/G_L, the left-translation embedding G -> Perm(X), and the
// regular subgroups of Perm(X) normalized by its image.

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "hgs/errors.hpp"
#include "hgs/group.hpp"
#include "hgs/permutation.hpp"

namespace hgs {

inline constexpr std::size_t kDefaultEnumerationBound = 8;

/// Left cosets gG_L. Cosets are numbered in order of their minimal element index,
/// so the base point (the coset of the identity) is always 0.
struct CosetSpace {
    FiniteGroup group;
    Subgroup stabilizer;
    std::vector<std::size_t> representatives;  // minimal element index per coset
    std::vector<std::size_t> coset_of;         // group element index -> coset index
    std::size_t base_point = 0;

    std::size_t size() const noexcept { return representatives.size(); }
    bool is_galois() const noexcept { return stabilizer.size() == 1; }
};

inline CosetSpace build_coset_space(const FiniteGroup& G, const Subgroup& GL) {
    if (!G.is_subgroup(GL)) throw StructuralError("stabilizer index set is not a subgroup");
    CosetSpace X;
    X.group = G;
    X.stabilizer = GL;
    constexpr std::size_t unset = static_cast<std::size_t>(-1);
    X.coset_of.assign(G.order(), unset);
    for (std::size_t g = 0; g < G.order(); ++g) {
        if (X.coset_of[g] != unset) continue;
        const std::size_t c = X.representatives.size();
        X.representatives.push_back(g);
        for (std::size_t k : GL) X.coset_of[G.mul(g, k)] = c;
    }
    X.base_point = X.coset_of[FiniteGroup::identity()];
    return X;
}

/// G_L given by generating permutations; each must lie in G.
inline CosetSpace build_coset_space(const FiniteGroup& G, std::span<const Permutation> stabilizer_generators) {
    std::vector<std::size_t> idx;
    for (const auto& p : stabilizer_generators) {
        auto i = G.index_of(p);
        if (!i) throw StructuralError("stabilizer generator " + p.to_string() + " is not an element of G");
        idx.push_back(*i);
    }
    return build_coset_space(G, G.closure(idx));
}

inline CosetSpace build_coset_space(const FiniteGroup& G, const FiniteGroup& GL) {
    for (const auto& p : GL.elements())
        if (!G.contains(p)) throw StructuralError("element " + p.to_string() + " of G_L is not in G");
    std::vector<std::size_t> idx;
    for (const auto& p : GL.elements()) idx.push_back(*G.index_of(p));
    std::sort(idx.begin(), idx.end());
    return build_coset_space(G, idx);
}

/// lambda(s)(gG_L) = s g G_L, one permutation of X per element of G.
class LambdaEmbedding {
public:
    explicit LambdaEmbedding(const CosetSpace& X) : base_point_(X.base_point) {
        const auto& G = X.group;
        for (std::size_t s = 0; s < G.order(); ++s) {
            std::vector<std::uint32_t> img(X.size());
            for (std::size_t c = 0; c < X.size(); ++c)
                img[c] = static_cast<std::uint32_t>(X.coset_of[G.mul(s, X.representatives[c])]);
            images_.push_back(Permutation::from_images(std::move(img)));
        }
        for (std::size_t s : G.generators())
            for (std::size_t g = 0; g < G.order(); ++g)
                if (images_[G.mul(s, g)] != images_[s] * images_[g])
                    throw InternalError("left translation is not a homomorphism");
        for (std::size_t s : G.generators()) generator_images_.push_back(images_[s]);
        std::vector<bool> reached(X.size(), false);
        for (const auto& p : images_) reached[p(X.base_point)] = true;
        if (std::find(reached.begin(), reached.end(), false) != reached.end())
            throw InternalError("left translation image is not transitive");
    }

    const Permutation& operator()(std::size_t g) const { return images_[g]; }
    const std::vector<Permutation>& images() const noexcept { return images_; }
    const std::vector<Permutation>& generator_images() const noexcept { return generator_images_; }

    /// Distinct image permutations, sorted.
    std::vector<Permutation> image() const {
        std::vector<Permutation> v = images_;
        std::sort(v.begin(), v.end());
        v.erase(std::unique(v.begin(), v.end()), v.end());
        return v;
    }

    Subgroup kernel() const {
        Subgroup k;
        for (std::size_t g = 0; g < images_.size(); ++g)
            if (images_[g].is_identity()) k.push_back(g);
        return k;
    }

private:
    std::size_t base_point_;
    std::vector<Permutation> images_;
    std::vector<Permutation> generator_images_;
};

inline LambdaEmbedding lambda_embedding(const CosetSpace& X) { return LambdaEmbedding(X); }

/// A regular subgroup N of Perm(X) with its regularity table mu: mu(k) is the unique
/// element of N sending the base point to k.
class RegularSubgroup {
public:
    static RegularSubgroup from_elements(std::vector<Permutation> elements, std::size_t base_point = 0) {
        if (elements.empty()) throw StructuralError("empty subgroup");
        const std::size_t m = elements.front().degree();
        std::sort(elements.begin(), elements.end());
        elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
        for (const auto& a : elements)
            for (const auto& b : elements)
                if (!std::binary_search(elements.begin(), elements.end(), a * b))
                    throw StructuralError("permutation set is not closed: " + a.to_string() + " * " +
                                          b.to_string() + " missing");
        if (elements.size() != m) throw DomainError("subgroup order differs from |X|; not regular");
        RegularSubgroup N;
        N.base_ = base_point;
        N.mu_.assign(m, m);
        for (std::size_t i = 0; i < elements.size(); ++i) {
            auto k = elements[i](base_point);
            if (N.mu_[k] != m) throw DomainError("subgroup is not regular: two elements agree on the base point");
            N.mu_[k] = i;
        }
        N.elements_ = std::move(elements);
        return N;
    }

    std::size_t size() const noexcept { return elements_.size(); }
    std::size_t base_point() const noexcept { return base_; }
    const std::vector<Permutation>& elements() const noexcept { return elements_; }
    const Permutation& element(std::size_t i) const { return elements_[i]; }

    /// Index (into elements()) of the element sending the base point to `point`.
    std::size_t mu_index(std::size_t point) const { return mu_[point]; }
    const Permutation& mu(std::size_t point) const { return elements_[mu_[point]]; }

    std::size_t index_of(const Permutation& p) const {
        auto it = std::lower_bound(elements_.begin(), elements_.end(), p);
        if (it == elements_.end() || *it != p) throw DomainError("permutation " + p.to_string() + " is not in N");
        return static_cast<std::size_t>(it - elements_.begin());
    }

    bool contains(const Permutation& p) const { return std::binary_search(elements_.begin(), elements_.end(), p); }

    FiniteGroup as_group() const { return FiniteGroup::from_elements(elements_); }

    bool is_abelian() const {
        for (const auto& a : elements_)
            for (const auto& b : elements_)
                if (a * b != b * a) return false;
        return true;
    }

    friend bool operator==(const RegularSubgroup& a, const RegularSubgroup& b) { return a.elements_ == b.elements_; }
    friend auto operator<=>(const RegularSubgroup& a, const RegularSubgroup& b) { return a.elements_ <=> b.elements_; }

private:
    RegularSubgroup() = default;
    std::size_t base_ = 0;
    std::vector<Permutation> elements_;
    std::vector<std::size_t> mu_;
};

/// |N| = |X| and N transitive. Throws StructuralError when N is not closed.
inline bool is_regular(std::span<const Permutation> N, const CosetSpace& X) {
    std::vector<Permutation> v(N.begin(), N.end());
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    for (const auto& a : v)
        for (const auto& b : v)
            if (!std::binary_search(v.begin(), v.end(), a * b))
                throw StructuralError("permutation set is not closed under composition");
    if (v.size() != X.size()) return false;
    std::vector<bool> reached(X.size(), false);
    for (const auto& p : v) reached[p(X.base_point)] = true;
    return std::find(reached.begin(), reached.end(), false) == reached.end();
}

inline bool is_normalized_by(const RegularSubgroup& N, const LambdaEmbedding& lambda) {
    for (const auto& g : lambda.generator_images())
        for (const auto& eta : N.elements())
            if (!N.contains(g.conjugate(eta))) return false;
    return true;
}

/// In the Galois case (G_L trivial, X = G) the right regular image rho(G): rho(g)(h) = h g^-1.
inline RegularSubgroup right_regular(const CosetSpace& X) {
    if (!X.is_galois()) throw DomainError("right regular embedding needs a trivial stabilizer");
    const auto& G = X.group;
    std::vector<Permutation> elts;
    for (std::size_t g = 0; g < G.order(); ++g) {
        std::vector<std::uint32_t> img(G.order());
        for (std::size_t h = 0; h < G.order(); ++h)
            img[X.coset_of[h]] = static_cast<std::uint32_t>(X.coset_of[G.mul(h, G.inverse(g))]);
        elts.push_back(Permutation::from_images(std::move(img)));
    }
    return RegularSubgroup::from_elements(std::move(elts), X.base_point);
}

/// lambda(G) as a regular subgroup (Galois case).
inline RegularSubgroup left_regular(const CosetSpace& X, const LambdaEmbedding& lambda) {
    if (!X.is_galois()) throw DomainError("lambda(G) is regular only when the stabilizer is trivial");
    return RegularSubgroup::from_elements(lambda.image(), X.base_point);
}

/// N' = { phi_eta : eta in N } with phi_eta(k) = mu_k(eta(base)). Equals the
/// centralizer of N in Perm(X).
inline RegularSubgroup opposite(const RegularSubgroup& N) {
    const std::size_t m = N.size();
    const std::size_t base = N.base_point();
    std::vector<Permutation> phis;
    phis.reserve(m);
    for (const auto& eta : N.elements()) {
        std::vector<std::uint32_t> img(m);
        const auto target = eta(base);
        for (std::size_t k = 0; k < m; ++k) img[k] = N.mu(k)(target);
        phis.push_back(Permutation::from_images(std::move(img)));
    }
    return RegularSubgroup::from_elements(std::move(phis), base);
}

/// The element phi_eta of opposite(N) built from eta.
inline Permutation opposite_element(const RegularSubgroup& N, const Permutation& eta) {
    std::vector<std::uint32_t> img(N.size());
    for (std::size_t k = 0; k < N.size(); ++k) img[k] = N.mu(k)(eta(N.base_point()));
    return Permutation::from_images(std::move(img));
}

/// Exhaustive scan of Sym(X) for permutations commuting with every element of N.
inline std::vector<Permutation> centralizer_bruteforce(const RegularSubgroup& N,
                                                       std::size_t bound = kDefaultEnumerationBound) {
    if (N.size() > bound)
        throw CapabilityError("centralizer scan is limited to |X| <= " + std::to_string(bound));
    std::vector<Permutation> out;
    for (const auto& p : symmetric_group_elements(N.size())) {
        bool commutes = std::all_of(N.elements().begin(), N.elements().end(),
                                    [&](const Permutation& eta) { return p * eta == eta * p; });
        if (commutes) out.push_back(p);
    }
    return out;
}

namespace detail {

// Group generated by `seeds` after closing them under conjugation by `conjugators`.
// Gives up (nullopt) as soon as two elements agree on the base point, i.e. the
// result could not sit inside a regular subgroup.
inline std::optional<std::vector<Permutation>> semiregular_normal_closure(std::vector<Permutation> seeds,
                                                                          std::span<const Permutation> conjugators,
                                                                          std::size_t base) {
    const std::size_t m = seeds.front().degree();
    std::set<Permutation> gens(seeds.begin(), seeds.end());
    std::vector<Permutation> work(seeds.begin(), seeds.end());
    while (!work.empty()) {
        Permutation g = std::move(work.back());
        work.pop_back();
        for (const auto& c : conjugators) {
            Permutation h = c.conjugate(g);
            if (!h.is_semiregular()) return std::nullopt;
            if (gens.insert(h).second) {
                if (gens.size() >= m) return std::nullopt;
                work.push_back(std::move(h));
            }
        }
    }
    std::vector<std::optional<Permutation>> by_point(m);
    std::vector<Permutation> elements{Permutation::identity(m)};
    by_point[base] = elements.front();
    for (std::size_t i = 0; i < elements.size(); ++i)
        for (const auto& g : gens) {
            Permutation p = elements[i] * g;
            auto& slot = by_point[p(base)];
            if (!slot) {
                slot = p;
                elements.push_back(std::move(p));
            } else if (*slot != p) {
                return std::nullopt;
            }
        }
    std::sort(elements.begin(), elements.end());
    return elements;
}

}  // namespace detail

/// All regular subgroups of Perm(X) normalized by lambda(G), sorted by element list.
///
/// Search over the regularity table: starting from the trivial group, pick the least
/// point k not yet reached from the base point and try every semiregular permutation
/// sending the base point to k, closing under products and lambda-conjugation.
inline std::vector<RegularSubgroup> enumerate_regular_normalized(const CosetSpace& X, const LambdaEmbedding& lambda,
                                                                 std::size_t bound = kDefaultEnumerationBound) {
    const std::size_t m = X.size();
    if (m > bound)
        throw CapabilityError("enumeration is limited to |X| <= " + std::to_string(bound) + " (got " +
                              std::to_string(m) + ")");
    const std::size_t base = X.base_point;
    if (m == 1) return {RegularSubgroup::from_elements({Permutation::identity(1)}, base)};

    std::vector<std::vector<Permutation>> candidates(m);
    for (auto& p : symmetric_group_elements(m))
        if (p(base) != base && p.is_semiregular()) candidates[p(base)].push_back(std::move(p));

    const auto& conj = lambda.generator_images();
    std::set<std::vector<Permutation>> results;
    std::set<std::vector<Permutation>> visited;

    auto extend = [&](auto&& self, const std::vector<Permutation>& group, const std::vector<Permutation>& gens) -> void {
        if (!visited.insert(group).second) return;
        if (group.size() == m) {
            results.insert(group);
            return;
        }
        std::vector<bool> reached(m, false);
        for (const auto& p : group) reached[p(base)] = true;
        std::size_t target = 0;
        while (reached[target]) ++target;
        for (const auto& pi : candidates[target]) {
            std::vector<Permutation> seeds = gens;
            seeds.push_back(pi);
            if (auto next = detail::semiregular_normal_closure(seeds, conj, base)) self(self, *next, seeds);
        }
    };
    extend(extend, {Permutation::identity(m)}, {});

    std::vector<RegularSubgroup> out;
    for (const auto& g : results) out.push_back(RegularSubgroup::from_elements(g, base));
    return out;
}

}  // namespace hgs
