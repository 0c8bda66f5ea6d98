#pragma once

// Finite permutation groups small enough for full multiplication tables
// (order <= 60), with subgroup lattices, centers and isomorphism testing.

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "hgs/errors.hpp"
#include "hgs/permutation.hpp"

namespace hgs {

inline constexpr std::size_t kMaxGroupOrder = 60;

/// Sorted list of element indices of an ambient FiniteGroup.
using Subgroup = std::vector<std::size_t>;

class FiniteGroup {
public:
    FiniteGroup() = default;

    /// Closure of `generators` inside Sym(degree). Elements are stored sorted by image
    /// array, so the identity has index 0.
    static FiniteGroup generated_by(std::size_t degree, std::span<const Permutation> generators,
                                    std::size_t max_order = kMaxGroupOrder) {
        for (const auto& g : generators)
            if (g.degree() != degree) throw StructuralError("generator " + g.to_string() + " has wrong degree");
        std::set<Permutation> seen{Permutation::identity(degree)};
        std::vector<Permutation> queue{Permutation::identity(degree)};
        for (std::size_t i = 0; i < queue.size(); ++i)
            for (const auto& g : generators) {
                Permutation p = g * queue[i];
                if (seen.insert(p).second) {
                    if (seen.size() > max_order)
                        throw CapabilityError("group exceeds the order bound of " + std::to_string(max_order));
                    queue.push_back(std::move(p));
                }
            }
        FiniteGroup G(std::vector<Permutation>(seen.begin(), seen.end()));
        for (const auto& g : generators) {
            auto idx = *G.index_of(g);
            if (idx != 0 && std::find(G.generators_.begin(), G.generators_.end(), idx) == G.generators_.end())
                G.generators_.push_back(idx);
        }
        return G;
    }

    /// Wraps an explicit element list, verifying closure.
    static FiniteGroup from_elements(std::vector<Permutation> elements, std::size_t max_order = kMaxGroupOrder) {
        if (elements.empty()) throw StructuralError("empty element list");
        if (elements.size() > max_order)
            throw CapabilityError("group exceeds the order bound of " + std::to_string(max_order));
        std::sort(elements.begin(), elements.end());
        elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
        if (!elements.front().is_identity()) throw StructuralError("element list lacks the identity");
        for (const auto& a : elements)
            for (const auto& b : elements)
                if (!std::binary_search(elements.begin(), elements.end(), a * b))
                    throw StructuralError("set not closed: " + a.to_string() + " * " + b.to_string() + " = " +
                                          (a * b).to_string() + " is missing");
        FiniteGroup G(std::move(elements));
        G.generators_ = G.greedy_generators(G.all_indices());
        return G;
    }

    std::size_t order() const noexcept { return elements_.size(); }
    std::size_t degree() const noexcept { return elements_.empty() ? 0 : elements_.front().degree(); }
    static constexpr std::size_t identity() noexcept { return 0; }

    const Permutation& element(std::size_t i) const { return elements_[i]; }
    const std::vector<Permutation>& elements() const noexcept { return elements_; }
    const std::vector<std::size_t>& generators() const noexcept { return generators_; }

    std::optional<std::size_t> index_of(const Permutation& p) const {
        auto it = std::lower_bound(elements_.begin(), elements_.end(), p);
        if (it == elements_.end() || *it != p) return std::nullopt;
        return static_cast<std::size_t>(it - elements_.begin());
    }

    bool contains(const Permutation& p) const { return index_of(p).has_value(); }

    std::size_t mul(std::size_t a, std::size_t b) const { return table_[a * order() + b]; }
    std::size_t inverse(std::size_t a) const { return inverse_[a]; }

    std::size_t element_order(std::size_t a) const {
        std::size_t k = 1;
        for (std::size_t x = a; x != 0; x = mul(a, x)) ++k;
        return k;
    }

    bool is_abelian() const {
        for (std::size_t a : generators_)
            for (std::size_t b : generators_)
                if (mul(a, b) != mul(b, a)) return false;
        return true;
    }

    Subgroup all_indices() const {
        Subgroup s(order());
        for (std::size_t i = 0; i < s.size(); ++i) s[i] = i;
        return s;
    }

    /// Smallest subgroup containing `seeds`.
    Subgroup closure(std::span<const std::size_t> seeds) const {
        std::vector<bool> in(order(), false);
        std::vector<std::size_t> list{0};
        in[0] = true;
        for (std::size_t i = 0; i < list.size(); ++i)
            for (std::size_t s : seeds) {
                std::size_t p = mul(list[i], s);
                if (!in[p]) {
                    in[p] = true;
                    list.push_back(p);
                }
            }
        std::sort(list.begin(), list.end());
        return list;
    }

    /// Greedy generating set of a subgroup (elements taken in index order).
    std::vector<std::size_t> greedy_generators(const Subgroup& H) const {
        std::vector<std::size_t> gens;
        Subgroup span{0};
        for (std::size_t h : H) {
            if (std::binary_search(span.begin(), span.end(), h)) continue;
            gens.push_back(h);
            span = closure(gens);
            if (span.size() == H.size()) break;
        }
        return gens;
    }

    bool is_subgroup(const Subgroup& H) const {
        for (std::size_t a : H)
            for (std::size_t b : H)
                if (!std::binary_search(H.begin(), H.end(), mul(a, b))) return false;
        return !H.empty() && H.front() == 0;
    }

    bool is_normal(const Subgroup& H) const {
        for (std::size_t g : generators_)
            for (std::size_t h : H)
                if (!std::binary_search(H.begin(), H.end(), mul(mul(g, h), inverse(g)))) return false;
        return true;
    }

    Subgroup center() const {
        Subgroup z;
        for (std::size_t a = 0; a < order(); ++a) {
            bool central = std::all_of(generators_.begin(), generators_.end(),
                                       [&](std::size_t g) { return mul(a, g) == mul(g, a); });
            if (central) z.push_back(a);
        }
        return z;
    }

    /// Every subgroup, reached by adjoining one element at a time to already-found subgroups.
    /// Sorted by order, then lexicographically.
    std::vector<Subgroup> all_subgroups() const {
        std::set<Subgroup> found{Subgroup{0}};
        std::vector<Subgroup> work{Subgroup{0}};
        while (!work.empty()) {
            Subgroup H = std::move(work.back());
            work.pop_back();
            for (std::size_t g = 1; g < order(); ++g) {
                if (std::binary_search(H.begin(), H.end(), g)) continue;
                std::vector<std::size_t> seeds = greedy_generators(H);
                seeds.push_back(g);
                Subgroup K = closure(seeds);
                if (found.insert(K).second) work.push_back(std::move(K));
            }
        }
        std::vector<Subgroup> out(found.begin(), found.end());
        std::stable_sort(out.begin(), out.end(), [](const Subgroup& a, const Subgroup& b) {
            return a.size() != b.size() ? a.size() < b.size() : a < b;
        });
        return out;
    }

    std::vector<Subgroup> normal_subgroups() const {
        std::vector<Subgroup> out;
        for (auto& H : all_subgroups())
            if (is_normal(H)) out.push_back(std::move(H));
        return out;
    }

    std::vector<Permutation> elements_of(const Subgroup& H) const {
        std::vector<Permutation> out;
        for (std::size_t i : H) out.push_back(elements_[i]);
        return out;
    }

private:
    explicit FiniteGroup(std::vector<Permutation> sorted_elements) : elements_(std::move(sorted_elements)) {
        const std::size_t n = elements_.size();
        table_.assign(n * n, 0);
        inverse_.assign(n, 0);
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = 0; b < n; ++b) {
                auto idx = index_of(elements_[a] * elements_[b]);
                if (!idx) throw StructuralError("element set is not closed under composition");
                table_[a * n + b] = *idx;
                if (*idx == 0) inverse_[a] = b;
            }
    }

    std::vector<Permutation> elements_;
    std::vector<std::size_t> table_;
    std::vector<std::size_t> inverse_;
    std::vector<std::size_t> generators_;
};

/// Order plus the multiset of element orders. Equal classes are necessary for isomorphism;
/// find_isomorphism decides it.
struct IsoClass {
    std::size_t order = 0;
    std::map<std::size_t, std::size_t> element_orders;  // element order -> count

    friend bool operator==(const IsoClass&, const IsoClass&) = default;

    std::string to_string() const {
        std::string s = "order " + std::to_string(order) + " {";
        bool first = true;
        for (auto [o, c] : element_orders) {
            s += (first ? "" : ", ") + std::to_string(o) + ":" + std::to_string(c);
            first = false;
        }
        return s + "}";
    }
};

inline IsoClass iso_class(const FiniteGroup& G) {
    IsoClass c;
    c.order = G.order();
    for (std::size_t a = 0; a < G.order(); ++a) ++c.element_orders[G.element_order(a)];
    return c;
}

/// Exhaustive generator-image search. Returns phi with phi[a] = image of element a, or nullopt.
inline std::optional<std::vector<std::size_t>> find_isomorphism(const FiniteGroup& A, const FiniteGroup& B) {
    if (iso_class(A) != iso_class(B)) return std::nullopt;
    const std::size_t n = A.order();
    // Generators with large order first prune the most.
    std::vector<std::size_t> by_order(n);
    for (std::size_t i = 0; i < n; ++i) by_order[i] = i;
    std::stable_sort(by_order.begin(), by_order.end(),
                     [&](std::size_t x, std::size_t y) { return A.element_order(x) > A.element_order(y); });
    std::vector<std::size_t> gens;
    Subgroup span{0};
    for (std::size_t a : by_order) {
        if (span.size() == n) break;
        if (std::binary_search(span.begin(), span.end(), a)) continue;
        gens.push_back(a);
        span = A.closure(gens);
    }

    std::vector<std::size_t> images(gens.size());
    auto try_extend = [&]() -> std::optional<std::vector<std::size_t>> {
        constexpr std::size_t unset = static_cast<std::size_t>(-1);
        std::vector<std::size_t> phi(n, unset);
        phi[0] = 0;
        std::vector<std::size_t> queue{0};
        for (std::size_t i = 0; i < queue.size(); ++i) {
            std::size_t a = queue[i];
            for (std::size_t k = 0; k < gens.size(); ++k) {
                std::size_t ga = A.mul(gens[k], a);
                std::size_t img = B.mul(images[k], phi[a]);
                if (phi[ga] == unset) {
                    phi[ga] = img;
                    queue.push_back(ga);
                } else if (phi[ga] != img) {
                    return std::nullopt;
                }
            }
        }
        std::vector<bool> hit(n, false);
        for (auto b : phi) {
            if (b == unset || hit[b]) return std::nullopt;
            hit[b] = true;
        }
        return phi;
    };

    auto search = [&](auto&& self, std::size_t k) -> std::optional<std::vector<std::size_t>> {
        if (k == gens.size()) return try_extend();
        const std::size_t want = A.element_order(gens[k]);
        for (std::size_t b = 0; b < n; ++b) {
            if (B.element_order(b) != want) continue;
            images[k] = b;
            if (auto r = self(self, k + 1)) return r;
        }
        return std::nullopt;
    };
    return search(search, 0);
}

inline bool is_homomorphism(const FiniteGroup& A, const FiniteGroup& B, const std::vector<std::size_t>& phi) {
    for (std::size_t a = 0; a < A.order(); ++a)
        for (std::size_t b = 0; b < A.order(); ++b)
            if (phi[A.mul(a, b)] != B.mul(phi[a], phi[b])) return false;
    return true;
}

struct GroupProfile {
    Subgroup center;
    std::vector<Subgroup> normal_subgroups;  // including {e} and the whole group
    bool abelian = false;
    IsoClass iso;

    std::vector<Subgroup> nontrivial_proper_normal_subgroups() const {
        std::vector<Subgroup> out;
        for (const auto& H : normal_subgroups)
            if (H.size() > 1 && H.size() < iso.order) out.push_back(H);
        return out;
    }
};

inline GroupProfile group_queries(const FiniteGroup& G) {
    if (G.order() > kMaxGroupOrder)
        throw CapabilityError("group queries are limited to order " + std::to_string(kMaxGroupOrder));
    return {G.center(), G.normal_subgroups(), G.is_abelian(), iso_class(G)};
}

}  // namespace hgs
