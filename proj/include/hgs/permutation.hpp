#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "hgs/errors.hpp"

namespace hgs {

/// A bijection of {0, ..., n-1}, stored as its image array.
/// Composition follows function notation: (a * b)(i) = a(b(i)).
class Permutation {
public:
    Permutation() = default;

    static Permutation identity(std::size_t n) {
        Permutation p;
        p.images_.resize(n);
        std::iota(p.images_.begin(), p.images_.end(), 0u);
        return p;
    }

    static Permutation from_images(std::vector<std::uint32_t> images) {
        std::vector<bool> seen(images.size(), false);
        for (auto v : images) {
            if (v >= images.size() || seen[v])
                throw StructuralError("image array " + format(images) + " is not a bijection");
            seen[v] = true;
        }
        Permutation p;
        p.images_ = std::move(images);
        return p;
    }

    std::size_t degree() const noexcept { return images_.size(); }
    std::uint32_t operator()(std::size_t i) const { return images_[i]; }
    const std::vector<std::uint32_t>& images() const noexcept { return images_; }

    bool is_identity() const {
        for (std::size_t i = 0; i < images_.size(); ++i)
            if (images_[i] != i) return false;
        return true;
    }

    Permutation inverse() const {
        Permutation p;
        p.images_.resize(images_.size());
        for (std::size_t i = 0; i < images_.size(); ++i) p.images_[images_[i]] = static_cast<std::uint32_t>(i);
        return p;
    }

    friend Permutation operator*(const Permutation& a, const Permutation& b) {
        if (a.degree() != b.degree()) throw StructuralError("composing permutations of different degree");
        Permutation p;
        p.images_.resize(a.images_.size());
        for (std::size_t i = 0; i < a.images_.size(); ++i) p.images_[i] = a.images_[b.images_[i]];
        return p;
    }

    /// a * b * a^-1
    Permutation conjugate(const Permutation& b) const { return (*this) * b * inverse(); }

    std::size_t order() const {
        std::size_t o = 1;
        std::vector<bool> seen(images_.size(), false);
        for (std::size_t i = 0; i < images_.size(); ++i) {
            if (seen[i]) continue;
            std::size_t len = 0;
            for (std::size_t j = i; !seen[j]; j = images_[j]) {
                seen[j] = true;
                ++len;
            }
            o = std::lcm(o, len);
        }
        return o;
    }

    /// True when every cycle has the same length (no nonidentity power fixes a point).
    bool is_semiregular() const {
        std::vector<bool> seen(images_.size(), false);
        std::size_t common = 0;
        for (std::size_t i = 0; i < images_.size(); ++i) {
            if (seen[i]) continue;
            std::size_t len = 0;
            for (std::size_t j = i; !seen[j]; j = images_[j]) {
                seen[j] = true;
                ++len;
            }
            if (common == 0) common = len;
            if (len != common) return false;
        }
        return true;
    }

    friend bool operator==(const Permutation&, const Permutation&) = default;
    friend auto operator<=>(const Permutation& a, const Permutation& b) { return a.images_ <=> b.images_; }

    std::string to_string() const { return format(images_); }

private:
    static std::string format(const std::vector<std::uint32_t>& v) {
        std::ostringstream os;
        os << '[';
        for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
        os << ']';
        return os.str();
    }

    std::vector<std::uint32_t> images_;
};

/// All permutations of {0..n-1} in lexicographic order of image arrays.
inline std::vector<Permutation> symmetric_group_elements(std::size_t n) {
    std::vector<std::uint32_t> v(n);
    std::iota(v.begin(), v.end(), 0u);
    std::vector<Permutation> out;
    do {
        out.push_back(Permutation::from_images(v));
    } while (std::next_permutation(v.begin(), v.end()));
    return out;
}

}  // namespace hgs
