#pragma once

// Sparse multivariate polynomials with integer coefficients in variables y0, y1, ...

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "hgs/errors.hpp"

namespace hgs {

using Exponents = std::vector<std::uint8_t>;

/// Total degree first, then lexicographic with y0 > y1 > ... . Sorts larger monomials first.
struct MonomialOrder {
    bool operator()(const Exponents& a, const Exponents& b) const {
        unsigned da = 0, db = 0;
        for (auto e : a) da += e;
        for (auto e : b) db += e;
        if (da != db) return da > db;
        return a > b;
    }
};

class IntPolynomial {
public:
    using Terms = std::map<Exponents, mpz_class, MonomialOrder>;

    explicit IntPolynomial(std::size_t variables = 0) : nvars_(variables) {}

    static IntPolynomial variable(std::size_t k, std::size_t variables) {
        IntPolynomial p(variables);
        Exponents e(variables, 0);
        e.at(k) = 1;
        p.terms_[e] = 1;
        return p;
    }

    static IntPolynomial constant(const mpz_class& c, std::size_t variables) {
        IntPolynomial p(variables);
        if (c != 0) p.terms_[Exponents(variables, 0)] = c;
        return p;
    }

    std::size_t variables() const noexcept { return nvars_; }
    const Terms& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }

    /// Adds c * monomial, dropping the term if it cancels.
    void add_term(const Exponents& e, const mpz_class& c) {
        if (e.size() != nvars_) throw DomainError("monomial has the wrong number of variables");
        if (c == 0) return;
        auto [it, inserted] = terms_.try_emplace(e, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    /// this * c * y_k
    IntPolynomial times_variable(std::size_t k, const mpz_class& c) const {
        IntPolynomial out(nvars_);
        if (c == 0) return out;
        for (const auto& [e, coeff] : terms_) {
            Exponents f = e;
            ++f.at(k);
            out.terms_.emplace_hint(out.terms_.end(), std::move(f), coeff * c);
        }
        return out;
    }

    IntPolynomial& operator+=(const IntPolynomial& o) {
        check(o);
        for (const auto& [e, c] : o.terms_) add_term(e, c);
        return *this;
    }

    IntPolynomial& operator-=(const IntPolynomial& o) {
        check(o);
        for (const auto& [e, c] : o.terms_) add_term(e, -c);
        return *this;
    }

    friend IntPolynomial operator+(IntPolynomial a, const IntPolynomial& b) { return a += b; }
    friend IntPolynomial operator-(IntPolynomial a, const IntPolynomial& b) { return a -= b; }

    friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
        a.check(b);
        IntPolynomial out(a.nvars_);
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_) {
                Exponents e(a.nvars_);
                for (std::size_t i = 0; i < e.size(); ++i) e[i] = static_cast<std::uint8_t>(ea[i] + eb[i]);
                out.add_term(e, ca * cb);
            }
        return out;
    }

    friend bool operator==(const IntPolynomial& a, const IntPolynomial& b) {
        return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
    }

    /// Canonical text, e.g. "y0^2 - y1^2" or "-3*y0*y1*y2".
    std::string to_string() const {
        if (terms_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& [e, c] : terms_) {
            mpz_class mag = abs(c);
            if (first) {
                if (c < 0) os << '-';
            } else {
                os << (c < 0 ? " - " : " + ");
            }
            first = false;
            bool has_var = false;
            for (auto x : e) has_var |= x != 0;
            bool need_star = false;
            if (mag != 1 || !has_var) {
                os << mag.get_str();
                need_star = true;
            }
            for (std::size_t i = 0; i < e.size(); ++i) {
                if (e[i] == 0) continue;
                if (need_star) os << '*';
                os << 'y' << i;
                if (e[i] > 1) os << '^' << unsigned(e[i]);
                need_star = true;
            }
        }
        return os.str();
    }

    /// Value at the rational point y.
    mpq_class evaluate(const std::vector<mpq_class>& y) const {
        if (y.size() != nvars_) throw DomainError("evaluation point has the wrong number of coordinates");
        mpq_class sum = 0;
        for (const auto& [e, c] : terms_) {
            mpq_class t = c;
            for (std::size_t i = 0; i < e.size(); ++i)
                for (unsigned k = 0; k < e[i]; ++k) t *= y[i];
            sum += t;
        }
        return sum;
    }

private:
    void check(const IntPolynomial& o) const {
        if (o.nvars_ != nvars_) throw DomainError("polynomials over different variable sets");
    }

    std::size_t nvars_;
    Terms terms_;
};

}  // namespace hgs
