#pragma once

#include <array>
#include <cstddef>
#include <map>
#include <ostream>

#include "ellstab/rational.hpp"

namespace ellstab {

/**
 * Sparse multivariate polynomial over the exact rationals in at most four
 * indeterminates.
 *
 * This is deliberately minimal: it exists so that central charges can be
 * evaluated with *symbolic* parameters (treating V, D, R_B, ... as
 * independent transcendentals), which turns "the charge vanishes for all
 * parameter values" into finitely many rational linear conditions — one per
 * monomial. Only ring operations are needed; there is no division.
 */
class Poly {
public:
    static constexpr std::size_t kMaxVars = 4;
    using Exponents = std::array<int, kMaxVars>;

    Poly() = default;

    /** Constant polynomial. */
    Poly(const Rational& c) {  // NOLINT(google-explicit-constructor)
        if (c != 0) terms_[Exponents{}] = c;
    }
    Poly(int c) : Poly(Rational(c)) {}  // NOLINT(google-explicit-constructor)

    /** The indeterminate x_i. */
    static Poly var(std::size_t i) {
        Poly p;
        Exponents e{};
        e.at(i) = 1;
        p.terms_[e] = 1;
        return p;
    }

    bool is_zero() const { return terms_.empty(); }

    /** Coefficient of a monomial (zero if absent). */
    Rational coeff(const Exponents& e) const {
        auto it = terms_.find(e);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    const std::map<Exponents, Rational>& terms() const { return terms_; }

    friend Poly operator+(const Poly& x, const Poly& y) {
        Poly out = x;
        for (const auto& [e, c] : y.terms_) out.add_term(e, c);
        return out;
    }
    friend Poly operator-(const Poly& x, const Poly& y) {
        Poly out = x;
        for (const auto& [e, c] : y.terms_) out.add_term(e, -c);
        return out;
    }
    friend Poly operator-(const Poly& x) {
        Poly out;
        for (const auto& [e, c] : x.terms_) out.terms_[e] = -c;
        return out;
    }
    friend Poly operator*(const Poly& x, const Poly& y) {
        Poly out;
        for (const auto& [ex, cx] : x.terms_)
            for (const auto& [ey, cy] : y.terms_) {
                Exponents e;
                for (std::size_t i = 0; i < kMaxVars; ++i) e[i] = ex[i] + ey[i];
                out.add_term(e, cx * cy);
            }
        return out;
    }

    Poly& operator+=(const Poly& y) { return *this = *this + y; }
    Poly& operator-=(const Poly& y) { return *this = *this - y; }
    Poly& operator*=(const Poly& y) { return *this = *this * y; }

    friend bool operator==(const Poly& x, const Poly& y) { return x.terms_ == y.terms_; }

    friend std::ostream& operator<<(std::ostream& os, const Poly& p) {
        if (p.is_zero()) return os << "0";
        bool first = true;
        for (const auto& [e, c] : p.terms_) {
            if (!first) os << " + ";
            first = false;
            os << "(" << c << ")";
            for (std::size_t i = 0; i < kMaxVars; ++i)
                if (e[i] != 0) os << "*x" << i << "^" << e[i];
        }
        return os;
    }

private:
    void add_term(const Exponents& e, const Rational& c) {
        auto [it, inserted] = terms_.try_emplace(e, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    std::map<Exponents, Rational> terms_;  // exponent vector -> coefficient
};

}  // namespace ellstab
