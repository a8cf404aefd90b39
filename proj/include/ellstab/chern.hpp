#pragma once

#include <ostream>

#include "ellstab/divisor.hpp"
#include "ellstab/rational.hpp"
#include "ellstab/surface.hpp"

namespace ellstab {

/**
 * Numerical Chern character (ch0, ch1, ch2) of an object, confined to the
 * section/fiber sublattice:
 *
 *     ch0 = r,   ch1 = a*Theta + b*f,   ch2 = s * [pt].
 *
 * Fields are exact rationals: integral classes of sheaves have integer
 * entries, but B-field twists introduce halves.
 */
struct ChernVector {
    Rational r;  ///< ch0 (rank)
    Rational a;  ///< Theta-coefficient of ch1
    Rational b;  ///< f-coefficient of ch1
    Rational s;  ///< ch2 in units of the point class

    friend bool operator==(const ChernVector&, const ChernVector&) = default;

    friend ChernVector operator+(const ChernVector& x, const ChernVector& y) {
        return {x.r + y.r, x.a + y.a, x.b + y.b, x.s + y.s};
    }
    friend ChernVector operator-(const ChernVector& x, const ChernVector& y) {
        return {x.r - y.r, x.a - y.a, x.b - y.b, x.s - y.s};
    }
    friend ChernVector operator-(const ChernVector& x) { return {-x.r, -x.a, -x.b, -x.s}; }
    friend ChernVector operator*(const Rational& c, const ChernVector& v) {
        return {c * v.r, c * v.a, c * v.b, c * v.s};
    }

    DivisorClass ch1() const { return {a, b}; }
    bool is_zero() const { return r == 0 && a == 0 && b == 0 && s == 0; }

    friend std::ostream& operator<<(std::ostream& os, const ChernVector& v) {
        return os << "(" << v.r << ", " << v.a << ", " << v.b << ", " << v.s << ")";
    }
};

/** Class of the shifted object E[1]: componentwise negation (an involution). */
inline ChernVector shift(const ChernVector& v) {
    return -v;
}

/** Degree of ch1 against Theta: Theta.ch1 = -e*a + b. */
inline Rational theta_degree_ch1(const ChernVector& v, const SurfaceParams& surf = {}) {
    return theta_degree(v.ch1(), surf);
}

/** Degree of ch1 against the fiber: f.ch1 = a. */
inline Rational fiber_degree_ch1(const ChernVector& v) {
    return v.a;
}

/** Chern character of a line bundle O(d): (1, d, d^2/2). */
inline ChernVector ch_line_bundle(const DivisorClass& d, const SurfaceParams& surf = {}) {
    return {1, d.a, d.b, volume(d, surf)};
}

/**
 * Chern character of the pushforward of O(m) from the section:
 * (0, Theta, (m+1)[pt]) = (0, 1, 0, m+1). K3-specific (the Todd-class
 * correction in the Grothendieck-Riemann-Roch computation uses e = 2).
 */
inline ChernVector ch_section_sheaf(long long m, const SurfaceParams& surf = {}) {
    surf.require_k3("ch_section_sheaf");
    return {0, 1, 0, Rational(m) + 1};
}

/**
 * B-field twist ch^B = exp(-B) * ch:
 *
 *     (r, c1, s) -> (r, c1 - r*B, s - B.c1 + r*B^2/2).
 *
 * twist(twist(v, B), -B) = v.
 */
inline ChernVector twist(const ChernVector& v, const DivisorClass& B,
                         const SurfaceParams& surf = {}) {
    const Rational s_new = v.s - intersect(B, v.ch1(), surf) + v.r * volume(B, surf);
    return {v.r, v.a - v.r * B.a, v.b - v.r * B.b, s_new};
}

/**
 * Mukai vector v(E) = ch(E) sqrt(td) = (ch0, ch1, ch0 + ch2) on a K3 surface.
 */
struct MukaiVector {
    Rational r;        ///< rank component
    DivisorClass c1;   ///< divisor component
    Rational s_tilde;  ///< point component r + s

    friend bool operator==(const MukaiVector&, const MukaiVector&) = default;
};

inline MukaiVector mukai_vector(const ChernVector& v, const SurfaceParams& surf = {}) {
    surf.require_k3("mukai_vector");
    return {v.r, v.ch1(), v.r + v.s};
}

/**
 * Mukai pairing (v, w) = c1(v).c1(w) - r_v s~_w - r_w s~_v.
 * The Euler characteristic is chi = -(v, w).
 */
inline Rational mukai_pairing(const MukaiVector& v, const MukaiVector& w,
                              const SurfaceParams& surf = {}) {
    surf.require_k3("mukai_pairing");
    return intersect(v.c1, w.c1, surf) - v.r * w.s_tilde - w.r * v.s_tilde;
}

/** Numerical Euler characteristic chi(v, w) = -(v(E), v(F)). */
inline Rational euler_characteristic(const ChernVector& v, const ChernVector& w,
                                     const SurfaceParams& surf = {}) {
    return -mukai_pairing(mukai_vector(v, surf), mukai_vector(w, surf), surf);
}

}  // namespace ellstab
