#pragma once

#include <ostream>

#include "ellstab/rational.hpp"
#include "ellstab/surface.hpp"

namespace ellstab {

/**
 * A divisor class a*Theta + b*f in the section/fiber sublattice.
 *
 * Coordinates are exact rationals: integral classes use integer entries,
 * while B-fields and polarizations like (1/2)(Theta + 3f) need halves.
 */
struct DivisorClass {
    Rational a;  ///< coefficient of the section class Theta
    Rational b;  ///< coefficient of the fiber class f

    friend bool operator==(const DivisorClass&, const DivisorClass&) = default;

    friend DivisorClass operator+(const DivisorClass& x, const DivisorClass& y) {
        return {x.a + y.a, x.b + y.b};
    }
    friend DivisorClass operator-(const DivisorClass& x, const DivisorClass& y) {
        return {x.a - y.a, x.b - y.b};
    }
    friend DivisorClass operator-(const DivisorClass& x) { return {-x.a, -x.b}; }
    friend DivisorClass operator*(const Rational& c, const DivisorClass& d) {
        return {c * d.a, c * d.b};
    }

    bool is_zero() const { return a == 0 && b == 0; }

    friend std::ostream& operator<<(std::ostream& os, const DivisorClass& d) {
        return os << d.a << "*Theta + " << d.b << "*f";
    }
};

/**
 * Intersection number on span{Theta, f}:
 *
 *     (a1*Theta + b1*f).(a2*Theta + b2*f) = -e*a1*a2 + a1*b2 + a2*b1.
 */
inline Rational intersect(const DivisorClass& d1, const DivisorClass& d2,
                          const SurfaceParams& surf = {}) {
    surf.validate();
    return -surf.e_rat() * d1.a * d2.a + d1.a * d2.b + d2.a * d1.b;
}

/** Volume V(M) = M^2 / 2. For M = R(Theta+(D+e)f) this equals R^2 (D + e/2). */
inline Rational volume(const DivisorClass& d, const SurfaceParams& surf = {}) {
    return intersect(d, d, surf) / 2;
}

/** Degree against the section: Theta.M = -e*a + b; equals R*D in RDV form. */
inline Rational theta_degree(const DivisorClass& d, const SurfaceParams& surf = {}) {
    surf.validate();
    return -surf.e_rat() * d.a + d.b;
}

/**
 * RDV presentation of a divisor: M = R(Theta + (D + e) f).
 *
 * R plays the role of a scale, D of a normalized fiber degree; the volume is
 * then V = R^2 (D + e/2). Classes with a = 0 (f-multiples) have no such form.
 */
struct RDVCoords {
    Rational R;
    Rational D;

    friend bool operator==(const RDVCoords&, const RDVCoords&) = default;
};

/** Convert to RDV coordinates; rejects a = 0 with errc::no_rdv_form. */
inline RDVCoords to_rdv(const DivisorClass& d, const SurfaceParams& surf = {}) {
    surf.validate();
    if (d.a == 0) fail(errc::no_rdv_form, "divisor is a multiple of the fiber class");
    return {d.a, d.b / d.a - surf.e_rat()};
}

/** Inverse of to_rdv: R(Theta + (D+e) f) = (R, R(D+e)). */
inline DivisorClass from_rdv(const RDVCoords& m, const SurfaceParams& surf = {}) {
    surf.validate();
    return {m.R, m.R * (m.D + surf.e_rat())};
}

/**
 * Product rule in RDV coordinates:
 *
 *     M.W = R_M R_W (D_M + D_W + e),
 *
 * the scalar intersection number of the two classes (cross-checked against
 * intersect(from_rdv(m), from_rdv(w)) in the test suite).
 */
inline Rational rdv_product(const RDVCoords& m, const RDVCoords& w,
                            const SurfaceParams& surf = {}) {
    surf.validate();
    return m.R * w.R * (m.D + w.D + surf.e_rat());
}

/** Positivity trichotomy for divisor classes in span{Theta, f}. */
enum class Positivity { ample, nef_not_ample, not_nef };

inline const char* positivity_name(Positivity p) noexcept {
    switch (p) {
        case Positivity::ample: return "ample";
        case Positivity::nef_not_ample: return "nef_not_ample";
        case Positivity::not_nef: return "not_nef";
    }
    return "unknown";
}

/**
 * Classify a*Theta + b*f:
 *
 *  - a > 0: ample iff b/a > e; on the boundary b/a = e the class is nef but
 *    not ample (it has degree zero on Theta); below it meets Theta negatively.
 *  - a = 0: multiples of the fiber are nef, never ample; negative multiples
 *    are not nef. The zero divisor reports nef_not_ample.
 *  - a < 0: negative fiber degree, not nef.
 */
inline Positivity positivity_class(const DivisorClass& d, const SurfaceParams& surf = {}) {
    surf.validate();
    if (d.a > 0) {
        const Rational ratio = d.b / d.a;
        if (ratio > surf.e_rat()) return Positivity::ample;
        if (ratio == surf.e_rat()) return Positivity::nef_not_ample;
        return Positivity::not_nef;
    }
    if (d.a == 0) {
        if (d.b >= 0) return Positivity::nef_not_ample;
        return Positivity::not_nef;
    }
    return Positivity::not_nef;
}

}  // namespace ellstab
