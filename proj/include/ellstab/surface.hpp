#pragma once

#include <string>

#include "ellstab/error.hpp"
#include "ellstab/rational.hpp"

namespace ellstab {

/**
 * Numerical parameters of a Weierstrass elliptic surface.
 *
 * The ambient lattice is span{Theta, f}: Theta is the section class, f the
 * fiber class, with intersection numbers
 *
 *     Theta^2 = -e,   Theta.f = 1,   f^2 = 0.
 *
 * The surface is K3 exactly when e = 2; several operations (Mukai pairings,
 * the numerical Fourier-Mukai transform, the special-point charge) are
 * K3-specific and reject e != 2 with errc::k3_required.
 *
 * d_alpha is the integer twist parameter selecting the line bundles
 *
 *     L0 = O(-(d_alpha+1) f),   L1 = O(Theta - (d_alpha+2) f)
 *
 * that generate the after-FM kernel.
 */
struct SurfaceParams {
    int e = 2;        ///< e = -Theta^2, a positive integer
    int d_alpha = 0;  ///< twist parameter for the after-FM regime

    /** Throws errc::bad_surface unless e >= 1. */
    void validate() const {
        if (e < 1) fail(errc::bad_surface, "e must be a positive integer, got " + std::to_string(e));
    }

    bool is_k3() const { return e == 2; }

    /** Guard for K3-only operations. */
    void require_k3(const char* what) const {
        validate();
        if (!is_k3())
            fail(errc::k3_required,
                 std::string(what) + " requires e = 2, got e = " + std::to_string(e));
    }

    /** e as an exact rational, for formulas. */
    Rational e_rat() const { return Rational(e); }

    friend bool operator==(const SurfaceParams&, const SurfaceParams&) = default;
};

}  // namespace ellstab
