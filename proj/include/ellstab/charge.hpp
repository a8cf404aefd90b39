#pragma once

<literal>
#include <array>
#include <complex>
#include <ostream>
#include <utility>

#include "ellstab/chern.hpp"
#include "ellstab/error.hpp"
#include "ellstab/poly.hpp"
#include "ellstab/rational.hpp"
#include "ellstab/surface.hpp"
</literal>

namespace ellstab {

/** Exact complex value of a central charge. Zero is permitted (kernel classes). */
struct ChargeValue {
    Rational re;
    Rational im;

    bool is_zero() const { return re == 0 && im == 0; }

    friend bool operator==(const ChargeValue&, const ChargeValue&) = default;
    friend ChargeValue operator+(const ChargeValue& x, const ChargeValue& y) {
        return {x.re + y.re, x.im + y.im};
    }
    friend ChargeValue operator-(const ChargeValue& x) { return {-x.re, -x.im}; }

    friend std::ostream& operator<<(std::ostream& os, const ChargeValue& z) {
        return os << "(" << z.re << ", " << z.im << ")";
    }
};

/**
 * A central charge as a linear functional on the numerical lattice.
 *
 * Z(v) = sum_i (re[i] + i*im[i]) * v_i over the coordinates v = (r, a, b, s).
 * The scalar S is the coefficient ring: Rational for exact evaluation,
 * double for float mode, Poly for charges with symbolic parameters.
 */
template <class S>
struct ChargeForm {
    std::array<S, 4> re;
    std::array<S, 4> im;
};

template <class S>
std::pair<S, S> eval_form(const ChargeForm<S>& f, const std::array<S, 4>& v) {
    S re = f.re[0] * v[0] + f.re[1] * v[1] + f.re[2] * v[2] + f.re[3] * v[3];
    S im = f.im[0] * v[0] + f.im[1] * v[1] + f.im[2] * v[2] + f.im[3] * v[3];
    return {std::move(re), std::move(im)};
}

namespace detail {

template <class S>
struct GenericDivisor {
    S a, b;  // a*Theta + b*f with S-valued coefficients
};

/**
 * Functional of the twisted charge
 *
 *     Z(E) = -ch2^B(E) + v0 * ch0^B(E) + i * omega.ch1^B(E)
 *
 * expanded over (r, a, b, s). Writing V_B = B^2/2:
 *
 *     Re = -s + B.ch1 - r*V_B + v0*r,
 *     Im = omega.ch1 - r*(omega.B).
 *
 * e_half must equal e/2 (passed separately because S may lack division).
 */
template <class S>
ChargeForm<S> twisted_form(const S& e, const S& e_half, const GenericDivisor<S>& omega,
                           const GenericDivisor<S>& B, const S& v0) {
    const S vol_B = B.a * B.b - e_half * B.a * B.a;                       // B^2/2
    const S omega_dot_B = omega.a * B.b + B.a * omega.b - e * omega.a * B.a;
    ChargeForm<S> f;
    f.re = {v0 - vol_B,        // r
            B.b - e * B.a,     // a  (from B.ch1)
            B.a,               // b  (from B.ch1)
            S(-1)};            // s
    f.im = {S(0) - omega_dot_B,      // r
            omega.b - e * omega.a,   // a  (from omega.ch1)
            omega.a,                 // b  (from omega.ch1)
            S(0)};
    return f;
}

/**
 * Functional of the rescaled two-parameter charge
 *
 *     Z_{V,D}(E) = -ch2 + V*ch0 + i*(Theta + (D+e) f).ch1
 *                = (-s + V*r) + i*(b + D*a),
 *
 * with V and D treated as independent parameters (no volume relation).
 */
template <class S>
ChargeForm<S> vd_form(const S& V, const S& D) {
    ChargeForm<S> f;
    f.re = {V, S(0), S(0), S(-1)};
    f.im = {S(0), D, S(1), S(0)};
    return f;
}

}  // namespace detail

/** The seven central charge families. */
enum class ChargeKind {
    general_rdv,   ///< Z_{omega,B}, omega = R_w(Theta+(D_w+e)f), B = R_B(Theta+(D_B+e)f)
    rescaled_vd,   ///< Z_{V,D} with independent parameters V, D
    origin,        ///< Z_H = -ch2 + i H.ch1, H = Theta + e f  (= Z_{0,0})
    v_axis,        ///< Z_{V,H} = -ch2 + V ch0 + i H.ch1       (= Z_{V,0})
    d_axis,        ///< Z_D = -ch2 + i (Theta+(D+e)f).ch1      (= Z_{0,D})
    todd,          ///< Z^td_{omega,B}: ch0-coefficient V_w - 1 instead of V_w
    todd_special,  ///< Z'_0 = Z^td at the special point (omega'_0, B'_0)
};

inline const char* charge_kind_name(ChargeKind k) noexcept {
    switch (k) {
        case ChargeKind::general_rdv: return "rdv";
        case ChargeKind::rescaled_vd: return "vd";
        case ChargeKind::origin: return "origin";
        case ChargeKind::v_axis: return "v-axis";
        case ChargeKind::d_axis: return "d-axis";
        case ChargeKind::todd: return "todd";
        case ChargeKind::todd_special: return "todd-special";
    }
    return "unknown";
}

/** RDV-style parameter block (R_omega, D_omega; R_B, D_B) of a twisted charge. */
struct RdvChargeParams {
    Rational R_omega, D_omega, R_B, D_B;
};

/**
 * Parameters of the special-point Todd charge Z'_0:
 *
 *     omega'_0 = (1/2)(Theta + 3f)            -> RDV (1/2, 1)
 *     B'_0     = (1/2)(Theta + (-2d-3)f)      -> RDV (1/2, -2d-5)
 *
 * where d = d_alpha. This block is the single source of truth; the divisor
 * forms are recovered with from_rdv (see special_point in fm.hpp).
 */
inline RdvChargeParams todd_special_params(int d_alpha) {
    return {Rational(1, 2), Rational(1), Rational(1, 2), Rational(-2) * d_alpha - 5};
}

/**
 * Exact-mode description of a central charge. Factories enforce parameter
 * domains; the float and symbolic forms are derived from the same data.
 */
class ChargeSpec {
public:
    static ChargeSpec general_rdv(const Rational& R_omega, const Rational& D_omega,
                                  const Rational& R_B, const Rational& D_B) {
        if (R_omega <= 0) fail(errc::bad_argument, "general_rdv requires R_omega > 0");
        ChargeSpec s(ChargeKind::general_rdv);
        s.rdv_ = {R_omega, D_omega, R_B, D_B};
        return s;
    }
    static ChargeSpec todd(const Rational& R_omega, const Rational& D_omega,
                           const Rational& R_B, const Rational& D_B) {
        if (R_omega <= 0) fail(errc::bad_argument, "todd requires R_omega > 0");
        ChargeSpec s(ChargeKind::todd);
        s.rdv_ = {R_omega, D_omega, R_B, D_B};
        return s;
    }
    static ChargeSpec rescaled_vd(const Rational& V, const Rational& D) {
        ChargeSpec s(ChargeKind::rescaled_vd);
        s.V_ = V;
        s.D_ = D;
        return s;
    }
    static ChargeSpec origin() { return ChargeSpec(ChargeKind::origin); }
    static ChargeSpec v_axis(const Rational& V) {
        ChargeSpec s(ChargeKind::v_axis);
        s.V_ = V;
        return s;
    }
    static ChargeSpec d_axis(const Rational& D) {
        ChargeSpec s(ChargeKind::d_axis);
        s.D_ = D;
        return s;
    }
    static ChargeSpec todd_special(int d_alpha) {
        ChargeSpec s(ChargeKind::todd_special);
        s.d_alpha_ = d_alpha;
        s.rdv_ = todd_special_params(d_alpha);
        return s;
    }

    ChargeKind kind() const { return kind_; }
    const RdvChargeParams& rdv_params() const { return rdv_; }
    const Rational& V() const { return V_; }
    const Rational& D() const { return D_; }
    int d_alpha() const { return d_alpha_; }

private:
    explicit ChargeSpec(ChargeKind k) : kind_(k) {}

    ChargeKind kind_;
    RdvChargeParams rdv_{};  // general_rdv / todd / todd_special
    Rational V_{0};          // rescaled_vd / v_axis
    Rational D_{0};          // rescaled_vd / d_axis
    int d_alpha_ = 0;        // todd_special
};

/** Exact functional of a charge spec over the surface parameters. */
inline ChargeForm<Rational> charge_form(const ChargeSpec& spec, const SurfaceParams& surf = {}) {
    surf.validate();
    const Rational e = surf.e_rat();
    const Rational eh = e / 2;
    switch (spec.kind()) {
        case ChargeKind::general_rdv:
        case ChargeKind::todd:
        case ChargeKind::todd_special: {
            if (spec.kind() == ChargeKind::todd_special) surf.require_k3("todd_special charge");
            const auto& p = spec.rdv_params();
            const detail::GenericDivisor<Rational> omega{p.R_omega, p.R_omega * (p.D_omega + e)};
            const detail::GenericDivisor<Rational> B{p.R_B, p.R_B * (p.D_B + e)};
            Rational v0 = p.R_omega * p.R_omega * (p.D_omega + eh);  // V_omega
            if (spec.kind() != ChargeKind::general_rdv) v0 -= 1;     // Todd normalization
            return detail::twisted_form<Rational>(e, eh, omega, B, v0);
        }
        case ChargeKind::rescaled_vd:
            return detail::vd_form<Rational>(spec.V(), spec.D());
        case ChargeKind::origin:
            return detail::vd_form<Rational>(Rational(0), Rational(0));
        case ChargeKind::v_axis:
            return detail::vd_form<Rational>(spec.V(), Rational(0));
        case ChargeKind::d_axis:
            return detail::vd_form<Rational>(Rational(0), spec.D());
    }
    fail(errc::bad_argument, "unhandled charge kind");
}

/**
 * Functional of a charge spec with its parameters replaced by independent
 * indeterminates (R_omega, D_omega, R_B, D_B) or (V, D). Coefficients are
 * polynomials; "Z(v) = 0 for all parameter values" becomes the vanishing of
 * every monomial coefficient. Parameter-free kinds degrade to constants.
 */
inline ChargeForm<Poly> generic_charge_form(const ChargeSpec& spec, const SurfaceParams& surf = {}) {
    surf.validate();
    const Poly e{surf.e_rat()};
    const Poly eh{surf.e_rat() / 2};
    switch (spec.kind()) {
        case ChargeKind::general_rdv:
        case ChargeKind::todd: {
            const Poly R = Poly::var(0), D = Poly::var(1), RB = Poly::var(2), DB = Poly::var(3);
            const detail::GenericDivisor<Poly> omega{R, R * (D + e)};
            const detail::GenericDivisor<Poly> B{RB, RB * (DB + e)};
            Poly v0 = R * R * (D + eh);
            if (spec.kind() == ChargeKind::todd) v0 -= Poly(1);
            return detail::twisted_form<Poly>(e, eh, omega, B, v0);
        }
        case ChargeKind::rescaled_vd:
            return detail::vd_form<Poly>(Poly::var(0), Poly::var(1));
        case ChargeKind::origin:
            return detail::vd_form<Poly>(Poly(0), Poly(0));
        case ChargeKind::v_axis:
            return detail::vd_form<Poly>(Poly::var(0), Poly(0));
        case ChargeKind::d_axis:
            return detail::vd_form<Poly>(Poly(0), Poly::var(0));
        case ChargeKind::todd_special: {
            surf.require_k3("todd_special charge");
            const ChargeForm<Rational> f = charge_form(spec, surf);
            ChargeForm<Poly> out;
            for (int i = 0; i < 4; ++i) {
                out.re[i] = Poly(f.re[i]);
                out.im[i] = Poly(f.im[i]);
            }
            return out;
        }
    }
    fail(errc::bad_argument, "unhandled charge kind");
}

/** Exact evaluation Z(v). Linear in v; eval(spec, shift(v)) = -eval(spec, v). */
inline ChargeValue eval(const ChargeSpec& spec, const ChernVector& v,
                        const SurfaceParams& surf = {}) {
    const ChargeForm<Rational> f = charge_form(spec, surf);
    auto [re, im] = eval_form<Rational>(f, {v.r, v.a, v.b, v.s});
    return {re, im};
}

/** Float functional of an exact spec (parallel float mode). */
inline ChargeForm<double> to_float(const ChargeForm<Rational>& f) {
    ChargeForm<double> out;
    for (int i = 0; i < 4; ++i) {
        out.re[i] = to_double(f.re[i]);
        out.im[i] = to_double(f.im[i]);
    }
    return out;
}

/**
 * Float-mode twisted charge with arbitrary real parameters and an
 * *independent* volume parameter V_omega (needed when the polarization scale
 * R_omega = sqrt(V/(D+e/2)) is irrational):
 *
 *     Z(E) = -ch2^B + (V_omega - td) ch0^B + i R_omega (Theta+(D_omega+e)f).ch1^B.
 */
inline ChargeForm<double> float_twisted_form(double e, double R_omega, double D_omega,
                                             double V_omega, double R_B, double D_B, bool td) {
    const detail::GenericDivisor<double> omega{R_omega, R_omega * (D_omega + e)};
    const detail::GenericDivisor<double> B{R_B, R_B * (D_B + e)};
    return detail::twisted_form<double>(e, e / 2, omega, B, V_omega - (td ? 1.0 : 0.0));
}

/** Float evaluation of a float functional on an exact class. */
inline std::complex<double> eval_float(const ChargeForm<double>& f, const ChernVector& v) {
    auto [re, im] =
        eval_form<double>(f, {to_double(v.r), to_double(v.a), to_double(v.b), to_double(v.s)});
    return {re, im};
}

}  // namespace ellstab
