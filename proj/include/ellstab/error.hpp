#pragma once

#include <stdexcept>
#include <string>

namespace ellstab {

/**
 * Machine-checkable reason codes for domain errors.
 *
 * Every precondition violation in the library throws ellstab::domain_error
 * carrying one of these codes, so callers (and the CLI exit-code mapping)
 * can distinguish failure modes without parsing message text.
 */
enum class errc {
    bad_surface,            ///< surface parameter e < 1
    k3_required,            ///< operation is defined only on the K3 case e = 2
    zero_charge,            ///< phase/slope of the zero charge value requested
    zero_ray,               ///< ray parameter (0, 0)
    negative_ray,           ///< ray parameter with a negative component
    zero_kernel_class,      ///< kernel class with all multiplicities zero
    regime_mismatch,        ///< see-saw audit across different regimes
    bad_regime,             ///< operation not defined for this regime
    nonpositive_rank,       ///< Bogomolov-Gieseker checks need ch0 > 0
    h_square_not_positive,  ///< Hodge-index H with H*H <= 0
    h_not_orthogonal,       ///< Hodge-index c with H*c != 0
    no_rdv_form,            ///< f-multiples (a = 0) have no R(Theta+(D+e)f) form
    division_by_zero,       ///< denominator guard (e.g. 2*D' + e = 0)
    bad_argument,           ///< malformed or out-of-range argument
};

/** Stable identifier for an errc, used in diagnostics and tests. */
inline const char* errc_name(errc c) noexcept {
    switch (c) {
        case errc::bad_surface: return "bad_surface";
        case errc::k3_required: return "k3_required";
        case errc::zero_charge: return "zero_charge";
        case errc::zero_ray: return "zero_ray";
        case errc::negative_ray: return "negative_ray";
        case errc::zero_kernel_class: return "zero_kernel_class";
        case errc::regime_mismatch: return "regime_mismatch";
        case errc::bad_regime: return "bad_regime";
        case errc::nonpositive_rank: return "nonpositive_rank";
        case errc::h_square_not_positive: return "h_square_not_positive";
        case errc::h_not_orthogonal: return "h_not_orthogonal";
        case errc::no_rdv_form: return "no_rdv_form";
        case errc::division_by_zero: return "division_by_zero";
        case errc::bad_argument: return "bad_argument";
    }
    return "unknown";
}

/** Exception type for all library domain errors; what() = "code: detail". */
class domain_error : public std::domain_error {
public:
    domain_error(errc code, const std::string& detail)
        : std::domain_error(std::string(errc_name(code)) + ": " + detail),
          code_(code) {}

    errc code() const noexcept { return code_; }

private:
    errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& detail) {
    throw domain_error(code, detail);
}

}  // namespace ellstab
