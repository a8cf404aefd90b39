#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

#include "ellstab/error.hpp"

namespace ellstab {

/**
 * Exact rational scalar used throughout the library.
 *
 * Backed by boost::multiprecision::cpp_rational (arbitrary precision,
 * header-only, always stored in lowest terms with positive denominator).
 */
using Rational = boost::multiprecision::cpp_rational;

/** Sign of a rational: -1, 0, or +1. */
inline int sgn(const Rational& x) {
    return x.sign();
}

/** Lossy conversion for display and float-mode evaluation. */
inline double to_double(const Rational& x) {
    return x.convert_to<double>();
}

/**
 * Canonical string form: "p/q" in lowest terms, or just "p" for integers.
 * This is the exact wire format used in all JSON output.
 */
inline std::string to_string(const Rational& x) {
    return x.str();
}

/**
 * Parse "p", "-p", or "p/q". Throws errc::bad_argument on malformed input
 * (including a zero denominator).
 */
inline Rational parse_rational(std::string_view text) {
    if (text.empty()) fail(errc::bad_argument, "empty rational literal");
    try {
        return Rational(std::string(text));
    } catch (const std::exception&) {
        fail(errc::bad_argument, "malformed rational literal '" + std::string(text) + "'");
    }
}

/** abs for rationals. */
inline Rational rabs(const Rational& x) {
    return x < 0 ? Rational(-x) : x;
}

}  // namespace ellstab
