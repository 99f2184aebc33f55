#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

#include "ffva/halfint.hpp"

namespace ffva {

using Rational = mpq_class;
using Integer = mpz_class;

/// "num/den", or just "num" when the denominator is one.
std::string to_string(const Rational& x);

/// Parses "a", "a/b" with optional sign; the result is canonicalized.
Rational parse_rational(std::string_view text);

inline Rational to_rational(HalfInt h) {
    Rational r(static_cast<long>(h.halves()), 2L);
    r.canonicalize();
    return r;
}

/// Binomial coefficient C(top, k) for any integer top and k >= 0.
Integer binomial(long top, long k);

}  // namespace ffva
