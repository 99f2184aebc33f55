#pragma once

#include <string>
#include <string_view>

#include "json.hpp"

#include "ffva/fock.hpp"
#include "ffva/qchar.hpp"
#include "ffva/whittaker.hpp"

namespace ffva {

using Json = nlohmann::ordered_json;

// Rationals and half-integers travel as "num/den" strings.
Json to_json(const Rational& x);
Json to_json(HalfInt x);
Rational rational_from_json(const Json& j);
HalfInt halfint_from_json(const Json& j);

Json to_json(const FermionMode& m);
Json to_json(const BosonMode& m);
Json to_json(const BasisVector& v);
BasisVector basis_vector_from_json(const Json& j);

/// {"species": n, "terms": [{"vector": ..., "coeff": "p/q"}, ...]}
Json to_json(const State& s);
State state_from_json(const Json& j);

/// {"cutoff": "N", "coeffs": {"0": "1", "1/2": "0", ...}}
Json to_json(const QSeries& s);
QSeries qseries_from_json(const Json& j);

/// "exponent,numerator,denominator" header plus one row per exponent.
std::string to_csv(const QSeries& s);
QSeries qseries_from_csv(std::string_view text);

/// {"chi_plus": {"0": "1", "-2": "3/4"}, "chi_minus": {"1": "2"}}
Json to_json(const WhittakerChar& chi);
WhittakerChar whittaker_char_from_json(const Json& j);

}  // namespace ffva
