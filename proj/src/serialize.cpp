#include "ffva/serialize.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "ffva/errors.hpp"

namespace ffva {

Json to_json(const Rational& x) { return to_string(x); }
Json to_json(HalfInt x) { return x.to_string(); }

Rational rational_from_json(const Json& j) {
    if (j.is_string()) return parse_rational(j.get<std::string>());
    if (j.is_number_integer()) return Rational(j.get<long>());
    throw std::invalid_argument("expected a rational string, got " + j.dump());
}

HalfInt halfint_from_json(const Json& j) {
    if (j.is_string()) return HalfInt::parse(j.get<std::string>());
    if (j.is_number_integer()) return HalfInt(j.get<std::int64_t>());
    throw std::invalid_argument("expected a half-integer string, got " + j.dump());
}

namespace {

template <class Mode>
Json mode_json(const Mode& m) {
    return Json{{"species", m.species}, {"sign", m.sign == Sign::Plus ? "+" : "-"}, {"index", m.index.to_string()}};
}

template <class Mode>
Mode mode_from_json(const Json& j) {
    const std::string sign = j.at("sign").get<std::string>();
    if (sign != "+" && sign != "-") throw std::invalid_argument("mode sign must be \"+\" or \"-\"");
    return Mode(j.at("species").get<int>(), sign == "+" ? Sign::Plus : Sign::Minus, halfint_from_json(j.at("index")));
}

std::int64_t parse_index(const std::string& key) {
    std::size_t used = 0;
    const long long v = std::stoll(key, &used);
    if (used != key.size()) throw std::invalid_argument("bad integer key: " + key);
    return v;
}

WhittakerChar::Coeffs coeffs_from_json(const Json& j) {
    WhittakerChar::Coeffs c;
    for (const auto& [key, value] : j.items()) c[parse_index(key)] += rational_from_json(value);
    return c;
}

}  // namespace

Json to_json(const FermionMode& m) { return mode_json(m); }
Json to_json(const BosonMode& m) { return mode_json(m); }

Json to_json(const BasisVector& v) {
    Json ferm = Json::array(), comm = Json::array();
    for (const auto& m : v.ferm.factors()) ferm.push_back(to_json(m));
    for (const auto& m : v.comm.factors()) comm.push_back(to_json(m));
    return Json{{"ferm", ferm}, {"comm", comm}};
}

BasisVector basis_vector_from_json(const Json& j) {
    std::vector<FermionMode> ferm;
    std::vector<BosonMode> comm;
    for (const auto& m : j.value("ferm", Json::array())) ferm.push_back(mode_from_json<FermionMode>(m));
    for (const auto& m : j.value("comm", Json::array())) comm.push_back(mode_from_json<BosonMode>(m));
    auto canon = FermMonomial::canonicalize(ferm);
    if (!canon) throw std::invalid_argument("basis vector repeats a fermion mode");
    // Reordering would silently flip the sign, so only canonical input is accepted.
    if (canon->second.factors() != ferm) throw std::invalid_argument("fermion factors must be in canonical order");
    return BasisVector{std::move(canon->second), CommMonomial(std::move(comm))};
}

Json to_json(const State& s) {
    Json terms = Json::array();
    for (const auto& [v, c] : s.terms()) terms.push_back(Json{{"vector", to_json(v)}, {"coeff", to_json(c)}});
    return Json{{"species", s.species_count()}, {"terms", terms}};
}

State state_from_json(const Json& j) {
    const int n = j.value("species", 1);
    if (n < 1) throw std::invalid_argument("species must be >= 1");
    State s(n);
    for (const auto& t : j.at("terms")) {
        const BasisVector v = basis_vector_from_json(t.at("vector"));
        for (const auto& m : v.ferm.factors()) {
            if (m.species > n) throw SpeciesMismatch(m.species, n);
        }
        for (const auto& m : v.comm.factors()) {
            if (m.species > n) throw SpeciesMismatch(m.species, n);
        }
        s.add_term(v, rational_from_json(t.at("coeff")));
    }
    return s;
}

Json to_json(const QSeries& s) {
    Json coeffs = Json::object();
    for (std::size_t h = 0; h < s.size(); ++h) {
        coeffs[HalfInt::from_halves(static_cast<std::int64_t>(h)).to_string()] = to_json(s.at_halves(static_cast<std::int64_t>(h)));
    }
    return Json{{"cutoff", s.cutoff().to_string()}, {"coeffs", coeffs}};
}

QSeries qseries_from_json(const Json& j) {
    QSeries s(halfint_from_json(j.at("cutoff")));
    for (const auto& [key, value] : j.at("coeffs").items()) {
        const HalfInt e = HalfInt::parse(key);
        if (e < HalfInt(0) || e > s.cutoff()) throw std::invalid_argument("exponent outside [0, cutoff]: " + key);
        s[e] = rational_from_json(value);
    }
    return s;
}

std::string to_csv(const QSeries& s) {
    std::ostringstream out;
    out << "exponent,numerator,denominator\n";
    for (std::size_t h = 0; h < s.size(); ++h) {
        const Rational& c = s.at_halves(static_cast<std::int64_t>(h));
        out << HalfInt::from_halves(static_cast<std::int64_t>(h)).to_string() << ',' << c.get_num().get_str() << ','
            << c.get_den().get_str() << '\n';
    }
    return out.str();
}

QSeries qseries_from_csv(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;
    if (!std::getline(in, line) || line != "exponent,numerator,denominator") {
        throw std::invalid_argument("missing CSV header");
    }
    std::vector<std::pair<HalfInt, Rational>> rows;
    HalfInt top;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        const auto c1 = line.find(',');
        const auto c2 = line.find(',', c1 + 1);
        if (c1 == std::string::npos || c2 == std::string::npos) throw std::invalid_argument("bad CSV row: " + line);
        const HalfInt e = HalfInt::parse(line.substr(0, c1));
        const Rational c = parse_rational(line.substr(c1 + 1, c2 - c1 - 1) + "/" + line.substr(c2 + 1));
        rows.emplace_back(e, c);
        top = std::max(top, e);
    }
    QSeries s(top);
    for (const auto& [e, c] : rows) s[e] = c;
    return s;
}

Json to_json(const WhittakerChar& chi) {
    Json plus = Json::object(), minus = Json::object();
    for (const auto& [k, c] : chi.chi_plus()) plus[std::to_string(k)] = to_json(c);
    for (const auto& [k, c] : chi.chi_minus()) minus[std::to_string(k)] = to_json(c);
    return Json{{"chi_plus", plus}, {"chi_minus", minus}};
}

WhittakerChar whittaker_char_from_json(const Json& j) {
    return WhittakerChar(coeffs_from_json(j.at("chi_plus")), coeffs_from_json(j.at("chi_minus")));
}

}  // namespace ffva
