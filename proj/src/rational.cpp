#include "ffva/rational.hpp"

#include <stdexcept>

namespace ffva {

std::string HalfInt::to_string() const {
    if (is_integer()) return std::to_string(halves_ / 2);
    return std::to_string(halves_) + "/2";
}

HalfInt HalfInt::parse(std::string_view text) {
    Rational r = parse_rational(text);
    Rational twice = 2 * r;
    if (twice.get_den() != 1) throw std::invalid_argument("not a half-integer: " + std::string(text));
    if (!twice.get_num().fits_slong_p()) throw std::invalid_argument("half-integer out of range");
    return from_halves(twice.get_num().get_si());
}

std::string to_string(const Rational& x) { return x.get_str(); }

Rational parse_rational(std::string_view text) {
    std::string s(text);
    while (!s.empty() && s.front() == ' ') s.erase(s.begin());
    while (!s.empty() && s.back() == ' ') s.pop_back();
    if (s.empty()) throw std::invalid_argument("empty rational");
    if (s.front() == '+') s.erase(s.begin());
    for (char c : s) {
        if (!(c == '-' || c == '/' || (c >= '0' && c <= '9')))
            throw std::invalid_argument("bad rational: " + std::string(text));
    }
    Rational r;
    if (r.set_str(s, 10) != 0) throw std::invalid_argument("bad rational: " + std::string(text));
    if (r.get_den() == 0) throw std::invalid_argument("zero denominator: " + std::string(text));
    r.canonicalize();
    return r;
}

Integer binomial(long top, long k) {
    if (k < 0) return 0;
    Integer num = 1;
    for (long i = 0; i < k; ++i) num *= (top - i);
    Integer den;
    mpz_fac_ui(den.get_mpz_t(), static_cast<unsigned long>(k));
    return num / den;
}

}  // namespace ffva
