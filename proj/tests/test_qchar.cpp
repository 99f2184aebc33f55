#include <random>

#include "doctest.h"
#include "ffva/errors.hpp"
#include "ffva/fock.hpp"
#include "ffva/qchar.hpp"
#include "oracles.hpp"
#include "test_util.hpp"

using namespace ffva;

namespace {

std::vector<std::int64_t> integer_coeffs(const QSeries& s) {
    std::vector<std::int64_t> out;
    for (std::int64_t w = 0; w <= s.cutoff().floor(); ++w) {
        const Rational& c = s[HalfInt(w)];
        REQUIRE(c.get_den() == 1);
        out.push_back(c.get_num().get_si());
    }
    return out;
}

QSeries from_ints(const std::vector<std::int64_t>& c, HalfInt cutoff) {
    QSeries s(cutoff);
    for (std::size_t i = 0; i < c.size() && HalfInt(static_cast<std::int64_t>(i)) <= cutoff; ++i)
        s[HalfInt(static_cast<std::int64_t>(i))] = c[i];
    return s;
}

}  // namespace

TEST_CASE("HalfInt parsing and printing") {
    CHECK(HalfInt::parse("3/2").halves() == 3);
    CHECK(HalfInt::parse("-1/2").halves() == -1);
    CHECK(HalfInt::parse("4").halves() == 8);
    CHECK(HalfInt::parse("6/4").halves() == 3);
    CHECK_THROWS_AS(HalfInt::parse("1/3"), std::invalid_argument);
    CHECK(HalfInt::from_halves(-3).to_string() == "-3/2");
    CHECK(HalfInt(2).to_string() == "2");
    CHECK(HalfInt::from_halves(-3).floor() == -2);
    CHECK(HalfInt::from_halves(3).floor() == 1);
}

TEST_CASE("qpochhammer_inf matches naive expansion") {
    CHECK(qpochhammer_inf(HalfInt(0)) == QSeries::one(HalfInt(0)));
    const auto p3 = integer_coeffs(qpochhammer_inf(HalfInt(3)));
    CHECK(p3 == std::vector<std::int64_t>{1, -1, -1, 0});
    const auto p7 = integer_coeffs(qpochhammer_inf(HalfInt(7)));
    CHECK(p7[5] == 1);
    CHECK(p7[7] == 1);
    CHECK(p7 == oracle::pochhammer(7, 7));
    CHECK(integer_coeffs(qpochhammer_inf(HalfInt(20))) == oracle::pochhammer(20, 20));
}

TEST_CASE("finite qpochhammer") {
    CHECK(qpochhammer(0, HalfInt(5)) == QSeries::one(HalfInt(5)));
    CHECK(integer_coeffs(qpochhammer(1, HalfInt(2))) == std::vector<std::int64_t>{1, -1, 0});
    CHECK(integer_coeffs(qpochhammer(2, HalfInt(3))) == std::vector<std::int64_t>{1, -1, -1, 1});
    CHECK(integer_coeffs(qpochhammer(4, HalfInt(12))) == oracle::pochhammer(4, 12));
    CHECK_THROWS(qpochhammer(-1, HalfInt(2)));
}

TEST_CASE("Hilbert-Poincare forms at low order") {
    const std::vector<std::int64_t> expected{1, 1, 3, 6};
    for (auto f : {hp_theta_form, hp_ramanujan_form, hp_constant_term}) {
        CHECK(f(HalfInt(0)) == QSeries::one(HalfInt(0)));
        CHECK(integer_coeffs(f(HalfInt(3))) == expected);
    }
    CHECK(integer_coeffs(hp_constant_term(HalfInt(1))) == std::vector<std::int64_t>{1, 1});
    // the half-integer exponents of the constant term vanish
    const QSeries half = hp_constant_term(HalfInt::from_halves(7));
    for (std::int64_t h = 1; h <= 7; h += 2) CHECK(sgn(half.at_halves(h)) == 0);
}

TEST_CASE("Hilbert-Poincare series counts charge-balanced bosonic monomials") {
    const auto brute = oracle::balanced_counts(8, false);
    CHECK(integer_coeffs(hp_constant_term(HalfInt(8))) == brute);
    CHECK(brute[0] == 1);
    CHECK(brute[3] == 6);
    // and the library enumeration agrees with the oracle
    for (std::int64_t m = 0; m <= 8; ++m) {
        EnumerateOptions opt{Sector::Bosonic, {.bosonic = 0}};
        CHECK(static_cast<std::int64_t>(enumerate_weight(1, HalfInt(m), opt).size()) == brute[static_cast<std::size_t>(m)]);
    }
}

TEST_CASE("three Hilbert-Poincare forms agree through order 30") {
    const HalfInt N(30);
    const QSeries theta = hp_theta_form(N);
    const QSeries ram = hp_ramanujan_form(N);
    const QSeries ct = hp_constant_term(N);
    CHECK(theta.equals_up_to(ram, N));
    CHECK(theta.equals_up_to(ct, N));
    CHECK(theta.all_integral());
    for (std::int64_t n : {1, 2, 5, 12, 17}) {
        CHECK(hp_theta_form(HalfInt(n)) == theta.truncated(HalfInt(n)));
        CHECK(hp_ramanujan_form(HalfInt(n)) == ram.truncated(HalfInt(n)));
        CHECK(hp_constant_term(HalfInt(n)) == ct.truncated(HalfInt(n)));
    }
}

TEST_CASE("sign(0) = +1 is the convention that matches the enumeration") {
    // With sign(0) = -1 the theta numerator would start at -1.
    const QSeries theta = hp_theta_form(HalfInt(6));
    const auto brute = oracle::balanced_counts(6, false);
    CHECK(integer_coeffs(theta) == brute);
}

TEST_CASE("characters of V") {
    CHECK(char_pbw_gl11(HalfInt(0)) == QSeries::one(HalfInt(0)));
    CHECK(integer_coeffs(char_pbw_gl11(HalfInt(2))) == std::vector<std::int64_t>{1, 4, 12});
    CHECK(integer_coeffs(char_v_constant_term(HalfInt(2))) == std::vector<std::int64_t>{1, 4, 12});
    const auto brute = oracle::v_counts(8);
    CHECK(integer_coeffs(char_pbw_gl11(HalfInt(8))) == brute);
    CHECK(integer_coeffs(char_v_constant_term(HalfInt(8))) == brute);
}

TEST_CASE("fermionic two-variable character counts F by weight and charge") {
    const HalfInt N(3);
    const ZQPoly chi = char_fermion_two_variable(N);
    for (int l = -3; l <= 3; ++l) {
        const QSeries row = chi.coefficient(l);
        for (std::int64_t h = 0; h <= N.halves(); ++h) {
            EnumerateOptions opt{Sector::Fermionic, {.fermionic = l}};
            const auto n = enumerate_weight(1, HalfInt::from_halves(h), opt).size();
            CHECK(row.at_halves(h) == Rational(static_cast<long>(n)));
        }
    }
}

TEST_CASE("series arithmetic is exact") {
    const HalfInt N(10);
    QSeries one_minus_q = QSeries::one(N) - QSeries::monomial(HalfInt(1), 1, N);
    CHECK(one_minus_q * one_minus_q.inverse() == QSeries::one(N));
    QSeries p2 = qpochhammer(2, N);
    CHECK(p2 * p2.inverse() == QSeries::one(N));
    CHECK_THROWS_AS(QSeries::monomial(HalfInt(1), 1, N).inverse(), InvertNonUnit);

    std::mt19937_64 rng(7);
    auto random_series = [&](HalfInt cutoff) {
        QSeries s(cutoff);
        for (std::int64_t hh = 0; hh <= cutoff.halves(); ++hh)
            s.at_halves(hh) = rat(static_cast<long>(rng() % 19) - 9, static_cast<long>(rng() % 5) + 1);
        s.at_halves(0) = rat(static_cast<long>(rng() % 7) + 1, 3);
        return s;
    };
    for (int trial = 0; trial < 20; ++trial) {
        const HalfInt cut = HalfInt::from_halves(static_cast<std::int64_t>(rng() % 12));
        QSeries a = random_series(cut), b = random_series(cut);
        CHECK(a * b == b * a);
        CHECK((a + b) - b == a);
        CHECK((a * b) * b.inverse() == a);
    }
}

TEST_CASE("mixed cutoffs truncate to the smaller one") {
    QSeries a = QSeries::one(HalfInt(5));
    QSeries b = QSeries::one(HalfInt(2));
    CHECK((a * b).cutoff() == HalfInt(2));
    CHECK((a + b).cutoff() == HalfInt(2));
    CHECK(a.equals_up_to(b, HalfInt(2)));
    CHECK_FALSE(a.equals_up_to(b, HalfInt(3)));
}

TEST_CASE("ZQPoly arithmetic") {
    const HalfInt N(2);
    ZQPoly a = ZQPoly::one(N, -4, 4);
    a.multiply_by_one_plus(HalfInt::half(), +1);   // 1 + q^{1/2} z
    ZQPoly b = ZQPoly::one(N, -4, 4);
    b.divide_by_one_minus(HalfInt::half(), +1);   // 1/(1 - q^{1/2} z)
    ZQPoly c = ZQPoly::one(N, -4, 4);
    c.multiply_by_one_plus(HalfInt::half(), +1);
    c.divide_by_one_minus(HalfInt::half(), +1);
    CHECK((a * b).equals_up_to(c, N));
    CHECK((a + b - b).equals_up_to(a, N));
    CHECK(c.coefficient(2).at_halves(2) == 2);  // (1+x)/(1-x) = 1 + 2x + 2x^2 + ...
}
