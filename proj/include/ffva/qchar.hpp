#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "ffva/halfint.hpp"
#include "ffva/rational.hpp"

namespace ffva {

/// Truncated power series in q^{1/2} with rational coefficients.
///
/// Coefficients are kept densely for every exponent 0, 1/2, ..., cutoff.
/// All arithmetic is exact through the cutoff; binary operations on two
/// series truncate at the smaller cutoff.
class QSeries {
public:
    explicit QSeries(HalfInt cutoff = HalfInt(0));

    static QSeries one(HalfInt cutoff);
    /// c * q^e (zero when e exceeds the cutoff).
    static QSeries monomial(HalfInt e, const Rational& c, HalfInt cutoff);

    HalfInt cutoff() const { return HalfInt::from_halves(static_cast<std::int64_t>(coeffs_.size()) - 1); }
    std::size_t size() const { return coeffs_.size(); }

    const Rational& operator[](HalfInt e) const;
    Rational& operator[](HalfInt e);
    const Rational& at_halves(std::int64_t h) const { return coeffs_.at(static_cast<std::size_t>(h)); }
    Rational& at_halves(std::int64_t h) { return coeffs_.at(static_cast<std::size_t>(h)); }
    const std::vector<Rational>& coefficients() const { return coeffs_; }

    QSeries truncated(HalfInt cutoff) const;

    QSeries& operator+=(const QSeries& o);
    QSeries& operator-=(const QSeries& o);
    QSeries& operator*=(const Rational& c);
    friend QSeries operator+(QSeries a, const QSeries& b) { return a += b; }
    friend QSeries operator-(QSeries a, const QSeries& b) { return a -= b; }
    friend QSeries operator*(const QSeries& a, const QSeries& b);
    friend QSeries operator*(QSeries a, const Rational& c) { return a *= c; }

    /// Multiplicative inverse; throws InvertNonUnit on zero constant term.
    QSeries inverse() const;

    /// Multiply by 1/(1 - c q^e) for e > 0, in place.
    void divide_by_one_minus(HalfInt e, const Rational& c = 1);
    /// Multiply by (1 + c q^e), in place.
    void multiply_by_one_plus(HalfInt e, const Rational& c = 1);

    bool is_zero() const;
    bool all_integral() const;

    /// Coefficientwise equality for every exponent <= n (both cutoffs must reach n).
    bool equals_up_to(const QSeries& o, HalfInt n) const;
    friend bool operator==(const QSeries& a, const QSeries& b) { return a.coeffs_ == b.coeffs_; }

private:
    std::vector<Rational> coeffs_;
};

/// Laurent polynomial in z with QSeries coefficients, all sharing one cutoff.
class ZQPoly {
public:
    ZQPoly(HalfInt cutoff, int z_min, int z_max);

    static ZQPoly one(HalfInt cutoff, int z_min, int z_max);

    HalfInt cutoff() const { return cutoff_; }
    int z_min() const { return z_min_; }
    int z_max() const { return z_max_; }

    /// Coefficient of z^e (zero series outside the window).
    QSeries coefficient(int e) const;
    QSeries& at(int e);
    const std::map<int, QSeries>& terms() const { return terms_; }

    QSeries constant_term() const { return coefficient(0); }

    ZQPoly& operator+=(const ZQPoly& o);
    ZQPoly& operator-=(const ZQPoly& o);
    friend ZQPoly operator+(ZQPoly a, const ZQPoly& b) { return a += b; }
    friend ZQPoly operator-(ZQPoly a, const ZQPoly& b) { return a -= b; }
    /// Product; terms falling outside the window of the left operand are dropped.
    friend ZQPoly operator*(const ZQPoly& a, const ZQPoly& b);

    /// Multiply by 1/(1 - q^e z^dz), dz = +1 or -1, in place.
    void divide_by_one_minus(HalfInt e, int dz);
    /// Multiply by (1 + q^e z^dz), dz = +1 or -1, in place.
    void multiply_by_one_plus(HalfInt e, int dz);

    bool equals_up_to(const ZQPoly& o, HalfInt n) const;

private:
    void prune();

    HalfInt cutoff_;
    int z_min_;
    int z_max_;
    std::map<int, QSeries> terms_;
};

QSeries qpochhammer_inf(HalfInt cutoff);
QSeries qpochhammer(int k, HalfInt cutoff);

/// (1/(q)_inf^2) * sum_{n in Z} sign(n) q^{2n^2+n}, sign(0) = +1.
QSeries hp_theta_form(HalfInt cutoff);
/// (1/(q)_inf) * sum_{k>=0} q^{k^2+k} / (q)_k^2.
QSeries hp_ramanujan_form(HalfInt cutoff);
/// Constant term in z of prod_{k>=1} 1/((1 - q^{k-1/2} z)(1 - q^{k-1/2} z^{-1})).
QSeries hp_constant_term(HalfInt cutoff);

/// prod_{k>=1} (1+q^k)^2 / (1-q^k)^2.
QSeries char_pbw_gl11(HalfInt cutoff);
/// Constant term in z of prod_{k>=1} (1+q^{k-1/2}z)(1+q^{k-1/2}z^{-1}) / ((1-q^{k-1/2}z)(1-q^{k-1/2}z^{-1})).
QSeries char_v_constant_term(HalfInt cutoff);

/// prod_{k>=1} (1+q^{k-1/2}z)(1+q^{k-1/2}z^{-1}): weight/charge generating function of F.
ZQPoly char_fermion_two_variable(HalfInt cutoff);

}  // namespace ffva
