#include "ffva/qchar.hpp"

#include <algorithm>
#include <stdexcept>

#include "ffva/errors.hpp"

namespace ffva {

namespace {

void require_nonnegative(HalfInt cutoff) {
    if (cutoff < HalfInt(0)) throw std::invalid_argument("series cutoff must be >= 0");
}

// q^e * s, truncated at s's cutoff.
QSeries shifted(const QSeries& s, HalfInt e) {
    QSeries out(s.cutoff());
    const auto n = static_cast<std::int64_t>(s.size());
    for (std::int64_t h = 0; h + e.halves() < n; ++h) {
        if (sgn(s.at_halves(h)) != 0) out.at_halves(h + e.halves()) = s.at_halves(h);
    }
    return out;
}

}  // namespace

QSeries::QSeries(HalfInt cutoff) {
    require_nonnegative(cutoff);
    coeffs_.resize(static_cast<std::size_t>(cutoff.halves() + 1));
}

QSeries QSeries::one(HalfInt cutoff) {
    QSeries s(cutoff);
    s.coeffs_[0] = 1;
    return s;
}

QSeries QSeries::monomial(HalfInt e, const Rational& c, HalfInt cutoff) {
    QSeries s(cutoff);
    if (e < HalfInt(0)) throw std::invalid_argument("negative q-exponent");
    if (e <= cutoff) s[e] = c;
    return s;
}

const Rational& QSeries::operator[](HalfInt e) const { return coeffs_.at(static_cast<std::size_t>(e.halves())); }
Rational& QSeries::operator[](HalfInt e) { return coeffs_.at(static_cast<std::size_t>(e.halves())); }

QSeries QSeries::truncated(HalfInt cutoff) const {
    if (cutoff > this->cutoff()) throw std::invalid_argument("cannot extend a truncated series");
    QSeries out(cutoff);
    std::copy_n(coeffs_.begin(), out.coeffs_.size(), out.coeffs_.begin());
    return out;
}

QSeries& QSeries::operator+=(const QSeries& o) {
    if (o.size() < size()) coeffs_.resize(o.size());
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    return *this;
}

QSeries& QSeries::operator-=(const QSeries& o) {
    if (o.size() < size()) coeffs_.resize(o.size());
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    return *this;
}

QSeries& QSeries::operator*=(const Rational& c) {
    for (auto& x : coeffs_) x *= c;
    return *this;
}

QSeries operator*(const QSeries& a, const QSeries& b) {
    QSeries out(std::min(a.cutoff(), b.cutoff()));
    const std::size_t n = out.size();
    for (std::size_t i = 0; i < n; ++i) {
        if (sgn(a.coeffs_[i]) == 0) continue;
        for (std::size_t j = 0; i + j < n; ++j) {
            if (sgn(b.coeffs_[j]) == 0) continue;
            out.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
    }
    return out;
}

QSeries QSeries::inverse() const {
    if (sgn(coeffs_[0]) == 0) throw InvertNonUnit();
    QSeries out(cutoff());
    const Rational inv0 = 1 / coeffs_[0];
    out.coeffs_[0] = inv0;
    for (std::size_t n = 1; n < coeffs_.size(); ++n) {
        Rational acc = 0;
        for (std::size_t k = 1; k <= n; ++k) {
            if (sgn(coeffs_[k]) != 0) acc += coeffs_[k] * out.coeffs_[n - k];
        }
        out.coeffs_[n] = -acc * inv0;
    }
    return out;
}

void QSeries::divide_by_one_minus(HalfInt e, const Rational& c) {
    if (e <= HalfInt(0)) throw std::invalid_argument("geometric factor needs positive exponent");
    const auto step = static_cast<std::size_t>(e.halves());
    for (std::size_t i = step; i < coeffs_.size(); ++i) coeffs_[i] += c * coeffs_[i - step];
}

void QSeries::multiply_by_one_plus(HalfInt e, const Rational& c) {
    if (e < HalfInt(0)) throw std::invalid_argument("negative q-exponent");
    const auto step = static_cast<std::size_t>(e.halves());
    if (step == 0) {
        *this *= (1 + c);
        return;
    }
    for (std::size_t i = coeffs_.size(); i-- > step;) coeffs_[i] += c * coeffs_[i - step];
}

bool QSeries::is_zero() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& x) { return sgn(x) == 0; });
}

bool QSeries::all_integral() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& x) { return x.get_den() == 1; });
}

bool QSeries::equals_up_to(const QSeries& o, HalfInt n) const {
    if (n > cutoff() || n > o.cutoff()) return false;
    for (std::int64_t h = 0; h <= n.halves(); ++h) {
        if (at_halves(h) != o.at_halves(h)) return false;
    }
    return true;
}

// ---------------------------------------------------------------------------

ZQPoly::ZQPoly(HalfInt cutoff, int z_min, int z_max) : cutoff_(cutoff), z_min_(z_min), z_max_(z_max) {
    require_nonnegative(cutoff);
    if (z_min > z_max) throw std::invalid_argument("empty z-window");
}

ZQPoly ZQPoly::one(HalfInt cutoff, int z_min, int z_max) {
    ZQPoly p(cutoff, z_min, z_max);
    if (z_min <= 0 && 0 <= z_max) p.terms_.emplace(0, QSeries::one(cutoff));
    return p;
}

QSeries ZQPoly::coefficient(int e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? QSeries(cutoff_) : it->second;
}

QSeries& ZQPoly::at(int e) {
    if (e < z_min_ || e > z_max_) throw std::out_of_range("z-exponent outside window");
    return terms_.try_emplace(e, QSeries(cutoff_)).first->second;
}

void ZQPoly::prune() {
    std::erase_if(terms_, [](const auto& kv) { return kv.second.is_zero(); });
}

ZQPoly& ZQPoly::operator+=(const ZQPoly& o) {
    if (o.cutoff_ != cutoff_) throw std::invalid_argument("ZQPoly cutoffs differ");
    for (const auto& [e, s] : o.terms_) {
        if (e >= z_min_ && e <= z_max_) at(e) += s;
    }
    prune();
    return *this;
}

ZQPoly& ZQPoly::operator-=(const ZQPoly& o) {
    if (o.cutoff_ != cutoff_) throw std::invalid_argument("ZQPoly cutoffs differ");
    for (const auto& [e, s] : o.terms_) {
        if (e >= z_min_ && e <= z_max_) at(e) -= s;
    }
    prune();
    return *this;
}

ZQPoly operator*(const ZQPoly& a, const ZQPoly& b) {
    if (a.cutoff_ != b.cutoff_) throw std::invalid_argument("ZQPoly cutoffs differ");
    ZQPoly out(a.cutoff_, a.z_min_, a.z_max_);
    for (const auto& [ea, sa] : a.terms_) {
        for (const auto& [eb, sb] : b.terms_) {
            const int e = ea + eb;
            if (e < out.z_min_ || e > out.z_max_) continue;
            out.at(e) += sa * sb;
        }
    }
    out.prune();
    return out;
}

void ZQPoly::divide_by_one_minus(HalfInt e, int dz) {
    if (dz != 1 && dz != -1) throw std::invalid_argument("dz must be +1 or -1");
    // P'_j = P_j + q^e P'_{j - dz}; entries beyond the window are zero.
    std::map<int, QSeries> out;
    const int first = dz > 0 ? z_min_ : z_max_;
    const int last = dz > 0 ? z_max_ : z_min_;
    QSeries prev(cutoff_);
    for (int j = first;; j += dz) {
        QSeries cur = coefficient(j) + shifted(prev, e);
        if (!cur.is_zero()) out.emplace(j, cur);
        prev = std::move(cur);
        if (j == last) break;
    }
    terms_ = std::move(out);
}

void ZQPoly::multiply_by_one_plus(HalfInt e, int dz) {
    if (dz != 1 && dz != -1) throw std::invalid_argument("dz must be +1 or -1");
    std::map<int, QSeries> out;
    for (int j = z_min_; j <= z_max_; ++j) {
        QSeries cur = coefficient(j) + shifted(coefficient(j - dz), e);
        if (!cur.is_zero()) out.emplace(j, std::move(cur));
    }
    terms_ = std::move(out);
}

bool ZQPoly::equals_up_to(const ZQPoly& o, HalfInt n) const {
    const int lo = std::min(z_min_, o.z_min_);
    const int hi = std::max(z_max_, o.z_max_);
    for (int j = lo; j <= hi; ++j) {
        if (!coefficient(j).truncated(std::min(n, cutoff_)).equals_up_to(o.coefficient(j).truncated(std::min(n, o.cutoff_)), n))
            return false;
    }
    return true;
}

// ---------------------------------------------------------------------------

QSeries qpochhammer_inf(HalfInt cutoff) {
    QSeries s = QSeries::one(cutoff);
    for (std::int64_t i = 1; i <= cutoff.floor(); ++i) s.multiply_by_one_plus(HalfInt(i), -1);
    return s;
}

QSeries qpochhammer(int k, HalfInt cutoff) {
    if (k < 0) throw std::invalid_argument("qpochhammer needs k >= 0");
    QSeries s = QSeries::one(cutoff);
    for (std::int64_t i = 1; i <= k && i <= cutoff.floor(); ++i) s.multiply_by_one_plus(HalfInt(i), -1);
    return s;
}

QSeries hp_theta_form(HalfInt cutoff) {
    QSeries theta(cutoff);
    const std::int64_t top = cutoff.floor();
    for (std::int64_t n = 0; 2 * n * n + n <= top; ++n) theta[HalfInt(2 * n * n + n)] += 1;
    for (std::int64_t n = -1; 2 * n * n + n <= top; --n) theta[HalfInt(2 * n * n + n)] -= 1;
    QSeries inv = qpochhammer_inf(cutoff).inverse();
    return theta * inv * inv;
}

QSeries hp_ramanujan_form(HalfInt cutoff) {
    QSeries sum(cutoff);
    const std::int64_t top = cutoff.floor();
    for (std::int64_t k = 0; k * k + k <= top; ++k) {
        QSeries inv = qpochhammer(static_cast<int>(k), cutoff).inverse();
        sum += QSeries::monomial(HalfInt(k * k + k), 1, cutoff) * inv * inv;
    }
    return sum * qpochhammer_inf(cutoff).inverse();
}

namespace {

// Every unit of z-charge costs weight at least 1/2, so |z-exponent| <= 2*cutoff
// loses nothing at this truncation order.
int charge_window(HalfInt cutoff) { return static_cast<int>(cutoff.halves()); }

}  // namespace

QSeries hp_constant_term(HalfInt cutoff) {
    const int w = charge_window(cutoff);
    ZQPoly p = ZQPoly::one(cutoff, -w, w);
    for (std::int64_t h = 1; h <= cutoff.halves(); h += 2) {
        p.divide_by_one_minus(HalfInt::from_halves(h), +1);
        p.divide_by_one_minus(HalfInt::from_halves(h), -1);
    }
    return p.constant_term();
}

QSeries char_pbw_gl11(HalfInt cutoff) {
    QSeries s = QSeries::one(cutoff);
    for (std::int64_t k = 1; k <= cutoff.floor(); ++k) {
        for (int rep = 0; rep < 2; ++rep) {
            s.multiply_by_one_plus(HalfInt(k), 1);
            s.divide_by_one_minus(HalfInt(k), 1);
        }
    }
    return s;
}

QSeries char_v_constant_term(HalfInt cutoff) {
    const int w = charge_window(cutoff);
    ZQPoly p = ZQPoly::one(cutoff, -w, w);
    for (std::int64_t h = 1; h <= cutoff.halves(); h += 2) {
        const HalfInt e = HalfInt::from_halves(h);
        p.multiply_by_one_plus(e, +1);
        p.multiply_by_one_plus(e, -1);
        p.divide_by_one_minus(e, +1);
        p.divide_by_one_minus(e, -1);
    }
    return p.constant_term();
}

ZQPoly char_fermion_two_variable(HalfInt cutoff) {
    const int w = charge_window(cutoff);
    ZQPoly p = ZQPoly::one(cutoff, -w, w);
    for (std::int64_t h = 1; h <= cutoff.halves(); h += 2) {
        p.multiply_by_one_plus(HalfInt::from_halves(h), +1);
        p.multiply_by_one_plus(HalfInt::from_halves(h), -1);
    }
    return p;
}

}  // namespace ffva
