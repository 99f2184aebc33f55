#include "ffva/fock.hpp"

#include <algorithm>
#include <stdexcept>

#include "ffva/errors.hpp"

namespace ffva {

template <FieldKind Kind>
FreeMode<Kind>::FreeMode(int species_, Sign sign_, HalfInt index_) : species(species_), sign(sign_), index(index_) {
    if (species < 1) throw InvalidMode("species must be >= 1");
    if (!index.is_half_odd()) throw InvalidMode("mode index must lie in 1/2 + Z, got " + index.to_string());
}

template struct FreeMode<FieldKind::Fermion>;
template struct FreeMode<FieldKind::Boson>;

FermionMode psi(Sign s, HalfInt index, int species) { return FermionMode(species, s, index); }
BosonMode boson(Sign s, HalfInt index, int species) { return BosonMode(species, s, index); }

namespace {

template <FieldKind K>
std::string mode_string(const FreeMode<K>& m, const char* name) {
    return std::string(name) + (m.sign == Sign::Plus ? "+" : "-") + std::to_string(m.species) + "(" +
           m.index.to_string() + ")";
}

}  // namespace

std::string to_string(const FermionMode& m) { return mode_string(m, "psi"); }
std::string to_string(const BosonMode& m) { return mode_string(m, "a"); }

// ---------------------------------------------------------------------------

std::optional<std::pair<int, FermMonomial>> FermMonomial::canonicalize(std::vector<FermionMode> raw) {
    for (const auto& m : raw) {
        if (!m.is_creation()) throw InvalidMode("canonicalize expects creation modes only");
    }
    // Insertion sort; each swap is one transposition of odd factors.
    int sign = 1;
    for (std::size_t i = 1; i < raw.size(); ++i) {
        for (std::size_t j = i; j > 0 && raw[j] < raw[j - 1]; --j) {
            std::swap(raw[j], raw[j - 1]);
            sign = -sign;
        }
    }
    if (std::adjacent_find(raw.begin(), raw.end()) != raw.end()) return std::nullopt;
    FermMonomial out;
    out.factors_ = std::move(raw);
    return std::make_pair(sign, std::move(out));
}

std::size_t FermMonomial::find(const FermionMode& m) const {
    auto it = std::lower_bound(factors_.begin(), factors_.end(), m);
    if (it != factors_.end() && *it == m) return static_cast<std::size_t>(it - factors_.begin());
    return static_cast<std::size_t>(-1);
}

std::size_t FermMonomial::slot(const FermionMode& m) const {
    return static_cast<std::size_t>(std::lower_bound(factors_.begin(), factors_.end(), m) - factors_.begin());
}

FermMonomial FermMonomial::with_inserted(const FermionMode& m) const {
    FermMonomial out = *this;
    out.factors_.insert(out.factors_.begin() + static_cast<std::ptrdiff_t>(slot(m)), m);
    return out;
}

FermMonomial FermMonomial::with_removed(std::size_t position) const {
    FermMonomial out = *this;
    out.factors_.erase(out.factors_.begin() + static_cast<std::ptrdiff_t>(position));
    return out;
}

CommMonomial::CommMonomial(std::vector<BosonMode> factors) : factors_(std::move(factors)) {
    for (const auto& m : factors_) {
        if (!m.is_creation()) throw InvalidMode("bosonic monomials contain creation modes only");
    }
    std::sort(factors_.begin(), factors_.end());
}

CommMonomial CommMonomial::with_inserted(const BosonMode& m) const {
    CommMonomial out = *this;
    out.factors_.insert(std::upper_bound(out.factors_.begin(), out.factors_.end(), m), m);
    return out;
}

CommMonomial CommMonomial::with_removed(std::size_t position) const {
    CommMonomial out = *this;
    out.factors_.erase(out.factors_.begin() + static_cast<std::ptrdiff_t>(position));
    return out;
}

CommMonomial CommMonomial::with_replaced(std::size_t position, const BosonMode& m) const {
    return with_removed(position).with_inserted(m);
}

std::string BasisVector::to_string() const {
    std::string s;
    for (const auto& m : ferm.factors()) s += ffva::to_string(m) + " ";
    for (const auto& m : comm.factors()) s += ffva::to_string(m) + " ";
    return s + "|0>";
}

HalfInt weight(const BasisVector& v) {
    HalfInt w;
    for (const auto& m : v.ferm.factors()) w += m.weight();
    for (const auto& m : v.comm.factors()) w += m.weight();
    return w;
}

Charge charge(const BasisVector& v, int species_count) {
    Charge c;
    c.fermionic.assign(static_cast<std::size_t>(species_count), 0);
    c.bosonic.assign(static_cast<std::size_t>(species_count), 0);
    for (const auto& m : v.ferm.factors()) {
        if (m.species > species_count) throw SpeciesMismatch(m.species, species_count);
        c.fermionic[static_cast<std::size_t>(m.species - 1)] += charge_of(m.sign);
        c.total_fermionic += charge_of(m.sign);
    }
    for (const auto& m : v.comm.factors()) {
        if (m.species > species_count) throw SpeciesMismatch(m.species, species_count);
        c.bosonic[static_cast<std::size_t>(m.species - 1)] += charge_of(m.sign);
        c.total_bosonic += charge_of(m.sign);
    }
    return c;
}

// ---------------------------------------------------------------------------

State::State(int species_count) : species_count_(species_count) {
    if (species_count < 1) throw std::invalid_argument("species count must be >= 1");
}

State State::vacuum(int species_count) { return basis(BasisVector{}, species_count); }

State State::basis(BasisVector v, int species_count, const Rational& c) {
    State s(species_count);
    for (const auto& m : v.ferm.factors())
        if (m.species > species_count) throw SpeciesMismatch(m.species, species_count);
    for (const auto& m : v.comm.factors())
        if (m.species > species_count) throw SpeciesMismatch(m.species, species_count);
    s.add_term(std::move(v), c);
    return s;
}

Rational State::coefficient(const BasisVector& v) const {
    auto it = terms_.find(v);
    return it == terms_.end() ? Rational(0) : it->second;
}

HalfInt State::max_weight() const {
    HalfInt w;
    for (const auto& [v, c] : terms_) w = std::max(w, weight(v));
    return w;
}

void State::add_term(const BasisVector& v, const Rational& c) {
    if (sgn(c) == 0) return;
    auto [it, inserted] = terms_.try_emplace(v, c);
    if (!inserted) {
        it->second += c;
        if (sgn(it->second) == 0) terms_.erase(it);
    }
}

void State::add_term(BasisVector&& v, const Rational& c) {
    if (sgn(c) == 0) return;
    auto [it, inserted] = terms_.try_emplace(std::move(v), c);
    if (!inserted) {
        it->second += c;
        if (sgn(it->second) == 0) terms_.erase(it);
    }
}

void State::check_species(const State& o) const {
    if (o.species_count_ != species_count_) throw SpeciesMismatch(species_count_, o.species_count_);
}

State& State::operator+=(const State& o) {
    check_species(o);
    for (const auto& [v, c] : o.terms_) add_term(v, c);
    return *this;
}

State& State::operator-=(const State& o) {
    check_species(o);
    for (const auto& [v, c] : o.terms_) add_term(v, -c);
    return *this;
}

State& State::operator*=(const Rational& c) {
    if (sgn(c) == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [v, x] : terms_) x *= c;
    return *this;
}

std::string State::to_string() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (const auto& [v, c] : terms_) {
        if (!s.empty()) s += " + ";
        s += "(" + ffva::to_string(c) + ") " + v.to_string();
    }
    return s;
}

State monomial_state(std::vector<FermionMode> ferm, std::vector<BosonMode> comm, int species_count) {
    State s(species_count);
    auto canon = FermMonomial::canonicalize(std::move(ferm));
    if (!canon) return s;
    return State::basis(BasisVector{std::move(canon->second), CommMonomial(std::move(comm))}, species_count,
                        canon->first);
}

// ---------------------------------------------------------------------------

bool ChargeConstraint::accepts(const Charge& c) const {
    if (total && c.total() != *total) return false;
    if (fermionic && c.total_fermionic != *fermionic) return false;
    if (bosonic && c.total_bosonic != *bosonic) return false;
    if (species_balanced) {
        for (std::size_t i = 0; i < c.fermionic.size(); ++i) {
            if (c.fermionic[i] + c.bosonic[i] != 0) return false;
        }
    }
    return true;
}

namespace {

// Bucket key: (weight in half units, per-species charge vector).
using Bucket = std::pair<std::int64_t, std::vector<int>>;

template <FieldKind Kind>
std::vector<FreeMode<Kind>> creation_slots(int species_count, std::int64_t max_halves) {
    std::vector<FreeMode<Kind>> slots;
    for (int s = 1; s <= species_count; ++s) {
        for (Sign sg : {Sign::Plus, Sign::Minus}) {
            for (std::int64_t h = -1; -h <= max_halves; h -= 2) slots.emplace_back(s, sg, HalfInt::from_halves(h));
        }
    }
    std::sort(slots.begin(), slots.end());
    return slots;
}

void add_charge(std::vector<int>& q, int species, Sign s, int times) {
    q[static_cast<std::size_t>(species - 1)] += times * charge_of(s);
}

std::map<Bucket, std::vector<std::vector<FermionMode>>> fermion_buckets(int n, std::int64_t max_halves) {
    const auto slots = creation_slots<FieldKind::Fermion>(n, max_halves);
    std::map<Bucket, std::vector<std::vector<FermionMode>>> out;
    std::vector<FermionMode> cur;
    std::vector<int> q(static_cast<std::size_t>(n), 0);
    auto rec = [&](auto&& self, std::size_t i, std::int64_t budget) -> void {
        if (i == slots.size()) {
            out[{max_halves - budget, q}].push_back(cur);
            return;
        }
        self(self, i + 1, budget);
        const auto& m = slots[i];
        const std::int64_t cost = m.weight().halves();
        if (cost <= budget) {
            cur.push_back(m);
            add_charge(q, m.species, m.sign, 1);
            self(self, i + 1, budget - cost);
            add_charge(q, m.species, m.sign, -1);
            cur.pop_back();
        }
    };
    rec(rec, 0, max_halves);
    return out;
}

std::map<Bucket, std::vector<std::vector<BosonMode>>> boson_buckets(int n, std::int64_t max_halves) {
    const auto slots = creation_slots<FieldKind::Boson>(n, max_halves);
    std::map<Bucket, std::vector<std::vector<BosonMode>>> out;
    std::vector<BosonMode> cur;
    std::vector<int> q(static_cast<std::size_t>(n), 0);
    auto rec = [&](auto&& self, std::size_t i, std::int64_t budget) -> void {
        if (i == slots.size()) {
            out[{max_halves - budget, q}].push_back(cur);
            return;
        }
        self(self, i + 1, budget);
        const auto& m = slots[i];
        const std::int64_t cost = m.weight().halves();
        int taken = 0;
        while (cost <= budget) {
            cur.push_back(m);
            add_charge(q, m.species, m.sign, 1);
            budget -= cost;
            ++taken;
            self(self, i + 1, budget);
        }
        for (; taken > 0; --taken) {
            cur.pop_back();
            add_charge(q, m.species, m.sign, -1);
        }
    };
    rec(rec, 0, max_halves);
    return out;
}

std::vector<BasisVector> enumerate_impl(int n, std::int64_t lo_halves, std::int64_t hi_halves,
                                        const EnumerateOptions& opt) {
    if (n < 1) throw std::invalid_argument("species count must be >= 1");
    if (hi_halves < 0) return {};
    const std::int64_t fermion_budget = opt.sector == Sector::Bosonic ? 0 : hi_halves;
    const std::int64_t boson_budget = opt.sector == Sector::Fermionic ? 0 : hi_halves;
    const auto fb = fermion_buckets(n, fermion_budget);
    const auto bb = boson_buckets(n, boson_budget);

    std::vector<std::pair<std::int64_t, BasisVector>> found;
    for (const auto& [fkey, fmonos] : fb) {
        for (const auto& [bkey, bmonos] : bb) {
            const std::int64_t w = fkey.first + bkey.first;
            if (w < lo_halves || w > hi_halves) continue;
            Charge c;
            c.fermionic = fkey.second;
            c.bosonic = bkey.second;
            for (int x : c.fermionic) c.total_fermionic += x;
            for (int x : c.bosonic) c.total_bosonic += x;
            if (!opt.charge.accepts(c)) continue;
            for (const auto& f : fmonos) {
                auto canon = FermMonomial::canonicalize(f);
                for (const auto& b : bmonos) found.emplace_back(w, BasisVector{canon->second, CommMonomial(b)});
            }
        }
    }
    std::sort(found.begin(), found.end());
    std::vector<BasisVector> out;
    out.reserve(found.size());
    for (auto& [w, v] : found) out.push_back(std::move(v));
    return out;
}

}  // namespace

std::vector<BasisVector> enumerate(int species_count, HalfInt max_weight, const EnumerateOptions& options) {
    return enumerate_impl(species_count, 0, max_weight.halves(), options);
}

std::vector<BasisVector> enumerate_weight(int species_count, HalfInt w, const EnumerateOptions& options) {
    return enumerate_impl(species_count, w.halves(), w.halves(), options);
}

BasisVector lowest_charge_vector(int l, int species) {
    std::vector<FermionMode> modes;
    const Sign s = l >= 0 ? Sign::Plus : Sign::Minus;
    for (int k = 0; k < std::abs(l); ++k) modes.emplace_back(species, s, HalfInt::from_halves(-(2 * k + 1)));
    return BasisVector{FermMonomial::canonicalize(std::move(modes))->second, CommMonomial{}};
}

}  // namespace ffva
