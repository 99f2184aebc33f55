#include "ffva/fields.hpp"

#include "ffva/errors.hpp"

namespace ffva {

namespace {

void check_species(int species, const State& s) {
    if (species > s.species_count()) throw SpeciesMismatch(species, s.species_count());
}

// phi_(j) for a weight-1/2 generator phi, j the product index.
State apply_generator(FieldKind kind, int species, Sign sign, std::int64_t j, const State& s) {
    if (kind == FieldKind::Fermion) return apply_fermion_mode(FermionMode(species, sign, ModeIndex::physical(j)), s);
    return apply_boson_mode(BosonMode(species, sign, ModeIndex::physical(j)), s);
}

struct LeadingFactor {
    FieldKind kind;
    int species;
    Sign sign;
    std::int64_t depth;  // m, for phi(-m-1/2)
    BasisVector rest;
};

LeadingFactor split_leading(const BasisVector& a) {
    if (!a.ferm.empty()) {
        const auto& f = a.ferm.factors().front();
        return {FieldKind::Fermion, f.species, f.sign, (-f.index.halves() - 1) / 2,
                BasisVector{a.ferm.with_removed(0), a.comm}};
    }
    const auto& b = a.comm.factors().front();
    return {FieldKind::Boson, b.species, b.sign, (-b.index.halves() - 1) / 2, BasisVector{a.ferm, a.comm.with_removed(0)}};
}

State monomial_vertex_mode(const BasisVector& a, std::int64_t n, const State& v) {
    if (a.is_vacuum()) return n == -1 ? v : State(v.species_count());
    const LeadingFactor lead = split_leading(a);
    const std::int64_t m = lead.depth;
    const HalfInt w_rest = weight(lead.rest);
    const HalfInt w_v = v.max_weight();
    State out(v.species_count());

    // Creation part: sum_{k<0} (d^(m) phi)_(k) B(n-k-1) v.  B(j) v vanishes once
    // j > wt(B) + wt(v) - 1.
    const std::int64_t j_max = (w_rest + w_v - HalfInt(1)).floor();
    for (std::int64_t k = n - 1 - j_max; k < 0; ++k) {
        State inner = monomial_vertex_mode(lead.rest, n - k - 1, v);
        if (inner.is_zero()) continue;
        // (-1)^m C(k, m) = C(m - k - 1, m) for k < 0
        const Rational c(binomial(static_cast<long>(m - k - 1), static_cast<long>(m)));
        out += apply_generator(lead.kind, lead.species, lead.sign, k - m, inner) * c;
    }

    // Annihilation part (fermions only; boson annihilators vanish on M):
    // eps * sum_{k>=m} B(n-k-1) (d^(m) phi)_(k) v, with phi_(k-m) killing v once
    // k - m + 1/2 > wt(v).
    if (lead.kind == FieldKind::Fermion) {
        const int eps = (lead.rest.ferm.size() % 2 == 0) ? 1 : -1;
        const std::int64_t k_max = m + (w_v - HalfInt::half()).floor();
        for (std::int64_t k = m; k <= k_max; ++k) {
            State acted = apply_generator(lead.kind, lead.species, lead.sign, k - m, v);
            if (acted.is_zero()) continue;
            Rational c(binomial(static_cast<long>(k), static_cast<long>(m)));
            if (m % 2 != 0) c = -c;
            out += monomial_vertex_mode(lead.rest, n - k - 1, acted) * Rational(eps * c);
        }
    }
    return out;
}

}  // namespace

State apply_fermion_mode(const FermionMode& mode, const State& s) {
    check_species(mode.species, s);
    State out(s.species_count());
    for (const auto& [v, c] : s.terms()) {
        if (mode.is_creation()) {
            const std::size_t p = v.ferm.slot(mode);
            if (p < v.ferm.size() && v.ferm.factors()[p] == mode) continue;  // Pauli exclusion
            out.add_term(BasisVector{v.ferm.with_inserted(mode), v.comm}, p % 2 == 0 ? c : Rational(-c));
        } else {
            const FermionMode partner(mode.species, opposite(mode.sign), -mode.index);
            const std::size_t p = v.ferm.find(partner);
            if (p == static_cast<std::size_t>(-1)) continue;
            out.add_term(BasisVector{v.ferm.with_removed(p), v.comm}, p % 2 == 0 ? c : Rational(-c));
        }
    }
    return out;
}

State apply_boson_mode(const BosonMode& mode, const State& s) {
    check_species(mode.species, s);
    State out(s.species_count());
    if (!mode.is_creation()) return out;
    for (const auto& [v, c] : s.terms()) out.add_term(BasisVector{v.ferm, v.comm.with_inserted(mode)}, c);
    return out;
}

State fermion_bilinear_mode(int i, int j, std::int64_t r, const State& s) {
    check_species(i, s);
    check_species(j, s);
    State out(s.species_count());
    if (s.is_zero()) return out;
    const HalfInt wt = s.max_weight();
    const HalfInt rr(r);
    // k < 0: psi_i^+(k) psi_j^-(r-k); nonzero needs r - k <= wt(s) or r - k < 0.
    for (HalfInt k = HalfInt::from_halves(-1); k >= rr - wt; k -= HalfInt(1)) {
        State inner = apply_fermion_mode(FermionMode(j, Sign::Minus, rr - k), s);
        if (!inner.is_zero()) out += apply_fermion_mode(FermionMode(i, Sign::Plus, k), inner);
    }
    // k > 0: -psi_j^-(r-k) psi_i^+(k); psi_i^+(k) kills s once k > wt(s).
    for (HalfInt k = HalfInt::half(); k <= wt; k += HalfInt(1)) {
        State inner = apply_fermion_mode(FermionMode(i, Sign::Plus, k), s);
        if (!inner.is_zero()) out -= apply_fermion_mode(FermionMode(j, Sign::Minus, rr - k), inner);
    }
    return out;
}

State heisenberg_mode(int species, std::int64_t r, const State& s) { return fermion_bilinear_mode(species, species, r, s); }

State vertex_mode(const State& a, std::int64_t n, const State& v) {
    if (a.species_count() != v.species_count()) throw SpeciesMismatch(a.species_count(), v.species_count());
    State out(v.species_count());
    for (const auto& [basis, c] : a.terms()) out += monomial_vertex_mode(basis, n, v) * c;
    return out;
}

State translate(const State& a) {
    State out(a.species_count());
    for (const auto& [v, c] : a.terms()) {
        const auto& ferm = v.ferm.factors();
        for (std::size_t i = 0; i < ferm.size(); ++i) {
            // [T, phi_(j)] = -j phi_(j-1): phi(-m-1/2) -> (m+1) phi(-m-3/2)
            std::vector<FermionMode> raw = ferm;
            const Rational factor = to_rational(HalfInt::half() - raw[i].index);
            raw[i].index -= HalfInt(1);
            auto canon = FermMonomial::canonicalize(std::move(raw));
            if (!canon) continue;
            out.add_term(BasisVector{std::move(canon->second), v.comm}, c * factor * canon->first);
        }
        const auto& comm = v.comm.factors();
        for (std::size_t i = 0; i < comm.size(); ++i) {
            BosonMode moved = comm[i];
            const Rational factor = to_rational(HalfInt::half() - moved.index);
            moved.index -= HalfInt(1);
            out.add_term(BasisVector{v.ferm, v.comm.with_replaced(i, moved)}, c * factor);
        }
    }
    return out;
}

}  // namespace ffva
