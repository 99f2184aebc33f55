#pragma once

#include <cstdint>
#include <map>
#include <random>
#include <vector>

#include "ffva/gl11.hpp"

namespace ffva {

/// Finite-support Whittaker data chi^+(z), chi^-(z): coefficient chi^{+-}_k at
/// integer index k, vanishing above p^{+-}.
class WhittakerChar {
public:
    using Coeffs = std::map<std::int64_t, Rational>;

    /// Drops zero entries; throws EmptyCharacter if either side is zero.
    WhittakerChar(Coeffs chi_plus, Coeffs chi_minus);

    const Coeffs& chi_plus() const { return plus_; }
    const Coeffs& chi_minus() const { return minus_; }
    Rational plus(std::int64_t k) const;
    Rational minus(std::int64_t k) const;
    std::int64_t p_plus() const { return plus_.rbegin()->first; }
    std::int64_t p_minus() const { return minus_.rbegin()->first; }

    /// c_n = sum_p chi^+_p chi^-_{n-1-p}, the scalar by which E11(n) + E22(n) acts.
    Rational c(std::int64_t n) const;

    WhittakerChar scaled(const Rational& t_plus, const Rational& t_minus) const;

    /// Nonzero rational coefficients on [p - span, p] with chi_p != 0.
    static WhittakerChar random(std::mt19937_64& rng, std::int64_t p_plus, std::int64_t p_minus, int span = 2);

    friend bool operator==(const WhittakerChar&, const WhittakerChar&) = default;

private:
    Coeffs plus_;
    Coeffs minus_;
};

/// E_{i,j}(n) on F(chi^+, chi^-), realized on F. States must be purely fermionic.
State w_gen_mode(GenLabel label, std::int64_t n, const State& v, const WhittakerChar& chi);

GenModeFn whittaker_mode_fn(const WhittakerChar& chi);

struct ReachResult {
    State state;          // E(...) ... E(...)|0>
    Rational scalar;      // state = scalar * target
    BasisVector target;   // lowest_charge_vector(m)
};

/// E12(p^- - m + 1) ... E12(p^-)|0> for m > 0, the E21 analogue with p^+ for
/// m < 0. Throws NotProportional unless the result is a nonzero multiple of
/// lowest_charge_vector(m).
ReachResult reach_charge_vector(std::int64_t m, const WhittakerChar& chi);

/// Basis of F (one species) up to max_weight, all charges.
std::vector<BasisVector> f_basis(HalfInt max_weight);

RelationReport check_module_relations(const WhittakerChar& chi, HalfInt max_weight, const RelationOptions& options);

struct ChargeSpan {
    std::int64_t charge = 0;
    bool reached = false;
    Rational scalar;
    std::vector<std::size_t> span_dims;      // by half-integer weight
    std::vector<std::size_t> expected_dims;  // enumerated F_l
    bool pass() const { return reached && span_dims == expected_dims; }
};

struct CyclicityReport {
    std::vector<ChargeSpan> charges;
    bool pass() const;
};

/// Reaches every e^{l alpha}, |l| <= L, from the vacuum and checks that the
/// alpha(r < 0) closure of each fills F_l up to weight N.
CyclicityReport cyclicity_check(const WhittakerChar& chi, std::int64_t charge_bound, HalfInt weight_bound);

struct SubmoduleTrial {
    State start;
    std::vector<std::int64_t> reached_charges;  // l with e^{l alpha} in the closure
    std::size_t span_dim = 0;
    bool pass() const { return !reached_charges.empty(); }
};

struct SubmoduleReport {
    HalfInt weight_bound;
    std::int64_t window = 0;
    std::vector<SubmoduleTrial> trials;
    bool pass() const;
};

/// Closes {v} under all w_gen_mode(label, n, .) with |n| <= N + max(p^+, p^-) + 1,
/// keeping only results of weight <= N, and records which e^{l alpha} lie in the
/// span. Bounded evidence for irreducibility, not a proof.
SubmoduleTrial submodule_closure(const State& start, const WhittakerChar& chi, HalfInt weight_bound);

/// Runs submodule_closure on `trials` seeded random nonzero states of weight <= N.
SubmoduleReport submodule_evidence_check(const WhittakerChar& chi, int trials, HalfInt weight_bound, std::uint64_t seed,
                                         int jobs = 1);

/// Random combination of up to three basis vectors of F, weight <= max_weight.
State random_f_state(std::mt19937_64& rng, HalfInt max_weight);

}  // namespace ffva
