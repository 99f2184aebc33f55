#pragma once

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ffva/halfint.hpp"
#include "ffva/rational.hpp"

namespace ffva {

enum class Sign : unsigned char { Plus = 0, Minus = 1 };
enum class FieldKind : unsigned char { Fermion, Boson };

constexpr Sign opposite(Sign s) { return s == Sign::Plus ? Sign::Minus : Sign::Plus; }
constexpr int charge_of(Sign s) { return s == Sign::Plus ? 1 : -1; }

/// A mode psi_i^{+-}(r) or a_i^{+-}(r) with r in 1/2 + Z.
///
/// The defaulted ordering is the canonical factor order: species ascending,
/// then + before -, then index ascending (most negative first).
template <FieldKind Kind>
struct FreeMode {
    int species = 1;
    Sign sign = Sign::Plus;
    HalfInt index = HalfInt::from_halves(-1);

    FreeMode() = default;
    FreeMode(int species_, Sign sign_, HalfInt index_);

    bool is_creation() const { return index < HalfInt(0); }
    /// Conformal weight contribution -index of a creation mode.
    HalfInt weight() const { return -index; }

    friend auto operator<=>(const FreeMode&, const FreeMode&) = default;
    friend bool operator==(const FreeMode&, const FreeMode&) = default;
};

using FermionMode = FreeMode<FieldKind::Fermion>;
using BosonMode = FreeMode<FieldKind::Boson>;

/// Strictly increasing sequence of creation fermion modes.
class FermMonomial {
public:
    FermMonomial() = default;

    /// Reorders into canonical order. Returns the permutation sign and the
    /// monomial, or nullopt when a mode repeats. All modes must be creation modes.
    static std::optional<std::pair<int, FermMonomial>> canonicalize(std::vector<FermionMode> raw);

    const std::vector<FermionMode>& factors() const { return factors_; }
    std::size_t size() const { return factors_.size(); }
    bool empty() const { return factors_.empty(); }

    /// Position of m, or npos.
    std::size_t find(const FermionMode& m) const;
    /// Number of factors strictly less than m (the slot m would take).
    std::size_t slot(const FermionMode& m) const;

    /// Assumes m is absent; caller accounts for the sign (-1)^slot(m).
    FermMonomial with_inserted(const FermionMode& m) const;
    FermMonomial with_removed(std::size_t position) const;

    friend auto operator<=>(const FermMonomial&, const FermMonomial&) = default;
    friend bool operator==(const FermMonomial&, const FermMonomial&) = default;

private:
    std::vector<FermionMode> factors_;
};

/// Sorted multiset of creation boson modes.
class CommMonomial {
public:
    CommMonomial() = default;
    explicit CommMonomial(std::vector<BosonMode> factors);

    const std::vector<BosonMode>& factors() const { return factors_; }
    std::size_t size() const { return factors_.size(); }
    bool empty() const { return factors_.empty(); }

    CommMonomial with_inserted(const BosonMode& m) const;
    CommMonomial with_removed(std::size_t position) const;
    CommMonomial with_replaced(std::size_t position, const BosonMode& m) const;

    friend auto operator<=>(const CommMonomial&, const CommMonomial&) = default;
    friend bool operator==(const CommMonomial&, const CommMonomial&) = default;

private:
    std::vector<BosonMode> factors_;
};

/// Fock basis element ferm * comm * vacuum of F^(n) (x) M^(n).
struct BasisVector {
    FermMonomial ferm;
    CommMonomial comm;

    bool is_vacuum() const { return ferm.empty() && comm.empty(); }
    std::string to_string() const;

    friend auto operator<=>(const BasisVector&, const BasisVector&) = default;
    friend bool operator==(const BasisVector&, const BasisVector&) = default;
};

HalfInt weight(const BasisVector& v);

struct Charge {
    std::vector<int> fermionic;  // per species, index 0 is species 1
    std::vector<int> bosonic;
    int total_fermionic = 0;
    int total_bosonic = 0;

    int total() const { return total_fermionic + total_bosonic; }
    friend bool operator==(const Charge&, const Charge&) = default;
};

Charge charge(const BasisVector& v, int species_count = 1);

/// Finite linear combination of basis vectors with exact coefficients.
/// Zero coefficients are never stored.
class State {
public:
    using Terms = std::map<BasisVector, Rational>;

    explicit State(int species_count = 1);

    static State vacuum(int species_count = 1);
    static State basis(BasisVector v, int species_count = 1, const Rational& c = 1);

    int species_count() const { return species_count_; }
    const Terms& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }
    Rational coefficient(const BasisVector& v) const;

    /// Highest weight among the terms (0 for the zero state).
    HalfInt max_weight() const;

    void add_term(const BasisVector& v, const Rational& c);
    void add_term(BasisVector&& v, const Rational& c);

    State& operator+=(const State& o);
    State& operator-=(const State& o);
    State& operator*=(const Rational& c);
    friend State operator+(State a, const State& b) { return a += b; }
    friend State operator-(State a, const State& b) { return a -= b; }
    friend State operator*(State a, const Rational& c) { return a *= c; }
    friend State operator*(const Rational& c, State a) { return a *= c; }
    State operator-() const { return *this * Rational(-1); }

    friend bool operator==(const State&, const State&) = default;

    std::string to_string() const;

private:
    void check_species(const State& o) const;

    int species_count_;
    Terms terms_;
};

enum class Sector { Fermionic, Bosonic, Full };

struct ChargeConstraint {
    std::optional<int> total;      // l_F + l_M
    std::optional<int> fermionic;  // l_F
    std::optional<int> bosonic;    // l_M
    /// Per species, fermionic plus bosonic charge vanishes (gl_n diagonal condition).
    bool species_balanced = false;

    bool accepts(const Charge& c) const;
};

struct EnumerateOptions {
    Sector sector = Sector::Full;
    ChargeConstraint charge;
};

/// All basis vectors of weight <= max_weight satisfying the options, sorted by
/// (weight, canonical order).
std::vector<BasisVector> enumerate(int species_count, HalfInt max_weight, const EnumerateOptions& options = {});
/// Same, restricted to weight exactly w.
std::vector<BasisVector> enumerate_weight(int species_count, HalfInt w, const EnumerateOptions& options = {});

/// The charge-l lowest weight vector psi^+(-l+1/2)...psi^+(-1/2)|0> (l > 0),
/// psi^-(-|l|+1/2)...psi^-(-1/2)|0> (l < 0), vacuum for l = 0.
BasisVector lowest_charge_vector(int l, int species = 1);

// Convenience constructors; index is given as a HalfInt.
FermionMode psi(Sign s, HalfInt index, int species = 1);
BosonMode boson(Sign s, HalfInt index, int species = 1);
inline HalfInt h(std::int64_t halves) { return HalfInt::from_halves(halves); }

/// Builds ferm * comm * vacuum from raw factors; fermions are canonicalized
/// (sign folded into the returned State).
State monomial_state(std::vector<FermionMode> ferm, std::vector<BosonMode> comm = {}, int species_count = 1);

std::string to_string(const FermionMode& m);
std::string to_string(const BosonMode& m);

}  // namespace ffva
