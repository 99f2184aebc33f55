#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "ffva/fields.hpp"
#include "ffva/linalg.hpp"
#include "ffva/qchar.hpp"

namespace ffva {

/// E_{i,j} of gl(1|1), i, j in {1, 2}. Index 1 is even, index 2 is odd.
struct GenLabel {
    int i = 1;
    int j = 1;

    static int parity_of(int index) { return index == 2 ? 1 : 0; }
    int parity() const { return (parity_of(i) + parity_of(j)) % 2; }
    bool is_odd() const { return parity() == 1; }
    std::string to_string() const { return "E" + std::to_string(i) + std::to_string(j); }

    friend auto operator<=>(const GenLabel&, const GenLabel&) = default;
    friend bool operator==(const GenLabel&, const GenLabel&) = default;
};

/// E11, E12, E21, E22.
const std::array<GenLabel, 4>& all_labels();

/// The weight-one state realizing E_{i,j} in (F (x) M)_0.
State generator(GenLabel label);

/// E_{i,j}(r) v by the closed-form mode expansions.
State gen_mode(GenLabel label, std::int64_t r, const State& v);

/// Action of E_{i,j}(r) on some module; used to share the relation checker.
using GenModeFn = std::function<State(GenLabel, std::int64_t, const State&)>;

struct RelationOptions {
    std::int64_t r_min = -3, r_max = 3;
    std::int64_t s_min = -3, s_max = 3;
    int jobs = 1;
};

struct RelationWitness {
    BasisVector vector;
    State lhs;
    State rhs;
};

struct RelationCase {
    GenLabel a, b;
    std::int64_t r = 0, s = 0;
    std::size_t vectors = 0;
    std::optional<RelationWitness> witness;  // first failing basis vector
    bool pass() const { return !witness.has_value(); }
};

struct RelationReport {
    std::vector<RelationCase> cases;
    std::size_t domain_size = 0;
    std::size_t checks() const;
    std::size_t failures() const;
    bool pass() const { return failures() == 0; }
};

/// Right side of the affine gl(1|1) relation at m = n = 1, K = 1, acting on v:
/// d_{kj} E_{il}(r+s) v - d_{il} (-1)^{p(a)p(b)} E_{kj}(r+s) v + d_{ij} d_{kl} (-1)^{i+k} r d_{r+s,0} v.
State relation_rhs(const GenModeFn& mode, GenLabel a, GenLabel b, std::int64_t r, std::int64_t s, const State& v);

/// Super-commutator [a(r), b(s)] v, an anticommutator iff both labels are odd.
State relation_lhs(const GenModeFn& mode, GenLabel a, GenLabel b, std::int64_t r, std::int64_t s, const State& v);

/// Checks every label pair and (r, s) in range on every vector of the domain.
RelationReport check_relations_on(const GenModeFn& mode, const std::vector<BasisVector>& domain, int species_count,
                                  const RelationOptions& options);

/// Basis of V = (F (x) M)_0 up to max_weight.
std::vector<BasisVector> v_basis(HalfInt max_weight);
/// Basis of M_0 up to max_weight.
std::vector<BasisVector> m0_basis(HalfInt max_weight);

/// Relation suite of the realization on V.
RelationReport check_relations(HalfInt max_weight, const RelationOptions& options);

struct AnnihilationFailure {
    BasisVector vector;
    GenLabel label;
    std::int64_t r = 0;
    State image;
};

struct KernelLevel {
    HalfInt weight;
    std::size_t v_dim = 0;
    std::size_t kernel_dim = 0;
    std::size_t m0_dim = 0;
    bool m0_contained = true;
    bool pass() const { return m0_contained && kernel_dim == m0_dim; }
};

struct NegativeControl {
    State vector;
    std::string description;
    std::optional<AnnihilationFailure> witness;  // set when some mode acts nonzero
    bool pass() const { return witness.has_value(); }
};

struct CenterReport {
    HalfInt max_weight;
    std::int64_t r_max = 0;
    std::size_t vectors_checked = 0;
    std::vector<AnnihilationFailure> failures;  // M_0 vectors not annihilated
    std::vector<KernelLevel> kernel;            // joint kernel on V by weight
    std::vector<NegativeControl> controls;
    bool pass() const;
};

/// Every M_0 basis vector of weight <= max_weight is killed by E_{ij}(r),
/// 0 <= r <= r_max; the joint kernel on V up to kernel_weight equals M_0; and
/// the listed non-central controls are not annihilated.
CenterReport center_annihilation_check(HalfInt max_weight, std::int64_t r_max, HalfInt kernel_weight, int jobs = 1);

/// Standard negative controls: charge-zero vectors with a fermionic factor.
std::vector<State> default_center_controls();

/// Generators a^+(-1/2) a^-(-m-1/2)|0> of M_0 with weight m + 1 <= max_weight.
std::vector<State> m0_generators(HalfInt max_weight);

struct StrongGenerationReport {
    std::vector<std::size_t> span_dims;
    std::vector<std::size_t> expected_dims;
    bool contained = false;
    bool pass() const { return contained && span_dims == expected_dims; }
};

StrongGenerationReport center_strong_generation_check(HalfInt max_weight);

/// Graded dimensions of V by weight.
QSeries char_v_enumerated(HalfInt max_weight);

struct SurjectivityReport {
    State e21_lhs, e21_rhs;
    State e12_lhs, e12_rhs;
    bool first() const { return e21_lhs == e21_rhs; }
    bool second() const { return e12_lhs == e12_rhs; }
    bool pass() const { return first() && second(); }
};

/// E21(0) psi^+(-1/2)|0> = a^+(-1/2)|0> and E12(0) psi^-(-1/2)|0> = a^-(-1/2)|0>.
SurjectivityReport surjectivity_evidence_check();

}  // namespace ffva
