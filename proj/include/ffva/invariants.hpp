#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ffva/fields.hpp"
#include "ffva/linalg.hpp"

namespace ffva {

/// Matrix unit e_{i,j} of gl_n, 1 <= i, j <= n.
struct GLnUnit {
    int i = 1;
    int j = 1;
};

/// e_{i,j} acting by derivations on F^(n) (x) M^(n): on bosons by
/// a_k^+ -> d_{jk} a_i^+, a_k^- -> -d_{ik} a_j^-; on fermions by the zero mode of
/// psi_i^+ psi_j^-.
State gl_action(GLnUnit u, const State& v);

/// Weightwise joint kernel of all e_{i,j} on the chosen sector up to max_weight.
GradedSubspace fixed_space(int n, HalfInt max_weight, Sector sector = Sector::Full, int jobs = 1);

enum class VnKind { Zero, One, Plus, Minus };

std::string to_string(VnKind kind);

/// j^{0,k} = -sum_i psi_i^+(-1/2) psi_i^-(-k-1/2)|0>
/// j^{1,k} =  sum_i a_i^+(-1/2) a_i^-(-k-1/2)|0>
/// j^{+,k} = -sum_i psi_i^+(-1/2) a_i^-(-k-1/2)|0>
/// j^{-,k} =  sum_i a_i^+(-1/2) psi_i^-(-k-1/2)|0>
State vn_generator(VnKind kind, int k, int n);

/// The 4n generators with 0 <= k <= n-1.
std::vector<State> vn_generators(int n);

/// sum_i a_i^+(-1/2) a_i^-(-m-1/2)|0> for weight m + 1 <= max_weight.
std::vector<State> m_invariant_generators(int n, HalfInt max_weight);

struct SpanCheck {
    std::vector<std::size_t> span_dims;      // by half-integer weight
    std::vector<std::size_t> expected_dims;
    bool contained = false;
    bool pass() const { return contained && span_dims == expected_dims; }
};

/// span_closure(vn_generators(n)) against fixed_space(n).
SpanCheck strong_generation_check(int n, HalfInt max_weight, int jobs = 1);

/// span_closure(m_invariant_generators(n)) against fixed_space(n, Bosonic).
SpanCheck m_invariants_strong_gen_check(int n, HalfInt max_weight, int jobs = 1);

struct CentralityFailure {
    State vector;
    std::size_t generator = 0;
    std::int64_t r = 0;
    State image;
};

struct VnKernelLevel {
    HalfInt weight;
    std::size_t vn_dim = 0;
    std::size_t kernel_dim = 0;
    std::size_t candidate_dim = 0;
    bool candidate_contained = true;
    bool pass() const { return candidate_contained && kernel_dim == candidate_dim; }
};

struct VnControl {
    State vector;
    std::string description;
    std::optional<CentralityFailure> witness;
    bool pass() const { return witness.has_value(); }
};

struct VnCenterReport {
    int n = 1;
    HalfInt max_weight;
    std::int64_t r_max = 0;
    std::vector<std::size_t> candidate_dims;   // (M^(n))^{gl_n}
    std::vector<CentralityFailure> failures;   // candidates not annihilated
    std::vector<VnKernelLevel> kernel;         // joint kernel on V_n
    std::vector<VnControl> controls;
    bool pass() const;
};

/// (a) candidate center = M-invariants; (b) g(r) w = 0 for all generators g,
/// 0 <= r <= r_max; (c) the joint kernel of those modes on V_n is exactly the
/// candidate at each weight, and fermionic controls are not annihilated.
VnCenterReport center_vn_check(int n, HalfInt max_weight, std::int64_t r_max, int jobs = 1);

struct DecouplingEntry {
    int k = 0;
    bool in_span = false;
};

/// Whether j^{0,k}, n <= k <= k_max, lies in the span closure of the k <= n-1
/// generators at weight <= max_weight (entries with weight k+1 > max_weight are skipped).
std::vector<DecouplingEntry> decoupling_check(int n, int k_max, HalfInt max_weight);

}  // namespace ffva
