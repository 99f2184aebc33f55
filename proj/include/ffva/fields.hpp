#pragma once

#include "ffva/fock.hpp"

namespace ffva {

/// Conversion between the physical mode r of a weight-1/2 generator and the
/// n-th product index: phi(z) = sum_n phi(n + 1/2) z^{-n-1}, so r = n + 1/2.
struct ModeIndex {
    static constexpr HalfInt physical(std::int64_t product_index) {
        return HalfInt::from_halves(2 * product_index + 1);
    }
    static constexpr std::int64_t product(HalfInt physical) { return (physical.halves() - 1) / 2; }
};

/// psi_i^{+-}(r) acting on a state of F^(n) (x) M^(n).
State apply_fermion_mode(const FermionMode& mode, const State& s);

/// a_i^{+-}(r): creation multiplies, annihilation is zero on M^(n).
State apply_boson_mode(const BosonMode& mode, const State& s);

/// sum_{k in Z+1/2} :psi_i^+(k) psi_j^-(r-k): with the normal ordering of the
/// field Y(psi_i^+(-1/2) psi_j^-(-1/2)|0>, z). Its r = 0 mode is the gl_n unit e_{i,j}.
State fermion_bilinear_mode(int i, int j, std::int64_t r, const State& s);

/// Heisenberg mode alpha_i(r) = fermion_bilinear_mode(i, i, r, .).
State heisenberg_mode(int species, std::int64_t r, const State& s);

/// A(n) v: coefficient of z^{-n-1} in Y(A, z) v.
///
/// Computed recursively from A = phi(-m-1/2) B, phi the leftmost canonical
/// factor, via Y(A, z) = :(d^m/m! phi)(z) Y(B, z):. Every sum involved is
/// finite on finite states. Throws SpeciesMismatch when A and v differ in n.
State vertex_mode(const State& a, std::int64_t n, const State& v);

/// Translation operator T, normalized so that (TA)(n) = -n A(n-1).
State translate(const State& a);

}  // namespace ffva
