#include <random>

#include "doctest.h"
#include "ffva/errors.hpp"
#include "ffva/fields.hpp"
#include "test_util.hpp"

using namespace ffva;

namespace {

const HalfInt m12 = h(-1), m32 = h(-3), p12 = h(1);

State single(FermionMode m) { return monomial_state({m}); }
State vac() { return State::vacuum(); }

// Super-commutator sign for two fermion modes: always anticommutator here.
State anticommutator(const FermionMode& x, const FermionMode& y, const State& v) {
    return apply_fermion_mode(x, apply_fermion_mode(y, v)) + apply_fermion_mode(y, apply_fermion_mode(x, v));
}

int parity(const State& s) {
    // all terms of the states used below have a definite parity
    return static_cast<int>(s.terms().begin()->first.ferm.size() % 2);
}

State super_commutator_modes(const State& a, std::int64_t m, const State& b, std::int64_t k, const State& v) {
    const int sign = (parity(a) * parity(b)) % 2 == 0 ? -1 : 1;
    return vertex_mode(a, m, vertex_mode(b, k, v)) + vertex_mode(b, k, vertex_mode(a, m, v)) * Rational(sign);
}

std::vector<State> gl11_generator_states() {
    State alpha = monomial_state({psi(Sign::Plus, m12), psi(Sign::Minus, m12)});
    State e12 = monomial_state({psi(Sign::Plus, m12)}, {boson(Sign::Minus, m12)});
    State e21 = monomial_state({psi(Sign::Minus, m12)}, {boson(Sign::Plus, m12)});
    State e22 = monomial_state({}, {boson(Sign::Plus, m12), boson(Sign::Minus, m12)}) - alpha;
    return {alpha, e12, e21, e22};
}

}  // namespace

TEST_CASE("fermion modes") {
    CHECK(apply_fermion_mode(psi(Sign::Minus, p12), single(psi(Sign::Plus, m12))) == vac());
    CHECK(apply_fermion_mode(psi(Sign::Plus, p12), single(psi(Sign::Plus, m12))).is_zero());
    State three = monomial_state({psi(Sign::Plus, m32), psi(Sign::Plus, m12), psi(Sign::Minus, m12)});
    CHECK(three.terms().begin()->second == 1);
    // psi^+(1/2) contracts psi^-(-1/2) after passing two odd factors
    CHECK(apply_fermion_mode(psi(Sign::Plus, p12), three) ==
          monomial_state({psi(Sign::Plus, m32), psi(Sign::Plus, m12)}));
    // psi^-(1/2) contracts psi^+(-1/2) after passing one
    CHECK(apply_fermion_mode(psi(Sign::Minus, p12), three) ==
          monomial_state({psi(Sign::Plus, m32), psi(Sign::Minus, m12)}) * Rational(-1));
    // creation at the second slot picks up a sign
    CHECK(apply_fermion_mode(psi(Sign::Plus, m12), single(psi(Sign::Plus, m32))) ==
          monomial_state({psi(Sign::Plus, m32), psi(Sign::Plus, m12)}) * Rational(-1));
    CHECK(apply_fermion_mode(psi(Sign::Plus, m12), single(psi(Sign::Plus, m12))).is_zero());
    CHECK_THROWS_AS(apply_fermion_mode(psi(Sign::Plus, m12, 2), vac()), SpeciesMismatch);
}

TEST_CASE("boson modes") {
    State a = apply_boson_mode(boson(Sign::Plus, m12), vac());
    CHECK(a == monomial_state({}, {boson(Sign::Plus, m12)}));
    for (const auto& v : enumerate(1, HalfInt(2), {Sector::Bosonic, {}}))
        CHECK(apply_boson_mode(boson(Sign::Plus, p12), State::basis(v)).is_zero());
    State sq = apply_boson_mode(boson(Sign::Minus, m12), apply_boson_mode(boson(Sign::Minus, m12), vac()));
    REQUIRE(sq.size() == 1);
    CHECK(sq.terms().begin()->second == 1);
    CHECK(sq.terms().begin()->first.comm.size() == 2);
}

TEST_CASE("Clifford and commutativity relations on F (weight <= 5)") {
    const auto basis = enumerate(1, HalfInt(5), {Sector::Fermionic, {}});
    std::vector<FermionMode> modes;
    for (std::int64_t hh = -5; hh <= 5; hh += 2)
        for (Sign s : {Sign::Plus, Sign::Minus}) modes.push_back(psi(s, h(hh)));
    std::size_t checked = 0;
    for (const auto& b : basis) {
        const State v = State::basis(b);
        for (const auto& x : modes)
            for (const auto& y : modes) {
                State ac = anticommutator(x, y, v);
                const bool contract = x.sign != y.sign && x.index + y.index == HalfInt(0);
                CHECK(ac == (contract ? v : State()));
                ++checked;
            }
    }
    CHECK(checked > 8000);
}

TEST_CASE("boson creation modes commute with fermion modes") {
    const auto basis = enumerate(1, HalfInt(2));
    for (const auto& b : basis) {
        const State v = State::basis(b);
        for (std::int64_t hh : {-3, -1, 1, 3}) {
            const auto f = psi(Sign::Minus, h(hh));
            const auto a = boson(Sign::Plus, m32);
            CHECK(apply_fermion_mode(f, apply_boson_mode(a, v)) == apply_boson_mode(a, apply_fermion_mode(f, v)));
        }
    }
}

TEST_CASE("Heisenberg modes") {
    const State p = single(psi(Sign::Plus, m12));
    CHECK(heisenberg_mode(1, 0, p) == p);
    CHECK(heisenberg_mode(1, 0, vac()).is_zero());
    const State alpha = monomial_state({psi(Sign::Plus, m12), psi(Sign::Minus, m12)});
    CHECK(heisenberg_mode(1, -1, vac()) == alpha);
    CHECK(heisenberg_mode(1, 1, alpha) == vac());
    // alpha(0) is the fermionic charge on every basis vector
    for (const auto& b : enumerate(1, HalfInt(3), {Sector::Fermionic, {}})) {
        const State v = State::basis(b);
        CHECK(heisenberg_mode(1, 0, v) == v * Rational(charge(b).total_fermionic));
    }
    // level one: [alpha(r), alpha(s)] = r delta_{r+s,0}
    for (const auto& b : enumerate(1, HalfInt(3), {Sector::Fermionic, {}})) {
        const State v = State::basis(b);
        for (int r = -2; r <= 2; ++r)
            for (int s = -2; s <= 2; ++s) {
                State lhs = heisenberg_mode(1, r, heisenberg_mode(1, s, v)) - heisenberg_mode(1, s, heisenberg_mode(1, r, v));
                CHECK(lhs == (r + s == 0 ? v * Rational(r) : State()));
            }
    }
}

TEST_CASE("vertex_mode: vacuum and creation axioms") {
    for (const auto& b : enumerate(1, HalfInt(3))) {
        const State a = State::basis(b);
        CHECK(vertex_mode(a, -1, vac()) == a);
        for (int n = 0; n <= 3; ++n) CHECK(vertex_mode(a, n, vac()).is_zero());
    }
    CHECK_THROWS_AS(vertex_mode(State::vacuum(2), 0, vac()), SpeciesMismatch);
}

TEST_CASE("vertex_mode of a free generator is the mode itself") {
    const auto basis = enumerate(1, HalfInt(2));
    for (Sign s : {Sign::Plus, Sign::Minus}) {
        const State gf = single(psi(s, m12));
        const State gb = monomial_state({}, {boson(s, m12)});
        for (const auto& b : basis) {
            const State v = State::basis(b);
            for (int n = -3; n <= 3; ++n) {
                CHECK(vertex_mode(gf, n, v) == apply_fermion_mode(psi(s, ModeIndex::physical(n)), v));
                CHECK(vertex_mode(gb, n, v) == apply_boson_mode(boson(s, ModeIndex::physical(n)), v));
            }
        }
    }
    CHECK(ModeIndex::physical(-1) == m12);
    CHECK(ModeIndex::product(h(3)) == 1);
    CHECK(ModeIndex::product(m32) == -2);
}

TEST_CASE("vertex_mode reproduces the charge field and the surjectivity identity") {
    const auto gens = gl11_generator_states();
    const State p = single(psi(Sign::Plus, m12));
    CHECK(vertex_mode(gens[0], 0, p) == p);
    // E21(0) psi^+(-1/2)|0> = a^+(-1/2)|0>
    CHECK(vertex_mode(gens[2], 0, p) == monomial_state({}, {boson(Sign::Plus, m12)}));
    CHECK(vertex_mode(gens[1], 0, single(psi(Sign::Minus, m12))) == monomial_state({}, {boson(Sign::Minus, m12)}));
}

TEST_CASE("weight bookkeeping of n-th products") {
    const auto sample = enumerate(1, HalfInt(2));
    for (const auto& a : sample) {
        if (a.ferm.size() + a.comm.size() > 3) continue;
        for (const auto& v : enumerate(1, HalfInt::from_halves(3))) {
            for (int n = -2; n <= 2; ++n) {
                const State out = vertex_mode(State::basis(a), n, State::basis(v));
                for (const auto& [t, c] : out.terms()) CHECK(weight(t) == weight(a) + weight(v) - HalfInt(n + 1));
            }
        }
    }
}

TEST_CASE("translation operator") {
    CHECK(translate(vac()).is_zero());
    CHECK(translate(monomial_state({}, {boson(Sign::Minus, m12)})) == monomial_state({}, {boson(Sign::Minus, m32)}));
    CHECK(translate(single(psi(Sign::Plus, m32))) == single(psi(Sign::Plus, h(-5))) * Rational(2));

    std::mt19937_64 rng(11);
    const auto pool = enumerate(1, HalfInt(2));
    const auto targets = enumerate(1, HalfInt::from_halves(3));
    for (int trial = 0; trial < 40; ++trial) {
        State a(1);
        for (int t = 0; t < 3; ++t)
            a.add_term(pool[rng() % pool.size()], rat(static_cast<long>(rng() % 7) - 3, static_cast<long>(rng() % 3) + 1));
        const State v = State::basis(targets[rng() % targets.size()]);
        const State ta = translate(a);
        for (int n = -2; n <= 3; ++n) CHECK(vertex_mode(ta, n, v) == vertex_mode(a, n - 1, v) * Rational(-n));
    }
}

TEST_CASE("Borcherds commutator formula on the gl(1|1) generators") {
    const auto gens = gl11_generator_states();
    const auto basis = enumerate(1, HalfInt(3), {Sector::Full, {.total = 0}});
    for (std::size_t ia = 0; ia < gens.size(); ++ia)
        for (std::size_t ib = 0; ib < gens.size(); ++ib) {
            const State& a = gens[ia];
            const State& b = gens[ib];
            std::vector<State> products;  // a(j) b, j >= 0, until zero for good
            for (int j = 0; j <= 3; ++j) products.push_back(vertex_mode(a, j, b));
            for (const auto& bv : basis) {
                const State v = State::basis(bv);
                for (int m = -2; m <= 2; ++m)
                    for (int k = -2; k <= 2; ++k) {
                        State rhs(1);
                        for (int j = 0; j < static_cast<int>(products.size()); ++j)
                            if (!products[static_cast<std::size_t>(j)].is_zero())
                                rhs += vertex_mode(products[static_cast<std::size_t>(j)], m + k - j, v) *
                                       Rational(binomial(m, j));
                        CHECK(super_commutator_modes(a, m, b, k, v) == rhs);
                    }
            }
        }
}
