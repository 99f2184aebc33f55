#include "ffva/whittaker.hpp"

#include <algorithm>
#include <deque>

#include "ffva/errors.hpp"
#include "ffva/parallel.hpp"

namespace ffva {

namespace {

WhittakerChar::Coeffs drop_zeros(WhittakerChar::Coeffs c) {
    std::erase_if(c, [](const auto& kv) { return sgn(kv.second) == 0; });
    return c;
}

Rational lookup(const WhittakerChar::Coeffs& c, std::int64_t k) {
    auto it = c.find(k);
    return it == c.end() ? Rational(0) : it->second;
}

void require_fermionic(const State& v) {
    for (const auto& [b, c] : v.terms()) {
        if (!b.comm.empty()) throw std::invalid_argument("Whittaker modes act on F; state has bosonic factors");
    }
}

// sum_k chi_k psi^sign(n - 1/2 - k) v
State chi_psi_mode(Sign sign, const WhittakerChar::Coeffs& chi, std::int64_t n, const State& v) {
    State out(v.species_count());
    for (const auto& [k, c] : chi) {
        State t = apply_fermion_mode(FermionMode(1, sign, HalfInt(n - k) - HalfInt::half()), v);
        if (!t.is_zero()) out += t * c;
    }
    return out;
}

}  // namespace

WhittakerChar::WhittakerChar(Coeffs chi_plus, Coeffs chi_minus)
    : plus_(drop_zeros(std::move(chi_plus))), minus_(drop_zeros(std::move(chi_minus))) {
    if (plus_.empty() || minus_.empty()) throw EmptyCharacter();
}

Rational WhittakerChar::plus(std::int64_t k) const { return lookup(plus_, k); }
Rational WhittakerChar::minus(std::int64_t k) const { return lookup(minus_, k); }

Rational WhittakerChar::c(std::int64_t n) const {
    Rational out = 0;
    for (const auto& [p, x] : plus_) out += x * minus(n - 1 - p);
    return out;
}

WhittakerChar WhittakerChar::scaled(const Rational& t_plus, const Rational& t_minus) const {
    Coeffs p = plus_, m = minus_;
    for (auto& [k, x] : p) x *= t_plus;
    for (auto& [k, x] : m) x *= t_minus;
    return WhittakerChar(std::move(p), std::move(m));
}

WhittakerChar WhittakerChar::random(std::mt19937_64& rng, std::int64_t p_plus, std::int64_t p_minus, int span) {
    std::uniform_int_distribution<long> num(-5, 5), den(1, 4);
    auto side = [&](std::int64_t p) {
        Coeffs c;
        for (std::int64_t k = p - span; k <= p; ++k) {
            long a = num(rng);
            if (a == 0) a = 1;
            Rational x(a, den(rng));
            x.canonicalize();
            c.emplace(k, x);
        }
        return c;
    };
    Coeffs plus = side(p_plus);
    Coeffs minus = side(p_minus);
    return WhittakerChar(std::move(plus), std::move(minus));
}

State w_gen_mode(GenLabel label, std::int64_t n, const State& v, const WhittakerChar& chi) {
    require_fermionic(v);
    if (label == GenLabel{1, 1}) return heisenberg_mode(1, n, v);
    if (label == GenLabel{1, 2}) return chi_psi_mode(Sign::Plus, chi.chi_minus(), n, v);
    if (label == GenLabel{2, 1}) return chi_psi_mode(Sign::Minus, chi.chi_plus(), n, v);
    if (label == GenLabel{2, 2}) return v * chi.c(n) - heisenberg_mode(1, n, v);
    throw std::invalid_argument("generator label out of range: " + label.to_string());
}

GenModeFn whittaker_mode_fn(const WhittakerChar& chi) {
    return [chi](GenLabel g, std::int64_t n, const State& v) { return w_gen_mode(g, n, v, chi); };
}

ReachResult reach_charge_vector(std::int64_t m, const WhittakerChar& chi) {
    if (m == 0) throw std::invalid_argument("reach_charge_vector needs m != 0");
    const GenLabel label = m > 0 ? GenLabel{1, 2} : GenLabel{2, 1};
    const std::int64_t p = m > 0 ? chi.p_minus() : chi.p_plus();
    const std::int64_t count = m > 0 ? m : -m;
    State s = State::vacuum();
    for (std::int64_t t = 0; t < count; ++t) s = w_gen_mode(label, p - t, s, chi);

    ReachResult out;
    out.target = lowest_charge_vector(static_cast<int>(m));
    out.scalar = s.coefficient(out.target);
    if (s.size() != 1 || sgn(out.scalar) == 0) {
        throw NotProportional("E-string for m = " + std::to_string(m) + " gave " + s.to_string());
    }
    out.state = std::move(s);
    return out;
}

std::vector<BasisVector> f_basis(HalfInt max_weight) {
    EnumerateOptions opt;
    opt.sector = Sector::Fermionic;
    return enumerate(1, max_weight, opt);
}

RelationReport check_module_relations(const WhittakerChar& chi, HalfInt max_weight, const RelationOptions& options) {
    return check_relations_on(whittaker_mode_fn(chi), f_basis(max_weight), 1, options);
}

bool CyclicityReport::pass() const {
    return std::all_of(charges.begin(), charges.end(), [](const ChargeSpan& c) { return c.pass(); });
}

CyclicityReport cyclicity_check(const WhittakerChar& chi, std::int64_t charge_bound, HalfInt weight_bound) {
    CyclicityReport report;
    for (std::int64_t l = -charge_bound; l <= charge_bound; ++l) {
        ChargeSpan cs;
        cs.charge = l;
        State start = State::vacuum();
        if (l == 0) {
            cs.reached = true;
            cs.scalar = 1;
        } else {
            try {
                ReachResult r = reach_charge_vector(l, chi);
                cs.reached = true;
                cs.scalar = r.scalar;
                start = State::basis(r.target);
            } catch (const NotProportional&) {
                cs.reached = false;
            }
        }

        // Heisenberg closure graded by weight: level W is spanned by alpha(-k) w, w at level W - k.
        std::map<HalfInt, std::vector<State>> levels;
        const HalfInt w0 = weight(lowest_charge_vector(static_cast<int>(l)));
        if (cs.reached && w0 <= weight_bound) levels[w0].push_back(start);
        for (HalfInt w = w0 + HalfInt(1); w <= weight_bound; w += HalfInt(1)) {
            SparseEchelon<BasisVector> ech;
            std::vector<State> span;
            for (std::int64_t k = 1; w - HalfInt(k) >= w0; ++k) {
                auto it = levels.find(w - HalfInt(k));
                if (it == levels.end()) continue;
                for (const auto& x : it->second) {
                    State y = heisenberg_mode(1, -k, x);
                    if (!y.is_zero() && ech.insert(as_row(y))) span.push_back(std::move(y));
                }
            }
            if (!span.empty()) levels[w] = std::move(span);
        }

        EnumerateOptions opt;
        opt.sector = Sector::Fermionic;
        opt.charge.fermionic = static_cast<int>(l);
        std::vector<std::size_t> expected(static_cast<std::size_t>(weight_bound.halves() + 1), 0);
        for (const auto& b : enumerate(1, weight_bound, opt)) ++expected[static_cast<std::size_t>(weight(b).halves())];
        std::vector<std::size_t> got(expected.size(), 0);
        for (const auto& [w, vs] : levels) got[static_cast<std::size_t>(w.halves())] = vs.size();
        cs.span_dims = std::move(got);
        cs.expected_dims = std::move(expected);
        report.charges.push_back(std::move(cs));
    }
    return report;
}

SubmoduleTrial submodule_closure(const State& start, const WhittakerChar& chi, HalfInt weight_bound) {
    SubmoduleTrial trial;
    trial.start = start;
    const std::int64_t window = weight_bound.floor() + std::max(chi.p_plus(), chi.p_minus()) + 1;

    SparseEchelon<BasisVector> ech;
    std::deque<State> queue;
    if (!start.is_zero() && start.max_weight() <= weight_bound && ech.insert(as_row(start))) queue.push_back(start);
    while (!queue.empty()) {
        const State x = std::move(queue.front());
        queue.pop_front();
        for (const auto& g : all_labels()) {
            for (std::int64_t n = -window; n <= window; ++n) {
                State y = w_gen_mode(g, n, x, chi);
                if (y.is_zero() || y.max_weight() > weight_bound) continue;
                if (ech.insert(as_row(y))) queue.push_back(std::move(y));
            }
        }
    }
    trial.span_dim = ech.rank();
    for (std::int64_t l = -2 * weight_bound.floor() - 1; l <= 2 * weight_bound.floor() + 1; ++l) {
        const BasisVector e = lowest_charge_vector(static_cast<int>(l));
        if (weight(e) > weight_bound) continue;
        if (ech.contains({{e, Rational(1)}})) trial.reached_charges.push_back(l);
    }
    return trial;
}

bool SubmoduleReport::pass() const {
    return !trials.empty() && std::all_of(trials.begin(), trials.end(), [](const SubmoduleTrial& t) { return t.pass(); });
}

State random_f_state(std::mt19937_64& rng, HalfInt max_weight) {
    const auto basis = f_basis(max_weight);
    std::uniform_int_distribution<std::size_t> pick(0, basis.size() - 1);
    std::uniform_int_distribution<long> num(-4, 4), den(1, 3), terms(1, 3);
    State s;
    while (s.is_zero()) {
        const long t = terms(rng);
        for (long i = 0; i < t; ++i) {
            Rational c(num(rng), den(rng));
            c.canonicalize();
            s.add_term(basis[pick(rng)], c);
        }
    }
    return s;
}

SubmoduleReport submodule_evidence_check(const WhittakerChar& chi, int trials, HalfInt weight_bound, std::uint64_t seed,
                                         int jobs) {
    SubmoduleReport report;
    report.weight_bound = weight_bound;
    report.window = weight_bound.floor() + std::max(chi.p_plus(), chi.p_minus()) + 1;
    std::mt19937_64 rng(seed);
    std::vector<State> starts;
    for (int t = 0; t < trials; ++t) starts.push_back(random_f_state(rng, weight_bound));
    report.trials = parallel_map(starts.size(), jobs, [&](std::size_t i) { return submodule_closure(starts[i], chi, weight_bound); });
    return report;
}

}  // namespace ffva
