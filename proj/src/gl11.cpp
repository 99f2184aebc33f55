#include "ffva/gl11.hpp"

#include <map>
#include <stdexcept>
#include <tuple>

#include "ffva/parallel.hpp"

namespace ffva {

const std::array<GenLabel, 4>& all_labels() {
    static const std::array<GenLabel, 4> labels{GenLabel{1, 1}, GenLabel{1, 2}, GenLabel{2, 1}, GenLabel{2, 2}};
    return labels;
}

namespace {

const HalfInt kHalf = HalfInt::half();

State alpha_state() { return monomial_state({psi(Sign::Plus, -kHalf), psi(Sign::Minus, -kHalf)}); }

State boson_pair_state() { return monomial_state({}, {boson(Sign::Plus, -kHalf), boson(Sign::Minus, -kHalf)}); }

// sum_{j>=0} a^{b}(-j-1/2) psi^{f}(r+j+1/2) v; psi^f(x) vanishes on v once x > wt(v).
State mixed_mode(Sign fermion_sign, Sign boson_sign, std::int64_t r, const State& v) {
    State out(v.species_count());
    if (v.is_zero()) return out;
    const std::int64_t j_max = (v.max_weight() - HalfInt(r) - kHalf).floor();
    for (std::int64_t j = 0; j <= j_max; ++j) {
        const HalfInt x = HalfInt(r + j) + kHalf;
        State inner = apply_fermion_mode(FermionMode(1, fermion_sign, x), v);
        if (inner.is_zero()) continue;
        out += apply_boson_mode(BosonMode(1, boson_sign, -HalfInt(j) - kHalf), inner);
    }
    return out;
}

// sum_{j+k=-r-1} a^+(-j-1/2) a^-(-k-1/2) v.
State boson_pair_mode(std::int64_t r, const State& v) {
    State out(v.species_count());
    for (std::int64_t j = 0; j <= -r - 1; ++j) {
        const std::int64_t k = -r - 1 - j;
        State inner = apply_boson_mode(BosonMode(1, Sign::Minus, -HalfInt(k) - kHalf), v);
        out += apply_boson_mode(BosonMode(1, Sign::Plus, -HalfInt(j) - kHalf), inner);
    }
    return out;
}

int delta(int a, int b) { return a == b ? 1 : 0; }

}  // namespace

State generator(GenLabel label) {
    if (label == GenLabel{1, 1}) return alpha_state();
    if (label == GenLabel{1, 2}) return monomial_state({psi(Sign::Plus, -kHalf)}, {boson(Sign::Minus, -kHalf)});
    if (label == GenLabel{2, 1}) return monomial_state({psi(Sign::Minus, -kHalf)}, {boson(Sign::Plus, -kHalf)});
    if (label == GenLabel{2, 2}) return boson_pair_state() - alpha_state();
    throw std::invalid_argument("generator label out of range: " + label.to_string());
}

State gen_mode(GenLabel label, std::int64_t r, const State& v) {
    if (label == GenLabel{1, 1}) return heisenberg_mode(1, r, v);
    if (label == GenLabel{1, 2}) return mixed_mode(Sign::Plus, Sign::Minus, r, v);
    if (label == GenLabel{2, 1}) return mixed_mode(Sign::Minus, Sign::Plus, r, v);
    if (label == GenLabel{2, 2}) return boson_pair_mode(r, v) - heisenberg_mode(1, r, v);
    throw std::invalid_argument("generator label out of range: " + label.to_string());
}

State relation_lhs(const GenModeFn& mode, GenLabel a, GenLabel b, std::int64_t r, std::int64_t s, const State& v) {
    State ab = mode(a, r, mode(b, s, v));
    State ba = mode(b, s, mode(a, r, v));
    return (a.is_odd() && b.is_odd()) ? ab + ba : ab - ba;
}

State relation_rhs(const GenModeFn& mode, GenLabel a, GenLabel b, std::int64_t r, std::int64_t s, const State& v) {
    const auto [i, j] = std::pair{a.i, a.j};
    const auto [k, l] = std::pair{b.i, b.j};
    State out(v.species_count());
    if (k == j) out += mode(GenLabel{i, l}, r + s, v);
    if (i == l) {
        State t = mode(GenLabel{k, j}, r + s, v);
        out += (a.parity() * b.parity() % 2 == 0) ? -t : t;
    }
    if (r + s == 0 && delta(i, j) * delta(k, l) != 0 && r != 0) {
        const int sign = (GenLabel::parity_of(i) + GenLabel::parity_of(k)) % 2 == 0 ? 1 : -1;
        out += v * Rational(sign * r);
    }
    return out;
}

std::size_t RelationReport::checks() const {
    std::size_t n = 0;
    for (const auto& c : cases) n += c.vectors;
    return n;
}

std::size_t RelationReport::failures() const {
    std::size_t n = 0;
    for (const auto& c : cases) n += c.pass() ? 0 : 1;
    return n;
}

RelationReport check_relations_on(const GenModeFn& mode, const std::vector<BasisVector>& domain, int species_count,
                                  const RelationOptions& options) {
    struct Case {
        GenLabel a, b;
        std::int64_t r, s;
    };
    std::vector<Case> cases;
    for (const auto& a : all_labels()) {
        for (const auto& b : all_labels()) {
            for (std::int64_t r = options.r_min; r <= options.r_max; ++r) {
                for (std::int64_t s = options.s_min; s <= options.s_max; ++s) cases.push_back({a, b, r, s});
            }
        }
    }

    // Per domain vector: first-level images are shared by all cases.
    using Failures = std::vector<std::pair<std::size_t, RelationWitness>>;
    auto per_vector = [&](std::size_t idx) {
        const State v = State::basis(domain[idx], species_count);
        std::map<std::pair<GenLabel, std::int64_t>, State> cache;
        GenModeFn cached = [&](GenLabel g, std::int64_t t, const State& x) -> State {
            if (&x != &v) return mode(g, t, x);
            auto [it, inserted] = cache.try_emplace({g, t}, species_count);
            if (inserted) it->second = mode(g, t, v);
            return it->second;
        };
        Failures failures;
        for (std::size_t c = 0; c < cases.size(); ++c) {
            const auto& cs = cases[c];
            State ab = mode(cs.a, cs.r, cached(cs.b, cs.s, v));
            State ba = mode(cs.b, cs.s, cached(cs.a, cs.r, v));
            State lhs = (cs.a.is_odd() && cs.b.is_odd()) ? ab + ba : ab - ba;
            State rhs = relation_rhs(cached, cs.a, cs.b, cs.r, cs.s, v);
            if (lhs != rhs) failures.emplace_back(c, RelationWitness{domain[idx], std::move(lhs), std::move(rhs)});
        }
        return failures;
    };
    const auto results = parallel_map(domain.size(), options.jobs, per_vector);

    RelationReport report;
    report.domain_size = domain.size();
    for (const auto& cs : cases) report.cases.push_back(RelationCase{cs.a, cs.b, cs.r, cs.s, domain.size(), std::nullopt});
    for (const auto& failures : results) {
        for (const auto& [c, w] : failures) {
            if (!report.cases[c].witness) report.cases[c].witness = w;
        }
    }
    return report;
}

std::vector<BasisVector> v_basis(HalfInt max_weight) {
    EnumerateOptions opt;
    opt.sector = Sector::Full;
    opt.charge.total = 0;
    return enumerate(1, max_weight, opt);
}

std::vector<BasisVector> m0_basis(HalfInt max_weight) {
    EnumerateOptions opt;
    opt.sector = Sector::Bosonic;
    opt.charge.bosonic = 0;
    return enumerate(1, max_weight, opt);
}

RelationReport check_relations(HalfInt max_weight, const RelationOptions& options) {
    return check_relations_on(gen_mode, v_basis(max_weight), 1, options);
}

namespace {

std::optional<AnnihilationFailure> first_nonzero_mode(const State& w, std::int64_t r_max) {
    for (const auto& g : all_labels()) {
        for (std::int64_t r = 0; r <= r_max; ++r) {
            State img = gen_mode(g, r, w);
            if (!img.is_zero()) {
                const BasisVector lead = w.terms().empty() ? BasisVector{} : w.terms().begin()->first;
                return AnnihilationFailure{lead, g, r, std::move(img)};
            }
        }
    }
    return std::nullopt;
}

KernelLevel kernel_level(HalfInt w, const std::vector<BasisVector>& v_level, const std::vector<BasisVector>& m0_level,
                         std::int64_t r_max) {
    KernelLevel level;
    level.weight = w;
    level.v_dim = v_level.size();
    level.m0_dim = m0_level.size();
    // One matrix row per (label, r, image basis vector); columns index v_level.
    std::map<std::tuple<GenLabel, std::int64_t, BasisVector>, std::map<std::size_t, Rational>> rows;
    for (std::size_t col = 0; col < v_level.size(); ++col) {
        const State b = State::basis(v_level[col]);
        for (const auto& g : all_labels()) {
            for (std::int64_t r = 0; r <= r_max; ++r) {
                const State img = gen_mode(g, r, b);
                for (const auto& [u, c] : img.terms()) rows[{g, r, u}].emplace(col, c);
            }
        }
    }
    std::vector<std::map<std::size_t, Rational>> matrix;
    matrix.reserve(rows.size());
    for (auto& [key, row] : rows) matrix.push_back(std::move(row));
    const auto kernel = nullspace(matrix, v_level.size());
    level.kernel_dim = kernel.size();

    SparseEchelon<BasisVector> ech;
    for (const auto& x : kernel) {
        std::map<BasisVector, Rational> row;
        for (const auto& [col, c] : x) row.emplace(v_level[col], c);
        ech.insert(row);
    }
    for (const auto& m : m0_level) {
        if (!ech.contains({{m, Rational(1)}})) level.m0_contained = false;
    }
    return level;
}

}  // namespace

bool CenterReport::pass() const {
    if (!failures.empty()) return false;
    for (const auto& k : kernel) {
        if (!k.pass()) return false;
    }
    for (const auto& c : controls) {
        if (!c.pass()) return false;
    }
    return true;
}

std::vector<State> default_center_controls() {
    return {
        generator(GenLabel{1, 2}),
        generator(GenLabel{2, 1}),
        generator(GenLabel{1, 1}),
        generator(GenLabel{2, 2}),
        monomial_state({psi(Sign::Plus, -HalfInt::from_halves(3)), psi(Sign::Minus, -kHalf)}),
        monomial_state({psi(Sign::Plus, -kHalf)}, {boson(Sign::Minus, -HalfInt::from_halves(3))}),
    };
}

CenterReport center_annihilation_check(HalfInt max_weight, std::int64_t r_max, HalfInt kernel_weight, int jobs) {
    CenterReport report;
    report.max_weight = max_weight;
    report.r_max = r_max;

    const auto m0 = m0_basis(max_weight);
    report.vectors_checked = m0.size();
    auto found = parallel_map(m0.size(), jobs, [&](std::size_t i) { return first_nonzero_mode(State::basis(m0[i]), r_max); });
    for (auto& f : found) {
        if (f) report.failures.push_back(std::move(*f));
    }

    const auto v_all = v_basis(kernel_weight);
    const auto m0_all = m0_basis(kernel_weight);
    std::vector<HalfInt> weights;
    for (std::int64_t h = 0; h <= kernel_weight.halves(); h += 2) weights.push_back(HalfInt::from_halves(h));
    report.kernel = parallel_map(weights.size(), jobs, [&](std::size_t i) {
        std::vector<BasisVector> vl, ml;
        for (const auto& b : v_all) {
            if (weight(b) == weights[i]) vl.push_back(b);
        }
        for (const auto& b : m0_all) {
            if (weight(b) == weights[i]) ml.push_back(b);
        }
        return kernel_level(weights[i], vl, ml, r_max);
    });

    for (const auto& c : default_center_controls()) {
        NegativeControl control{c, c.to_string(), first_nonzero_mode(c, r_max)};
        report.controls.push_back(std::move(control));
    }
    return report;
}

std::vector<State> m0_generators(HalfInt max_weight) {
    std::vector<State> out;
    for (std::int64_t m = 0; HalfInt(m + 1) <= max_weight; ++m) {
        out.push_back(monomial_state({}, {boson(Sign::Plus, -kHalf), boson(Sign::Minus, -HalfInt(m) - kHalf)}));
    }
    return out;
}

StrongGenerationReport center_strong_generation_check(HalfInt max_weight) {
    const GradedSubspace span = span_closure(m0_generators(max_weight), max_weight, 1);
    const GradedSubspace m0 = coordinate_subspace(m0_basis(max_weight), max_weight, 1);
    const SubspaceComparison cmp = compare_subspaces(span, m0);
    StrongGenerationReport report;
    report.span_dims = span.integer_dims();
    report.expected_dims = m0.integer_dims();
    report.contained = cmp.left_contained_in_right;
    return report;
}

QSeries char_v_enumerated(HalfInt max_weight) {
    QSeries out(max_weight);
    for (const auto& b : v_basis(max_weight)) out[weight(b)] += 1;
    return out;
}

SurjectivityReport surjectivity_evidence_check() {
    SurjectivityReport r;
    r.e21_lhs = gen_mode(GenLabel{2, 1}, 0, monomial_state({psi(Sign::Plus, -kHalf)}));
    r.e21_rhs = monomial_state({}, {boson(Sign::Plus, -kHalf)});
    r.e12_lhs = gen_mode(GenLabel{1, 2}, 0, monomial_state({psi(Sign::Minus, -kHalf)}));
    r.e12_rhs = monomial_state({}, {boson(Sign::Minus, -kHalf)});
    return r;
}

}  // namespace ffva
