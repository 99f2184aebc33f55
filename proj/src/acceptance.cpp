#include "ffva/acceptance.hpp"

#include <chrono>
#include <cstdio>
#include <random>
#include <stdexcept>

#include "ffva/errors.hpp"
#include "ffva/fields.hpp"
#include "ffva/parallel.hpp"

namespace ffva {

namespace {

using Clock = std::chrono::steady_clock;

const GenLabel E11{1, 1}, E12{1, 2}, E21{2, 1}, E22{2, 2};

Check equality_check(const std::string& name, const State& lhs, const State& rhs) {
    return Check{name, lhs == rhs, Json{{"lhs", lhs.to_string()}, {"rhs", rhs.to_string()}}, std::nullopt};
}

Rational power(const Rational& x, std::int64_t e) {
    Rational out = 1;
    for (std::int64_t k = 0; k < e; ++k) out *= x;
    return out;
}

Check all_of(const std::string& name, const std::vector<Check>& parts) {
    Check c{name, true, Json::object(), std::nullopt};
    for (const auto& p : parts) {
        c.details[p.name] = p.details;
        c.pass = c.pass && p.pass;
    }
    return c;
}

Check coefficient_check(const std::string& name, const QSeries& s, const std::vector<long>& expected) {
    Check c{name, true, Json::object(), std::nullopt};
    Json rows = Json::array();
    for (std::size_t w = 0; w < expected.size(); ++w) {
        const Rational& got = s[HalfInt(static_cast<std::int64_t>(w))];
        rows.push_back(Json{{"weight", w}, {"coeff", to_json(got)}, {"expected", expected[w]}});
        c.pass = c.pass && got == Rational(expected[w]);
    }
    c.details["coefficients"] = rows;
    return c;
}

/// Enumerated graded dimensions against series coefficients at every half-integer weight.
Check dims_vs_series(const std::string& name, const std::vector<BasisVector>& basis, const QSeries& series) {
    QSeries counts(series.cutoff());
    for (const auto& b : basis) {
        if (weight(b) <= series.cutoff()) counts[weight(b)] += 1;
    }
    Check c{name, counts == series, Json::object(), std::nullopt};
    c.details["enumerated"] = to_json(counts);
    c.details["series"] = to_json(series);
    return c;
}

WhittakerChar seeded_char(std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    return WhittakerChar::random(rng, 1, 2);
}

State super_commutator(const State& a, bool a_odd, std::int64_t m, const State& b, bool b_odd, std::int64_t k,
                       const State& v) {
    const Rational sign = a_odd && b_odd ? 1 : -1;
    return vertex_mode(a, m, vertex_mode(b, k, v)) + vertex_mode(b, k, vertex_mode(a, m, v)) * sign;
}

CriterionResult criterion_1(const AcceptanceOptions& o) {
    RelationOptions opts;
    opts.jobs = o.jobs;
    const RelationReport r = check_relations(HalfInt(5), opts);
    Check c = to_check("relations", r);
    c.details["label_pairs"] = 16;
    c.pass = c.pass && r.cases.size() == 16 * 7 * 7;
    return {1, "relation suite, r,s in [-3,3], weight <= 5", {c}, 0, 180};
}

CriterionResult criterion_2(const AcceptanceOptions&) {
    const State one = State::vacuum();
    const State p_minus = monomial_state({psi(Sign::Minus, h(-1))});
    const State p_plus = monomial_state({psi(Sign::Plus, h(-1))});
    std::vector<Check> checks;
    for (const bool general : {false, true}) {
        const std::string via = general ? "/vertex-operator" : "/mode-formula";
        auto mode = [&](GenLabel l, std::int64_t r, const State& v) {
            return general ? vertex_mode(generator(l), r, v) : gen_mode(l, r, v);
        };
        checks.push_back(equality_check("E12(0)E21=E11+E22" + via, mode(E12, 0, generator(E21)),
                                        generator(E11) + generator(E22)));
        checks.push_back(equality_check("E11(1)E22=-1" + via, mode(E11, 1, generator(E22)), one * Rational(-1)));
        checks.push_back(equality_check("E21(0)psi+=a+" + via, mode(E21, 0, p_plus),
                                        monomial_state({}, {boson(Sign::Plus, h(-1))})));
        checks.push_back(equality_check("E12(0)psi-=a-" + via, mode(E12, 0, p_minus),
                                        monomial_state({}, {boson(Sign::Minus, h(-1))})));
    }
    checks.push_back(to_check("surjectivity-evidence", surjectivity_evidence_check()));
    return {2, "proof micro-identities", checks, 0, 1};
}

CriterionResult criterion_3(const AcceptanceOptions&) {
    const HalfInt n(30);
    const QSeries ct = hp_constant_term(n);
    std::vector<Check> checks;
    checks.push_back(series_equality_check(
        "hp-triple", {{"constant_term", ct}, {"theta_form", hp_theta_form(n)}, {"ramanujan_form", hp_ramanujan_form(n)}}));
    checks.push_back(coefficient_check("leading-coefficients", ct, {1, 1, 3, 6}));
    checks.push_back(dims_vs_series("m0-enumeration", m0_basis(HalfInt(6)), ct.truncated(HalfInt(6))));
    return {3, "character triple identity at order 30", checks, 0, 30};
}

CriterionResult criterion_4(const AcceptanceOptions&) {
    const HalfInt n(8);
    const QSeries enumerated = char_v_enumerated(n);
    std::vector<Check> checks;
    checks.push_back(series_equality_check(
        "character-triple",
        {{"enumerated", enumerated}, {"pbw", char_pbw_gl11(n)}, {"constant_term", char_v_constant_term(n)}}));
    checks.push_back(coefficient_check("leading-values", enumerated, {1, 4, 12}));
    return {4, "character of V at order 8", checks, 0, 120};
}

CriterionResult criterion_5(const AcceptanceOptions& o) {
    const CenterReport r = center_annihilation_check(HalfInt(5), 5, HalfInt(5), o.jobs);
    std::size_t failing_controls = 0;
    for (const auto& c : r.controls) failing_controls += c.pass() ? 1 : 0;
    Check controls{"negative-controls", failing_controls >= 3 && failing_controls == r.controls.size(),
                   Json{{"controls", r.controls.size()}, {"failing_centrality", failing_controls}}, std::nullopt};
    return {5, "center annihilation, weight <= 5, 0 <= r <= 5", {to_check("center", r), controls}, 0, 120};
}

CriterionResult criterion_6(const AcceptanceOptions&) {
    const HalfInt n(6);
    const StrongGenerationReport r = center_strong_generation_check(n);
    const QSeries hp = hp_theta_form(n);
    Check dims{"hp-dims", r.span_dims.size() == 7, Json::object(), std::nullopt};
    Json rows = Json::array();
    for (std::size_t w = 0; w < r.span_dims.size(); ++w) {
        const Rational expect = hp[HalfInt(static_cast<std::int64_t>(w))];
        rows.push_back(Json{{"weight", w}, {"span_dim", r.span_dims[w]}, {"hp", to_json(expect)}});
        dims.pass = dims.pass && Rational(static_cast<long>(r.span_dims[w])) == expect;
    }
    dims.details["rows"] = rows;
    return {6, "strong generation of M_0 through weight 6", {to_check("span-closure", r), dims}, 0, 120};
}

CriterionResult criterion_7(const AcceptanceOptions& o) {
    const std::vector<std::pair<std::string, WhittakerChar>> chis = {
        {"chi-unit", WhittakerChar({{0, 1}}, {{0, 1}})},
        {"chi-seeded", seeded_char(o.seed)},
        {"chi-mixed", WhittakerChar({{1, Rational(3, 7)}}, {{0, Rational(-5, 2)}})},
    };
    RelationOptions opts;
    opts.r_min = opts.s_min = -2;
    opts.r_max = opts.s_max = 2;
    opts.jobs = o.jobs;
    std::vector<Check> checks;
    for (const auto& [label, chi] : chis) {
        Check chi_check{label + "/character", true, to_json(chi), std::nullopt};
        checks.push_back(chi_check);
        checks.push_back(to_check(label + "/relations", check_module_relations(chi, HalfInt(4), opts)));
        checks.push_back(reach_check(label + "/reach", chi, 4));
        checks.push_back(to_check(label + "/cyclicity", cyclicity_check(chi, 2, HalfInt(3))));
        checks.push_back(homogeneity_check(label + "/homogeneity", chi, 4));
    }
    return {7, "Whittaker modules", checks, 0, 180};
}

CriterionResult criterion_8(const AcceptanceOptions& o) {
    std::vector<Check> reductions;
    reductions.push_back(equality_check("j0->-E11", vn_generator(VnKind::Zero, 0, 1), generator(E11) * Rational(-1)));
    reductions.push_back(equality_check("j1->E11+E22", vn_generator(VnKind::One, 0, 1), generator(E11) + generator(E22)));
    reductions.push_back(equality_check("j+->-E12", vn_generator(VnKind::Plus, 0, 1), generator(E12) * Rational(-1)));
    reductions.push_back(equality_check("j-->E21", vn_generator(VnKind::Minus, 0, 1), generator(E21)));
    std::vector<Check> checks{all_of("n1-reductions", reductions)};
    checks.push_back(to_check("n2-strong-generation", strong_generation_check(2, HalfInt(3), o.jobs)));
    checks.push_back(to_check("n2-center", center_vn_check(2, HalfInt(3), 4, o.jobs)));
    return {8, "invariants of V_n, n = 1, 2", checks, 0, 300};
}

CriterionResult criterion_9(const AcceptanceOptions& o) {
    std::vector<Check> checks{vacuum_axioms_check(HalfInt(3)), translation_check(40, o.seed),
                              borcherds_check(HalfInt(4), 2, o.jobs)};
    return {9, "engine self-consistency", checks, 0, 120};
}

}  // namespace

Check reach_check(const std::string& name, const WhittakerChar& chi, std::int64_t bound) {
    Check c{name, true, Json::object(), std::nullopt};
    Json rows = Json::array();
    for (std::int64_t m = -bound; m <= bound; ++m) {
        if (m == 0) continue;
        const Rational lead = m > 0 ? chi.minus(chi.p_minus()) : chi.plus(chi.p_plus());
        const Rational expected = power(lead, m > 0 ? m : -m);
        Json row{{"charge", m}, {"expected_magnitude", to_json(abs(expected))}};
        try {
            const ReachResult r = reach_charge_vector(m, chi);
            row["scalar"] = to_json(r.scalar);
            row["pass"] = abs(r.scalar) == abs(expected);
        } catch (const NotProportional& e) {
            row["error"] = e.what();
            row["pass"] = false;
        }
        c.pass = c.pass && row["pass"].get<bool>();
        rows.push_back(std::move(row));
    }
    c.details["charges"] = rows;
    return c;
}

Check homogeneity_check(const std::string& name, const WhittakerChar& chi, std::int64_t bound) {
    const Rational t(3, 2), u(-2, 5);
    const WhittakerChar scaled = chi.scaled(u, t);
    Check c{name, true, Json{{"t_plus", to_json(u)}, {"t_minus", to_json(t)}}, std::nullopt};
    Json failing = Json::array();
    for (std::int64_t m = -bound; m <= bound; ++m) {
        if (m == 0) continue;
        const Rational factor = m > 0 ? power(t, m) : power(u, -m);
        if (!(reach_charge_vector(m, scaled).state == reach_charge_vector(m, chi).state * factor)) {
            failing.push_back(m);
            c.pass = false;
        }
    }
    c.details["failing_charges"] = failing;
    return c;
}

bool CriterionResult::checks_pass() const {
    for (const auto& c : checks) {
        if (!c.pass) return false;
    }
    return !checks.empty();
}

std::string CriterionResult::line() const {
    char buf[96];
    std::snprintf(buf, sizeof buf, "  (%.2f s, target < %g s%s)", seconds, target_seconds,
                  within_target() ? "" : ", target exceeded");
    return "criterion " + std::to_string(id) + (pass() ? " PASS  " : " FAIL  ") + title + buf;
}

CriterionResult run_criterion(int id, const AcceptanceOptions& options) {
    using Runner = CriterionResult (*)(const AcceptanceOptions&);
    static const Runner runners[kCriterionCount] = {criterion_1, criterion_2, criterion_3, criterion_4, criterion_5,
                                                    criterion_6, criterion_7, criterion_8, criterion_9};
    if (id < 1 || id > kCriterionCount) throw std::out_of_range("no acceptance criterion " + std::to_string(id));
    const auto start = Clock::now();
    CriterionResult r = runners[id - 1](options);
    r.seconds = std::chrono::duration<double>(Clock::now() - start).count();
    return r;
}

Report acceptance_report(const std::vector<CriterionResult>& results, const AcceptanceOptions& options, bool timing) {
    Report report;
    report.command = "acceptance";
    report.config = Json{{"seed", options.seed}};
    double total = 0;
    for (const auto& r : results) {
        const std::string prefix = "criterion-" + std::to_string(r.id);
        Check summary{prefix, r.pass(), Json{{"title", r.title}, {"target_seconds", r.target_seconds}}, std::nullopt};
        if (timing) summary.seconds = r.seconds;
        report.checks.push_back(std::move(summary));
        for (const auto& c : r.checks) {
            Check sub = c;
            sub.name = prefix + "/" + c.name;
            report.checks.push_back(std::move(sub));
        }
        total += r.seconds;
    }
    if (timing) report.seconds = total;
    return report;
}

Check vacuum_axioms_check(HalfInt max_weight, std::int64_t n_max) {
    const State one = State::vacuum();
    std::size_t tested = 0;
    Json failures = Json::array();
    for (const auto& b : enumerate(1, max_weight)) {
        const State a = State::basis(b);
        ++tested;
        if (!(vertex_mode(a, -1, one) == a)) failures.push_back(Json{{"vector", b.to_string()}, {"n", -1}});
        for (std::int64_t n = 0; n <= n_max; ++n) {
            if (!vertex_mode(a, n, one).is_zero()) failures.push_back(Json{{"vector", b.to_string()}, {"n", n}});
        }
    }
    return Check{"vacuum-axioms", failures.empty(),
                 Json{{"max_weight", max_weight.to_string()}, {"vectors", tested}, {"failures", failures}}, std::nullopt};
}

Check translation_check(int samples, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    const auto pool = enumerate(1, HalfInt(2));
    const auto targets = enumerate(1, HalfInt::from_halves(3));
    Json failures = Json::array();
    for (int trial = 0; trial < samples; ++trial) {
        State a(1);
        for (int t = 0; t < 3; ++t) {
            const long num = static_cast<long>(rng() % 7) - 3;
            const long den = static_cast<long>(rng() % 3) + 1;
            Rational c(num, den);
            c.canonicalize();
            a.add_term(pool[rng() % pool.size()], c);
        }
        const State v = State::basis(targets[rng() % targets.size()]);
        const State ta = translate(a);
        for (std::int64_t n = -2; n <= 3; ++n) {
            if (!(vertex_mode(ta, n, v) == vertex_mode(a, n - 1, v) * Rational(-n)) && failures.size() < 10) {
                failures.push_back(Json{{"a", a.to_string()}, {"v", v.to_string()}, {"n", n}});
            }
        }
    }
    return Check{"translation", failures.empty(), Json{{"samples", samples}, {"seed", seed}, {"failures", failures}},
                 std::nullopt};
}

Check borcherds_check(HalfInt max_weight, std::int64_t bound, int jobs) {
    const auto domain = v_basis(max_weight);
    const auto& labels = all_labels();
    struct PairResult {
        std::size_t checks = 0;
        std::optional<Json> witness;
    };
    const auto results = parallel_map(labels.size() * labels.size(), jobs, [&](std::size_t idx) {
        const GenLabel la = labels[idx / labels.size()], lb = labels[idx % labels.size()];
        const State a = generator(la), b = generator(lb);
        // a(j) b has weight 1 - j, so j <= 1 suffices; two more are kept as a guard.
        std::vector<State> products;
        for (int j = 0; j <= 3; ++j) products.push_back(vertex_mode(a, j, b));
        PairResult out;
        for (const auto& bv : domain) {
            const State v = State::basis(bv);
            for (std::int64_t m = -bound; m <= bound; ++m)
                for (std::int64_t k = -bound; k <= bound; ++k) {
                    State rhs(1);
                    for (std::size_t j = 0; j < products.size(); ++j) {
                        if (products[j].is_zero()) continue;
                        rhs += vertex_mode(products[j], m + k - static_cast<std::int64_t>(j), v) *
                               Rational(binomial(static_cast<long>(m), static_cast<long>(j)));
                    }
                    ++out.checks;
                    if (!out.witness && !(super_commutator(a, la.is_odd(), m, b, lb.is_odd(), k, v) == rhs)) {
                        out.witness = Json{{"a", la.to_string()}, {"b", lb.to_string()}, {"m", m}, {"k", k},
                                           {"vector", bv.to_string()}};
                    }
                }
        }
        return out;
    });
    std::size_t checks = 0;
    Json witnesses = Json::array();
    for (const auto& r : results) {
        checks += r.checks;
        if (r.witness) witnesses.push_back(*r.witness);
    }
    return Check{"borcherds", witnesses.empty(),
                 Json{{"max_weight", max_weight.to_string()}, {"mode_bound", bound}, {"domain_size", domain.size()},
                      {"checks", checks}, {"failing_pairs", witnesses}},
                 std::nullopt};
}

}  // namespace ffva
