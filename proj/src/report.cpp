#include "ffva/report.hpp"

#include <algorithm>
#include <sstream>

namespace ffva {

bool Report::pass() const {
    return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
}

Json Report::to_json() const {
    std::vector<const Check*> sorted;
    for (const auto& c : checks) sorted.push_back(&c);
    std::stable_sort(sorted.begin(), sorted.end(), [](const Check* a, const Check* b) { return a->name < b->name; });

    Json list = Json::array();
    std::size_t passed = 0;
    for (const Check* c : sorted) {
        Json j{{"name", c->name}, {"pass", c->pass}, {"details", c->details}};
        if (c->seconds) j["seconds"] = *c->seconds;
        list.push_back(std::move(j));
        passed += c->pass ? 1 : 0;
    }
    Json out{{"schema_version", kReportSchemaVersion},
             {"command", command},
             {"config", config},
             {"pass", pass()},
             {"summary", {{"checks", checks.size()}, {"passed", passed}, {"failed", checks.size() - passed}}},
             {"checks", list}};
    if (seconds) out["seconds"] = *seconds;
    return out;
}

std::string Report::to_text() const {
    std::ostringstream out;
    std::vector<const Check*> sorted;
    for (const auto& c : checks) sorted.push_back(&c);
    std::stable_sort(sorted.begin(), sorted.end(), [](const Check* a, const Check* b) { return a->name < b->name; });
    for (const Check* c : sorted) {
        out << (c->pass ? "PASS " : "FAIL ") << c->name;
        if (c->seconds) out << "  (" << *c->seconds << " s)";
        out << '\n';
    }
    out << (pass() ? "all checks passed" : "some checks FAILED") << '\n';
    return out.str();
}

Json dims_json(const std::vector<std::size_t>& dims) {
    Json out = Json::array();
    for (auto d : dims) out.push_back(d);
    return out;
}

namespace {

Json witness_json(const BasisVector& v, const State& lhs, const State& rhs) {
    return Json{{"vector", v.to_string()}, {"lhs", lhs.to_string()}, {"rhs", rhs.to_string()}};
}

}  // namespace

Check to_check(const std::string& name, const RelationReport& r, std::size_t max_witnesses) {
    Check c{name, r.pass(), Json::object(), std::nullopt};
    c.details["cases"] = r.cases.size();
    c.details["domain_size"] = r.domain_size;
    c.details["operator_checks"] = r.checks();
    c.details["failed_cases"] = r.failures();
    Json witnesses = Json::array();
    for (const auto& cs : r.cases) {
        if (cs.pass() || witnesses.size() >= max_witnesses) continue;
        Json w{{"a", cs.a.to_string()}, {"b", cs.b.to_string()}, {"r", cs.r}, {"s", cs.s}};
        w["witness"] = witness_json(cs.witness->vector, cs.witness->lhs, cs.witness->rhs);
        witnesses.push_back(std::move(w));
    }
    c.details["witnesses"] = witnesses;
    return c;
}

Check to_check(const std::string& name, const CenterReport& r, std::size_t max_witnesses) {
    Check c{name, r.pass(), Json::object(), std::nullopt};
    c.details["max_weight"] = r.max_weight.to_string();
    c.details["r_max"] = r.r_max;
    c.details["m0_vectors_checked"] = r.vectors_checked;
    Json failures = Json::array();
    for (const auto& f : r.failures) {
        if (failures.size() >= max_witnesses) break;
        failures.push_back(Json{{"vector", f.vector.to_string()}, {"label", f.label.to_string()}, {"r", f.r},
                                {"image", f.image.to_string()}});
    }
    c.details["annihilation_failures"] = r.failures.size();
    c.details["failure_witnesses"] = failures;
    Json kernel = Json::array();
    for (const auto& k : r.kernel) {
        kernel.push_back(Json{{"weight", k.weight.to_string()}, {"v_dim", k.v_dim}, {"kernel_dim", k.kernel_dim},
                              {"m0_dim", k.m0_dim}, {"m0_contained", k.m0_contained}, {"pass", k.pass()}});
    }
    c.details["joint_kernel"] = kernel;
    Json controls = Json::array();
    for (const auto& n : r.controls) {
        Json j{{"vector", n.description}, {"fails_centrality", n.pass()}};
        if (n.witness) j["moved_by"] = n.witness->label.to_string() + "(" + std::to_string(n.witness->r) + ")";
        controls.push_back(std::move(j));
    }
    c.details["negative_controls"] = controls;
    return c;
}

Check to_check(const std::string& name, const StrongGenerationReport& r) {
    Check c{name, r.pass(), Json::object(), std::nullopt};
    c.details["span_dims"] = dims_json(r.span_dims);
    c.details["enumerated_dims"] = dims_json(r.expected_dims);
    c.details["span_contained"] = r.contained;
    return c;
}

Check to_check(const std::string& name, const SurjectivityReport& r) {
    Check c{name, r.pass(), Json::object(), std::nullopt};
    c.details["E21(0)psi+(-1/2)|0>"] = Json{{"lhs", r.e21_lhs.to_string()}, {"rhs", r.e21_rhs.to_string()}, {"equal", r.first()}};
    c.details["E12(0)psi-(-1/2)|0>"] = Json{{"lhs", r.e12_lhs.to_string()}, {"rhs", r.e12_rhs.to_string()}, {"equal", r.second()}};
    return c;
}

Check to_check(const std::string& name, const CyclicityReport& r) {
    Check c{name, r.pass(), Json::object(), std::nullopt};
    Json charges = Json::array();
    for (const auto& cs : r.charges) {
        charges.push_back(Json{{"charge", cs.charge},
                               {"reached", cs.reached},
                               {"scalar", to_json(cs.scalar)},
                               {"span_dims", dims_json(cs.span_dims)},
                               {"enumerated_dims", dims_json(cs.expected_dims)},
                               {"pass", cs.pass()}});
    }
    c.details["charges"] = charges;
    return c;
}

Check to_check(const std::string& name, const SubmoduleReport& r) {
    Check c{name, r.pass(), Json::object(), std::nullopt};
    c.details["evidence"] = "bounded: closure truncated at the weight bound, not a proof";
    c.details["weight_bound"] = r.weight_bound.to_string();
    c.details["mode_window"] = r.window;
    Json trials = Json::array();
    for (const auto& t : r.trials) {
        Json reached = Json::array();
        for (auto l : t.reached_charges) reached.push_back(l);
        trials.push_back(Json{{"start", t.start.to_string()}, {"span_dim", t.span_dim}, {"reached_charges", reached},
                              {"pass", t.pass()}});
    }
    c.details["trials"] = trials;
    return c;
}

Check to_check(const std::string& name, const SpanCheck& r) {
    Check c{name, r.pass(), Json::object(), std::nullopt};
    c.details["span_dims"] = dims_json(r.span_dims);
    c.details["fixed_space_dims"] = dims_json(r.expected_dims);
    c.details["span_contained"] = r.contained;
    return c;
}

Check to_check(const std::string& name, const VnCenterReport& r, std::size_t max_witnesses) {
    Check c{name, r.pass(), Json::object(), std::nullopt};
    c.details["n"] = r.n;
    c.details["max_weight"] = r.max_weight.to_string();
    c.details["r_max"] = r.r_max;
    c.details["candidate_dims"] = dims_json(r.candidate_dims);
    Json failures = Json::array();
    for (const auto& f : r.failures) {
        if (failures.size() >= max_witnesses) break;
        failures.push_back(Json{{"vector", f.vector.to_string()}, {"generator", f.generator}, {"r", f.r},
                                {"image", f.image.to_string()}});
    }
    c.details["centrality_failures"] = r.failures.size();
    c.details["failure_witnesses"] = failures;
    Json kernel = Json::array();
    for (const auto& k : r.kernel) {
        kernel.push_back(Json{{"weight", k.weight.to_string()}, {"vn_dim", k.vn_dim}, {"kernel_dim", k.kernel_dim},
                              {"candidate_dim", k.candidate_dim}, {"candidate_contained", k.candidate_contained},
                              {"pass", k.pass()}});
    }
    c.details["joint_kernel"] = kernel;
    Json controls = Json::array();
    for (const auto& n : r.controls) {
        Json j{{"vector", n.description}, {"fails_centrality", n.pass()}};
        if (n.witness) j["moved_by"] = "generator " + std::to_string(n.witness->generator) + ", r = " + std::to_string(n.witness->r);
        controls.push_back(std::move(j));
    }
    c.details["negative_controls"] = controls;
    return c;
}

Check to_check(const std::string& name, const std::vector<DecouplingEntry>& r) {
    Check c{name, !r.empty(), Json::object(), std::nullopt};
    Json entries = Json::array();
    for (const auto& e : r) {
        entries.push_back(Json{{"k", e.k}, {"in_span", e.in_span}});
        c.pass = c.pass && e.in_span;
    }
    c.details["entries"] = entries;
    return c;
}

Check series_equality_check(const std::string& name, const std::vector<std::pair<std::string, QSeries>>& rows) {
    Check c{name, true, Json::object(), std::nullopt};
    HalfInt common = rows.empty() ? HalfInt(0) : rows.front().second.cutoff();
    for (const auto& [label, s] : rows) common = std::min(common, s.cutoff());
    Json series = Json::object();
    for (const auto& [label, s] : rows) {
        series[label] = to_json(s.truncated(common));
        if (!s.equals_up_to(rows.front().second, common)) c.pass = false;
    }
    c.details["cutoff"] = common.to_string();
    c.details["series"] = series;
    return c;
}

}  // namespace ffva
