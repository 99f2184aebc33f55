#include "doctest.h"
#include "ffva/acceptance.hpp"
#include "test_util.hpp"

using namespace ffva;

namespace {

const HalfInt m12 = h(-1), m32 = h(-3);

}  // namespace

TEST_CASE("rationals and half-integers as strings") {
    CHECK(to_json(rat(-3, 4)) == Json("-3/4"));
    CHECK(to_json(Rational(5)) == Json("5"));
    CHECK(rational_from_json(Json("6/8")) == rat(3, 4));
    CHECK(rational_from_json(Json(7)) == Rational(7));
    CHECK_THROWS(rational_from_json(Json(0.5)));
    CHECK(to_json(h(-3)) == Json("-3/2"));
    CHECK(halfint_from_json(Json("5/2")) == h(5));
    CHECK_THROWS(halfint_from_json(Json("1/3")));
}

TEST_CASE("basis vectors and states round-trip") {
    for (const auto& b : enumerate(2, HalfInt(2))) {
        CHECK(basis_vector_from_json(to_json(b)) == b);
        CHECK(basis_vector_from_json(Json::parse(to_json(b).dump())) == b);
    }
    State s = monomial_state({psi(Sign::Plus, m32), psi(Sign::Minus, m12, 2)}, {boson(Sign::Plus, m12)}, 2) * rat(-2, 3);
    s += State::vacuum(2) * rat(1, 5);
    const Json j = to_json(s);
    CHECK(j["species"] == 2);
    CHECK(state_from_json(j) == s);
    CHECK(state_from_json(Json::parse(j.dump())) == s);
}

TEST_CASE("state parsing rejects bad input") {
    // psi^-(-1/2) psi^+(-1/2) is not in canonical order
    const Json swapped = Json::parse(R"({"species": 1, "terms": [{"vector": {"ferm": [
        {"species": 1, "sign": "-", "index": "-1/2"}, {"species": 1, "sign": "+", "index": "-1/2"}], "comm": []},
        "coeff": "1"}]})");
    CHECK_THROWS(state_from_json(swapped));
    const Json repeated = Json::parse(R"({"species": 1, "terms": [{"vector": {"ferm": [
        {"species": 1, "sign": "+", "index": "-1/2"}, {"species": 1, "sign": "+", "index": "-1/2"}]}, "coeff": "1"}]})");
    CHECK_THROWS(state_from_json(repeated));
    const Json foreign = Json::parse(R"({"species": 1, "terms": [{"vector": {"comm": [
        {"species": 2, "sign": "+", "index": "-1/2"}]}, "coeff": "1"}]})");
    CHECK_THROWS(state_from_json(foreign));
    const Json bad_sign = Json::parse(R"({"terms": [{"vector": {"comm": [
        {"species": 1, "sign": "*", "index": "-1/2"}]}, "coeff": "1"}]})");
    CHECK_THROWS(state_from_json(bad_sign));
}

TEST_CASE("q-series: JSON and CSV carry identical numbers") {
    QSeries s = hp_theta_form(HalfInt(12));
    s[h(3)] = rat(-7, 3);
    const QSeries from_json = qseries_from_json(Json::parse(to_json(s).dump()));
    const QSeries from_csv = qseries_from_csv(to_csv(s));
    CHECK(from_json == s);
    CHECK(from_csv == s);
    CHECK(to_json(s)["coeffs"]["3/2"] == Json("-7/3"));
    CHECK(to_json(s)["cutoff"] == Json("12"));
    const std::string csv = to_csv(s);
    CHECK(csv.rfind("exponent,numerator,denominator\n0,1,1\n", 0) == 0);
    CHECK(csv.find("\n3/2,-7,3\n") != std::string::npos);
    CHECK_THROWS(qseries_from_csv("exp,num,den\n0,1,1\n"));
    CHECK_THROWS(qseries_from_json(Json::parse(R"({"cutoff": "1", "coeffs": {"2": "1"}})")));
}

TEST_CASE("Whittaker characters round-trip") {
    const Json j = Json::parse(R"({"chi_plus": {"0": "1", "-2": "3/4"}, "chi_minus": {"1": "2"}})");
    const WhittakerChar chi = whittaker_char_from_json(j);
    CHECK(chi.plus(-2) == rat(3, 4));
    CHECK(chi.minus(1) == Rational(2));
    CHECK(chi.p_plus() == 0);
    CHECK(whittaker_char_from_json(to_json(chi)) == chi);
    CHECK_THROWS(whittaker_char_from_json(Json::parse(R"({"chi_plus": {}, "chi_minus": {"0": "1"}})")));
    CHECK_THROWS(whittaker_char_from_json(Json::parse(R"({"chi_plus": {"x": "1"}, "chi_minus": {"0": "1"}})")));
}

TEST_CASE("reports sort checks and count passes") {
    Report r{"demo", Json{{"k", 1}}, {}, std::nullopt};
    r.checks.push_back(Check{"zeta", true, Json::object(), std::nullopt});
    r.checks.push_back(Check{"alpha", false, Json{{"why", "x"}}, std::nullopt});
    CHECK_FALSE(r.pass());
    const Json j = r.to_json();
    CHECK(j["schema_version"] == kReportSchemaVersion);
    CHECK(j["checks"][0]["name"] == "alpha");
    CHECK(j["checks"][1]["name"] == "zeta");
    CHECK(j["summary"]["passed"] == 1);
    CHECK(j["summary"]["failed"] == 1);
    CHECK_FALSE(j.contains("seconds"));
    CHECK_FALSE(j["checks"][0].contains("seconds"));
    CHECK(r.to_text() == "FAIL alpha\nPASS zeta\nsome checks FAILED\n");
    r.seconds = 1.5;
    CHECK(r.to_json()["seconds"] == 1.5);
    r.checks[1].pass = true;
    CHECK(r.pass());
    CHECK(Report{}.pass());
}

TEST_CASE("embedded schema") {
    const Json schema = Json::parse(report_schema());
    CHECK(schema["properties"]["schema_version"]["const"] == kReportSchemaVersion);
    for (const char* key : {"schema_version", "command", "config", "pass", "summary", "checks"}) {
        bool found = false;
        for (const auto& k : schema["required"]) found = found || k == key;
        CHECK_MESSAGE(found, key);
    }
}

TEST_CASE("series equality check uses the common cutoff") {
    const Check ok = series_equality_check("hp", {{"a", hp_theta_form(HalfInt(8))}, {"b", hp_constant_term(HalfInt(6))}});
    CHECK(ok.pass);
    CHECK(ok.details["cutoff"] == "6");
    QSeries off = hp_theta_form(HalfInt(6));
    off[HalfInt(6)] += 1;
    CHECK_FALSE(series_equality_check("hp", {{"a", hp_theta_form(HalfInt(6))}, {"b", off}}).pass);
}

TEST_CASE("converters carry witnesses of failures") {
    RelationOptions opt;
    opt.r_min = opt.s_min = -1;
    opt.r_max = opt.s_max = 1;
    GenModeFn wrong = [](GenLabel l, std::int64_t r, const State& v) {
        const State out = gen_mode(l, r, v);
        return l == GenLabel{2, 2} ? out * Rational(2) : out;
    };
    const Check c = to_check("broken", check_relations_on(wrong, v_basis(HalfInt(1)), 1, opt), 2);
    CHECK_FALSE(c.pass);
    CHECK(c.details["witnesses"].size() == 2);
    CHECK(c.details["failed_cases"].get<std::size_t>() > 2);
    CHECK(c.details["witnesses"][0].contains("witness"));

    const Check d = to_check("decoupling", std::vector<DecouplingEntry>{{1, true}, {2, false}});
    CHECK_FALSE(d.pass);
    CHECK_FALSE(to_check("empty", std::vector<DecouplingEntry>{}).pass);
}

TEST_CASE("acceptance report naming and determinism") {
    AcceptanceOptions o;
    const auto r2 = run_criterion(2, o);
    CHECK(r2.checks_pass());
    CHECK(r2.line().rfind("criterion 2 PASS", 0) == 0);
    const Report a = acceptance_report({r2}, o, false);
    CHECK(a.to_json()["checks"][0]["name"] == "criterion-2");
    CHECK(a.to_json()["checks"][1]["name"].get<std::string>().rfind("criterion-2/", 0) == 0);
    CHECK(a.to_json().dump() == acceptance_report({run_criterion(2, o)}, o, false).to_json().dump());
    CHECK(acceptance_report({r2}, o, true).to_json().contains("seconds"));
    CHECK_THROWS_AS(run_criterion(0, o), std::out_of_range);
    CHECK_THROWS_AS(run_criterion(10, o), std::out_of_range);

    CriterionResult slow{1, "slow", {Check{"x", true, Json::object(), std::nullopt}}, 5, 1};
    CHECK(slow.checks_pass());
    CHECK_FALSE(slow.pass());
    CHECK(slow.line().find("target exceeded") != std::string::npos);
}

TEST_CASE("engine checks") {
    CHECK(vacuum_axioms_check(HalfInt(2)).pass);
    CHECK(translation_check(5, 3).pass);
    const Check b = borcherds_check(HalfInt(2), 1);
    CHECK(b.pass);
    CHECK(b.details["checks"].get<std::size_t>() == 16 * 9 * v_basis(HalfInt(2)).size());
}

TEST_CASE("Whittaker sub-checks") {
    const WhittakerChar chi({{1, rat(3, 7)}}, {{0, rat(-5, 2)}});
    const Check reach = reach_check("reach", chi, 3);
    CHECK(reach.pass);
    CHECK(reach.details["charges"].size() == 6);
    CHECK(reach.details["charges"][3]["scalar"] == "-5/2");  // m = 1
    CHECK(homogeneity_check("h", chi, 3).pass);
}
