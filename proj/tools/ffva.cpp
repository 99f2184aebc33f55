#include <chrono>
#include <fstream>
#include <iostream>
#include <regex>
#include <sstream>

#include "CLI11.hpp"

#include "ffva/acceptance.hpp"
#include "ffva/fields.hpp"
#include "ffva/parallel.hpp"

using namespace ffva;

namespace {

constexpr int kExitPass = 0, kExitFail = 1, kExitUsage = 2;

struct UsageError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct Range {
    std::int64_t lo = 0, hi = 0;
};

Range parse_range(const std::string& text) {
    static const std::regex re(R"((-?\d+)\.\.(-?\d+))");
    std::smatch m;
    if (!std::regex_match(text, m, re)) throw UsageError("expected a range a..b, got \"" + text + "\"");
    Range r{std::stoll(m[1]), std::stoll(m[2])};
    if (r.lo > r.hi) throw UsageError("empty range " + text);
    return r;
}

HalfInt parse_weight(const std::string& text) {
    const HalfInt w = HalfInt::parse(text);
    if (w < HalfInt(0)) throw UsageError("weight cutoff must be >= 0");
    return w;
}

std::string read_input(const std::string& path) {
    if (path == "-") {
        std::ostringstream s;
        s << std::cin.rdbuf();
        return s.str();
    }
    std::ifstream in(path);
    if (!in) throw UsageError("cannot read " + path);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

Json read_json(const std::string& path) {
    try {
        return Json::parse(read_input(path));
    } catch (const Json::parse_error& e) {
        throw UsageError(path + ": " + e.what());
    }
}

struct Globals {
    int jobs = default_jobs();
    std::uint64_t seed = 20240611;
    bool timing = false;
};

class Timer {
public:
    double seconds() const { return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count(); }

private:
    std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

int emit(Report report, const std::string& format, const Globals& g, const Timer& timer) {
    if (g.timing) report.seconds = timer.seconds();
    if (format == "text") {
        std::cout << report.to_text();
    } else {
        std::cout << report.to_json().dump(2) << '\n';
    }
    return report.pass() ? kExitPass : kExitFail;
}

// --- apply ---------------------------------------------------------------

/// One operator of `apply`: E<ij>(r), psi<+|->[_i](r), a<+|->[_i](r), alpha[_i](r).
State apply_op(const std::string& op, const State& v) {
    static const std::regex gen_re(R"(E([12])([12])\((-?\d+)\))");
    static const std::regex free_re(R"((psi|a)([+-])(?:_(\d+))?\(([-0-9/]+)\))");
    static const std::regex alpha_re(R"(alpha(?:_(\d+))?\((-?\d+)\))");
    std::smatch m;
    if (std::regex_match(op, m, gen_re)) {
        if (v.species_count() != 1) throw UsageError("E modes act on one species only");
        return gen_mode(GenLabel{std::stoi(m[1]), std::stoi(m[2])}, std::stoll(m[3]), v);
    }
    if (std::regex_match(op, m, free_re)) {
        const Sign sign = m[2] == "+" ? Sign::Plus : Sign::Minus;
        const int species = m[3].matched ? std::stoi(m[3]) : 1;
        const HalfInt r = HalfInt::parse(m[4].str());
        if (r.is_integer()) throw UsageError("free field modes are half-integers: " + op);
        if (m[1] == "psi") return apply_fermion_mode(psi(sign, r, species), v);
        return apply_boson_mode(boson(sign, r, species), v);
    }
    if (std::regex_match(op, m, alpha_re)) {
        return heisenberg_mode(m[1].matched ? std::stoi(m[1]) : 1, std::stoll(m[2]), v);
    }
    throw UsageError("unknown operator \"" + op + "\"");
}

// --- char ----------------------------------------------------------------

int run_char(const std::string& identity, int order, const std::string& format, const Globals& g) {
    const Timer timer;
    const HalfInt n(order);
    std::vector<std::pair<std::string, QSeries>> rows;
    if (identity == "hp") {
        rows = {{"constant_term", hp_constant_term(n)}, {"theta_form", hp_theta_form(n)},
                {"ramanujan_form", hp_ramanujan_form(n)}};
    } else {
        rows = {{"enumerated", char_v_enumerated(n)}, {"pbw", char_pbw_gl11(n)},
                {"constant_term", char_v_constant_term(n)}};
    }
    const Check check = series_equality_check(identity == "hp" ? "hp-identity" : "character-identity", rows);
    if (format == "csv") {
        std::cout << "series,exponent,numerator,denominator\n";
        for (const auto& [name, s] : rows) {
            std::istringstream body(to_csv(s));
            std::string line;
            std::getline(body, line);  // header
            while (std::getline(body, line)) std::cout << name << ',' << line << '\n';
        }
        return check.pass ? kExitPass : kExitFail;
    }
    if (format == "text") {
        for (const auto& [name, s] : rows) {
            std::cout << name << ':';
            for (std::int64_t w = 0; w <= order; ++w) std::cout << ' ' << to_string(s[HalfInt(w)]);
            std::cout << '\n';
        }
        std::cout << (check.pass ? "PASS" : "FAIL") << " rows agree through q^" << order << '\n';
        return check.pass ? kExitPass : kExitFail;
    }
    Report report{"char", Json{{"identity", identity}, {"order", order}}, {check}, std::nullopt};
    return emit(report, format, g, timer);
}

// --- invariants ----------------------------------------------------------

Check fixed_space_check(int n, HalfInt weight, int jobs) {
    Check c{"fixed-space", true, Json::object(), std::nullopt};
    for (const auto& [name, sector] :
         {std::pair{"full", Sector::Full}, {"bosonic", Sector::Bosonic}, {"fermionic", Sector::Fermionic}}) {
        c.details[name] = dims_json(fixed_space(n, weight, sector, jobs).dims());
    }
    c.details["grading"] = "dims by weight 0, 1/2, 1, ...";
    return c;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact computations with the free field realization of V^cri(gl(1|1)) and its relatives."};
    app.require_subcommand(1);
    Globals g;
    app.add_option("--jobs", g.jobs, "Worker threads (default: FFVA_JOBS or 1)")->check(CLI::PositiveNumber);
    app.add_option("--seed", g.seed, "Seed for every randomized check");
    app.add_flag("--timing", g.timing, "Include wall-clock seconds in reports");

    const std::vector<std::string> report_formats{"json", "text"};

    // enumerate
    auto* enumerate_cmd = app.add_subcommand("enumerate", "Basis of F^(n) (x) M^(n) as JSON lines");
    int en_species = 1;
    std::string en_weight = "2", en_sector = "full";
    std::optional<int> en_total, en_fermionic, en_bosonic;
    bool en_balanced = false;
    enumerate_cmd->add_option("--species", en_species, "Number of species n")->check(CLI::PositiveNumber);
    enumerate_cmd->add_option("--weight", en_weight, "Weight cutoff (integer or half-integer)");
    enumerate_cmd->add_option("--sector", en_sector)->check(CLI::IsMember({"full", "fermionic", "bosonic"}));
    enumerate_cmd->add_option("--charge", en_total, "Total charge l_F + l_M");
    enumerate_cmd->add_option("--fermionic-charge", en_fermionic);
    enumerate_cmd->add_option("--bosonic-charge", en_bosonic);
    enumerate_cmd->add_flag("--balanced", en_balanced, "Per species, fermionic plus bosonic charge vanishes");

    // apply
    auto* apply_cmd = app.add_subcommand("apply", "Apply modes to a State given as JSON");
    std::string ap_state;
    int ap_species = 1;
    std::vector<std::string> ap_ops;
    apply_cmd->add_option("--state", ap_state, "State JSON file, - for stdin (default: vacuum)");
    apply_cmd->add_option("--species", ap_species, "Species count of the default vacuum")->check(CLI::PositiveNumber);
    apply_cmd->add_option("--op", ap_ops, "E12(0), psi+(-1/2), a-_2(3/2), alpha(1); applied in the order given")
        ->required();

    // verify-relations
    auto* rel_cmd = app.add_subcommand("verify-relations", "Relation suite of the realization on V");
    std::string rel_r = "-3..3", rel_s = "-3..3", rel_weight = "5", rel_format = "json";
    rel_cmd->add_option("--r", rel_r, "Mode range a..b of the first generator");
    rel_cmd->add_option("--s", rel_s, "Mode range a..b of the second generator");
    rel_cmd->add_option("--weight", rel_weight, "Weight cutoff of the tested basis");
    rel_cmd->add_option("--format", rel_format)->check(CLI::IsMember(report_formats));

    // center
    auto* center_cmd = app.add_subcommand("center", "Center checks for M_0 inside V");
    std::string ce_weight = "5", ce_kernel = "5", ce_format = "json";
    std::int64_t ce_rmax = 5;
    center_cmd->add_option("--weight", ce_weight, "Weight cutoff for annihilation and strong generation");
    center_cmd->add_option("--r-max", ce_rmax, "Modes 0 <= r <= r-max")->check(CLI::NonNegativeNumber);
    center_cmd->add_option("--kernel-weight", ce_kernel, "Weight cutoff of the joint kernel comparison");
    center_cmd->add_option("--format", ce_format)->check(CLI::IsMember(report_formats));

    // char
    auto* char_cmd = app.add_subcommand("char", "Character identities as coefficient rows");
    std::string ch_identity = "hp", ch_format = "json";
    int ch_order = 30;
    char_cmd->add_option("--identity", ch_identity)->check(CLI::IsMember({"hp", "v"}));
    char_cmd->add_option("--order", ch_order, "Truncation order")->check(CLI::NonNegativeNumber);
    char_cmd->add_option("--format", ch_format)->check(CLI::IsMember({"json", "csv", "text"}));

    // whittaker
    auto* wh_cmd = app.add_subcommand("whittaker", "Checks on the Whittaker modules F_chi");
    std::string wh_chi, wh_check = "cyclicity", wh_weight = "3", wh_r = "-2..2", wh_s = "-2..2", wh_format = "json";
    std::int64_t wh_charge = 2;
    int wh_trials = 4;
    wh_cmd->add_option("--chi", wh_chi, "Character JSON file, - for stdin")->required();
    wh_cmd->add_option("--check", wh_check)
        ->check(CLI::IsMember({"cyclicity", "relations", "submodule", "reach", "homogeneity"}));
    wh_cmd->add_option("--weight", wh_weight, "Weight cutoff");
    wh_cmd->add_option("--charge", wh_charge, "Charge bound L")->check(CLI::NonNegativeNumber);
    wh_cmd->add_option("--trials", wh_trials, "Random starting vectors for --check submodule")
        ->check(CLI::PositiveNumber);
    wh_cmd->add_option("--r", wh_r, "Mode range for --check relations");
    wh_cmd->add_option("--s", wh_s, "Mode range for --check relations");
    wh_cmd->add_option("--format", wh_format)->check(CLI::IsMember(report_formats));

    // invariants
    auto* inv_cmd = app.add_subcommand("invariants", "gl_n invariants of F^(n) (x) M^(n)");
    int inv_n = 2, inv_kmax = 3;
    std::string inv_weight = "3", inv_check = "strong-gen", inv_format = "json";
    std::int64_t inv_rmax = 4;
    inv_cmd->add_option("--n", inv_n, "Number of species")->check(CLI::PositiveNumber);
    inv_cmd->add_option("--weight", inv_weight, "Weight cutoff");
    inv_cmd->add_option("--check", inv_check)
        ->check(CLI::IsMember({"fixed", "strong-gen", "center", "m-strong-gen", "decoupling"}));
    inv_cmd->add_option("--r-max", inv_rmax, "Modes 0 <= r <= r-max for --check center")
        ->check(CLI::NonNegativeNumber);
    inv_cmd->add_option("--k-max", inv_kmax, "Largest k for --check decoupling")->check(CLI::NonNegativeNumber);
    inv_cmd->add_option("--format", inv_format)->check(CLI::IsMember(report_formats));

    // acceptance
    auto* acc_cmd = app.add_subcommand("acceptance", "Run the acceptance criteria");
    std::vector<int> acc_ids;
    std::string acc_format = "text";
    acc_cmd->add_option("--criterion", acc_ids, "Criteria to run (default: all)")
        ->check(CLI::Range(1, kCriterionCount));
    acc_cmd->add_option("--format", acc_format)->check(CLI::IsMember(report_formats));

    // schema
    auto* schema_cmd = app.add_subcommand("schema", "Print the JSON schema of reports");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        const Timer timer;
        if (*enumerate_cmd) {
            EnumerateOptions opts;
            opts.sector = en_sector == "full" ? Sector::Full : en_sector == "bosonic" ? Sector::Bosonic : Sector::Fermionic;
            opts.charge.total = en_total;
            opts.charge.fermionic = en_fermionic;
            opts.charge.bosonic = en_bosonic;
            opts.charge.species_balanced = en_balanced;
            for (const auto& b : enumerate(en_species, parse_weight(en_weight), opts)) {
                Json line = to_json(b);
                line["weight"] = weight(b).to_string();
                std::cout << line.dump() << '\n';
            }
            return kExitPass;
        }
        if (*apply_cmd) {
            State v = ap_state.empty() ? State::vacuum(ap_species) : state_from_json(read_json(ap_state));
            for (const auto& op : ap_ops) v = apply_op(op, v);
            std::cout << to_json(v).dump() << '\n';
            return kExitPass;
        }
        if (*rel_cmd) {
            const Range r = parse_range(rel_r), s = parse_range(rel_s);
            RelationOptions opts;
            opts.r_min = r.lo;
            opts.r_max = r.hi;
            opts.s_min = s.lo;
            opts.s_max = s.hi;
            opts.jobs = g.jobs;
            const HalfInt w = parse_weight(rel_weight);
            Report report{"verify-relations",
                          Json{{"r", rel_r}, {"s", rel_s}, {"weight", w.to_string()}},
                          {to_check("relations", check_relations(w, opts))},
                          std::nullopt};
            return emit(report, rel_format, g, timer);
        }
        if (*center_cmd) {
            const HalfInt w = parse_weight(ce_weight), kw = parse_weight(ce_kernel);
            Report report{"center",
                          Json{{"weight", w.to_string()}, {"r_max", ce_rmax}, {"kernel_weight", kw.to_string()}},
                          {to_check("annihilation", center_annihilation_check(w, ce_rmax, kw, g.jobs)),
                           to_check("strong-generation", center_strong_generation_check(w))},
                          std::nullopt};
            return emit(report, ce_format, g, timer);
        }
        if (*char_cmd) return run_char(ch_identity, ch_order, ch_format, g);
        if (*wh_cmd) {
            const WhittakerChar chi = whittaker_char_from_json(read_json(wh_chi));
            const HalfInt w = parse_weight(wh_weight);
            Report report{"whittaker", Json{{"check", wh_check}, {"chi", to_json(chi)}, {"weight", w.to_string()}},
                          {}, std::nullopt};
            if (wh_check == "cyclicity") {
                report.config["charge"] = wh_charge;
                report.checks.push_back(to_check("cyclicity", cyclicity_check(chi, wh_charge, w)));
            } else if (wh_check == "relations") {
                const Range r = parse_range(wh_r), s = parse_range(wh_s);
                RelationOptions opts{r.lo, r.hi, s.lo, s.hi, g.jobs};
                report.config["r"] = wh_r;
                report.config["s"] = wh_s;
                report.checks.push_back(to_check("module-relations", check_module_relations(chi, w, opts)));
            } else if (wh_check == "submodule") {
                report.config["trials"] = wh_trials;
                report.config["seed"] = g.seed;
                report.checks.push_back(
                    to_check("submodule", submodule_evidence_check(chi, wh_trials, w, g.seed, g.jobs)));
            } else {
                report.config.erase("weight");
                report.config["charge"] = wh_charge;
                report.checks.push_back(wh_check == "reach" ? reach_check("reach", chi, wh_charge)
                                                            : homogeneity_check("homogeneity", chi, wh_charge));
            }
            return emit(report, wh_format, g, timer);
        }
        if (*inv_cmd) {
            const HalfInt w = parse_weight(inv_weight);
            Report report{"invariants", Json{{"n", inv_n}, {"weight", w.to_string()}, {"check", inv_check}}, {},
                          std::nullopt};
            if (inv_check == "fixed") {
                report.checks.push_back(fixed_space_check(inv_n, w, g.jobs));
            } else if (inv_check == "strong-gen") {
                report.checks.push_back(to_check("strong-generation", strong_generation_check(inv_n, w, g.jobs)));
            } else if (inv_check == "m-strong-gen") {
                report.checks.push_back(
                    to_check("m-strong-generation", m_invariants_strong_gen_check(inv_n, w, g.jobs)));
            } else if (inv_check == "center") {
                report.config["r_max"] = inv_rmax;
                report.checks.push_back(to_check("center", center_vn_check(inv_n, w, inv_rmax, g.jobs)));
            } else {
                report.config["k_max"] = inv_kmax;
                report.checks.push_back(to_check("decoupling", decoupling_check(inv_n, inv_kmax, w)));
            }
            return emit(report, inv_format, g, timer);
        }
        if (*acc_cmd) {
            if (acc_ids.empty())
                for (int id = 1; id <= kCriterionCount; ++id) acc_ids.push_back(id);
            const AcceptanceOptions opts{g.seed, g.jobs};
            std::vector<CriterionResult> results;
            for (int id : acc_ids) {
                results.push_back(run_criterion(id, opts));
                if (acc_format == "text") std::cout << results.back().line() << std::endl;
            }
            const Report report = acceptance_report(results, opts, g.timing);
            if (acc_format == "json") std::cout << report.to_json().dump(2) << '\n';
            return report.pass() ? kExitPass : kExitFail;
        }
        if (*schema_cmd) {
            std::cout << report_schema();
            if (report_schema().empty() || report_schema().back() != '\n') std::cout << '\n';
            return kExitPass;
        }
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const Json::exception& e) {
        std::cerr << "error: bad JSON input: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitFail;
    }
    return kExitUsage;
}
