#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ffva/gl11.hpp"
#include "ffva/invariants.hpp"
#include "ffva/serialize.hpp"
#include "ffva/whittaker.hpp"

namespace ffva {

inline constexpr int kReportSchemaVersion = 1;

struct Check {
    std::string name;
    bool pass = false;
    Json details = Json::object();
    std::optional<double> seconds;
};

/// Machine-readable result of one CLI run. Checks are emitted sorted by name;
/// timing appears only when requested, so default output is reproducible.
struct Report {
    std::string command;
    Json config = Json::object();
    std::vector<Check> checks;
    std::optional<double> seconds;

    bool pass() const;
    Json to_json() const;
    std::string to_text() const;
};

/// The JSON schema every report validates against.
const std::string& report_schema();

// Converters from module results. Witness lists are capped at `max_witnesses`.
Check to_check(const std::string& name, const RelationReport& r, std::size_t max_witnesses = 10);
Check to_check(const std::string& name, const CenterReport& r, std::size_t max_witnesses = 10);
Check to_check(const std::string& name, const StrongGenerationReport& r);
Check to_check(const std::string& name, const SurjectivityReport& r);
Check to_check(const std::string& name, const CyclicityReport& r);
Check to_check(const std::string& name, const SubmoduleReport& r);
Check to_check(const std::string& name, const SpanCheck& r);
Check to_check(const std::string& name, const VnCenterReport& r, std::size_t max_witnesses = 10);
Check to_check(const std::string& name, const std::vector<DecouplingEntry>& r);

/// Equality of named series up to their common cutoff.
Check series_equality_check(const std::string& name, const std::vector<std::pair<std::string, QSeries>>& rows);

Json dims_json(const std::vector<std::size_t>& dims);

}  // namespace ffva
