#pragma once

#include "c2q/constructions.hpp"

#include <json.hpp>

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace c2q {

using json = nlohmann::ordered_json;

struct CommandOptions {
    std::string field;   // empty: the command's default field
    std::uint64_t seed = 0;
    int bound = -1;      // negative: the command's default bound
    bool stable = false; // omit timings
};

/// One invocation: `group op positional... --name value...`.
struct Command {
    std::string group;
    std::string op;
    std::vector<std::string> positional;
    std::map<std::string, std::string> named;
};

enum class Status { Ok, Unresolved, Error };

struct CommandResult {
    json report;
    Status status;
};

/// 0 on success, 2 when only unresolved outcomes occurred, 1 on errors.
int exit_code(Status s);
int exit_code(const std::vector<Status>& all);

/// Runs one command; module errors become an "error" object in the report.
CommandResult run_command(const Command& cmd, const CommandOptions& opt);

/// Scenario document:
///   {"field": "gf2(t)", "seed": 1, "bound": 4,
///    "commands": [{"group": "quat", "op": "ramify", "args": ["[1,t)"],
///                  "options": {"lambda": "1"}}, ...]}
/// Top-level keys override `defaults`; each command may override them again.
/// Returns {"scenario": ..., "results": [...]} and the combined status.
CommandResult run_scenario(const json& scenario, const CommandOptions& defaults);

/// The `paper` suite with default arguments, in a fixed order.
std::vector<Command> paper_suite();

/// Indented key: value rendering of a report.
std::string render_text(const json& report);

// JSON views of library values, shared with tests.
json to_json(const Elem& e, const FieldCtx& f);
json to_json(const PlaceSet& places, const FieldCtx& f);
json to_json(const BrauerClass& b);
json to_json(const ArfClass& a);
json to_json(const WittClass& w);
json to_json(const LinkageCertificate& c);
json to_json(const TightSet& t);
json to_json(const SigmaReport& s);
json to_json(const WitnessReport& w);

} // namespace c2q
