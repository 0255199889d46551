#include "c2q/commands.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

namespace {

// Remaining tokens of a subcommand: `--name value` pairs and positionals.
c2q::Command collect(const std::string& group, const std::vector<std::string>& extras)
{
    c2q::Command cmd{group, "", {}, {}};
    for (std::size_t i = 0; i < extras.size(); ++i) {
        const std::string& tok = extras[i];
        if (tok.rfind("--", 0) == 0 && tok.size() > 2) {
            std::string name = tok.substr(2);
            std::string value;
            if (auto eq = name.find('='); eq != std::string::npos) {
                value = name.substr(eq + 1);
                name.resize(eq);
            } else if (i + 1 < extras.size()) {
                value = extras[++i];
            } else {
                throw CLI::ValidationError(tok, "missing value");
            }
            cmd.named[name] = value;
        } else if (cmd.op.empty() && group != "selftest") {
            cmd.op = tok;
        } else {
            cmd.positional.push_back(tok);
        }
    }
    return cmd;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Quaternion algebras and quadratic forms in characteristic 2"};
    app.require_subcommand(0, 1);
    app.allow_extras();

    c2q::CommandOptions opt;
    bool as_json = false;
    std::string scenario;
    app.add_option("--field", opt.field, "field spec: gf2, gf(2^k), gf2(t), gf(2^k)(t), gf2(s,t)");
    app.add_option("--seed", opt.seed, "random seed");
    app.add_option("--bound", opt.bound, "search bound");
    app.add_flag("--json", as_json, "print the JSON report");
    app.add_flag("--stable-output", opt.stable, "omit timings");
    app.add_option("--scenario", scenario, "run a JSON scenario file");

    const std::vector<std::pair<const char*, const char*>> groups{
        {"form", "arf | clifford | isotropy | decompose | equiv"},
        {"quat", "norm | division | ramify | iso | mul"},
        {"linkage", "pair | triple | tight | sigma"},
        {"paper", "lemma21 | lemma42 | lemma43 | prop44 | thm33 | thm45 | q54-probe"},
        {"selftest", "quick invariant suites"},
    };
    for (const auto& [name, help] : groups) {
        CLI::App* sub = app.add_subcommand(name, help);
        sub->allow_extras();
        sub->fallthrough();
        sub->prefix_command(false);
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 1;
    }

    const auto emit = [&](const c2q::json& report) {
        if (as_json)
            std::cout << report.dump(2) << "\n";
        else
            std::cout << c2q::render_text(report);
    };

    if (!scenario.empty()) {
        std::ifstream in(scenario);
        if (!in) {
            std::cerr << "cannot open scenario '" << scenario << "'\n";
            return 1;
        }
        c2q::json doc;
        try {
            doc = c2q::json::parse(in);
        } catch (const c2q::json::parse_error& e) {
            std::cerr << "scenario is not valid JSON: " << e.what() << "\n";
            return 1;
        }
        const c2q::CommandResult r = c2q::run_scenario(doc, opt);
        emit(r.report);
        return c2q::exit_code(r.status);
    }

    const std::vector<CLI::App*> subs = app.get_subcommands();
    if (subs.empty()) {
        std::cout << app.help();
        return 1;
    }
    c2q::Command cmd;
    try {
        cmd = collect(subs.front()->get_name(), app.remaining());
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        return 1;
    }
    if (cmd.op.empty() && cmd.group != "selftest") {
        std::cerr << "missing operation for '" << cmd.group << "'\n";
        return 1;
    }
    const c2q::CommandResult r = c2q::run_command(cmd, opt);
    emit(r.report);
    return c2q::exit_code(r.status);
}
