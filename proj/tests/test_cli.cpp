#include "c2q/commands.hpp"

#include <doctest.h>

using namespace c2q;

namespace {

CommandOptions stable()
{
    CommandOptions o;
    o.stable = true;
    return o;
}

CommandResult run(const std::string& group, const std::string& op, std::vector<std::string> args,
                  std::map<std::string, std::string> named = {}, CommandOptions opt = stable())
{
    return run_command(Command{group, op, std::move(args), std::move(named)}, opt);
}

} // namespace

TEST_CASE("quat ramify report")
{
    const CommandResult r = run("quat", "ramify", {"[1,t)"});
    CHECK(r.status == Status::Ok);
    CHECK(r.report["command"] == "quat ramify");
    CHECK(r.report["result"]["ramification"] == json::array({"(t)", "inf"}));
    CHECK(r.report["result"]["reciprocity"] == true);
    CHECK_FALSE(r.report.contains("elapsed_ms"));
    CHECK(run("quat", "ramify", {"[1,t)"}, {}, CommandOptions{}).report.contains("elapsed_ms"));
}

TEST_CASE("errors and exit codes")
{
    const CommandResult zero = run("quat", "ramify", {"[1,0)"});
    CHECK(zero.status == Status::Error);
    CHECK(zero.report["error"]["code"] == "ZeroSlot");

    const CommandResult parse = run("form", "arf", {"[1,t"});
    CHECK(parse.status == Status::Error);
    CHECK(parse.report["error"]["code"] == "ParseError");
    CHECK(parse.report["error"]["column"] == 5);

    CHECK(run("form", "nosuchop", {}).status == Status::Error);
    CHECK(run("nosuchgroup", "x", {}).status == Status::Error);

    CHECK(exit_code(Status::Ok) == 0);
    CHECK(exit_code(Status::Error) == 1);
    CHECK(exit_code(Status::Unresolved) == 2);
    CHECK(exit_code({Status::Ok, Status::Unresolved}) == 2);
    CHECK(exit_code({Status::Unresolved, Status::Error, Status::Ok}) == 1);
    CHECK(exit_code(std::vector<Status>{}) == 0);
}

TEST_CASE("symbolic fields give unresolved rather than wrong answers")
{
    CommandOptions o = stable();
    o.field = "gf2(a,b)";
    const CommandResult r = run("quat", "division", {"[a,b)"}, {}, o);
    CHECK(r.status == Status::Unresolved);
}

TEST_CASE("form and linkage commands")
{
    CHECK(run("form", "arf", {"[1,t]"}).status == Status::Ok);
    CHECK(run("form", "isotropy", {"<<t,t]]"}).report["result"]["isotropic"] == true);
    const CommandResult eq = run("form", "equiv", {"[1,t]+[1,t]", "H+H"});
    CHECK(eq.status == Status::Ok);
    CHECK(eq.report["result"]["witt_equivalent"] == true);

    const CommandResult pair = run("linkage", "pair", {"[1,t)", "[1,t+1)"}, {{"mode", "separable"}});
    CHECK(pair.status == Status::Ok);
    CHECK(pair.report["result"]["certificates"][0]["verified"] == true);
}

TEST_CASE("reports are deterministic for a fixed seed")
{
    CommandOptions o = stable();
    o.seed = 9;
    for (const Command& c : paper_suite()) {
        const CommandResult a = run_command(c, o), b = run_command(c, o);
        CHECK(a.report.dump() == b.report.dump());
        CHECK(a.status == Status::Ok);
    }
}

TEST_CASE("scenarios")
{
    const json sc = json::parse(R"js({
        "field": "gf2(t)", "seed": 3,
        "commands": [
            {"group": "quat", "op": "ramify", "args": ["[1,t)"]},
            {"group": "quat", "op": "ramify", "args": ["[g,t)"], "options": {"field": "gf(2^2)(t)"}},
            {"group": "form", "op": "arf", "args": ["[1,"]}
        ]})js");
    const CommandResult r = run_scenario(sc, stable());
    REQUIRE(r.report["results"].size() == 3);
    CHECK(r.report["results"][0]["status"] == "ok");
    CHECK(r.report["results"][1]["field"] == "gf(2^2)(t)");
    CHECK(r.report["results"][2]["status"] == "error");
    CHECK(r.status == Status::Error);
}

TEST_CASE("text rendering")
{
    const std::string t = render_text(run("quat", "ramify", {"[1,t)"}).report);
    CHECK(t.find("command: quat ramify") != std::string::npos);
    CHECK(t.find("status: ok") != std::string::npos);
}

TEST_CASE("selftest passes")
{
    const CommandResult r = run("selftest", "", {});
    CHECK(r.status == Status::Ok);
}
