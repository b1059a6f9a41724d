#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>
#include <sys/wait.h>

#include <json.hpp>

using nlohmann::json;

namespace {

struct RunResult {
    int exit_code;
    std::string out;
};

std::string write_temp(const std::string& name, const std::string& content) {
    std::string path = std::string("cli_") + name + ".json";
    std::ofstream f(path);
    f << content;
    return path;
}

RunResult run(const std::string& args) {
    std::string cmd = std::string(BSVTOOL_BIN) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    char buf[4096];
    size_t got;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, got);
    int status = pclose(pipe);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

}  // namespace

TEST_CASE("astype subcommand") {
    std::string payload = write_temp("quat", R"({"quaternion": {"a": "-1", "b": "-1"}})");
    RunResult r = run("astype " + payload);
    CHECK(r.exit_code == 0);
    json out = json::parse(r.out);
    CHECK(out.at("period") == 2);
    CHECK(out.at("as_type") == json::array({1, 2, 1}));

    RunResult r2 = run("astype --d 2 " + write_temp("p6", R"({"invariants": [
        {"place": "5", "num": 1, "den": 6}, {"place": "7", "num": 5, "den": 6}]})"));
    CHECK(r2.exit_code == 0);
    CHECK(json::parse(r2.out).at("as_type") == json::array({1, 3, 3, 1}));
}

TEST_CASE("byte-identical reruns") {
    std::string payload = write_temp("det", R"({"quaternion": {"a": "-1", "b": "-1"}})");
    RunResult a = run("class build " + payload);
    RunResult b = run("class build " + payload);
    CHECK(a.exit_code == 0);
    CHECK(a.out == b.out);
    // a result document re-parses into the same class
    std::string round = write_temp("round", a.out);
    RunResult c = run("class build " + round);
    CHECK(c.out == a.out);
}

TEST_CASE("class arithmetic") {
    std::string pair = write_temp("pair", R"({"lhs": {"quaternion": {"a": "-1", "b": "-1"}},
                                              "rhs": {"quaternion": {"a": "-1", "b": "-1"}}})");
    RunResult r = run("class tensor " + pair);
    CHECK(r.exit_code == 0);
    CHECK(json::parse(r.out).at("global").at("invariants").empty());

    RunResult p = run("class period " + write_temp("p3", R"({"invariants": [
        {"place": "5", "num": 1, "den": 3}, {"place": "7", "num": 2, "den": 3}]})"));
    CHECK(json::parse(p.out).at("period") == 3);

    RunResult idx = run("class index " + write_temp("idx", R"({"class": {"abstract":
        {"period": 2, "index_sequence": [1, 4, 1]}}, "r": 3})"));
    CHECK(json::parse(idx.out).at("index") == 4);
}

TEST_CASE("bundle subcommands against a context") {
    std::string ctx = write_temp("ctx_conic",
                                 R"({"class": {"quaternion": {"a": "-1", "b": "-1"}}, "algebra_degree": 2})");
    RunResult d = run("bundle descend --context " + ctx + " " +
                      write_temp("tw", R"({"twists": [{"t": 1, "mult": 1}]})"));
    CHECK(d.exit_code == 2);
    json derr = json::parse(d.out).at("error");
    CHECK(derr.at("code") == "descent_failure");
    CHECK(derr.at("data").at("t") == 1);
    CHECK(derr.at("data").at("mult") == 1);
    CHECK(derr.at("data").at("required") == 2);

    RunResult ok = run("bundle descend --context " + ctx + " " +
                       write_temp("tw2", R"({"twists": [{"t": 1, "mult": 2}]})"));
    CHECK(ok.exit_code == 0);
    CHECK(json::parse(ok.out).at("atoms") == json::array({{{"a", 0}, {"j", 1}, {"mult", 1}}}));

    RunResult rk = run("bundle rank --context " + ctx + " " +
                       write_temp("rk", R"({"atoms": [{"a": 0, "j": 1, "mult": 2}]})"));
    CHECK(json::parse(rk.out).at("rank") == 4);

    RunResult nm = run("bundle normalize --context " + ctx + " " +
                       write_temp("nm", R"({"atoms": [{"a": 0, "j": 3, "mult": 1}]})"));
    CHECK(json::parse(nm.out).at("atoms") == json::array({{{"a", 1}, {"j", 1}, {"mult", 1}}}));

    RunResult tp = run("bundle tensor --context " + ctx + " " +
                       write_temp("tp", R"({"lhs": {"atoms": [{"a": 0, "j": 1, "mult": 1}]},
                                            "rhs": {"atoms": [{"a": 0, "j": 1, "mult": 1}]}})"));
    CHECK(json::parse(tp.out).at("atoms") == json::array({{{"a", 1}, {"j", 0}, {"mult", 4}}}));

    RunResult pb = run("bundle pullback --context " + ctx + " " +
                       write_temp("pb", R"({"atoms": [{"a": 0, "j": 1, "mult": 1}]})"));
    CHECK(json::parse(pb.out).at("twists") == json::array({{{"mult", 2}, {"t", 1}}}));

    RunResult du = run("bundle dual --context " + ctx + " " +
                       write_temp("du", R"({"atoms": [{"a": 0, "j": 1, "mult": 1}]})"));
    CHECK(json::parse(du.out).at("atoms") == json::array({{{"a", -1}, {"j", 1}, {"mult", 1}}}));
}

TEST_CASE("cohomology subcommand") {
    std::string ctx = write_temp("ctx_conic2",
                                 R"({"class": {"quaternion": {"a": "-1", "b": "-1"}}, "algebra_degree": 2})");
    RunResult r = run("cohomology --context " + ctx + " " +
                      write_temp("coh", R"({"atoms": [{"as_atom": {"a": 0, "j": 1}}]})"));
    CHECK(r.exit_code == 0);
    CHECK(json::parse(r.out).at("table") == json::array({{{"dim", 4}, {"i", 0}}}));
}

TEST_CASE("validation failures use exit code 2 and name the constraint") {
    RunResult r = run("validate " + write_temp("bad", R"({"period": 2, "index_sequence": [1, 3, 1]})"));
    CHECK(r.exit_code == 2);
    json out = json::parse(r.out);
    CHECK(out.at("valid") == false);
    bool has_c = false;
    for (const auto& v : out.at("violations"))
        if (v.at("constraint") == "c") has_c = true;
    CHECK(has_c);

    RunResult good = run("validate " + write_temp("good", R"({"period": 2, "index_sequence": [1, 2, 1]})"));
    CHECK(good.exit_code == 0);
    CHECK(json::parse(good.out).at("valid") == true);
}

TEST_CASE("criterion subcommands") {
    std::string ctx = write_temp("ctx_p2", R"({"class": {"invariants": []}, "algebra_degree": 3})");
    RunResult r = run("criterion bs --context " + ctx + " " +
                      write_temp("omega", R"({"atoms": [{"cotangent": {"p": 1, "t": 0}}]})"));
    CHECK(r.exit_code == 0);
    json out = json::parse(r.out);
    CHECK(out.at("verdict") == "not_split");
    CHECK(out.at("witness").at("i") == 1);

    std::string gctx = write_temp("ctx_gr24", R"({"class": {"invariants": []}, "algebra_degree": 4, "d": 2})");
    RunResult g = run("criterion grass --context " + gctx + " " +
                      write_temp("taut", R"({"atoms": [{"schur": {"alpha": [1,0], "beta": [0,0], "t": 0}}]})"));
    CHECK(json::parse(g.out).at("verdict") == "not_split");
    RunResult gs = run("criterion grass --context " + gctx + " " +
                       write_temp("lines", R"({"atoms": [{"line": {"t": 0}}, {"line": {"t": 1}}]})"));
    CHECK(json::parse(gs.out).at("verdict") == "split");
}

TEST_CASE("malformed input exits 1") {
    RunResult r = run("class build " + write_temp("broken", "{ not json"));
    CHECK(r.exit_code == 1);
    CHECK(json::parse(r.out).contains("error"));

    RunResult r2 = run("astype " + write_temp("missing", R"({"nonsense": 1})"));
    CHECK(r2.exit_code == 1);

    RunResult r3 = run("frobnicate " + write_temp("noop", "{}"));
    CHECK(r3.exit_code == 1);
}

TEST_CASE("domain errors exit 2") {
    RunResult r = run("class build " + write_temp("recip", R"({"invariants": [
        {"place": "5", "num": 1, "den": 3}]})"));
    CHECK(r.exit_code == 2);
    CHECK(json::parse(r.out).at("error").at("code") == "reciprocity_violation");

    RunResult r2 = run("astype --d 2 " + write_temp("absd", R"({"abstract":
        {"period": 2, "index_sequence": [1, 4, 1]}})"));
    CHECK(r2.exit_code == 2);
    CHECK(json::parse(r2.out).at("error").at("code") == "abstract_with_d");
}
