#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "doctest.h"
#include "json.hpp"
#include "subiso/oracle.hpp"

using namespace subiso;
namespace fs = std::filesystem;

namespace {

struct Run {
    int code;
    std::string out, err;
};

Run run(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

std::string temp_file(const std::string& name, const std::string& text) {
    fs::path p = fs::temp_directory_path() / ("subiso_cli_" + name);
    std::ofstream(p) << text;
    return p.string();
}

std::vector<std::string> lines(const std::string& s) {
    std::vector<std::string> out;
    std::istringstream in(s);
    for (std::string l; std::getline(in, l);) out.push_back(l);
    return out;
}

// Host for `pattern` written by the gen subcommand.
std::string gen_host(const std::string& name, const std::string& pattern, const std::string& sizes, int m, int plant,
                     int seed) {
    Run r = run({"gen", "-p", pattern, "--set", "sizes=" + sizes, "--set", "m=" + std::to_string(m), "--set",
                 "plant=" + std::to_string(plant), "--set", "weighted=1", "--seed", std::to_string(seed)});
    REQUIRE(r.code == 0);
    return temp_file(name, r.out);
}

}  // namespace

TEST_CASE("classify a triangle file") {
    std::string tri = temp_file("tri.pat", "# triangle\nnode a\nnode b\nnode c\nedge a b\nedge b c\nedge a c\n");
    Run r = run({"classify", "-p", tri, "--json"});
    REQUIRE(r.code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["c"] == "2-1/2");
    CHECK(j["verdict"] == "subquadratic");
    CHECK(j["pieces"].size() == 1);
    CHECK(j["pieces"][0]["F"] == 2);
    CHECK(j["pieces"][0]["nodes"] == nlohmann::json::array({"a", "b", "c"}));
    // keys come out sorted
    CHECK(r.out.find("\"c\"") < r.out.find("\"pieces\""));
    CHECK(r.out.find("\"pieces\"") < r.out.find("\"verdict\""));

    Run plain = run({"classify", "-p", tri});
    CHECK(plain.out.find("c = 2-1/2") != std::string::npos);
}

TEST_CASE("classify reports the hard witness") {
    Run r = run({"classify", "-p", "P(3,3,3)", "--json"});
    REQUIRE(r.code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["verdict"] == "quadratic-hard");
    CHECK(j.contains("hard_witness"));
    CHECK(j["pieces"][0]["triple"].is_null());
}

TEST_CASE("decompose prints sorted label lists") {
    // two triangles sharing the edge x y
    std::string p = temp_file("dia.pat", "node x\nnode y\nnode a\nnode b\nedge x y\nedge x a\nedge y a\nedge x b\nedge y b\n");
    Run r = run({"decompose", "-p", p});
    REQUIRE(r.code == 0);
    CHECK(lines(r.out) == std::vector<std::string>{"{a,x,y}", "{b,x,y}"});
}

TEST_CASE("list, verify and the oracle agree on generated hosts") {
    for (int seed = 1; seed <= 4; ++seed) {
        for (std::string pat : {"C4", "C5", "K3,2", "T(3,3,1)"}) {
            std::string host = gen_host("h_" + std::to_string(seed) + ".txt", pat, "6", 60, 4, seed);
            Run v = run({"list", "-p", pat, "-g", host, "--verify"});
            INFO(pat << " seed " << seed << " " << v.err);
            REQUIRE(v.code == 0);
            Run a = run({"list", "-p", pat, "-g", host});
            Run b = run({"list", "-p", pat, "-g", host, "--oracle"});
            CHECK(a.out == b.out);
            CHECK(v.out == "VERIFIED n=" + std::to_string(lines(a.out).size()) + "\n");
            Run mv = run({"minweight", "-p", pat, "-g", host, "--verify"});
            CHECK(mv.code == 0);
            CHECK(mv.out.rfind("VERIFIED weight=", 0) == 0);
        }
    }
}

TEST_CASE("verify fails when one materialized tuple is corrupted") {
    for (int seed = 1; seed <= 5; ++seed) {
        for (std::string pat : {"C4", "C6", "K3,2", "T(3,3,1)", "triangle"}) {
            std::string host = gen_host("f.txt", pat, "5", 40, 3, seed);
            Run v = run({"list", "-p", pat, "-g", host, "--verify", "--inject-fault"});
            INFO(pat << " seed " << seed);
            CHECK(v.code == kExitMismatch);
            CHECK(v.out.rfind("MISMATCH", 0) == 0);
            CHECK(v.out.find("VERIFIED") == std::string::npos);
        }
    }
}

TEST_CASE("solution lines name every pattern node") {
    std::string host = gen_host("s.txt", "C4", "4", 20, 2, 9);
    Run r = run({"list", "-p", "C4", "-g", host});
    REQUIRE(r.code == 0);
    auto ls = lines(r.out);
    REQUIRE(ls.size() >= 2);
    for (const auto& l : ls) CHECK(l.rfind("v0=", 0) == 0);
    CHECK(ls[0].find(" v3=") != std::string::npos);
    Run j = run({"list", "-p", "C4", "-g", host, "--json"});
    CHECK(nlohmann::json::parse(j.out)["count"] == ls.size());
}

TEST_CASE("enum honours the limit and reports steps") {
    std::string host = gen_host("e.txt", "C4", "6", 60, 5, 3);
    Run all = run({"list", "-p", "C4", "-g", host});
    const auto total = lines(all.out).size();
    REQUIRE(total >= 3);
    Run two = run({"enum", "-p", "C4", "-g", host, "--limit", "2"});
    CHECK(lines(two.out).size() == 2);
    Run every = run({"enum", "-p", "C4", "-g", host, "--steps", "--json"});
    auto j = nlohmann::json::parse(every.out);
    CHECK(j["count"] == total);
    CHECK(j["max_steps"].get<int>() > 0);
}

TEST_CASE("hard patterns exit with 2 unless the oracle is asked for") {
    std::string host = gen_host("hard.txt", "P(3,3,3)", "3", 40, 2, 1);
    Run r = run({"list", "-p", "P(3,3,3)", "-g", host});
    CHECK(r.code == kExitHard);
    CHECK(r.err.find("hard pattern") != std::string::npos);
    CHECK(run({"minweight", "-p", "P(3,3,3)", "-g", host}).code == kExitHard);
    CHECK(run({"enum", "-p", "P(3,3,3)", "-g", host}).code == kExitHard);
    Run o = run({"list", "-p", "P(3,3,3)", "-g", host, "--oracle"});
    CHECK(o.code == 0);
    CHECK(lines(o.out).size() >= 2);
}

TEST_CASE("input errors exit with 1") {
    CHECK(run({}).code == kExitInput);
    CHECK(run({"frobnicate"}).code == kExitInput);
    CHECK(run({"classify"}).code == kExitInput);
    CHECK(run({"classify", "-p", "C4", "--no-such-flag"}).code == kExitInput);
    CHECK(run({"classify", "-p", "not_a_pattern"}).code == kExitInput);
    std::string bad = temp_file("bad.txt", "node x v0\nedge x y\n");
    CHECK(run({"list", "-p", "C4", "-g", bad}).code == kExitInput);
    CHECK(run({"list", "-p", "C4", "-g", "/nonexistent/host"}).code == kExitInput);
    CHECK(run({"embed", "--family", "pabc", "--params", "4,x,1"}).code == kExitInput);
    CHECK(run({"bench", "-p", "C4", "--sizes", "2^4..9"}).code == kExitInput);
    CHECK(run({"--help"}).code == 0);
}

TEST_CASE("embed prints images, k, wed and ratio") {
    Run r = run({"embed", "--family", "pabc", "--params", "4,4,1"});
    REQUIRE(r.code == 0);
    CHECK(r.out.find("k = 17") != std::string::npos);
    CHECK(r.out.find("wed = 9") != std::string::npos);
    CHECK(r.out.find("ratio = 17/9") != std::string::npos);
    Run j = run({"embed", "--family", "pa2c", "--params", "5,2", "--json"});
    auto js = nlohmann::json::parse(j.out);
    CHECK(js["k"] == 11);
    CHECK(js["wed"] == 6);
    CHECK(js["images"].size() == 11);
    Run s = run({"embed", "--search", "-p", "C4", "--kmax", "4", "--json"});
    CHECK(nlohmann::json::parse(s.out)["ratio"] == "3/2");
}

TEST_CASE("gen reads a config file and the seed variable") {
    std::string cfg = temp_file("gen.cfg", "sizes=5,6,7,8\nm=40\nplant=2\n");
    Run a = run({"gen", "-p", "C4", "--config", cfg, "--seed", "5"});
    Run b = run({"gen", "-p", "C4", "--config", cfg, "--seed", "5"});
    Run c = run({"gen", "-p", "C4", "--config", cfg, "--seed", "6"});
    REQUIRE(a.code == 0);
    CHECK(a.out == b.out);
    CHECK(a.out != c.out);
    HostGraph G = load_host_string(a.out, patterns::cycle(4));
    CHECK(G.part(3).size() <= 8);

    ::setenv("SUBISO_SEED", "5", 1);
    Run env = run({"gen", "-p", "C4", "--config", cfg});
    ::unsetenv("SUBISO_SEED");
    CHECK(env.out == a.out);

    std::string outp = (fs::temp_directory_path() / "subiso_cli_out.txt").string();
    CHECK(run({"gen", "-p", "C4", "--config", cfg, "--seed", "5", "-o", outp}).code == 0);
    std::ifstream in(outp);
    std::stringstream ss;
    ss << in.rdbuf();
    CHECK(ss.str() == a.out);
}

TEST_CASE("bench writes CSV rows and a slope line") {
    Run r = run({"bench", "-p", "C4", "--sizes", "2^7..2^10", "--brute", "--seed", "2"});
    REQUIRE(r.code == 0);
    auto ls = lines(r.out);
    REQUIRE(ls.size() == 6);
    CHECK(ls[0] == "pattern,m,t,wall_ms,counter,brute_ms,brute_counter");
    CHECK(ls[1].rfind("C4,", 0) == 0);
    CHECK(ls[5].rfind("# slope C4 counter=", 0) == 0);
    CHECK(ls[5].find("brute_counter=") != std::string::npos);
    Run few = run({"bench", "-p", "C4", "--sizes", "100,200"});
    CHECK(few.out.find("needs at least 4 sizes") != std::string::npos);
}
