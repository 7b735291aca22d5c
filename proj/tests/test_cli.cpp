#include "support.hpp"

#include <fstream>

#include "cli_support.hpp"
#include "pangram/deciders.hpp"
#include "pangram/error.hpp"

using namespace test;

TEST_CASE("decide prints one JSON object") {
    ScratchDir dir("decide");
    const auto path = dir.write("p.json", to_json(pangram_dfa(Alphabet{"a", "b"})));
    auto r = run_cli({"decide", "contains-pangram", path});
    CHECK(r.code == 0);
    CHECK(r.err.empty());
    auto j = r.json();
    CHECK(j["problem"] == "contains-pangram");
    CHECK(j["answer"] == true);
    CHECK(j["witness"] == Json::array({"a", "b"}));
}

TEST_CASE("reduced path graph decides with its Hamiltonian path") {
    ScratchDir dir("path");
    const auto graph = dir.write("g.json", Json::parse(R"({"nodes":["1","2","3"],"edges":[["1","2"],["2","3"]]})"));
    auto r = run_cli({"reduce", "hamiltonian-to-perfect-pangram-dfa", graph, dir.file("h.json")});
    REQUIRE(r.code == 0);
    auto d = run_cli({"decide", "contains-perfect-pangram", dir.file("h.json")}).json();
    CHECK(d["answer"] == true);
    CHECK(d["witness"] == Json::array({"1", "2", "3"}));

    auto slt = run_cli({"reduce", "hamiltonian-to-3slt", graph, dir.file("s.json")});
    REQUIRE(slt.code == 0);
    CHECK(slt.json()["map"] == dir.file("s.json") + ".map.json");
    auto map = read_json_file(dir.file("s.json.map.json"));
    CHECK(map["counters"] == Json::array({"#1", "#2", "#3"}));
    auto s = run_cli({"decide", "contains-pangram", dir.file("s.json")}).json();
    CHECK(s["witness"] == Json::array({"1", "#1", "2", "#2", "3", "#3"}));
    CHECK_FALSE(s.contains("witness_text"));
    auto o = run_cli({"oracle", "hamiltonian", graph}).json();
    CHECK(o["witness"] == Json::array({"1", "2", "3"}));
}

TEST_CASE("table outcomes") {
    ScratchDir dir("table");
    auto cfg = dir.write("g.json", Json::parse(R"({"kind":"cfg","terminals":["a","b"],"nonterminals":["S"],
        "start":"S","rules":[{"lhs":"S","rhs":["a","S","b"]},{"lhs":"S","rhs":[]}]})"));
    auto u = run_cli({"decide", "covers-pangrams", cfg});
    CHECK(u.code == 0);
    CHECK(u.json() == Json{{"problem", "covers-pangrams"}, {"answer", "undecidable"}});
    auto cof = dir.write("c.json", to_json(Acceptor::cofinite_dfa(to_cofinite(empty_dfa(Alphabet{"a", "b"})))));
    auto t = run_cli({"decide", "contains-pangram", cof}).json();
    CHECK(t["answer"] == "trivial-true");
}

TEST_CASE("every table cell has the documented outcome kind") {
    ScratchDir dir("matrix");
    const auto docs = table_documents();
    REQUIRE(docs.size() == std::size(summary_table));
    for (std::size_t row = 0; row < docs.size(); ++row) {
        const auto path = dir.write("doc" + std::to_string(row) + ".json", docs[row]);
        for (std::size_t col = 0; col < all_problems.size(); ++col) {
            CAPTURE(summary_table[row].label);
            CAPTURE(to_string(all_problems[col]));
            auto r = run_cli({"decide", std::string(to_string(all_problems[col])), path});
            REQUIRE(r.code == 0);
            CHECK(outcome_kind(r.json()) == summary_table[row].cells[col]);
        }
    }
}

TEST_CASE("canon and minimize") {
    ScratchDir dir("canon");
    auto r = run_cli({"canon", "pangram-dfa", "--alphabet", "a,b,c"});
    REQUIRE(r.code == 0);
    auto j = r.json();
    CHECK(j["states"].size() == 8);
    const auto path = dir.write("p.json", j);
    auto m = run_cli({"minimize", path}).json();
    CHECK(m["states"].size() == 8);
    const auto mpath = dir.write("m.json", m);
    CHECK(run_cli({"minimize", mpath}).json() == m);
    CHECK(run_cli({"minimize", mpath, dir.file("out.json")}).json()["states"] == 8);
    CHECK(read_json_file(dir.file("out.json")) == m);

    auto multi = run_cli({"canon", "non-pangram-nfa", "--alphabet", "u,10"}).json();
    CHECK(multi["alphabet"] == Json::array({"u", "10"}));
    CHECK(run_cli({"canon", "perfect-pangram-dfa", "--alphabet", "a,b,c"}).json()["states"].size() == 9);
    CHECK(run_cli({"canon", "exact-length-dfa", "--alphabet", "a", "--length", "3"}).json()["states"].size() == 5);
    CHECK(run_cli({"canon", "not-prefixed-dfa", "--alphabet", "a,b", "--word", "a,b"}).code == 0);
    CHECK(run_cli({"canon", "not-prefixed-dfa", "--alphabet", "a,b"}).code == 2);
    CHECK(run_cli({"canon", "nope", "--alphabet", "a"}).code == 2);
}

TEST_CASE("reduce betweenness-to-3spt emits four forbidden words") {
    ScratchDir dir("btw");
    const auto in = dir.write("b.json", Json::parse(R"({"elements":["a","b","c"],"constraints":[["a","b","c"]]})"));
    REQUIRE(run_cli({"reduce", "betweenness-to-3spt", in, dir.file("s.json")}).code == 0);
    auto s = read_json_file(dir.file("s.json"));
    CHECK(s["forbidden"].size() == 4);
    auto d = run_cli({"decide", "contains-pangram", dir.file("s.json")}).json();
    CHECK(d["witness_text"] == "abc");
    CHECK(run_cli({"oracle", "betweenness", in}).json()["answer"] == true);
}

TEST_CASE("every emitted file re-parses to an equal value") {
    ScratchDir dir("roundtrip");
    const auto dfa = dir.write("x.json", to_json(pangram_dfa(Alphabet{"a", "b"})));
    const auto cfg = dir.write("g.json", to_json(dfa_to_cfg(pangram_dfa(Alphabet{"a", "b"}))));
    const auto graph = dir.write("gr.json", Json::parse(R"({"nodes":["u","v"],"edges":[["u","v"]]})"));
    const std::vector<std::vector<std::string>> runs{
        {"reduce", "perfect-to-pangram", dfa, dir.file("o1.json")},
        {"reduce", "to-cofinite", dfa, dir.file("o2.json")},
        {"reduce", "universality-to-pangram-cover", cfg, dir.file("o3.json")},
        {"reduce", "hamiltonian-to-3slt", graph, dir.file("o4.json")},
    };
    for (const auto& args : runs) {
        REQUIRE(run_cli(args).code == 0);
        const auto j = read_json_file(args.back());
        CHECK(to_json(acceptor_from_json(j)) == j);
    }
    CHECK(acceptor_from_json(read_json_file(dir.file("o1.json"))).finite);
    CHECK(acceptor_from_json(read_json_file(dir.file("o2.json"))).cofinite);
    CHECK_FALSE(std::filesystem::exists(dir.file("o4.json.map.json")));
}

TEST_CASE("oracle verb") {
    ScratchDir dir("oracle");
    const auto path = dir.write("p.json", to_json(perfect_pangram_dfa(Alphabet{"a", "b"})));
    auto r = run_cli({"oracle", "covers-pangrams", path, "--max-len", "4"}).json();
    CHECK(r["answer"] == false);
    CHECK(r["witness_text"] == "aab");
    CHECK(run_cli({"oracle", "contains-pangram", path, "--max-len", "30"}).code == 3);
}

TEST_CASE("generate is seeded") {
    auto a = run_cli({"generate", "dfa", "--seed", "5", "--alphabet", "2", "--size", "3"});
    auto b = run_cli({"generate", "dfa", "--seed", "5", "--alphabet", "2", "--size", "3"});
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    CHECK(run_cli({"generate", "dfa", "--seed", "6", "--alphabet", "2", "--size", "3"}).out != a.out);
    for (const char* what : {"graph", "betweenness", "slt2", "spt2", "cfg"}) {
        CHECK(run_cli({"generate", what, "--seed", "1", "--alphabet", "3"}).code == 0);
    }
    CHECK(run_cli({"generate", "cfg", "--count", "3"}).json().size() == 3);
}

TEST_CASE("exit codes and diagnostics") {
    ScratchDir dir("errors");
    const auto bad = dir.file("bad.json");
    {
        std::ofstream(bad) << "{ not json";
    }
    auto r = run_cli({"decide", "contains-pangram", bad});
    CHECK(r.code == 2);
    CHECK(r.out.empty());
    CHECK(r.err.find("invalid JSON") != std::string::npos);
    CHECK(run_cli({"decide", "contains-pangram", dir.file("missing.json")}).code == 2);
    const auto path = dir.write("p.json", to_json(pangram_dfa(Alphabet{"a", "b", "c", "d", "e"})));
    CHECK(run_cli({"decide", "nonsense", path}).code == 2);
    auto capped = run_cli({"--bitmask-cap", "3", "decide", "contains-pangram", path});
    CHECK(capped.code == 3);
    CHECK(capped.err.find("limit") != std::string::npos);
    CHECK(run_cli({"--budget", "2", "decide", "contains-pangram", path}).code == 3);
    CHECK(run_cli({"--permutation-cap", "3", "decide", "covers-perfect-pangrams", path}).code == 3);
    CHECK(run_cli({"frobnicate"}).code == 2);
    CHECK(run_cli({}).code == 2);
    CHECK(run_cli({"--help"}).code == 0);
}
