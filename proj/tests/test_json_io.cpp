#include "support.hpp"

#include "pangram/corpus.hpp"
#include "pangram/error.hpp"
#include "pangram/json_io.hpp"

using namespace test;

namespace {

std::string input_error(const std::string& text) {
    try {
        acceptor_from_json(parse_json(text));
    } catch (const InputError& e) {
        return e.what();
    }
    return "";
}

} // namespace

TEST_CASE("documents round-trip") {
    Corpus c(67);
    Alphabet ab{"a", "b"};
    std::vector<Acceptor> docs{pangram_dfa(ab),
                               non_pangram_nfa(ab),
                               grammar("ab", "S -> a S b | eps"),
                               c.random_slt2(3),
                               c.random_spt2(3, 3),
                               Acceptor::finite_dfa(perfect_to_pangram(pangram_dfa(ab))),
                               Acceptor::cofinite_dfa(to_cofinite(pangram_dfa(ab)))};
    for (int i = 0; i < 20; ++i) {
        docs.emplace_back(c.random_dfa(2, 4));
        docs.emplace_back(c.random_finite_cfg(3, 3, 5));
    }
    for (const auto& a : docs) {
        const Json j = to_json(a);
        CHECK(acceptor_from_json(parse_json(j.dump())) == a);
        CHECK(to_json(acceptor_from_json(j)) == j);
    }
    auto g = c.random_graph(4);
    CHECK(graph_from_json(to_json(g)) == g);
    auto b = c.random_betweenness(5, 3);
    CHECK(betweenness_from_json(to_json(b)) == b);
}

TEST_CASE("partial transition relations gain a sink") {
    auto a = acceptor_from_json(parse_json(R"({"kind":"dfa","alphabet":["a","b"],"states":["p"],
        "initial":"p","accepting":["p"],"transitions":[{"from":"p","symbol":"a","to":"p"}]})"));
    const Dfa& x = *a.as<Dfa>();
    CHECK(x.state_count() == 2);
    CHECK(x.state_name(1) == "sink");
}

TEST_CASE("input errors name the offending field") {
    CHECK(input_error("{").find("invalid JSON") != std::string::npos);
    CHECK(input_error(R"({"alphabet":["a"]})").find("kind") != std::string::npos);
    CHECK(input_error(R"({"kind":"pda"})").find("document.kind") != std::string::npos);
    CHECK(input_error(R"({"kind":"dfa","alphabet":["a"],"states":["p"],"accepting":[],"transitions":[]})")
              .find("initial") != std::string::npos);
    CHECK(input_error(R"({"kind":"dfa","alphabet":["a"],"states":["p"],"initial":"p","accepting":[],
        "transitions":[{"from":"p","symbol":"z","to":"p"}]})")
              .find("dfa.transitions.symbol") != std::string::npos);
    CHECK(input_error(R"({"kind":"cfg","terminals":["a"],"nonterminals":["S"],"start":"S",
        "rules":[{"lhs":"S","rhs":["b"]}]})")
              .find("b") != std::string::npos);
    CHECK(input_error(R"({"kind":"slt","k":2,"alphabet":["a"],"prefixes":[["a","a"]],"infixes":[],"suffixes":[]})")
              .find("prefix") != std::string::npos);
    CHECK(input_error(R"({"kind":"spt","k":"two","alphabet":["a"],"forbidden":[]})").find("spt.k") !=
          std::string::npos);
    CHECK(input_error(R"({"kind":"spt","k":2,"alphabet":["a"],"forbidden":[["q"]]})").find("spt.forbidden") !=
          std::string::npos);
    CHECK(input_error(R"({"kind":"nfa","tags":["finite"],"alphabet":["a"],"states":["p"],"initials":["p"],
        "accepting":["p"],"transitions":[]})")
              .find("tag") != std::string::npos);
    CHECK(input_error(R"({"kind":"dfa","tags":["finite"],"alphabet":["a"],"states":["p"],"initial":"p",
        "accepting":["p"],"transitions":[{"from":"p","symbol":"a","to":"p"}]})")
              .find("finite") != std::string::npos);
    CHECK(input_error(R"({"kind":"dfa","tags":["small"],"alphabet":["a"],"states":["p"],"initial":"p",
        "accepting":[],"transitions":[]})")
              .find("document.tags") != std::string::npos);
    CHECK_THROWS_AS(graph_from_json(parse_json(R"({"nodes":["1"],"edges":[["1"]]})")), InputError);
    CHECK_THROWS_AS(betweenness_from_json(parse_json(R"({"elements":["a","b","c"],"constraints":[["a","b","d"]]})")),
                    InputError);
}

TEST_CASE("decision rendering") {
    Alphabet ab{"a", "b"};
    Json yes = decision_to_json({Problem::contains_pangram, CellKind::decided, Verdict::yes(w(ab, "ab"))}, ab);
    CHECK(yes["answer"] == true);
    CHECK(yes["witness"] == Json::array({"a", "b"}));
    CHECK(yes["witness_text"] == "ab");
    Json trivial = decision_to_json({Problem::contains_pangram, CellKind::trivial, Verdict::yes()}, ab);
    CHECK(trivial["answer"] == "trivial-true");
    CHECK_FALSE(trivial.contains("witness"));
    Json undecidable =
        decision_to_json({Problem::covers_pangrams, CellKind::undecidable, Verdict::no(std::nullopt, "x")}, ab);
    CHECK(undecidable == Json{{"problem", "covers-pangrams"}, {"answer", "undecidable"}});
    Alphabet multi{"u", "10"};
    Json m = decision_to_json({Problem::contains_pangram, CellKind::decided, Verdict::yes(Word{0, 1})}, multi);
    CHECK(m["witness"] == Json::array({"u", "10"}));
    CHECK_FALSE(m.contains("witness_text"));
}
