#include "support.hpp"

#include "pangram/corpus.hpp"
#include "pangram/error.hpp"
#include "pangram/reductions.hpp"

using namespace test;

TEST_CASE("for_each_word is length-lex and respects the cap") {
    std::vector<Word> seen;
    for_each_word(2, 2, Limits{}, [&](const Word& u) {
        seen.push_back(u);
        return true;
    });
    CHECK(seen == std::vector<Word>{{}, {0}, {1}, {0, 0}, {0, 1}, {1, 0}, {1, 1}});
    std::size_t visited = 0;
    for_each_word(3, 5, Limits{}, [&](const Word&) { return ++visited < 10; });
    CHECK(visited == 10);
    Limits tight;
    tight.max_enumeration = 6;
    CHECK_THROWS_AS(for_each_word(2, 2, tight, [](const Word&) { return true; }), SizeLimitError);
    CHECK_THROWS_AS(for_each_word(26, 40, Limits{}, [](const Word&) { return true; }), SizeLimitError);
}

TEST_CASE("enumerate_language") {
    Alphabet ab{"a", "b"};
    CHECK(enumerate_language(pangram_dfa(ab), 2) == std::vector<Word>{w(ab, "ab"), w(ab, "ba")});
    CHECK(enumerate_language(empty_dfa(ab), 3).empty());
    Alphabet a{"a"};
    CHECK(enumerate_language(universal_dfa(a), 1) == std::vector<Word>{{}, {0}});
    auto g = grammar("ab", "S -> a S b | a b");
    CHECK(enumerate_language(g, 4) == std::vector<Word>{w(ab, "ab"), w(ab, "aabb")});
}

TEST_CASE("bruteforce verdicts") {
    Alphabet ab{"a", "b"};
    CHECK_FALSE(contains_pangram_bruteforce(empty_dfa(ab), 4).answer);
    auto p = contains_pangram_bruteforce(pangram_dfa(ab), 4);
    CHECK(p.answer);
    CHECK(p.witness == w(ab, "ab"));
    CHECK(contains_perfect_pangram_bruteforce(pangram_dfa(ab)).witness == w(ab, "ab"));
    CHECK(covers_pangrams_bruteforce(perfect_pangram_dfa(ab), 4).witness == w(ab, "aab"));
    CHECK(covers_perfect_pangrams_bruteforce(perfect_pangram_dfa(ab)).answer);
    CHECK(all_pangrams_bruteforce(pangram_dfa(ab), 5).answer);
    CHECK(all_perfect_pangrams_bruteforce(pangram_dfa(ab), 5).witness == w(ab, "aab"));
}

TEST_CASE("hamiltonian and betweenness brute force") {
    auto path = Graph::from_names({"1", "2", "3"}, {{"1", "2"}, {"2", "3"}});
    auto v = hamiltonian_bruteforce(path);
    CHECK(v.answer);
    CHECK(v.witness == Word{0, 1, 2});
    CHECK_FALSE(hamiltonian_bruteforce(Graph::from_names({"1", "2"}, {})).answer);
    CHECK_THROWS_AS(hamiltonian_bruteforce(graph_from_mask(11, 0)), SizeLimitError);

    Alphabet abc{"a", "b", "c"};
    auto b = betweenness_bruteforce(BetweennessInstance(abc, {{0, 1, 2}}));
    CHECK(b.answer);
    CHECK(b.witness == Word{0, 1, 2});
    // The order reversed also satisfies; c a b does not.
    BetweennessInstance cab(abc, {{2, 0, 1}});
    CHECK(betweenness_bruteforce(cab).witness == Word{1, 0, 2});
}

TEST_CASE("derive_words matches CYK") {
    Corpus c(61);
    for (int i = 0; i < 60; ++i) {
        auto g = c.random_finite_cfg(2, 4, 5);
        auto derived = derive_words(g, 5);
        std::set<Word> parsed;
        for (const auto& u : enumerate_language(g, 5)) {
            parsed.insert(u);
        }
        CHECK(derived == parsed);
    }
}

TEST_CASE("validate_witness") {
    Alphabet ab{"a", "b"};
    const Acceptor p = pangram_dfa(ab);
    CHECK(validate_witness(Problem::contains_pangram, p, Verdict::yes(w(ab, "ab"))));
    std::string why;
    CHECK_FALSE(validate_witness(Problem::contains_pangram, p, Verdict::yes(w(ab, "aa")), &why));
    CHECK_FALSE(why.empty());
    CHECK_FALSE(validate_witness(Problem::contains_perfect_pangram, p, Verdict::yes(w(ab, "aab"))));
    CHECK(validate_witness(Problem::all_perfect_pangrams, p, Verdict::no(w(ab, "aab"))));
    CHECK_FALSE(validate_witness(Problem::all_perfect_pangrams, p, Verdict::no(w(ab, "ab"))));
    const Acceptor e = perfect_pangram_dfa(ab);
    CHECK(validate_witness(Problem::covers_pangrams, e, Verdict::no(w(ab, "aab"))));
    CHECK_FALSE(validate_witness(Problem::covers_pangrams, e, Verdict::no(w(ab, "ab"))));
    CHECK_FALSE(validate_witness(Problem::covers_pangrams, e, Verdict::no(w(ab, "aa"))));
    CHECK_FALSE(validate_witness(Problem::contains_pangram, p, Verdict::yes(Word{5})));
    CHECK(validate_witness(Problem::contains_pangram, p, Verdict::yes()));
}

TEST_CASE("validate_witness handles long words of right-linear grammars") {
    Alphabet ab{"a", "b"};
    auto g = dfa_to_cfg(pangram_dfa(ab));
    Word long_word(5000, 0);
    long_word.push_back(1);
    CHECK(validate_witness(Problem::all_perfect_pangrams, g, Verdict::no(long_word)));
    Word missing_b(5000, 0);
    CHECK_FALSE(validate_witness(Problem::all_perfect_pangrams, g, Verdict::no(missing_b)));
    // Agreement with CYK on short words, including rules with several terminals.
    auto mixed = grammar("ab", "S -> a b S | b | eps ; T -> a");
    all_words(2, 6, [&](const Word& u) {
        const bool in = cyk_member(mixed, u);
        CHECK(validate_witness(Problem::all_pangrams, mixed, Verdict::no(u)) == (in && !is_pangram(u, ab)));
    });
}
