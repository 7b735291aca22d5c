#include "support.hpp"

#include "pangram/corpus.hpp"
#include "pangram/deciders.hpp"
#include "pangram/error.hpp"
#include "pangram/reductions.hpp"

using namespace test;

namespace {

Graph path3() { return Graph::from_names({"1", "2", "3"}, {{"1", "2"}, {"2", "3"}}); }

bool is_path(const Graph& g, const Word& order) {
    if (order.size() != g.size()) {
        return false;
    }
    for (std::size_t i = 0; i + 1 < order.size(); ++i) {
        if (!g.has_edge(order[i], order[i + 1])) {
            return false;
        }
    }
    return true;
}

} // namespace

TEST_CASE("hamiltonian_to_perfect_pangram_dfa") {
    auto x = hamiltonian_to_perfect_pangram_dfa(path3());
    CHECK(x.state_count() == 5);
    auto v = contains_perfect_pangram(x);
    CHECK(v.answer);
    CHECK(x.alphabet().render(*v.witness) == "123");
    CHECK(hamiltonian_bruteforce(path3()).answer);

    auto edgeless = Graph::from_names({"1", "2"}, {});
    CHECK_FALSE(contains_perfect_pangram(hamiltonian_to_perfect_pangram_dfa(edgeless)).answer);

    auto k3 = graph_from_mask(3, 0b111111);
    auto all = hamiltonian_to_perfect_pangram_dfa(k3);
    CHECK(contains_perfect_pangram(all).witness == Word{0, 1, 2});
    std::size_t accepted = 0;
    Word perm{0, 1, 2};
    do {
        accepted += accepts(all, perm);
    } while (std::next_permutation(perm.begin(), perm.end()));
    CHECK(accepted == 6);
    // Node names that collide with the helper states are renamed there.
    auto clash = Graph::from_names({"q_src", "q_fail"}, {{"q_src", "q_fail"}});
    auto y = hamiltonian_to_perfect_pangram_dfa(clash);
    CHECK(y.state_name(0) == "q_src_1");
    CHECK(y.state_name(3) == "q_fail_1");
}

TEST_CASE("hamiltonian reduction agrees with brute force on small graphs") {
    for (std::size_t n = 1; n <= 3; ++n) {
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << (n * (n - 1))); ++mask) {
            auto g = graph_from_mask(n, mask);
            const bool truth = hamiltonian_bruteforce(g).answer;
            auto v = contains_perfect_pangram(hamiltonian_to_perfect_pangram_dfa(g));
            CHECK(v.answer == truth);
            if (v.witness) {
                CHECK(is_path(g, *v.witness));
            }
            auto r = hamiltonian_to_3slt(g);
            auto s = contains_pangram(r.spec);
            CHECK(s.answer == truth);
            if (s.witness) {
                CHECK(slt_member(r.spec, *s.witness));
                CHECK(is_pangram(*s.witness, r.spec.alphabet()));
                CHECK(is_path(g, Alphabet(g.nodes()).encode(r.path_of(*s.witness))));
            }
        }
    }
}

TEST_CASE("hamiltonian_to_3slt examples") {
    auto uv = Graph::from_names({"u", "v"}, {{"u", "v"}});
    auto r = hamiltonian_to_3slt(uv);
    CHECK_FALSE(r.renamed);
    CHECK(r.counters == std::vector<std::string>{"1", "2"});
    const Word path = r.spec.alphabet().encode(std::vector<std::string>{"u", "1", "v", "2"});
    CHECK(slt_member(r.spec, path));
    CHECK(is_pangram(path, r.spec.alphabet()));
    CHECK(contains_pangram(r.spec).witness == path);
    CHECK(seen_set_search(to_nfa(slt_to_dfa(r.spec)), false).answer);

    auto single = hamiltonian_to_3slt(Graph::from_names({"v"}, {}));
    const Word v1 = single.spec.alphabet().encode(std::vector<std::string>{"v", "1"});
    CHECK(slt_member(single.spec, v1));
    CHECK(contains_pangram(single.spec).witness == v1);

    auto numeric = hamiltonian_to_3slt(path3());
    CHECK(numeric.renamed);
    CHECK(numeric.counters == std::vector<std::string>{"#1", "#2", "#3"});
    auto hash = hamiltonian_to_3slt(Graph::from_names({"1", "#1"}, {{"1", "#1"}}));
    CHECK(hash.counters == std::vector<std::string>{"##1", "##2"});
}

TEST_CASE("perfect_to_pangram and to_cofinite") {
    Alphabet ab{"a", "b"};
    auto cut = perfect_to_pangram(universal_dfa(ab));
    CHECK(enumerate_language(cut, 4) == std::vector<Word>{w(ab, "aa"), w(ab, "ab"), w(ab, "ba"), w(ab, "bb")});
    CHECK(is_finite_language(cut));
    Alphabet a{"a"};
    auto cof = to_cofinite(empty_dfa(a));
    all_words(1, 5, [&](const Word& u) { CHECK(accepts(cof, u) == (u != Word{0})); });

    Corpus c(47);
    for (int i = 0; i < 300; ++i) {
        const std::size_t n = c.uniform(1, 3);
        auto x = c.random_dfa(n, c.uniform(1, 4));
        const bool truth = contains_perfect_pangram_bruteforce(x).answer;
        auto p = perfect_to_pangram(x);
        CHECK(contains_pangram(p).answer == truth);
        CHECK(is_finite_language(p));
        auto y = to_cofinite(x);
        CHECK(contains_perfect_pangram(y).answer == truth);
        CHECK(is_finite_language(complement_dfa(y)));
        std::size_t rejected = 0;
        all_words(n, n + 1, [&](const Word& u) {
            if (!accepts(y, u)) {
                CHECK(u.size() == n);
                ++rejected;
            }
        });
        CHECK(rejected <= std::pow(n, n));
    }
}

TEST_CASE("betweenness_to_3spt") {
    Alphabet abc{"a", "b", "c"};
    BetweennessInstance one(abc, {{0, 1, 2}});
    auto s = betweenness_to_3spt(one);
    CHECK(s.forbidden() == std::set<Word>{w(abc, "acb"), w(abc, "cab"), w(abc, "bac"), w(abc, "bca")});
    auto v = contains_pangram(s);
    CHECK(v.answer);
    CHECK(v.witness == w(abc, "abc"));
    CHECK(betweenness_bruteforce(one).witness == w(abc, "abc"));

    BetweennessInstance two(abc, {{0, 1, 2}, {1, 0, 2}});
    CHECK(contains_pangram(betweenness_to_3spt(two)).answer == betweenness_bruteforce(two).answer);
    CHECK_FALSE(betweenness_bruteforce(two).answer);

    BetweennessInstance none(abc, {});
    CHECK(contains_pangram(betweenness_to_3spt(none)).witness == Word{0, 1, 2});
    CHECK_THROWS_AS(BetweennessInstance(abc, {{0, 0, 1}}), InputError);

    Corpus c(53);
    for (int i = 0; i < 200; ++i) {
        auto b = c.random_betweenness(c.uniform(3, 6), c.uniform(0, 5));
        auto r = contains_pangram(betweenness_to_3spt(b));
        CHECK(r.answer == betweenness_bruteforce(b).answer);
        if (r.witness) {
            CHECK(is_perfect_pangram(*r.witness, b.elements));
        }
    }
}

TEST_CASE("universality_to_pangram_cover") {
    // Bounded check: the cover holds all pangrams up to 6 iff g holds all words up to 4.
    Corpus c(59);
    std::vector<Cfg> grammars{grammar("ab", "S -> a S | b S | eps"), grammar("ab", "S -> a S"),
                              grammar("ab", "S -> a S | b S | a | b")};
    for (int i = 0; i < 40; ++i) {
        grammars.push_back(c.random_finite_cfg(2, 3, 4));
        grammars.push_back(dfa_to_cfg(c.random_dfa(2, 2, 0.8)));
    }
    for (const auto& g : grammars) {
        auto h = universality_to_pangram_cover(g);
        CykParser in_g(g);
        CykParser in_h(h);
        bool g_universal = true;
        all_words(2, 4, [&](const Word& u) { g_universal &= in_g.accepts(u); });
        bool covers = true;
        all_words(2, 6, [&](const Word& u) {
            if (is_pangram(u, g.terminals())) {
                covers &= in_h.accepts(u);
            }
        });
        CHECK(covers == g_universal);
    }
    auto empty = universality_to_pangram_cover(grammar("ab", "S -> a S"));
    CHECK_FALSE(cyk_member(empty, Word{0, 1}));
    CHECK(cyk_member(empty, Word{1, 0}));
}
