#include "support.hpp"

#include "pangram/error.hpp"
#include "pangram/names.hpp"

using namespace test;

TEST_CASE("alphabet rejects empty, blank and duplicate symbols") {
    CHECK_THROWS_AS(Alphabet(std::vector<std::string>{"a", "a"}), InputError);
    CHECK_THROWS_AS(Alphabet(std::vector<std::string>{""}), InputError);
    Alphabet empty;
    CHECK_THROWS_AS(empty.require_nonempty("test"), InputError);
    CHECK_THROWS_AS(is_pangram({}, empty), InputError);
}

TEST_CASE("alphabet encodes, decodes and renders") {
    Alphabet s{"a", "b"};
    CHECK(s.encode(std::vector<std::string>{"b", "a"}) == Word{1, 0});
    CHECK_THROWS_AS(s.letter("c"), InputError);
    CHECK(s.render(Word{0, 1, 1}) == "abb");
    Alphabet multi{"u", "10"};
    CHECK_FALSE(multi.single_character_symbols());
    CHECK(multi.render(Word{0, 1}) == "u 10");
    CHECK(multi.decode(Word{1}) == std::vector<std::string>{"10"});
    CHECK_THROWS_AS(s.check(Word{2}), InputError);
}

TEST_CASE("pangram predicates") {
    Alphabet ab{"a", "b"};
    CHECK(is_pangram(w(ab, "ab"), ab));
    CHECK(is_pangram(w(ab, "aab"), ab));
    CHECK_FALSE(is_pangram(w(ab, "aa"), ab));
    CHECK(is_perfect_pangram(w(ab, "ba"), ab));
    CHECK_FALSE(is_perfect_pangram(w(ab, "aab"), ab));
    Alphabet a{"a"};
    CHECK_FALSE(is_perfect_pangram({}, a));
}

TEST_CASE("perfect pangrams are pangrams of length |sigma|") {
    Alphabet abc{"a", "b", "c"};
    all_words(3, 5, [&](const Word& x) {
        CHECK(is_perfect_pangram(x, abc) == (is_pangram(x, abc) && x.size() == 3));
    });
}

TEST_CASE("subsequence") {
    Alphabet abc{"a", "b", "c"};
    CHECK(is_subsequence(w(abc, "ac"), w(abc, "abc")));
    CHECK_FALSE(is_subsequence(w(abc, "ca"), w(abc, "abc")));
    all_words(3, 3, [&](const Word& x) { CHECK(is_subsequence({}, x)); });
}

TEST_CASE("subsequence agrees with deletion sets") {
    // u is a subsequence of x iff u is obtained by keeping some subset of positions.
    all_words(2, 4, [&](const Word& x) {
        std::set<Word> kept;
        for (unsigned mask = 0; mask < (1u << x.size()); ++mask) {
            Word u;
            for (std::size_t i = 0; i < x.size(); ++i) {
                if (mask >> i & 1) {
                    u.push_back(x[i]);
                }
            }
            kept.insert(u);
        }
        all_words(2, 4, [&](const Word& u) { CHECK(is_subsequence(u, x) == kept.contains(u)); });
    });
}

TEST_CASE("letter mask") {
    CHECK(letter_mask({}) == 0);
    CHECK(letter_mask(Word{2, 0, 2}) == 0b101);
}

TEST_CASE("name allocator avoids taken names") {
    NameAllocator names({"sink", "sink_1"});
    CHECK(names.fresh("sink") == "sink_2");
    CHECK(names.fresh("dead") == "dead");
    CHECK(names.fresh("dead") == "dead_1");
}

TEST_CASE("step counter enforces the budget") {
    Limits limits;
    limits.step_budget = 3;
    StepCounter steps(limits, "test");
    steps.tick(3);
    CHECK_THROWS_AS(steps.tick(), BudgetExhausted);
    Limits unbounded;
    StepCounter free(unbounded, "test");
    free.tick(1'000'000);
    CHECK(free.used() == 1'000'000);
}

TEST_CASE("subsequence is a partial order compatible with length") {
    std::vector<Word> words;
    all_words(2, 3, [&](const Word& x) { words.push_back(x); });
    for (const auto& u : words) {
        CHECK(is_subsequence(u, u));
        for (const auto& v : words) {
            if (is_subsequence(u, v)) {
                CHECK(u.size() <= v.size());
                for (const auto& x : words) {
                    if (is_subsequence(v, x)) {
                        CHECK(is_subsequence(u, x));
                    }
                }
            }
        }
    }
}

TEST_CASE("perfect pangrams are pangrams") {
    for (std::size_t n = 1; n <= 3; ++n) {
        const Alphabet s = [&] {
            std::vector<std::string> v;
            for (std::size_t i = 0; i < n; ++i) {
                v.emplace_back(1, static_cast<char>('a' + i));
            }
            return Alphabet(v);
        }();
        all_words(n, 4, [&](const Word& x) {
            if (is_perfect_pangram(x, s)) {
                CHECK(is_pangram(x, s));
            }
        });
    }
}
