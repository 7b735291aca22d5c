#pragma once

#include <cstdint>
#include <filesystem>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "pangram/json_io.hpp"
#include "pangram/reductions.hpp"

namespace test {

struct CliResult {
    int code;
    std::string out;
    std::string err;

    pangram::Json json() const { return pangram::parse_json(out, "stdout"); }
};

inline CliResult run_cli(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = pangram::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

/// A scratch directory removed on destruction.
class ScratchDir {
  public:
    explicit ScratchDir(const std::string& tag) {
        path_ = std::filesystem::temp_directory_path() /
                ("pangram_" + tag + "_" + std::to_string(reinterpret_cast<std::uintptr_t>(this)));
        std::filesystem::create_directories(path_);
    }
    ~ScratchDir() { std::filesystem::remove_all(path_); }
    ScratchDir(const ScratchDir&) = delete;
    ScratchDir& operator=(const ScratchDir&) = delete;

    std::string file(const std::string& name) const { return (path_ / name).string(); }
    std::string write(const std::string& name, const pangram::Json& j) const {
        pangram::write_json_file(file(name), j);
        return file(name);
    }

  private:
    std::filesystem::path path_;
};

/// Outcome kinds of the summary table, one row per class, columns in
/// all_problems order. 'd' decided, 't' trivial, 'u' undecidable.
struct TableRow {
    const char* label;
    const char* cells;
};

inline constexpr TableRow summary_table[] = {
    {"2-SLT", "ddttdd"}, {"3-SLT", "ddttdd"},    {"2-SPT", "ddtttt"}, {"3-SPT", "ddtttt"},
    {"CofinDFA", "tdddtt"}, {"FinDFA", "ddtddd"}, {"DFA", "dddddd"}, {"NFA", "dddddd"},
    {"CFG", "dduddd"},
};

inline char outcome_kind(const pangram::Json& decision) {
    const auto& a = decision.at("answer");
    if (a.is_boolean()) {
        return 'd';
    }
    const std::string s = a.get<std::string>();
    if (s == "undecidable") {
        return 'u';
    }
    return s.rfind("trivial-", 0) == 0 ? 't' : '?';
}

/// One representative document per summary-table row, in the same order.
inline std::vector<pangram::Json> table_documents() {
    using namespace pangram;
    const Alphabet ab{"a", "b"};
    const Alphabet abc{"a", "b", "c"};
    const Graph path = Graph::from_names({"1", "2", "3"}, {{"1", "2"}, {"2", "3"}});
    const Cfg anbn = Cfg::from_names(ab, {"S"}, "S", {{"S", {"a", "S", "b"}}, {"S", {"a", "b"}}});
    return {
        to_json(SltSpec(2, ab, {{0}}, {{0, 1}, {1, 0}}, {{1}})),
        to_json(hamiltonian_to_3slt(path).spec),
        to_json(SptSpec(2, abc, {{0, 1}})),
        to_json(betweenness_to_3spt(BetweennessInstance(abc, {{0, 1, 2}}))),
        to_json(Acceptor::cofinite_dfa(to_cofinite(pangram_dfa(ab)))),
        to_json(Acceptor::finite_dfa(perfect_to_pangram(pangram_dfa(abc)))),
        to_json(pangram_dfa(ab)),
        to_json(non_pangram_nfa(ab)),
        to_json(anbn),
    };
}

} // namespace test
