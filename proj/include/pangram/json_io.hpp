#pragma once

#include <string>
#include <string_view>

#include <json.hpp>

#include "pangram/acceptor.hpp"
#include "pangram/deciders.hpp"
#include "pangram/reductions.hpp"

namespace pangram {

using Json = nlohmann::ordered_json;

/// Parses JSON text; syntax errors become InputError naming `source`.
Json parse_json(std::string_view text, std::string_view source = "input");
Json read_json_file(const std::string& path);
void write_json_file(const std::string& path, const Json& j);

Dfa dfa_from_json(const Json& j);
Nfa nfa_from_json(const Json& j);
Cfg cfg_from_json(const Json& j);
SltSpec slt_from_json(const Json& j);
SptSpec spt_from_json(const Json& j);
Graph graph_from_json(const Json& j);
BetweennessInstance betweenness_from_json(const Json& j);

/// Tagged document {"kind": ..., "tags": [...]?, ...body}. Tags are validated.
Acceptor acceptor_from_json(const Json& j);

Json to_json(const Dfa& x);
Json to_json(const Nfa& x);
Json to_json(const Cfg& g);
Json to_json(const SltSpec& s);
Json to_json(const SptSpec& s);
Json to_json(const Graph& g);
Json to_json(const BetweennessInstance& b);
/// Includes "kind" and, when set, "tags".
Json to_json(const Acceptor& a);

Json word_to_json(const Alphabet& sigma, const Word& w);

/// {problem, answer, witness?, witness_text?, witness_note?}. Trivial cells
/// render as "trivial-true"/"trivial-false", undecidable ones as "undecidable".
Json decision_to_json(const Decision& d, const Alphabet& sigma);
/// {problem, answer: bool, witness?, ...} for plain verdicts (oracle output).
Json verdict_to_json(Problem p, const Verdict& v, const Alphabet& sigma);

} // namespace pangram
