#pragma once

#include <string>

#include "hh/classify.hpp"
#include "hh/game.hpp"
#include "hh/linear_system.hpp"
#include "hh/rank_oracle.hpp"

namespace hh {

// Interchange forms.  LinearSystem: {"d": int, "m": [int,...]} with m sorted
// descending.  Strategy: list of {"place":{"m":..,"corner":".."}} and
// {"slide":{"family":"constI|constJ|constK","target":".."}} objects.

std::string to_json(const LinearSystem& sys);
LinearSystem system_from_json(const std::string& text);

std::string to_json(const Strategy& strat);
// Accepts either a bare move array or an object with a "moves" key.
Strategy strategy_from_json(const std::string& text);

std::string to_json(const OracleVerdict& v);

// One JSONL record: {"sys":{...},"class":"..","method":"..","dim":..,"cert":{..}}
std::string verdict_to_json(const Verdict& v);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

}  // namespace hh
