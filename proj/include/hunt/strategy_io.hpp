#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "hunt/game.hpp"
#include "hunt/solver.hpp"

namespace hunt {

// {"hunters":K,"respect":"all"|[...],"rounds":[[...],...]} on one line with a
// trailing newline. Keys in that order, every array ascending, so equal
// strategies serialise to identical bytes.
std::string strategy_to_json(const Strategy& s);
Strategy strategy_from_json(std::string_view text);

Strategy load_strategy(const std::string& path);
void save_strategy(const std::string& path, const Strategy& s);

// {"k":..,"explored_states":..,"frontier_peak":..,"component":..}
std::string certificate_to_json(const Certificate& c);
std::string certificates_to_json(const std::vector<Certificate>& cs);

}  // namespace hunt
