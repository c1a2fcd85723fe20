#pragma once

#include <string>

#include "fairgame/fairness.hpp"
#include "fairgame/game.hpp"
#include "fairgame/modelc.hpp"
#include "fairgame/sim.hpp"
#include "fairgame/solver.hpp"

namespace fairgame {

// Canonical JSON emission. Field order is fixed and floating point uses 17
// significant digits, so identical inputs yield identical bytes on every
// host; the library's own parser round-trips them exactly. Parsing accepts
// any field order.

// {"n":…,"initial":…,"vertices":[{"id":…,"class":…,"reward":…,"succ":[[id,p],…]},…]}
std::string game_to_json(const GameGraph& game);

// Accepts plain game JSON as well as compiled-model JSON (the extra "states"
// member is ignored).
GameGraph game_from_json(const std::string& text);

// Game JSON extended with "states": vertex id to valuation object, or to a
// source/command tag for the vertices introduced by branching commands.
std::string compiled_to_json(const modelc::CompiledGame& compiled);

// {"values":{id:v},"sigma1":{id:id},"sigma2":{id:id},"iterations":…,
//  "residual":…,"upper_bound":{id:v},"converged":…}
std::string solution_to_json(const Solution& solution);
Solution solution_from_json(const std::string& text, const GameGraph& game);

// {"stopping_under_fairness":…,"witness":[ids],"almost_sure":[ids]}
std::string stopping_report_to_json(const StoppingReport& report);

// {"mean":…,"stderr":…,"episodes":…,"termination_rate":…}
std::string estimate_to_json(const Estimate& estimate);

// {"values":{id:v},"stopping":…}
std::string oracle_result_to_json(const ValueVector& values, bool stopping);

// Shortest-width decimal form with 17 significant digits ("%.17g").
std::string format_double(double x);

}  // namespace fairgame
