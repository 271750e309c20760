#pragma once

#include <string>

#include <json.hpp>

#include "spl/agents/heuristic.hpp"
#include "spl/engine/agent.hpp"

namespace spl {

/// Builds an agent from `{"kind": "RND|OSLA|BMRH|SRH|MCTS", <hyper-parameters>}`.
/// Suffixing the kind with '*' (e.g. "BMRH*") selects the tuned defaults;
/// explicit keys still override them. A bare string is accepted as the kind.
AgentPtr make_agent(const nlohmann::json& spec, Heuristic heuristic = prestige_heuristic);

/// Short label for reports, e.g. "BMRH*" or "MCTS".
std::string agent_label(const nlohmann::json& spec);

}  // namespace spl
