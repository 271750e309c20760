#include "spl/agents/factory.hpp"

#include "spl/agents/basic.hpp"
#include "spl/agents/mcts.hpp"
#include "spl/agents/rolling_horizon.hpp"
#include "spl/core/errors.hpp"

namespace spl {
namespace {

using nlohmann::json;

std::string kind_of(const json& spec) {
  if (spec.is_string()) return spec.get<std::string>();
  if (!spec.is_object() || !spec.contains("kind") || !spec["kind"].is_string())
    throw UsageError("agent spec needs a string \"kind\"");
  return spec["kind"].get<std::string>();
}

json params_of(const json& spec) {
  json p = spec.is_object() ? spec : json::object();
  p.erase("kind");
  return p;
}

// Starred configs fix the opponent model to do-nothing.
template <class Config>
Config starred(const json& params) {
  json merged = json(Config{});
  for (const auto& [k, v] : params.items()) merged[k] = v;
  return merged.get<Config>();
}

}  // namespace

AgentPtr make_agent(const json& spec, Heuristic heuristic) {
  std::string kind = kind_of(spec);
  if (!kind.empty() && kind.back() == '*') kind.pop_back();
  const json params = params_of(spec);
  if (kind == "RND" || kind == "OSLA") {
    if (!params.empty()) throw UsageError(kind + " takes no hyper-parameters");
    if (kind == "RND") return std::make_unique<RandomAgent>();
    return std::make_unique<OslaAgent>(std::move(heuristic));
  }
  if (kind == "BMRH")
    return std::make_unique<BmrhAgent>(starred<BmrhConfig>(params), std::move(heuristic));
  if (kind == "SRH")
    return std::make_unique<SrhAgent>(starred<SrhConfig>(params), std::move(heuristic));
  if (kind == "MCTS")
    return std::make_unique<MctsAgent>(starred<MctsConfig>(params), std::move(heuristic));
  throw UsageError("unknown agent kind '" + kind + "'");
}

std::string agent_label(const json& spec) {
  std::string kind = kind_of(spec);
  if (params_of(spec).empty() && kind != "RND" && kind != "OSLA" &&
      (kind.empty() || kind.back() != '*'))
    kind += '*';
  return kind;
}

}  // namespace spl
