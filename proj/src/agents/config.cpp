#include "spl/agents/config.hpp"

#include <set>

#include "spl/core/errors.hpp"

namespace spl {
namespace {

using nlohmann::json;

void reject_unknown(const json& j, const std::set<std::string>& known, const char* what) {
  if (!j.is_object()) throw UsageError(std::string(what) + " config must be a JSON object");
  for (const auto& [key, value] : j.items()) {
    if (key == "kind") continue;
    if (!known.count(key)) throw UsageError(std::string("unknown ") + what + " key '" + key + "'");
  }
}

template <class T>
void read(const json& j, const char* key, T& out) {
  auto it = j.find(key);
  if (it == j.end()) return;
  try {
    out = it->get<T>();
  } catch (const json::exception& ex) {
    throw UsageError(std::string("bad value for '") + key + "': " + ex.what());
  }
}

// Greek spellings are accepted as aliases.
template <class T>
void read(const json& j, const char* key, const char* alias, T& out) {
  read(j, alias, out);
  read(j, key, out);
}

void read_opponents(const json& j, OpponentModelConfig& o) {
  read(j, "om", o.om);
  read(j, "omsb", "ombs", o.omsb);
}

void write_opponents(json& j, const OpponentModelConfig& o) {
  j["om"] = o.om;
  j["omsb"] = o.omsb;
}

void require(bool ok, const std::string& msg) {
  if (!ok) throw UsageError(msg);
}

}  // namespace

void OpponentModelConfig::validate() const {
  require(om >= 0 && om <= 2, "om must be 0, 1 or 2");
  require(omsb > 0 && omsb <= 1, "omsb must be in (0, 1]");
}

void BmrhConfig::validate() const {
  require(l >= 1, "l must be >= 1");
  require(n >= 1, "n must be >= 1");
  require(ms >= 0 && ms <= 2, "ms must be 0, 1 or 2");
  require(dcy > 0 && dcy < 1, "dcy must be in (0, 1)");
  require(mu >= 0 && mu <= 1, "mu must be in [0, 1]");
  require(sigma > 0, "sigma must be > 0");
  opponents.validate();
}

void SrhConfig::validate() const {
  require(l >= 1, "l must be >= 1");
  require(n >= 0, "n must be >= 0");
  require(mr >= 0 && mr <= 1, "mr must be in [0, 1]");
  opponents.validate();
}

void MctsConfig::validate() const {
  require(d >= 1, "d must be >= 1");
  require(c >= 0, "c must be >= 0");
  require(e > 0, "e must be > 0");
  require(ep >= 0 && ep <= 1, "ep must be in [0, 1]");
  require(ps >= 1, "ps must be >= 1");
  require(rt >= 0 && rt <= 2, "rt must be 0, 1 or 2");
  opponents.validate();
}

void to_json(json& j, const BmrhConfig& c) {
  j = json{{"l", c.l},     {"n", c.n},   {"usb", c.usb}, {"mo", c.mo},
           {"ms", c.ms},   {"dcy", c.dcy}, {"mu", c.mu}, {"sigma", c.sigma}};
  write_opponents(j, c.opponents);
}

void from_json(const json& j, BmrhConfig& c) {
  reject_unknown(j, {"l", "n", "usb", "mo", "ms", "dcy", "mu", "μ", "sigma", "σ", "om", "omsb", "ombs"},
                 "BMRH");
  read(j, "l", c.l);
  read(j, "n", c.n);
  read(j, "usb", c.usb);
  read(j, "mo", c.mo);
  read(j, "ms", c.ms);
  read(j, "dcy", c.dcy);
  read(j, "mu", "μ", c.mu);
  read(j, "sigma", "σ", c.sigma);
  read_opponents(j, c.opponents);
  c.validate();
}

void to_json(json& j, const SrhConfig& c) {
  j = json{{"l", c.l}, {"n", c.n}, {"usb", c.usb}, {"mo", c.mo}, {"mr", c.mr}};
  write_opponents(j, c.opponents);
}

void from_json(const json& j, SrhConfig& c) {
  reject_unknown(j, {"l", "n", "usb", "mo", "mr", "om", "omsb", "ombs"}, "SRH");
  read(j, "l", c.l);
  read(j, "n", c.n);
  read(j, "usb", c.usb);
  read(j, "mo", c.mo);
  read(j, "mr", c.mr);
  read_opponents(j, c.opponents);
  c.validate();
}

void to_json(json& j, const MctsConfig& c) {
  j = json{{"d", c.d}, {"c", c.c}, {"e", c.e}, {"ep", c.ep}, {"ps", c.ps}, {"rt", c.rt}};
  write_opponents(j, c.opponents);
}

void from_json(const json& j, MctsConfig& c) {
  reject_unknown(j, {"d", "c", "e", "ep", "ps", "rt", "om", "omsb", "ombs"}, "MCTS");
  read(j, "d", c.d);
  read(j, "c", c.c);
  read(j, "e", c.e);
  read(j, "ep", c.ep);
  read(j, "ps", c.ps);
  read(j, "rt", c.rt);
  read_opponents(j, c.opponents);
  c.validate();
}

}  // namespace spl
