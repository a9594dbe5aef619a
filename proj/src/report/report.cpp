#include "wfk/report.hpp"

namespace wfk {

void Report::add(std::string probe, std::string lhs, std::string rhs, bool equal) {
  probes.push_back(Probe{std::move(probe), std::move(lhs), std::move(rhs), equal});
}

bool Report::pass() const { return failures() == 0; }

std::size_t Report::failures() const {
  std::size_t n = 0;
  for (const auto& p : probes) n += !p.equal;
  return n;
}

nlohmann::json Report::to_json() const {
  nlohmann::json j;
  j["suite"] = suite;
  j["probes"] = nlohmann::json::array();
  for (const auto& p : probes) j["probes"].push_back({{"probe", p.probe}, {"lhs", p.lhs}, {"rhs", p.rhs}, {"equal", p.equal}});
  j["pass"] = pass();
  if (!skipped.empty()) j["skipped"] = skipped;
  return j;
}

}  // namespace wfk
