#pragma once

#include <string>
#include <vector>

#include <json.hpp>

namespace wfk {

struct Probe {
  std::string probe;
  std::string lhs;
  std::string rhs;
  bool equal = false;
};

// Suite passes iff every probe is equal. Skipped probes are listed separately.
struct Report {
  std::string suite;
  std::vector<Probe> probes;
  std::vector<std::string> skipped;

  void add(std::string probe, std::string lhs, std::string rhs, bool equal);
  bool pass() const;
  std::size_t failures() const;
  nlohmann::json to_json() const;
};

}  // namespace wfk
