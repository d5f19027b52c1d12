#pragma once

#include <string>
#include <vector>

#include "flood/graph.hpp"

namespace flood {

// A rooted instance together with human-readable vertex names, indexed by
// vertex id. This is what the serializer works with.
struct Instance {
  std::string name;
  RESGraph res;
  std::vector<std::string> vertexNames;
};

// Built-in instances used throughout the test suites. Edge ids follow the
// listed construction order.
std::vector<std::string> fixtureNames();
Instance fixture(const std::string& name);

}  // namespace flood
