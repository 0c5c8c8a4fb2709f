#pragma once

#include <string>

#include "frattini/group.hpp"

namespace frattini {

// File format: one JSON object with fields
//   degree: integer
//   generators: array of arrays of 1-based images, each of length degree
//   name: optional string
// Points are 1-based on disk and 0-based in memory.
Group load_group(const std::string& path);
Group group_from_json_text(const std::string& text, const std::string& origin);

void save_group(const Group& g, const std::string& path);
std::string group_to_json_text(const Group& g);

}  // namespace frattini
