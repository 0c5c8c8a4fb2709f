#include "frattini/group_io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

#include "frattini/errors.hpp"

namespace frattini {

Group group_from_json_text(const std::string& text, const std::string& origin) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ValidationError(origin + ": " + e.what());
  }
  if (!j.is_object()) throw ValidationError(origin + ": top-level value must be an object");
  if (!j.contains("degree") || !j["degree"].is_number_unsigned())
    throw ValidationError(origin + ": field 'degree' must be a non-negative integer");
  if (!j.contains("generators") || !j["generators"].is_array())
    throw ValidationError(origin + ": field 'generators' must be an array");
  const std::size_t degree = j["degree"].get<std::size_t>();
  if (degree == 0 || degree > 65535)
    throw ValidationError(origin + ": degree must be between 1 and 65535");

  std::vector<Perm> gens;
  std::size_t gi = 0;
  for (const auto& row : j["generators"]) {
    ++gi;
    const std::string where = origin + ": generator #" + std::to_string(gi);
    if (!row.is_array() || row.size() != degree)
      throw ValidationError(where + " must be an array of length " + std::to_string(degree));
    std::vector<Point> img(degree);
    for (std::size_t i = 0; i < degree; ++i) {
      if (!row[i].is_number_unsigned())
        throw ValidationError(where + ", entry " + std::to_string(i + 1) +
                              ": images must be positive integers");
      std::uint64_t v = row[i].get<std::uint64_t>();
      if (v < 1 || v > degree)
        throw ValidationError(where + ", entry " + std::to_string(i + 1) + ": image " +
                              std::to_string(v) + " out of range 1.." + std::to_string(degree));
      img[i] = static_cast<Point>(v - 1);
    }
    try {
      gens.emplace_back(std::move(img));
    } catch (const ValidationError& e) {
      throw ValidationError(where + ": " + e.what());
    }
  }

  std::string name = origin;
  if (j.contains("name")) {
    if (!j["name"].is_string()) throw ValidationError(origin + ": field 'name' must be a string");
    name = j["name"].get<std::string>();
  }
  return Group(degree, std::move(gens), std::move(name));
}

Group load_group(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError(path + ": cannot open file");
  std::stringstream buf;
  buf << in.rdbuf();
  return group_from_json_text(buf.str(), path);
}

std::string group_to_json_text(const Group& g) {
  nlohmann::json j;
  j["degree"] = g.degree();
  auto gens = nlohmann::json::array();
  for (const auto& p : g.generators()) {
    auto row = nlohmann::json::array();
    for (Point x : p.images()) row.push_back(static_cast<unsigned>(x) + 1);
    gens.push_back(std::move(row));
  }
  j["generators"] = std::move(gens);
  if (!g.name().empty()) j["name"] = g.name();
  return j.dump(2) + "\n";
}

void save_group(const Group& g, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw ValidationError(path + ": cannot open file for writing");
  out << group_to_json_text(g);
}

}  // namespace frattini
