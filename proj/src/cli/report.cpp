#include "splitoct/cli.hpp"

namespace splitoct::cli {

using nlohmann::json;

bool Report::all_passed() const {
  for (const auto& c : checks)
    if (!c.passed) return false;
  return true;
}

json to_json(const Report& r) {
  json j = r.extra;
  j["schema"] = r.schema;
  j["command"] = r.command;
  j["algebra"] = r.algebra;
  j["config"] = r.config;
  json checks = json::array();
  for (const auto& c : r.checks) checks.push_back({{"name", c.name}, {"status", c.passed ? "pass" : "fail"}, {"detail", c.detail}});
  j["checks"] = std::move(checks);
  if (r.residuals) j["residuals"] = *r.residuals;
  if (r.dimension) j["dimension"] = *r.dimension;
  return j;
}

Report report_from_json(const json& j) {
  Report r;
  r.schema = j.at("schema").get<int>();
  r.command = j.at("command").get<std::string>();
  r.algebra = j.at("algebra").get<std::string>();
  r.config = j.at("config");
  for (const auto& c : j.at("checks")) {
    const std::string status = c.at("status").get<std::string>();
    if (status != "pass" && status != "fail") throw json::other_error::create(501, "unknown check status '" + status + "'", &c);
    r.checks.push_back({c.at("name").get<std::string>(), status == "pass", c.at("detail").get<std::string>()});
  }
  if (j.contains("residuals")) r.residuals = j.at("residuals");
  if (j.contains("dimension")) r.dimension = j.at("dimension").get<std::size_t>();
  for (const auto& [key, value] : j.items()) {
    if (key == "schema" || key == "command" || key == "algebra" || key == "config" || key == "checks" ||
        key == "residuals" || key == "dimension")
      continue;
    r.extra[key] = value;
  }
  return r;
}

}  // namespace splitoct::cli
