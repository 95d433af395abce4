#include <fstream>

#include "modalwb/audit.hpp"
#include "modalwb/error.hpp"

namespace modalwb {

nlohmann::ordered_json AuditReport::to_json() const {
  nlohmann::ordered_json j;
  j["suite"] = suite;
  j["seed"] = seed;
  j["trials"] = trials;
  j["passes"] = passes;
  auto fails = nlohmann::ordered_json::array();
  for (const auto& f : failures) {
    nlohmann::ordered_json e;
    e["trial"] = f.trial;
    e["frame"] = f.frame;
    e["detail"] = f.detail;
    fails.push_back(std::move(e));
  }
  j["failures"] = std::move(fails);
  j["config"] = config;
  return j;
}

void emit_report(const AuditReport& report, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write " + path.string());
  out << report.to_json().dump(2) << '\n';
  if (!out) throw Error("write failed: " + path.string());
}

}  // namespace modalwb
