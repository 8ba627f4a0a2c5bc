#include "lstab/report.hpp"

namespace lstab {

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::kPass:
      return "PASS";
    case Verdict::kFail:
      return "FAIL";
    case Verdict::kVacuous:
      return "VACUOUS";
  }
  return "FAIL";
}

Report& Report::add(std::string key, std::string value) {
  fields.emplace_back(std::move(key), std::move(value));
  return *this;
}

Report& Report::add(std::string key, long long value) { return add(std::move(key), std::to_string(value)); }

Report& Report::add_flag(std::string key, bool value) {
  return add(std::move(key), std::string(value ? "true" : "false"));
}

std::string Report::get(std::string_view key) const {
  for (const auto& [k, v] : fields) {
    if (k == key) return v;
  }
  return {};
}

std::string Report::to_text() const {
  std::string out;
  for (const auto& [k, v] : fields) out += k + "=" + v + "\n";
  out += "RESULT=";
  out += to_string(result);
  out += "\n";
  return out;
}

}  // namespace lstab
