#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace lstab {

enum class Verdict { kPass, kFail, kVacuous };

std::string_view to_string(Verdict v);

/// Line-oriented verification report: one FIELD=value line per field, then a
/// final RESULT=PASS|FAIL|VACUOUS line.
struct Report {
  std::vector<std::pair<std::string, std::string>> fields;
  Verdict result = Verdict::kPass;

  Report& add(std::string key, std::string value);
  Report& add(std::string key, long long value);
  Report& add_flag(std::string key, bool value);
  Report& add(std::string key, const char* value) { return add(std::move(key), std::string(value)); }

  /// Value of the first field with this key, or empty.
  std::string get(std::string_view key) const;

  std::string to_text() const;
};

}  // namespace lstab
