#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace shyang::exprio {

enum class Status { Pass, Fail, Error };

const char* status_name(Status s);

struct Witness {
  std::string input;
  std::string output;    // printed expression or message
  std::string expected;  // empty when there is nothing to compare against
  bool ok = true;
};

using ParamValue = std::variant<std::int64_t, bool, std::string>;

/// Outcome of one verification operation. Serializes to JSON with the keys
/// schema_version, operation, params, status, witnesses, steps, millis.
struct Report {
  static constexpr int kSchemaVersion = 1;

  std::string operation;
  std::vector<std::pair<std::string, ParamValue>> params;
  Status status = Status::Pass;
  std::vector<Witness> witnesses;
  std::uint64_t steps = 0;
  std::int64_t millis = 0;

  void add_param(std::string key, ParamValue value);
  Witness& add_witness(std::string input, std::string output, bool ok, std::string expected = {});
  /// Pass iff every witness is ok; keeps Error.
  void settle();

  std::string to_json() const;
  std::string to_text() const;
};

}  // namespace shyang::exprio
