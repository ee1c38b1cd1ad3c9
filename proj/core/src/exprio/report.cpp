#include "shyang/exprio/report.hpp"

#include <algorithm>
#include <sstream>

#include "json.hpp"

namespace shyang::exprio {

const char* status_name(Status s) {
  switch (s) {
    case Status::Pass:
      return "pass";
    case Status::Fail:
      return "fail";
    case Status::Error:
      return "error";
  }
  return "?";
}

void Report::add_param(std::string key, ParamValue value) {
  params.emplace_back(std::move(key), std::move(value));
}

Witness& Report::add_witness(std::string input, std::string output, bool ok, std::string expected) {
  witnesses.push_back({std::move(input), std::move(output), std::move(expected), ok});
  return witnesses.back();
}

void Report::settle() {
  if (status == Status::Error) return;
  const bool all_ok =
      std::all_of(witnesses.begin(), witnesses.end(), [](const Witness& w) { return w.ok; });
  status = all_ok ? Status::Pass : Status::Fail;
}

std::string Report::to_json() const {
  using nlohmann::ordered_json;
  ordered_json j;
  j["schema_version"] = kSchemaVersion;
  j["operation"] = operation;
  ordered_json p = ordered_json::object();
  for (const auto& [k, v] : params) {
    std::visit([&](const auto& x) { p[k] = x; }, v);
  }
  j["params"] = std::move(p);
  j["status"] = status_name(status);
  ordered_json ws = ordered_json::array();
  for (const auto& w : witnesses) {
    ordered_json o;
    o["input"] = w.input;
    o["output"] = w.output;
    if (!w.expected.empty()) o["expected"] = w.expected;
    o["ok"] = w.ok;
    ws.push_back(std::move(o));
  }
  j["witnesses"] = std::move(ws);
  j["steps"] = steps;
  j["millis"] = millis;
  return j.dump(2);
}

std::string Report::to_text() const {
  std::ostringstream out;
  out << operation << ": " << status_name(status);
  if (!params.empty()) {
    out << " (";
    for (std::size_t i = 0; i < params.size(); ++i) {
      if (i > 0) out << ", ";
      out << params[i].first << "=";
      std::visit(
          [&](const auto& x) {
            if constexpr (std::is_same_v<std::decay_t<decltype(x)>, bool>) {
              out << (x ? "true" : "false");
            } else {
              out << x;
            }
          },
          params[i].second);
    }
    out << ")";
  }
  out << "\n";
  for (const auto& w : witnesses) {
    out << "  " << (w.ok ? "ok  " : "FAIL") << "  " << w.input << " = " << w.output;
    if (!w.expected.empty() && !w.ok) out << "  (expected " << w.expected << ")";
    out << "\n";
  }
  if (steps > 0) out << "  steps: " << steps << "\n";
  if (millis > 0) out << "  millis: " << millis << "\n";
  return out.str();
}

}  // namespace shyang::exprio
