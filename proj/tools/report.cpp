#include "report.hpp"

#include <sstream>

namespace gkat::cli {

using json = nlohmann::ordered_json;

namespace {

json entry_json(const ReportEntry& e) {
  json j;
  j["name"] = e.name;
  j["status"] = e.status;
  j["checked"] = e.checked;
  j["space"] = e.space;
  if (!e.counterexample.empty()) {
    json cx = json::array();
    for (const auto& [var, value] : e.counterexample) cx.push_back({{"var", var}, {"value", value}});
    j["counterexample"] = std::move(cx);
  }
  if (e.witness) j["witness"] = {{"lhs", e.witness->first}, {"rhs", e.witness->second}};
  if (!e.detail.empty()) j["detail"] = e.detail;
  return j;
}

ReportEntry entry_from(const json& j) {
  ReportEntry e;
  e.name = j.at("name").get<std::string>();
  e.status = j.at("status").get<std::string>();
  e.checked = j.at("checked").get<std::uint64_t>();
  e.space = j.at("space").get<std::uint64_t>();
  if (j.contains("counterexample")) {
    for (const auto& b : j["counterexample"]) {
      e.counterexample.emplace_back(b.at("var").get<std::string>(), b.at("value").get<std::string>());
    }
  }
  if (j.contains("witness")) {
    e.witness = std::make_pair(j["witness"].at("lhs").get<std::string>(),
                               j["witness"].at("rhs").get<std::string>());
  }
  if (j.contains("detail")) e.detail = j["detail"].get<std::string>();
  return e;
}

}  // namespace

json Report::to_json() const {
  json j;
  j["command"] = command;
  j["args"] = args;
  j["algebra"] = {{"name", algebra}, {"hash", algebra_hash}, {"finite", finite}, {"carrier", carrier}};
  json s = {{"mode", mode}};
  if (mode == "sample") {
    s["samples"] = samples;
    s["seed"] = seed;
  }
  j["strategy"] = std::move(s);
  if (result) j["result"] = *result;
  json es = json::array();
  for (const auto& e : entries) es.push_back(entry_json(e));
  j["entries"] = std::move(es);
  j["passed"] = passed;
  if (timing_ms) j["timing_ms"] = *timing_ms;
  return j;
}

Report Report::from_json(const json& j) {
  Report r;
  r.command = j.at("command").get<std::string>();
  r.args = j.at("args").get<std::vector<std::string>>();
  const auto& a = j.at("algebra");
  r.algebra = a.at("name").get<std::string>();
  r.algebra_hash = a.at("hash").get<std::string>();
  r.finite = a.at("finite").get<bool>();
  r.carrier = a.at("carrier").get<std::uint64_t>();
  const auto& s = j.at("strategy");
  r.mode = s.at("mode").get<std::string>();
  if (s.contains("samples")) r.samples = s["samples"].get<std::uint64_t>();
  if (s.contains("seed")) r.seed = s["seed"].get<std::uint64_t>();
  if (j.contains("result")) r.result = j["result"].get<std::string>();
  for (const auto& e : j.at("entries")) r.entries.push_back(entry_from(e));
  r.passed = j.at("passed").get<bool>();
  if (j.contains("timing_ms")) r.timing_ms = j["timing_ms"].get<double>();
  return r;
}

std::string Report::render() const {
  std::ostringstream out;
  out << "algebra " << algebra << " [" << (finite ? "finite, " : "sampled, ") << carrier
      << (finite ? " elements" : " sample elements") << ", hash " << algebra_hash << "]\n";
  out << "mode " << mode;
  if (mode == "sample") out << " (" << samples << " valuations, seed " << seed << ")";
  out << '\n';
  if (result) out << command << ": " << *result << '\n';
  for (const auto& e : entries) {
    out << "  " << e.name << ": " << e.status;
    if (e.space) out << " (" << e.checked << "/" << e.space << ")";
    out << '\n';
    if (!e.detail.empty()) out << "    " << e.detail << '\n';
    if (!e.counterexample.empty()) {
      out << "    counterexample:";
      bool first = true;
      for (const auto& [var, value] : e.counterexample) {
        out << (first ? " " : ", ") << var << "=" << value;
        first = false;
      }
      out << '\n';
    }
    if (e.witness) out << "    lhs = " << e.witness->first << ", rhs = " << e.witness->second << '\n';
  }
  out << (passed ? "PASS" : "FAIL") << '\n';
  if (timing_ms) out << "time " << *timing_ms << " ms\n";
  return out.str();
}

bool operator==(const ReportEntry& a, const ReportEntry& b) {
  return a.name == b.name && a.status == b.status && a.checked == b.checked &&
         a.space == b.space && a.counterexample == b.counterexample && a.witness == b.witness &&
         a.detail == b.detail;
}

bool operator==(const Report& a, const Report& b) {
  return a.command == b.command && a.args == b.args && a.algebra == b.algebra &&
         a.algebra_hash == b.algebra_hash && a.finite == b.finite && a.carrier == b.carrier &&
         a.mode == b.mode && a.samples == b.samples && a.seed == b.seed && a.result == b.result &&
         a.entries == b.entries && a.passed == b.passed && a.timing_ms == b.timing_ms;
}

}  // namespace gkat::cli
