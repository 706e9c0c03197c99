#include "pathkit/report.hpp"

#include <json.hpp>

#include "pathkit/error.hpp"

namespace pathkit {

using nlohmann::json;

std::string to_json(const CheckReport& r, bool include_timing) {
  json failures = json::array();
  for (const Failure& f : r.failures)
    failures.push_back({{"inputs", f.inputs}, {"expected", f.expected}, {"got", f.got}});
  json j{{"schema", kReportSchema},
         {"law", r.law},
         {"samples", r.samples},
         {"seed", r.seed},
         {"depth", r.depth},
         {"passed", r.passed()},
         {"failures", std::move(failures)},
         {"oracle_verdicts", {{"confirmed", r.oracle_confirmed}, {"unknown", r.oracle_unknown}}},
         {"stats", r.stats}};
  if (include_timing && r.elapsed_ms) j["elapsed_ms"] = *r.elapsed_ms;
  return j.dump(2);
}

CheckReport report_from_json(std::string_view text) {
  try {
    json j = json::parse(text);
    if (j.at("schema").get<std::string>() != kReportSchema)
      throw Error("unsupported report schema " + j.at("schema").get<std::string>());
    CheckReport r;
    r.law = j.at("law").get<std::string>();
    r.samples = j.at("samples").get<std::size_t>();
    r.seed = j.at("seed").get<std::uint64_t>();
    r.depth = j.at("depth").get<std::size_t>();
    for (const json& f : j.at("failures"))
      r.failures.push_back({f.at("inputs").get<std::vector<std::string>>(),
                            f.at("expected").get<std::string>(), f.at("got").get<std::string>()});
    r.oracle_confirmed = j.at("oracle_verdicts").at("confirmed").get<std::size_t>();
    r.oracle_unknown = j.at("oracle_verdicts").at("unknown").get<std::size_t>();
    if (j.contains("elapsed_ms")) r.elapsed_ms = j.at("elapsed_ms").get<double>();
    r.stats = j.at("stats").get<std::map<std::string, double>>();
    return r;
  } catch (const json::exception& e) {
    throw Error(std::string("malformed report: ") + e.what());
  }
}

}  // namespace pathkit
