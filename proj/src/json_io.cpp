#include "sgw/json_io.hpp"

#include <fstream>

namespace sgw {

using nlohmann::json;

json table_to_json(const CayleyTable& S) {
  json rows = json::array();
  for (int i = 0; i < S.order; ++i) {
    json row = json::array();
    for (int j = 0; j < S.order; ++j) row.push_back(S.at(i, j));
    rows.push_back(std::move(row));
  }
  json out{{"name", S.name},
           {"order", S.order},
           {"labels", S.labels},
           {"table", std::move(rows)}};
  if (S.zero) out["zero"] = *S.zero;
  if (S.identity) out["identity"] = *S.identity;
  return out;
}

CayleyTable table_from_json(const json& j) {
  if (!j.is_object() || !j.contains("table"))
    throw RangeError("semigroup JSON needs a \"table\" field");
  std::vector<std::vector<int>> rows;
  for (const auto& row : j.at("table"))
    rows.push_back(row.get<std::vector<int>>());
  std::vector<std::string> labels;
  if (j.contains("labels")) labels = j.at("labels").get<std::vector<std::string>>();
  const std::string name = j.value("name", std::string("S"));
  if (j.contains("order") &&
      j.at("order").get<int>() != static_cast<int>(rows.size()))
    throw RangeError("declared order " + j.at("order").dump() +
                     " does not match the table");
  CayleyTable S = validate(name, rows, std::move(labels));
  if (j.contains("zero") &&
      (!S.zero || *S.zero != j.at("zero").get<int>()))
    throw RangeError("declared zero disagrees with the table");
  if (j.contains("identity") &&
      (!S.identity || *S.identity != j.at("identity").get<int>()))
    throw RangeError("declared identity element disagrees with the table");
  return S;
}

CayleyTable load_table_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot read semigroup file: " + path);
  json j;
  in >> j;
  return table_from_json(j);
}

json model_to_json(const LabeledModel& m) {
  json out = table_to_json(m.table);
  out["parameters"] = m.parameters;
  out["description"] = m.description;
  return out;
}

json classification_to_json(const Classification& c) {
  json out{{"display", c.verdict_text()},
           {"n", c.n},
           {"implied", print_identity(c.implied)}};
  if (c.verdict == Classification::Verdict::Permutation) {
    out["verdict"] = "Permutation";
    out["sigma"] = c.sigma;
  } else {
    out["verdict"] = "ACR";
    out["i"] = c.i;
    out["j"] = c.j;
  }
  json trace = json::array();
  for (const auto& step : c.trace) {
    const char* kind = nullptr;
    switch (step.kind) {
      case ReductionStep::Kind::NonRegularSquare: kind = "square-missing"; break;
      case ReductionStep::Kind::LeftStrip: kind = "strip-left"; break;
      case ReductionStep::Kind::RightStrip: kind = "strip-right"; break;
      case ReductionStep::Kind::PrimitiveCore: kind = "primitive-core"; break;
    }
    json s{{"kind", kind}};
    if (step.kind == ReductionStep::Kind::NonRegularSquare)
      s["index"] = step.index;
    trace.push_back(std::move(s));
  }
  out["trace"] = std::move(trace);
  return out;
}

json counterexample_to_json(const Counterexample& c) {
  return json{{"semigroup", table_to_json(c.S)},
              {"identity", print_identity(c.failed)},
              {"assignment", c.assignment}};
}

Counterexample counterexample_from_json(const json& j) {
  Counterexample c;
  c.S = table_from_json(j.at("semigroup"));
  c.failed = parse_identity(j.at("identity").get<std::string>());
  c.assignment = j.at("assignment").get<Assignment>();
  return c;
}

json report_to_json(const SuiteReport& r) {
  json checks = json::array();
  for (const auto& c : r.checks) {
    json e{{"claim", c.claim}, {"ref", c.ref}, {"passed", c.passed}};
    if (!c.counterexample.empty())
      e["counterexample"] = json::parse(c.counterexample);
    checks.push_back(std::move(e));
  }
  return json{{"suite", r.suite},
              {"passed", r.passed},
              {"wall_ms", r.wall_ms},
              {"checks", std::move(checks)}};
}

}  // namespace sgw
