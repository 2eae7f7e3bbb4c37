#include "dol/report.hpp"

namespace dol {

namespace {

std::string display(const Name& name, const PrefixMap* prefixes) {
  if (prefixes && Iri::is_absolute(name)) {
    if (auto curie = prefixes->compact(name)) return *curie;
  }
  return name;
}

std::string tuple_text(const std::vector<int>& t) {
  std::string out = "(";
  for (std::size_t i = 0; i < t.size(); ++i) out += (i ? "," : "") + std::to_string(t[i]);
  return out + ")";
}

std::string verdict_label(const Verdict& v) {
  std::string out(to_string(v.status));
  if (v.searched_up_to &&
      (v.status == VerdictStatus::NoCounterexampleUpTo || v.status == VerdictStatus::NoModelUpTo)) {
    out += "(" + std::to_string(*v.searched_up_to) + ")";
  }
  return out;
}

}  // namespace

Json model_to_json(const FiniteModel& model, const PrefixMap* prefixes) {
  Json tables = Json::object();
  for (const auto& [name, rel] : model.relations) {
    Json rows = Json::array();
    if (rel.arity() == 0) {
      tables[display(name, prefixes)] = rel.cell(0);
      continue;
    }
    for (const auto& t : rel.tuples()) rows.push_back(t);
    tables[display(name, prefixes)] = std::move(rows);
  }
  Json constants = Json::object();
  for (const auto& [name, value] : model.constants) constants[display(name, prefixes)] = value;
  return Json{{"domain_size", model.domain_size}, {"tables", std::move(tables)}, {"constants", std::move(constants)}};
}

Json verdict_to_json(const Verdict& verdict, const PrefixMap* prefixes) {
  Json j{{"status", std::string(to_string(verdict.status))}};
  j["bound"] = verdict.searched_up_to ? Json(*verdict.searched_up_to) : Json(nullptr);
  if (verdict.witness) j["witness"] = model_to_json(*verdict.witness, prefixes);
  return j;
}

Json report_to_json(const RelationshipReport& report, const PrefixMap* prefixes) {
  auto obligations = [&](const std::vector<ObligationResult>& list) {
    Json arr = Json::array();
    for (std::size_t i = 0; i < list.size(); ++i) {
      const auto& o = list[i];
      Json j{{"index", i},
             {"kind", std::string(to_string(o.obligation.kind))},
             {"origin", o.obligation.origin}};
      if (o.obligation.goal) j["goal"] = print_sentence(*o.obligation.goal, prefixes);
      j["verdict"] = verdict_to_json(o.verdict, prefixes);
      if (!o.note.empty()) j["note"] = o.note;
      arr.push_back(std::move(j));
    }
    return arr;
  };
  Json j{{"link", report.link}, {"kind", std::string(to_string(report.kind))}};
  j["overall"] = Json{{"status", std::string(to_string(report.overall))},
                      {"bound", report.bound ? Json(*report.bound) : Json(nullptr)}};
  j["obligations"] = obligations(report.obligations);
  if (!report.conservativity.empty()) j["conservativity"] = obligations(report.conservativity);
  if (report.witness) j["witness"] = model_to_json(*report.witness, prefixes);
  if (report.failed_obligation) j["failed_obligation"] = *report.failed_obligation;
  if (report.not_definitional) {
    const auto& nd = *report.not_definitional;
    j["not_definitional"] = Json{{"axiom_index", nd.axiom_index ? Json(*nd.axiom_index) : Json(nullptr)},
                                 {"reason", nd.reason}};
  }
  j["notes"] = report.notes;
  return j;
}

std::string model_to_text(const FiniteModel& model, const PrefixMap* prefixes) {
  std::string out = "domain {";
  for (int i = 0; i < model.domain_size; ++i) out += (i ? ", " : "") + std::to_string(i);
  out += "}\n";
  for (const auto& [name, rel] : model.relations) {
    out += display(name, prefixes) + " = ";
    if (rel.arity() == 0) {
      out += rel.cell(0) ? "true\n" : "false\n";
      continue;
    }
    out += "{";
    bool first = true;
    for (const auto& t : rel.tuples()) {
      out += (first ? "" : ", ") + (rel.arity() == 1 ? std::to_string(t[0]) : tuple_text(t));
      first = false;
    }
    out += "}\n";
  }
  for (const auto& [name, value] : model.constants) out += display(name, prefixes) + " = " + std::to_string(value) + "\n";
  return out;
}

std::string overall_label(const RelationshipReport& report) {
  std::string out(to_string(report.overall));
  if (report.bound) out += "(" + std::to_string(*report.bound) + ")";
  return out;
}

std::string report_to_text(const RelationshipReport& report, const PrefixMap* prefixes) {
  std::string out = report.link + " [" + std::string(to_string(report.kind)) + "]: " + overall_label(report) + "\n";
  auto list = [&](const std::vector<ObligationResult>& obs, const std::string& heading) {
    if (!heading.empty() && !obs.empty()) out += "  " + heading + ":\n";
    for (std::size_t i = 0; i < obs.size(); ++i) {
      const auto& o = obs[i];
      out += "  " + std::to_string(i) + ". " + std::string(to_string(o.obligation.kind)) + " (" + o.obligation.origin +
             "): " + verdict_label(o.verdict);
      if (!o.note.empty()) out += ": " + o.note;
      out += "\n";
      if (o.obligation.goal) out += "     goal " + print_sentence(*o.obligation.goal, prefixes) + "\n";
    }
  };
  list(report.obligations, "");
  list(report.conservativity, "conservativity");
  if (report.not_definitional) out += "  not definitional: " + report.not_definitional->reason + "\n";
  if (report.witness) {
    out += report.overall == OverallStatus::Refuted ? "  counterexample:\n" : "  witness:\n";
    std::string model = model_to_text(*report.witness, prefixes);
    std::size_t start = 0;
    while (start < model.size()) {
      const auto end = model.find('\n', start);
      out += "    " + model.substr(start, end - start) + "\n";
      start = end + 1;
    }
  }
  for (const auto& n : report.notes) out += "  note: " + n + "\n";
  return out;
}

}  // namespace dol
