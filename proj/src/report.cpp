#include <contextlab/report.hpp>

#include <json.hpp>

#include <sstream>

namespace contextlab {

using Json = nlohmann::ordered_json;

namespace {

Json outcome_labels(const System& system, const std::vector<std::string>& contents, const Outcome& outcome) {
  Json labels = Json::array();
  for (std::size_t i = 0; i < outcome.size(); ++i) labels.push_back(system.label(contents[i], outcome[i]));
  return labels;
}

Json comparison_json(const std::string& content, const std::string& a, const std::string& b, const std::string& value,
                     const Rational& pa, const Rational& pb) {
  return Json{{"content", content},
              {"contexts", {a, b}},
              {"value", value},
              {"probabilities", {to_string(pa), to_string(pb)}}};
}

Json model_json(const System& system, const ModelVerdict& verdict) {
  Json out{{"feasible", verdict.feasible}, {"model", nullptr}};
  if (!verdict.model) return out;
  const auto& model = *verdict.model;
  Json keys = Json::array();
  std::vector<std::string> contents;
  for (const auto& k : model.keys) {
    keys.push_back(to_string(k));
    contents.push_back(k.content);
  }
  Json support = Json::array();
  for (std::size_t i = 0; i < model.assignments.size(); ++i) {
    if (sgn(model.weights[i]) == 0) continue;
    support.push_back({{"assignment", outcome_labels(system, contents, model.assignments[i].values)},
                       {"weight", to_string(model.weights[i])}});
  }
  out["model"] = Json{{"keys", keys}, {"support", support}};
  return out;
}

const char* paint(bool color, const char* code) { return color ? code : ""; }

}  // namespace

Report analyze(const System& system, const AnalysisSelection& selection) {
  Report report{system, is_consistently_connected(system), {}, {}, {}, {}, {}};
  for (const auto& conn : connections_of(system)) {
    ConnectionSummary summary{conn.content, {}, maximal_coupling_value(conn)};
    for (const auto& v : conn.variables) summary.contexts.push_back(v.context);
    report.connections.push_back(std::move(summary));
  }
  if (selection.nonsignaling) report.nonsignaling = nonsignaling_report(system);
  if (selection.cbd) report.cbd = cbd_contextuality(system);
  if (selection.fine) report.fine = fine_model(system);
  if (selection.octuple) report.octuple = octuple_model(system);
  return report;
}

std::string render_json(const Report& report) {
  const System& system = report.system;
  Json out;
  out["format"] = "contextlab-report/1";

  Json contexts = Json::array();
  for (const auto& ctx : system.contexts()) contexts.push_back({{"id", ctx.id}, {"members", ctx.members}});
  Json contents = Json::array();
  for (const auto& c : system.contents()) contents.push_back({{"id", c.id}, {"values", c.values}});
  out["system"] = {{"contents", contents}, {"contexts", contexts}};

  Json consistency{{"value", report.consistency.consistent}, {"violation", nullptr}};
  if (const auto& v = report.consistency.violation)
    consistency["violation"] =
        comparison_json(v->content, v->first_context, v->second_context, v->value, v->first_probability,
                        v->second_probability);
  out["consistently_connected"] = consistency;

  Json connections = Json::array();
  for (const auto& c : report.connections)
    connections.push_back({{"content", c.content},
                           {"contexts", c.contexts},
                           {"maximal_coupling_value", to_string(c.maximal_coupling_value)}});
  out["connections"] = connections;

  if (report.nonsignaling) {
    Json entries = Json::array();
    for (const auto& e : *report.nonsignaling) {
      auto j = comparison_json(e.content, e.first_context, e.second_context, e.value, e.first_probability,
                               e.second_probability);
      j["equal"] = e.equal;
      entries.push_back(std::move(j));
    }
    out["nonsignaling"] = entries;
  }

  if (report.cbd) {
    Json cbd{{"contextual", report.cbd->contextual}, {"witness", nullptr}};
    if (const auto& w = report.cbd->witness) {
      Json variables = Json::array();
      std::vector<std::string> owners;
      for (const auto& v : w->variables()) {
        variables.push_back(to_string(v));
        owners.push_back(v.content);
      }
      Json support = Json::array();
      for (const auto& [outcome, p] : w->joint.support())
        support.push_back({{"outcome", outcome_labels(system, owners, outcome)}, {"probability", to_string(p)}});
      cbd["witness"] = Json{{"variables", variables}, {"support", support}};
    }
    out["cbd"] = cbd;
  }
  if (report.fine) out["fine"] = model_json(system, *report.fine);
  if (report.octuple) out["octuple"] = model_json(system, *report.octuple);
  return out.dump(2) + "\n";
}

std::string render_text(const Report& report, bool color) {
  const char* bold = paint(color, "\x1b[1m");
  const char* red = paint(color, "\x1b[31m");
  const char* green = paint(color, "\x1b[32m");
  const char* reset = paint(color, "\x1b[0m");
  auto flag = [&](bool good, const char* text) {
    return std::string(good ? green : red) + text + reset;
  };

  std::ostringstream out;
  const System& system = report.system;
  out << bold << "system" << reset << ": " << system.contents().size() << " contents, " << system.contexts().size()
      << " contexts\n";

  out << "consistently connected: " << flag(report.consistency.consistent, report.consistency.consistent ? "true" : "false")
      << '\n';
  if (const auto& v = report.consistency.violation)
    out << "  first violation: " << v->content << " = " << v->value << " has probability "
        << to_string(v->first_probability) << " in " << v->first_context << " but " << to_string(v->second_probability)
        << " in " << v->second_context << '\n';

  out << "connections:\n";
  for (const auto& c : report.connections) {
    out << "  " << c.content << " [";
    for (std::size_t i = 0; i < c.contexts.size(); ++i) out << (i ? ", " : "") << c.contexts[i];
    out << "]  maximal coupling value " << to_string(c.maximal_coupling_value) << '\n';
  }

  if (report.nonsignaling) {
    out << "marginal comparisons:\n";
    for (const auto& e : *report.nonsignaling)
      out << "  Pr(" << e.content << " = " << e.value << "): " << e.first_context << " " << to_string(e.first_probability)
          << (e.equal ? " == " : " != ") << e.second_context << " " << to_string(e.second_probability) << '\n';
  }

  if (report.cbd) {
    out << bold << "contextual: " << reset << flag(!report.cbd->contextual, report.cbd->contextual ? "true" : "false")
        << '\n';
    if (const auto& w = report.cbd->witness) {
      out << "  maximally connected coupling over (";
      for (std::size_t i = 0; i < w->variables().size(); ++i) out << (i ? " " : "") << to_string(w->variables()[i]);
      out << "):\n";
      for (const auto& [outcome, p] : w->joint.support()) {
        out << "   ";
        for (std::size_t i = 0; i < outcome.size(); ++i) out << ' ' << system.label(w->variables()[i].content, outcome[i]);
        out << " = " << to_string(p) << '\n';
      }
    }
  }

  auto model_text = [&](const char* name, const ModelVerdict& verdict) {
    out << name << ": " << flag(verdict.feasible, verdict.feasible ? "feasible" : "infeasible") << '\n';
    if (!verdict.model) return;
    out << "  over (";
    for (std::size_t i = 0; i < verdict.model->keys.size(); ++i) out << (i ? " " : "") << to_string(verdict.model->keys[i]);
    out << "):\n";
    for (std::size_t i = 0; i < verdict.model->assignments.size(); ++i) {
      if (sgn(verdict.model->weights[i]) == 0) continue;
      out << "   ";
      const auto& values = verdict.model->assignments[i].values;
      for (std::size_t k = 0; k < values.size(); ++k) out << ' ' << system.label(verdict.model->keys[k].content, values[k]);
      out << " = " << to_string(verdict.model->weights[i]) << '\n';
    }
  };
  if (report.fine) model_text("fine model", *report.fine);
  if (report.octuple) model_text("octuple model", *report.octuple);
  return out.str();
}

ReportVerdicts verdicts_of(const Report& report) {
  ReportVerdicts v;
  v.consistently_connected = report.consistency.consistent;
  for (const auto& c : report.connections) v.maximal_values.emplace_back(c.content, c.maximal_coupling_value);
  if (report.cbd) v.contextual = report.cbd->contextual;
  if (report.fine) v.fine_feasible = report.fine->feasible;
  if (report.octuple) v.octuple_feasible = report.octuple->feasible;
  return v;
}

ReportVerdicts parse_report_verdicts(std::string_view json) {
  ReportVerdicts v;
  try {
    auto doc = Json::parse(json);
    if (doc.at("format") != "contextlab-report/1") throw ParseError(1, 1, "not a contextlab report");
    v.consistently_connected = doc.at("consistently_connected").at("value").get<bool>();
    for (const auto& c : doc.at("connections"))
      v.maximal_values.emplace_back(c.at("content").get<std::string>(),
                                    parse_rational(c.at("maximal_coupling_value").get<std::string>()));
    if (doc.contains("cbd")) v.contextual = doc["cbd"].at("contextual").get<bool>();
    if (doc.contains("fine")) v.fine_feasible = doc["fine"].at("feasible").get<bool>();
    if (doc.contains("octuple")) v.octuple_feasible = doc["octuple"].at("feasible").get<bool>();
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(1, 1, std::string("malformed report: ") + e.what());
  }
  return v;
}

}  // namespace contextlab
