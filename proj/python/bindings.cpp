// Python bindings. Probabilities cross the boundary as fractions.Fraction;
// anything whose str() is an exact rational ("1/2", 3, Fraction) is accepted.

#include <contextlab/coupling.hpp>
#include <contextlab/hidden_variable.hpp>
#include <contextlab/lp.hpp>
#include <contextlab/report.hpp>
#include <contextlab/scenarios.hpp>
#include <contextlab/system_file.hpp>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace contextlab;

namespace {

py::object to_py(const Rational& r) {
  return py::module_::import("fractions").attr("Fraction")(to_string(r));
}

Rational from_py(const py::handle& obj) { return parse_rational(py::str(obj).cast<std::string>()); }

BinaryLabels labels_from(const std::string& name) {
  if (name == "01") return BinaryLabels::ZeroOne;
  if (name == "pm") return BinaryLabels::PlusMinus;
  throw Error(ErrorKind::ValidationError, "labels must be '01' or 'pm'");
}

PairTable table_from(const py::sequence& seq) {
  if (py::len(seq) != 4) throw Error(ErrorKind::ValidationError, "a 2x2 table has 4 entries");
  PairTable t;
  for (std::size_t i = 0; i < 4; ++i) t[i] = from_py(seq[i]);
  return t;
}

std::vector<PairTable> tables_from(const py::sequence& seq) {
  std::vector<PairTable> out;
  for (const auto& item : seq) out.push_back(table_from(item.cast<py::sequence>()));
  return out;
}

py::tuple labels_of(const System& system, const std::vector<std::string>& contents, const Outcome& outcome) {
  py::tuple t(outcome.size());
  for (std::size_t i = 0; i < outcome.size(); ++i) t[i] = system.label(contents[i], outcome[i]);
  return t;
}

py::dict distribution_dict(const System& system, const Distribution& d) {
  std::vector<std::string> contents;
  py::list variables;
  for (const auto& v : d.variables()) {
    contents.push_back(v.content);
    variables.append(py::make_tuple(v.content, v.context));
  }
  py::dict support;
  for (const auto& [outcome, p] : d.support()) support[labels_of(system, contents, outcome)] = to_py(p);
  py::dict out;
  out["variables"] = variables;
  out["support"] = support;
  return out;
}

py::dict model_dict(const System& system, const ModelVerdict& verdict) {
  py::dict out;
  out["feasible"] = verdict.feasible;
  out["model"] = py::none();
  if (!verdict.model) return out;
  std::vector<std::string> contents;
  py::list keys;
  for (const auto& k : verdict.model->keys) {
    contents.push_back(k.content);
    keys.append(to_string(k));
  }
  py::dict support;
  for (std::size_t i = 0; i < verdict.model->assignments.size(); ++i)
    if (sgn(verdict.model->weights[i]) != 0)
      support[labels_of(system, contents, verdict.model->assignments[i].values)] = to_py(verdict.model->weights[i]);
  py::dict model;
  model["keys"] = keys;
  model["support"] = support;
  out["model"] = model;
  return out;
}

System build_from_py(const py::sequence& contents, const py::sequence& contexts, const py::sequence& bunches) {
  std::vector<Content> cs;
  for (const auto& item : contents) {
    auto t = item.cast<py::tuple>();
    cs.push_back({t[0].cast<std::string>(), t[1].cast<std::vector<std::string>>()});
  }
  std::vector<Context> xs;
  for (const auto& item : contexts) {
    auto t = item.cast<py::tuple>();
    xs.push_back({t[0].cast<std::string>(), t[1].cast<std::vector<std::string>>()});
  }
  std::vector<BunchTable> bs;
  for (const auto& item : bunches) {
    auto t = item.cast<py::tuple>();
    BunchTable b{t[0].cast<std::string>(), t[1].cast<std::vector<std::string>>(), {}};
    for (const auto& [key, value] : t[2].cast<py::dict>())
      b.entries.emplace_back(key.cast<std::vector<std::string>>(), from_py(value));
    bs.push_back(std::move(b));
  }
  return build_system(std::move(cs), std::move(xs), std::move(bs));
}

}  // namespace

PYBIND11_MODULE(_contextlab, m) {
  m.doc() = "Contextuality-by-Default analysis with exact rational arithmetic";

  py::register_exception<Error>(m, "ContextlabError", PyExc_ValueError);

  py::class_<System>(m, "System")
      .def_property_readonly("contents",
                             [](const System& s) {
                               py::list out;
                               for (const auto& c : s.contents()) out.append(py::make_tuple(c.id, c.values));
                               return out;
                             })
      .def_property_readonly("contexts",
                             [](const System& s) {
                               py::list out;
                               for (const auto& c : s.contexts()) out.append(py::make_tuple(c.id, c.members));
                               return out;
                             })
      .def("bunch", [](const System& s, const std::string& ctx) { return distribution_dict(s, s.bunch(ctx).joint); })
      .def("to_text", &format_system)
      .def("__eq__", [](const System& a, const System& b) { return a == b; })
      .def("__repr__", [](const System& s) {
        return "<contextlab.System " + std::to_string(s.contents().size()) + " contents, " +
               std::to_string(s.contexts().size()) + " contexts>";
      });

  m.def("build_system", &build_from_py, py::arg("contents"), py::arg("contexts"), py::arg("bunches"),
        "contents: [(id, [values])], contexts: [(id, [members])], bunches: [(context, [columns], {tuple: p})]");
  m.def("parse_system", [](const std::string& text) { return parse_system(text); });
  m.def("load_system", &load_system);
  m.def("format_system", &format_system);

  m.def("specker_system", [](const std::string& labels) { return specker_system(labels_from(labels)); },
        py::arg("labels") = "01");
  m.def(
      "bell_system",
      [](const py::sequence& p, const std::string& labels) {
        if (py::len(p) != 16) throw Error(ErrorKind::ValidationError, "bell_system takes 16 parameters");
        std::array<Rational, 16> values;
        for (std::size_t i = 0; i < 16; ++i) values[i] = from_py(p[i]);
        return bell_system(values, labels_from(labels));
      },
      py::arg("p"), py::arg("labels") = "pm");
  m.def("pr_box_parameters", [] {
    py::list out;
    for (const auto& r : pr_box_parameters()) out.append(to_py(r));
    return out;
  });
  m.def(
      "leggett_garg_system",
      [](const py::sequence& tables, const std::string& labels) {
        auto t = tables_from(tables);
        if (t.size() != 3) throw Error(ErrorKind::ValidationError, "leggett_garg_system takes 3 tables");
        return leggett_garg_system({t[0], t[1], t[2]}, labels_from(labels));
      },
      py::arg("tables"), py::arg("labels") = "01");
  m.def(
      "rank2_system",
      [](const py::sequence& a, const py::sequence& b, const std::string& labels) {
        return rank2_system(table_from(a), table_from(b), labels_from(labels));
      },
      py::arg("first"), py::arg("second"), py::arg("labels") = "01");
  m.def(
      "cyclic_system",
      [](const py::sequence& tables, const std::string& labels) {
        return cyclic_system(tables_from(tables), labels_from(labels));
      },
      py::arg("tables"), py::arg("labels") = "01");

  m.def("is_consistently_connected", [](const System& s) {
    auto r = is_consistently_connected(s);
    py::dict out;
    out["consistent"] = r.consistent;
    out["violation"] = py::none();
    if (r.violation) {
      py::dict v;
      v["content"] = r.violation->content;
      v["contexts"] = py::make_tuple(r.violation->first_context, r.violation->second_context);
      v["value"] = r.violation->value;
      v["probabilities"] = py::make_tuple(to_py(r.violation->first_probability), to_py(r.violation->second_probability));
      out["violation"] = v;
    }
    return out;
  });
  m.def("nonsignaling_report", [](const System& s) {
    py::list out;
    for (const auto& e : nonsignaling_report(s)) {
      py::dict d;
      d["content"] = e.content;
      d["contexts"] = py::make_tuple(e.first_context, e.second_context);
      d["value"] = e.value;
      d["probabilities"] = py::make_tuple(to_py(e.first_probability), to_py(e.second_probability));
      d["equal"] = e.equal;
      out.append(d);
    }
    return out;
  });
  m.def("maximal_coupling_values", [](const System& s) {
    py::dict out;
    for (const auto& c : connections_of(s)) out[py::str(c.content)] = to_py(maximal_coupling_value(c));
    return out;
  });
  m.def("maximal_couplings", [](const System& s) {
    py::dict out;
    for (const auto& c : connections_of(s)) out[py::str(c.content)] = distribution_dict(s, maximal_coupling(c).joint);
    return out;
  });
  m.def(
      "cbd_contextuality",
      [](const System& s, const std::set<std::string>& relaxed) {
        auto v = cbd_contextuality(s, CouplingOptions{relaxed});
        py::dict out;
        out["contextual"] = v.contextual;
        py::dict maxima;
        for (const auto& c : v.per_connection_max) maxima[py::str(c.content)] = to_py(c.value);
        out["per_connection_max"] = maxima;
        out["witness"] = v.witness ? py::object(distribution_dict(s, v.witness->joint)) : py::none();
        return out;
      },
      py::arg("system"), py::arg("relaxed") = std::set<std::string>{});
  m.def("fine_model", [](const System& s) { return model_dict(s, fine_model(s)); });
  m.def(
      "octuple_model",
      [](const System& s, bool impose_maximality) {
        return model_dict(s, octuple_model(s, OctupleOptions{impose_maximality}));
      },
      py::arg("system"), py::arg("impose_maximality") = true);

  m.def(
      "report_json",
      [](const System& s, bool cbd, bool fine, bool octuple, bool nonsignaling) {
        return render_json(analyze(s, AnalysisSelection{cbd, fine, octuple, nonsignaling}));
      },
      py::arg("system"), py::arg("cbd") = true, py::arg("fine") = true, py::arg("octuple") = true,
      py::arg("nonsignaling") = true);

  m.def(
      "solve_lp",
      [](const std::vector<std::vector<py::object>>& rows, const std::vector<py::object>& rhs,
         std::optional<std::vector<py::object>> objective) {
        if (rows.size() != rhs.size()) throw Error(ErrorKind::DimensionMismatch, "one rhs per row");
        LinearProgram lp;
        lp.variable_count = rows.empty() ? (objective ? objective->size() : 0) : rows.front().size();
        for (std::size_t i = 0; i < rows.size(); ++i) {
          EqualityConstraint eq{{}, from_py(rhs[i])};
          for (const auto& c : rows[i]) eq.coefficients.push_back(from_py(c));
          lp.equalities.push_back(std::move(eq));
        }
        if (objective) {
          std::vector<Rational> c;
          for (const auto& v : *objective) c.push_back(from_py(v));
          lp.objective = std::move(c);
        }
        auto result = solve(lp);
        py::dict out;
        out["status"] = to_string(result.status);
        py::list witness;
        for (const auto& x : result.witness) witness.append(to_py(x));
        out["witness"] = witness;
        out["optimum"] = result.optimum ? to_py(*result.optimum) : py::none();
        return out;
      },
      py::arg("rows"), py::arg("rhs"), py::arg("objective") = py::none());
}
