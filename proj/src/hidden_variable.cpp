#include <contextlab/coupling.hpp>
#include <contextlab/hidden_variable.hpp>

#include <algorithm>

namespace contextlab {

namespace {

std::size_t key_position(const std::vector<AssignmentKey>& keys, const VariableId& variable) {
  for (std::size_t i = 0; i < keys.size(); ++i) {
    const auto& k = keys[i];
    if (k.content == variable.content && (k.content_keyed() || k.context == variable.context)) return i;
  }
  throw Error(ErrorKind::UnknownVariable, to_string(variable));
}

// For each bunch, where its variables live inside an assignment.
std::vector<std::vector<std::size_t>> bunch_positions(const System& system, const std::vector<AssignmentKey>& keys) {
  std::vector<std::vector<std::size_t>> out;
  for (const auto& bunch : system.bunches()) {
    std::vector<std::size_t> positions;
    for (const auto& v : bunch.joint.variables()) positions.push_back(key_position(keys, v));
    out.push_back(std::move(positions));
  }
  return out;
}

bool all_equal_at(const Outcome& values, const std::vector<std::size_t>& positions) {
  return std::all_of(positions.begin(), positions.end(),
                     [&](std::size_t p) { return values[p] == values[positions.front()]; });
}

struct ModelProgram {
  std::vector<AssignmentKey> keys;
  std::vector<std::size_t> arity;
  LinearProgram lp;
};

ModelProgram build_program(const System& system, std::vector<AssignmentKey> keys, bool impose_maximality) {
  ModelProgram program{std::move(keys), {}, {}};
  for (const auto& k : program.keys) program.arity.push_back(system.arity(k.content));
  const std::size_t count = product_size(program.arity);
  program.lp.variable_count = count;

  const auto positions = bunch_positions(system, program.keys);
  for (std::size_t b = 0; b < system.bunches().size(); ++b) {
    const auto& joint = system.bunches()[b].joint;
    const std::size_t first_row = program.lp.equalities.size();
    for (const auto& p : joint.dense()) program.lp.equalities.push_back({std::vector<Rational>(count, Rational(0)), p});
    Outcome projected(positions[b].size());
    for (std::size_t lambda = 0; lambda < count; ++lambda) {
      auto values = decode_outcome(lambda, program.arity);
      for (std::size_t i = 0; i < projected.size(); ++i) projected[i] = values[positions[b][i]];
      program.lp.equalities[first_row + joint.encode(projected)].coefficients[lambda] = 1;
    }
  }

  if (impose_maximality) {
    for (const auto& conn : connections_of(system)) {
      std::vector<std::size_t> where;
      for (const auto& v : conn.variables) where.push_back(key_position(program.keys, v));
      EqualityConstraint row{std::vector<Rational>(count, Rational(0)), maximal_coupling_value(conn)};
      for (std::size_t lambda = 0; lambda < count; ++lambda)
        if (all_equal_at(decode_outcome(lambda, program.arity), where)) row.coefficients[lambda] = 1;
      program.lp.equalities.push_back(std::move(row));
    }
  }
  return program;
}

ModelVerdict run(ModelProgram program) {
  auto result = solve(program.lp);
  ModelVerdict verdict;
  if (result.status != LpStatus::Feasible) return verdict;
  verdict.feasible = true;
  HiddenVariableModel model;
  model.keys = std::move(program.keys);
  for (std::size_t lambda = 0; lambda < program.lp.variable_count; ++lambda)
    model.assignments.push_back({decode_outcome(lambda, program.arity)});
  model.weights = std::move(result.witness);
  verdict.model = std::move(model);
  return verdict;
}

}  // namespace

std::string to_string(const AssignmentKey& key) {
  return key.content_keyed() ? key.content : key.content + "@" + key.context;
}

ModelVerdict fine_model(const System& system) {
  std::vector<AssignmentKey> keys;
  for (const auto& c : system.contents()) keys.push_back({c.id, {}});
  std::sort(keys.begin(), keys.end(), [](const auto& a, const auto& b) { return a.content < b.content; });
  return run(build_program(system, std::move(keys), /*impose_maximality=*/false));
}

ModelVerdict octuple_model(const System& system, const OctupleOptions& options) {
  std::vector<AssignmentKey> keys;
  for (const auto& v : system.variables()) keys.push_back({v.content, v.context});
  return run(build_program(system, std::move(keys), options.impose_maximality));
}

bool verify_model(const System& system, const HiddenVariableModel& model, bool check_maximality) {
  if (model.assignments.size() != model.weights.size()) return false;
  Rational total = 0;
  for (const auto& w : model.weights) {
    if (sgn(w) < 0) return false;
    total += w;
  }
  if (total != 1) return false;

  try {
    for (const auto& a : model.assignments)
      if (a.values.size() != model.keys.size()) return false;

    const auto positions = bunch_positions(system, model.keys);
    for (std::size_t b = 0; b < system.bunches().size(); ++b) {
      const auto& joint = system.bunches()[b].joint;
      std::vector<Rational> induced(joint.outcome_count(), Rational(0));
      Outcome projected(positions[b].size());
      for (std::size_t i = 0; i < model.assignments.size(); ++i) {
        if (sgn(model.weights[i]) == 0) continue;
        for (std::size_t j = 0; j < projected.size(); ++j) projected[j] = model.assignments[i].values[positions[b][j]];
        induced[joint.encode(projected)] += model.weights[i];
      }
      if (induced != joint.dense()) return false;
    }

    const bool variable_keyed =
        !model.keys.empty() && std::none_of(model.keys.begin(), model.keys.end(),
                                            [](const AssignmentKey& k) { return k.content_keyed(); });
    if (check_maximality && variable_keyed) {
      for (const auto& conn : connections_of(system)) {
        std::vector<std::size_t> where;
        for (const auto& v : conn.variables) where.push_back(key_position(model.keys, v));
        Rational mass = 0;
        for (std::size_t i = 0; i < model.assignments.size(); ++i)
          if (all_equal_at(model.assignments[i].values, where)) mass += model.weights[i];
        if (mass != maximal_coupling_value(conn)) return false;
      }
    }
  } catch (const Error&) {
    return false;
  }
  return true;
}

}  // namespace contextlab
