#include <contextlab/coupling.hpp>

#include <algorithm>

namespace contextlab {

namespace {

std::size_t common_arity(const Connection& connection) {
  if (connection.marginals.empty())
    throw Error(ErrorKind::ValidationError, "connection '" + connection.content + "' has no variables");
  const std::size_t arity = connection.marginals.front().arity().at(0);
  for (const auto& m : connection.marginals)
    if (m.arity().size() != 1 || m.arity()[0] != arity)
      throw Error(ErrorKind::MixedOutcomeSpace, "connection '" + connection.content + "'");
  return arity;
}

const Rational& single(const Distribution& d, std::size_t value) { return d.dense()[value]; }

std::vector<std::size_t> positions_in(const std::vector<VariableId>& all, const std::vector<VariableId>& wanted) {
  std::vector<std::size_t> out;
  for (const auto& v : wanted) {
    auto it = std::lower_bound(all.begin(), all.end(), v);
    if (it == all.end() || *it != v) throw Error(ErrorKind::UnknownVariable, to_string(v));
    out.push_back(static_cast<std::size_t>(it - all.begin()));
  }
  return out;
}

bool all_equal_at(const Outcome& outcome, const std::vector<std::size_t>& positions) {
  for (std::size_t p : positions)
    if (outcome[p] != outcome[positions.front()]) return false;
  return true;
}

}  // namespace

ConsistencyReport is_consistently_connected(const System& system) {
  ConsistencyReport report;
  for (const auto& entry : nonsignaling_report(system)) {
    if (!entry.equal) {
      report.consistent = false;
      report.violation = ConsistencyViolation{entry.content,           entry.first_context,
                                              entry.second_context,    entry.value,
                                              entry.first_probability, entry.second_probability};
      break;
    }
  }
  return report;
}

std::vector<MarginalComparison> nonsignaling_report(const System& system) {
  std::vector<MarginalComparison> out;
  for (const auto& conn : connections_of(system)) {
    const std::size_t arity = common_arity(conn);
    for (std::size_t i = 0; i < conn.variables.size(); ++i) {
      for (std::size_t j = i + 1; j < conn.variables.size(); ++j) {
        for (std::size_t v = 0; v < arity; ++v) {
          const auto& pi = single(conn.marginals[i], v);
          const auto& pj = single(conn.marginals[j], v);
          out.push_back({conn.content, conn.variables[i].context, conn.variables[j].context,
                         system.label(conn.content, v), pi, pj, pi == pj});
        }
      }
    }
  }
  return out;
}

Rational maximal_coupling_value(const Connection& connection) {
  const std::size_t arity = common_arity(connection);
  Rational total = 0;
  for (std::size_t v = 0; v < arity; ++v) {
    Rational low = single(connection.marginals.front(), v);
    for (const auto& m : connection.marginals) low = std::min(low, single(m, v));
    total += low;
  }
  return total;
}

Coupling maximal_coupling(const Connection& connection) {
  const std::size_t arity = common_arity(connection);
  const std::size_t k = connection.variables.size();

  std::vector<Rational> common(arity);
  Rational mass = 0;
  for (std::size_t v = 0; v < arity; ++v) {
    common[v] = single(connection.marginals.front(), v);
    for (const auto& m : connection.marginals) common[v] = std::min(common[v], single(m, v));
    mass += common[v];
  }

  std::vector<std::size_t> arities(k, arity);
  std::vector<Rational> dense(product_size(arities), Rational(0));
  const Rational leftover = 1 - mass;
  Rational scale = 1;
  for (std::size_t i = 1; i < k; ++i) scale *= leftover;

  for (std::size_t flat = 0; flat < dense.size(); ++flat) {
    auto outcome = decode_outcome(flat, arities);
    if (std::all_of(outcome.begin(), outcome.end(), [&](std::size_t v) { return v == outcome[0]; }))
      dense[flat] += common[outcome[0]];
    if (sgn(leftover) == 0) continue;
    // Independent coupling of the residuals; its diagonal is empty because
    // some residual vanishes at every value.
    Rational term = 1;
    for (std::size_t i = 0; i < k && sgn(term) != 0; ++i)
      term *= single(connection.marginals[i], outcome[i]) - common[outcome[i]];
    dense[flat] += term / scale;
  }
  return Coupling{Distribution::from_dense(connection.variables, std::move(arities), std::move(dense))};
}

Rational equality_mass(const Distribution& joint, const std::vector<VariableId>& group) {
  std::vector<std::size_t> positions;
  for (const auto& v : group) positions.push_back(joint.index_of(v));
  Rational total = 0;
  for (const auto& [outcome, p] : joint.support())
    if (all_equal_at(outcome, positions)) total += p;
  return total;
}

CouplingProgram build_coupling_program(const System& system, const CouplingOptions& options) {
  CouplingProgram program;
  program.variables = system.variables();
  for (const auto& v : program.variables) program.arity.push_back(system.arity(v.content));
  const std::size_t columns = product_size(program.arity);
  program.lp.variable_count = columns;

  // Bunch reproduction: one row per bunch outcome.
  for (const auto& bunch : system.bunches()) {
    const auto& bunch_vars = bunch.joint.variables();
    auto positions = positions_in(program.variables, bunch_vars);
    const std::size_t first_row = program.lp.equalities.size();
    for (const auto& p : bunch.joint.dense())
      program.lp.equalities.push_back({std::vector<Rational>(columns, Rational(0)), p});
    Outcome projected(positions.size());
    for (std::size_t col = 0; col < columns; ++col) {
      auto outcome = decode_outcome(col, program.arity);
      for (std::size_t i = 0; i < positions.size(); ++i) projected[i] = outcome[positions[i]];
      program.lp.equalities[first_row + bunch.joint.encode(projected)].coefficients[col] = 1;
    }
  }

  // Maximality: Pr(all stand-ins of the connection equal) = its maximal value.
  for (const auto& conn : connections_of(system)) {
    Rational value = maximal_coupling_value(conn);
    program.per_connection_max.push_back({conn.content, value});
    if (options.relaxed_contents.count(conn.content)) continue;
    auto positions = positions_in(program.variables, conn.variables);
    EqualityConstraint row{std::vector<Rational>(columns, Rational(0)), value};
    for (std::size_t col = 0; col < columns; ++col)
      if (all_equal_at(decode_outcome(col, program.arity), positions)) row.coefficients[col] = 1;
    program.lp.equalities.push_back(std::move(row));
  }
  return program;
}

ContextualityVerdict cbd_contextuality(const System& system, const CouplingOptions& options) {
  auto program = build_coupling_program(system, options);
  auto result = solve(program.lp);

  ContextualityVerdict verdict;
  verdict.per_connection_max = std::move(program.per_connection_max);
  verdict.contextual = result.status != LpStatus::Feasible;
  if (!verdict.contextual)
    verdict.witness = Coupling{Distribution::from_dense(std::move(program.variables), std::move(program.arity),
                                                        std::move(result.witness))};
  return verdict;
}

bool verify_system_coupling(const System& system, const Coupling& coupling, const CouplingOptions& options) {
  try {
    for (const auto& bunch : system.bunches())
      if (coupling.joint.marginal(bunch.joint.variables()) != bunch.joint) return false;
    for (const auto& conn : connections_of(system)) {
      if (options.relaxed_contents.count(conn.content)) continue;
      if (equality_mass(coupling.joint, conn.variables) != maximal_coupling_value(conn)) return false;
    }
  } catch (const Error&) {
    return false;
  }
  return true;
}

bool verify_connection_coupling(const Connection& connection, const Coupling& coupling, bool require_maximal) {
  try {
    for (std::size_t i = 0; i < connection.variables.size(); ++i) {
      const VariableId& v = connection.variables[i];
      if (coupling.joint.marginal(std::span<const VariableId>(&v, 1)) != connection.marginals[i]) return false;
    }
    if (require_maximal && equality_mass(coupling.joint, connection.variables) != maximal_coupling_value(connection))
      return false;
  } catch (const Error&) {
    return false;
  }
  return true;
}

}  // namespace contextlab
