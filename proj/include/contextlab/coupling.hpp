#pragma once

// Couplings of connections and the contextuality verdict: a system is
// contextual iff no joint distribution over all of its double-indexed
// variables reproduces every bunch while coupling every connection maximally.

#include <contextlab/lp.hpp>
#include <contextlab/model.hpp>

#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace contextlab {

/// Joint distribution over stand-ins for a set of source variables. The
/// stand-in for a source variable is identified by the source's VariableId.
struct Coupling {
  Distribution joint;

  const std::vector<VariableId>& variables() const { return joint.variables(); }
};

struct ConsistencyViolation {
  std::string content;
  std::string first_context;
  std::string second_context;
  std::string value;
  Rational first_probability;
  Rational second_probability;
};

struct ConsistencyReport {
  bool consistent = true;
  /// First differing (content, context pair, value), in connection order.
  std::optional<ConsistencyViolation> violation;
};

/// Every connection's marginals are equal value by value.
ConsistencyReport is_consistently_connected(const System& system);

struct MarginalComparison {
  std::string content;
  std::string first_context;
  std::string second_context;
  std::string value;
  Rational first_probability;
  Rational second_probability;
  bool equal = true;
};

/// One entry per (connection, unordered context pair, outcome value). For the
/// 2x2 Bell system this is the eight identities of the form p1+p2 = p3+p4.
std::vector<MarginalComparison> nonsignaling_report(const System& system);

/// max over couplings of Pr(all stand-ins equal) = sum_v min_i Pr(a_i = v).
/// Throws MixedOutcomeSpace when the marginals disagree on outcome space.
Rational maximal_coupling_value(const Connection& connection);

/// A coupling attaining maximal_coupling_value: the common mass min_i Pr(a_i = v)
/// sits on the all-v tuple, the residuals are coupled independently.
Coupling maximal_coupling(const Connection& connection);

/// Pr(all variables of `group` take the same value) under `joint`.
Rational equality_mass(const Distribution& joint, const std::vector<VariableId>& group);

struct ConnectionMaximum {
  std::string content;
  Rational value;
};

struct ContextualityVerdict {
  bool contextual = false;
  /// Connection order, see connections_of.
  std::vector<ConnectionMaximum> per_connection_max;
  /// Maximally connected coupling of the whole system, when one exists.
  std::optional<Coupling> witness;
};

struct CouplingOptions {
  /// Contents whose connection is left unconstrained (no maximality row).
  std::set<std::string> relaxed_contents;
};

/// The master feasibility LP. Column k is the probability of the joint outcome
/// decode_outcome(k, arity) over `variables` (all double-indexed variables of
/// the system, sorted by (content, context)).
struct CouplingProgram {
  std::vector<VariableId> variables;
  std::vector<std::size_t> arity;
  LinearProgram lp;
  std::vector<ConnectionMaximum> per_connection_max;
};

CouplingProgram build_coupling_program(const System& system, const CouplingOptions& options = {});

ContextualityVerdict cbd_contextuality(const System& system, const CouplingOptions& options = {});

/// Re-substitutes a coupling of the whole system: every bunch is reproduced as
/// the marginal onto its context's variables, and every non-relaxed connection
/// carries exactly its maximal equality mass.
bool verify_system_coupling(const System& system, const Coupling& coupling, const CouplingOptions& options = {});

/// Checks a coupling of one connection against its marginals; when
/// `require_maximal` also checks the equality mass.
bool verify_connection_coupling(const Connection& connection, const Coupling& coupling, bool require_maximal);

}  // namespace contextlab
