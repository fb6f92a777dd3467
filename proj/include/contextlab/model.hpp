#pragma once

// Systems of double-indexed random variables: contents (what is measured),
// contexts (what is measured together), one jointly distributed bunch per
// context, and the connections linking variables that share a content.

#include <contextlab/error.hpp>
#include <contextlab/rational.hpp>

#include <compare>
#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace contextlab {

/// Per-variable outcome indices; index i refers to the i-th declared value of
/// that variable's content.
using Outcome = std::vector<std::size_t>;

struct VariableId {
  std::string content;
  std::string context;

  auto operator<=>(const VariableId&) const = default;
};

std::string to_string(const VariableId& id);

struct Content {
  std::string id;
  /// Declared outcome labels, in order. At least two, all distinct.
  std::vector<std::string> values;

  bool operator==(const Content&) const = default;
};

struct Context {
  std::string id;
  std::vector<std::string> members;

  bool contains(const std::string& content) const;
  bool operator==(const Context&) const = default;
};

/// Joint distribution over an ordered variable list, stored densely over the
/// product of the variables' outcome spaces (row-major, last variable fastest).
class Distribution {
 public:
  Distribution() = default;

  /// Validates and builds from sparse entries; missing tuples get mass 0.
  /// Throws MalformedDistribution on duplicate or out-of-range tuples,
  /// negative mass, or a total different from 1.
  static Distribution from_entries(std::vector<VariableId> variables,
                                   std::vector<std::size_t> arity,
                                   const std::vector<std::pair<Outcome, Rational>>& entries);

  /// Validates and builds from a dense probability vector.
  static Distribution from_dense(std::vector<VariableId> variables,
                                 std::vector<std::size_t> arity,
                                 std::vector<Rational> probabilities);

  const std::vector<VariableId>& variables() const { return variables_; }
  const std::vector<std::size_t>& arity() const { return arity_; }
  const std::vector<Rational>& dense() const { return probabilities_; }
  std::size_t outcome_count() const { return probabilities_.size(); }

  const Rational& probability(std::span<const std::size_t> outcome) const;

  /// Non-zero entries in row-major order.
  std::vector<std::pair<Outcome, Rational>> support() const;

  /// Position of a variable in variables(); throws UnknownVariable.
  std::size_t index_of(const VariableId& variable) const;

  /// Sums out every variable not in `subset`; the result keeps `subset`'s order.
  Distribution marginal(std::span<const VariableId> subset) const;

  Outcome decode(std::size_t flat) const;
  std::size_t encode(std::span<const std::size_t> outcome) const;

  bool operator==(const Distribution&) const = default;

 private:
  Distribution(std::vector<VariableId> variables, std::vector<std::size_t> arity,
               std::vector<Rational> probabilities);

  void validate() const;

  std::vector<VariableId> variables_;
  std::vector<std::size_t> arity_;
  std::vector<Rational> probabilities_;
};

/// Mixed-radix enumeration helpers shared by the LP builders.
std::size_t product_size(std::span<const std::size_t> arity);
Outcome decode_outcome(std::size_t flat, std::span<const std::size_t> arity);
std::size_t encode_outcome(std::span<const std::size_t> outcome,
                           std::span<const std::size_t> arity);

struct Bunch {
  std::string context;
  /// Over exactly the variables (q, context) for q in the context's members,
  /// in member order.
  Distribution joint;

  bool operator==(const Bunch&) const = default;
};

struct Connection {
  std::string content;
  std::vector<VariableId> variables;
  /// marginals[i] is the single-variable distribution of variables[i].
  std::vector<Distribution> marginals;
};

/// Input form of a bunch, as read from files or built by scenarios. Outcomes
/// are given as labels; `variables` lists content ids in column order.
struct BunchTable {
  std::string context;
  std::vector<std::string> variables;
  std::vector<std::pair<std::vector<std::string>, Rational>> entries;
};

class System {
 public:
  const std::vector<Content>& contents() const { return contents_; }
  const std::vector<Context>& contexts() const { return contexts_; }
  /// bunches()[i] belongs to contexts()[i].
  const std::vector<Bunch>& bunches() const { return bunches_; }

  const Content& content(const std::string& id) const;
  const Context& context(const std::string& id) const;
  const Bunch& bunch(const std::string& context_id) const;

  std::size_t arity(const std::string& content_id) const { return content(content_id).values.size(); }
  const std::string& label(const std::string& content_id, std::size_t value) const;

  /// Every double-indexed variable, sorted by (content, context).
  std::vector<VariableId> variables() const;

  bool operator==(const System&) const = default;

 private:
  friend System build_system(std::vector<Content>, std::vector<Context>, std::vector<BunchTable>);

  std::vector<Content> contents_;
  std::vector<Context> contexts_;
  std::vector<Bunch> bunches_;
};

/// Validates every invariant of a system. Errors: MalformedDistribution,
/// UnknownContent, UnknownContext, ContextMismatch, DuplicateBunch,
/// ValidationError (structural problems such as an unmeasured content).
System build_system(std::vector<Content> contents, std::vector<Context> contexts,
                    std::vector<BunchTable> bunches);

Distribution marginal(const Bunch& bunch, std::span<const VariableId> subset);

/// One connection per content measured in at least two contexts, in content
/// declaration order; variables follow context declaration order.
std::vector<Connection> connections_of(const System& system);

}  // namespace contextlab
