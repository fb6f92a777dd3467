#pragma once

// Deterministic hidden-variable models: a distribution over value assignments
// from which every bunch is recovered by reading off the assigned values.
//
//  * fine_model    - one value per content, shared by all contexts (the 16
//                    quadruples <a1, a2, b1, b2> of a 2x2 Bell system).
//  * octuple_model - one value per (content, context) variable (256 octuples
//                    for Bell), with each connection's equality mass pinned to
//                    its maximal coupling value.

#include <contextlab/lp.hpp>
#include <contextlab/model.hpp>

#include <optional>
#include <string>
#include <vector>

namespace contextlab {

/// Key of one coordinate of an assignment. `context` is empty for
/// content-keyed (Fine) models.
struct AssignmentKey {
  std::string content;
  std::string context;

  bool content_keyed() const { return context.empty(); }
  bool operator==(const AssignmentKey&) const = default;
};

std::string to_string(const AssignmentKey& key);

struct DeterministicAssignment {
  /// values[i] is the outcome index assigned to keys[i] of the owning model.
  Outcome values;
};

struct HiddenVariableModel {
  std::vector<AssignmentKey> keys;
  /// Every assignment of the product space, lexicographic in key order.
  std::vector<DeterministicAssignment> assignments;
  /// weights[i] belongs to assignments[i]; non-negative, summing to 1.
  std::vector<Rational> weights;
};

struct ModelVerdict {
  bool feasible = false;
  std::optional<HiddenVariableModel> model;
};

ModelVerdict fine_model(const System& system);

struct OctupleOptions {
  /// When false only the bunch-reproduction rows are imposed.
  bool impose_maximality = true;
};

ModelVerdict octuple_model(const System& system, const OctupleOptions& options = {});

/// Recomputes each bunch from the weighted assignments and compares exactly;
/// for variable-keyed models with `check_maximality`, also compares every
/// connection's equality mass against its maximal coupling value.
bool verify_model(const System& system, const HiddenVariableModel& model, bool check_maximality = true);

}  // namespace contextlab
