#pragma once

// Operational equivalence over observed statistics p(k | M, P): outcome k of
// measurement procedure M after preparation procedure P.

#include <contextlab/error.hpp>
#include <contextlab/rational.hpp>

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace contextlab {

class OperationalTable {
 public:
  /// `outcomes[M]` lists the outcome labels of measurement M.
  OperationalTable(std::vector<std::string> preparations, std::map<std::string, std::vector<std::string>> outcomes);

  /// Sets p(. | M, P); must be a distribution over M's outcomes.
  void set(const std::string& preparation, const std::string& measurement, std::vector<Rational> probabilities);

  const Rational& probability(const std::string& outcome, const std::string& measurement,
                              const std::string& preparation) const;

  const std::vector<std::string>& preparations() const { return preparations_; }
  const std::map<std::string, std::vector<std::string>>& outcomes() const { return outcomes_; }

 private:
  std::size_t outcome_index(const std::string& measurement, const std::string& outcome) const;

  std::vector<std::string> preparations_;
  std::map<std::string, std::vector<std::string>> outcomes_;
  std::map<std::pair<std::string, std::string>, std::vector<Rational>> table_;
};

/// p(k|M,P) = p(k|M,P') for every measurement M and outcome k.
bool preparations_equivalent(const OperationalTable& table, const std::string& first, const std::string& second);

struct MeasurementEvent {
  std::string outcome;
  std::string measurement;
};

/// p(k|M,P) = p(k'|M',P) for every preparation P.
bool measurement_events_equivalent(const OperationalTable& table, const MeasurementEvent& first,
                                   const MeasurementEvent& second);

}  // namespace contextlab
