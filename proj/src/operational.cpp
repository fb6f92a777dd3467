#include <contextlab/error.hpp>
#include <contextlab/operational.hpp>

#include <algorithm>

namespace contextlab {

OperationalTable::OperationalTable(std::vector<std::string> preparations,
                                   std::map<std::string, std::vector<std::string>> outcomes)
    : preparations_(std::move(preparations)), outcomes_(std::move(outcomes)) {
  for (const auto& [m, labels] : outcomes_)
    if (labels.size() < 2) throw Error(ErrorKind::ValidationError, "measurement '" + m + "' needs >= 2 outcomes");
}

std::size_t OperationalTable::outcome_index(const std::string& measurement, const std::string& outcome) const {
  auto m = outcomes_.find(measurement);
  if (m == outcomes_.end()) throw Error(ErrorKind::UnknownContent, "measurement '" + measurement + "'");
  auto it = std::find(m->second.begin(), m->second.end(), outcome);
  if (it == m->second.end())
    throw Error(ErrorKind::UnknownVariable, "outcome '" + outcome + "' of '" + measurement + "'");
  return static_cast<std::size_t>(it - m->second.begin());
}

void OperationalTable::set(const std::string& preparation, const std::string& measurement,
                           std::vector<Rational> probabilities) {
  for (auto& p : probabilities) p.canonicalize();
  if (std::find(preparations_.begin(), preparations_.end(), preparation) == preparations_.end())
    throw Error(ErrorKind::UnknownContext, "preparation '" + preparation + "'");
  auto m = outcomes_.find(measurement);
  if (m == outcomes_.end()) throw Error(ErrorKind::UnknownContent, "measurement '" + measurement + "'");
  if (probabilities.size() != m->second.size())
    throw Error(ErrorKind::MalformedDistribution, "wrong number of outcome probabilities for '" + measurement + "'");
  Rational total = 0;
  for (const auto& p : probabilities) {
    if (sgn(p) < 0) throw Error(ErrorKind::MalformedDistribution, "negative probability");
    total += p;
  }
  if (total != 1) throw Error(ErrorKind::MalformedDistribution, "probabilities sum to " + to_string(total));
  table_[{preparation, measurement}] = std::move(probabilities);
}

const Rational& OperationalTable::probability(const std::string& outcome, const std::string& measurement,
                                              const std::string& preparation) const {
  const std::size_t k = outcome_index(measurement, outcome);
  auto it = table_.find({preparation, measurement});
  if (it == table_.end())
    throw Error(ErrorKind::ValidationError, "no statistics for " + measurement + " after " + preparation);
  return it->second[k];
}

bool preparations_equivalent(const OperationalTable& table, const std::string& first, const std::string& second) {
  for (const auto& [m, labels] : table.outcomes())
    for (const auto& k : labels)
      if (table.probability(k, m, first) != table.probability(k, m, second)) return false;
  return true;
}

bool measurement_events_equivalent(const OperationalTable& table, const MeasurementEvent& first,
                                   const MeasurementEvent& second) {
  for (const auto& p : table.preparations())
    if (table.probability(first.outcome, first.measurement, p) != table.probability(second.outcome, second.measurement, p))
      return false;
  return true;
}

}  // namespace contextlab
