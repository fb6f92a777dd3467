#include <contextlab/scenarios.hpp>

namespace contextlab {

namespace {

BunchTable pair_bunch(const std::string& context, const std::string& first, const std::string& second,
                      const PairTable& table, const std::vector<std::string>& values) {
  BunchTable bunch{context, {first, second}, {}};
  for (std::size_t a = 0; a < 2; ++a)
    for (std::size_t b = 0; b < 2; ++b) bunch.entries.push_back({{values[a], values[b]}, table[2 * a + b]});
  return bunch;
}

std::string q(std::size_t i) { return "Q" + std::to_string(i); }

}  // namespace

std::vector<std::string> binary_values(BinaryLabels labels) {
  if (labels == BinaryLabels::PlusMinus) return {"+1", "-1"};
  return {"0", "1"};
}

PairTable perfectly_correlated() { return {Rational(1, 2), Rational(0), Rational(0), Rational(1, 2)}; }
PairTable perfectly_anticorrelated() { return {Rational(0), Rational(1, 2), Rational(1, 2), Rational(0)}; }
PairTable independent_uniform() { return {Rational(1, 4), Rational(1, 4), Rational(1, 4), Rational(1, 4)}; }

System specker_system(BinaryLabels labels) {
  const auto values = binary_values(labels);
  std::vector<Content> contents;
  for (const char* id : {"M1", "M2", "M3"}) contents.push_back({id, values});
  std::vector<Context> contexts{{"M1M2", {"M1", "M2"}}, {"M2M3", {"M2", "M3"}}, {"M1M3", {"M1", "M3"}}};
  std::vector<BunchTable> bunches;
  for (const auto& ctx : contexts)
    bunches.push_back(pair_bunch(ctx.id, ctx.members[0], ctx.members[1], perfectly_anticorrelated(), values));
  return build_system(std::move(contents), std::move(contexts), std::move(bunches));
}

std::array<Rational, 16> bell_parameters(const std::array<PairTable, 4>& blocks) {
  // Flat offsets of (+,+), (+,-), (-,+), (-,-) for each block.
  static constexpr std::size_t layout[4][4] = {{0, 1, 4, 5}, {2, 3, 6, 7}, {8, 9, 12, 13}, {10, 11, 14, 15}};
  std::array<Rational, 16> p;
  for (std::size_t b = 0; b < 4; ++b)
    for (std::size_t k = 0; k < 4; ++k) p[layout[b][k]] = blocks[b][k];
  return p;
}

std::array<Rational, 16> bell_uniform_parameters() {
  return bell_parameters({independent_uniform(), independent_uniform(), independent_uniform(), independent_uniform()});
}

std::array<Rational, 16> pr_box_parameters() {
  return bell_parameters(
      {perfectly_correlated(), perfectly_correlated(), perfectly_correlated(), perfectly_anticorrelated()});
}

System bell_system(const std::array<Rational, 16>& p, BinaryLabels labels) {
  const auto values = binary_values(labels);
  std::vector<Content> contents;
  for (const char* id : {"A1", "A2", "B1", "B2"}) contents.push_back({id, values});
  std::vector<Context> contexts{
      {"A1B1", {"A1", "B1"}}, {"A1B2", {"A1", "B2"}}, {"A2B1", {"A2", "B1"}}, {"A2B2", {"A2", "B2"}}};
  const std::array<PairTable, 4> blocks{PairTable{p[0], p[1], p[4], p[5]}, PairTable{p[2], p[3], p[6], p[7]},
                                        PairTable{p[8], p[9], p[12], p[13]}, PairTable{p[10], p[11], p[14], p[15]}};
  std::vector<BunchTable> bunches;
  for (std::size_t i = 0; i < 4; ++i)
    bunches.push_back(pair_bunch(contexts[i].id, contexts[i].members[0], contexts[i].members[1], blocks[i], values));
  return build_system(std::move(contents), std::move(contexts), std::move(bunches));
}

System leggett_garg_system(const std::array<PairTable, 3>& tables, BinaryLabels labels) {
  return cyclic_system({tables.begin(), tables.end()}, labels);
}

System rank2_system(const PairTable& first, const PairTable& second, BinaryLabels labels) {
  const auto values = binary_values(labels);
  std::vector<Content> contents{{"Q1", values}, {"Q2", values}};
  std::vector<Context> contexts{{"c1", {"Q1", "Q2"}}, {"c2", {"Q1", "Q2"}}};
  std::vector<BunchTable> bunches{pair_bunch("c1", "Q1", "Q2", first, values),
                                  pair_bunch("c2", "Q1", "Q2", second, values)};
  return build_system(std::move(contents), std::move(contexts), std::move(bunches));
}

System cyclic_system(const std::vector<PairTable>& tables, BinaryLabels labels) {
  const std::size_t n = tables.size();
  if (n == 2) return rank2_system(tables[0], tables[1], labels);
  if (n < 2) throw Error(ErrorKind::ValidationError, "a cyclic system needs rank >= 2");

  const auto values = binary_values(labels);
  std::vector<Content> contents;
  for (std::size_t i = 1; i <= n; ++i) contents.push_back({q(i), values});
  std::vector<Context> contexts;
  for (std::size_t i = 1; i < n; ++i) contexts.push_back({q(i) + q(i + 1), {q(i), q(i + 1)}});
  contexts.push_back({q(1) + q(n), {q(1), q(n)}});

  std::vector<BunchTable> bunches;
  for (std::size_t i = 0; i < n; ++i)
    bunches.push_back(pair_bunch(contexts[i].id, contexts[i].members[0], contexts[i].members[1], tables[i], values));
  return build_system(std::move(contents), std::move(contexts), std::move(bunches));
}

ScenarioKind parse_scenario_kind(std::string_view name) {
  if (name == "bell") return ScenarioKind::BellChsh;
  if (name == "specker") return ScenarioKind::Specker;
  if (name == "leggett-garg") return ScenarioKind::LeggettGarg;
  if (name == "rank2") return ScenarioKind::Rank2;
  if (name == "cyclic") return ScenarioKind::CyclicN;
  throw Error(ErrorKind::UnknownScenario, "'" + std::string(name) + "'");
}

const char* to_string(ScenarioKind kind) {
  switch (kind) {
    case ScenarioKind::BellChsh: return "bell";
    case ScenarioKind::Specker: return "specker";
    case ScenarioKind::LeggettGarg: return "leggett-garg";
    case ScenarioKind::Rank2: return "rank2";
    case ScenarioKind::CyclicN: return "cyclic";
  }
  return "?";
}

System build_scenario(const ScenarioSpec& spec) {
  auto expect = [&](std::size_t count) {
    if (spec.tables.size() != count)
      throw Error(ErrorKind::ValidationError, std::string(to_string(spec.kind)) + " takes " + std::to_string(count) +
                                                  " tables, got " + std::to_string(spec.tables.size()));
  };
  switch (spec.kind) {
    case ScenarioKind::Specker:
      return specker_system(spec.labels);
    case ScenarioKind::BellChsh:
      expect(4);
      return bell_system(bell_parameters({spec.tables[0], spec.tables[1], spec.tables[2], spec.tables[3]}),
                         spec.labels);
    case ScenarioKind::LeggettGarg:
      expect(3);
      return leggett_garg_system({spec.tables[0], spec.tables[1], spec.tables[2]}, spec.labels);
    case ScenarioKind::Rank2:
      expect(2);
      return rank2_system(spec.tables[0], spec.tables[1], spec.labels);
    case ScenarioKind::CyclicN:
      return cyclic_system(spec.tables, spec.labels);
  }
  throw Error(ErrorKind::UnknownScenario, "unhandled kind");
}

}  // namespace contextlab
