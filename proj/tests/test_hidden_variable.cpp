#include <contextlab/coupling.hpp>
#include <contextlab/hidden_variable.hpp>
#include <contextlab/scenarios.hpp>

#include <doctest.h>
#include <support/oracles.hpp>

using namespace contextlab;

namespace {

std::vector<std::pair<Outcome, Rational>> support_of(const HiddenVariableModel& model) {
  std::vector<std::pair<Outcome, Rational>> out;
  for (std::size_t i = 0; i < model.assignments.size(); ++i)
    if (sgn(model.weights[i]) != 0) out.emplace_back(model.assignments[i].values, model.weights[i]);
  return out;
}

System correlated_bell() {
  return bell_system(bell_parameters({perfectly_correlated(), perfectly_correlated(), perfectly_correlated(),
                                      perfectly_correlated()}));
}

}  // namespace

TEST_CASE("fine model keys and size") {
  auto verdict = fine_model(correlated_bell());
  REQUIRE(verdict.feasible);
  const auto& model = *verdict.model;
  REQUIRE(model.keys.size() == 4);
  CHECK(model.keys[0] == AssignmentKey{"A1", ""});
  CHECK(model.keys[3] == AssignmentKey{"B2", ""});
  CHECK(model.keys[0].content_keyed());
  CHECK(to_string(model.keys[1]) == "A2");
  CHECK(model.assignments.size() == 16);
  CHECK(model.weights.size() == 16);
}

TEST_CASE("fine model of the correlated Bell table") {
  // Every pair is equal, so only <+1,+1,+1,+1> and <-1,-1,-1,-1> survive.
  auto system = correlated_bell();
  CHECK(testing::globally_consistent_assignments(system) == 2);
  auto verdict = fine_model(system);
  REQUIRE(verdict.feasible);
  auto support = support_of(*verdict.model);
  REQUIRE(support.size() == 2);
  CHECK(support[0].first == Outcome{0, 0, 0, 0});
  CHECK(support[0].second == Rational(1, 2));
  CHECK(support[1].first == Outcome{1, 1, 1, 1});
  CHECK(support[1].second == Rational(1, 2));
  CHECK(verify_model(system, *verdict.model));
}

TEST_CASE("fine model infeasible for PR box and Specker") {
  auto pr = bell_system(pr_box_parameters());
  CHECK(testing::globally_consistent_assignments(pr) == 0);
  CHECK_FALSE(fine_model(pr).feasible);
  CHECK_FALSE(fine_model(pr).model);

  auto specker = specker_system();
  CHECK(testing::globally_consistent_assignments(specker) == 0);
  CHECK_FALSE(fine_model(specker).feasible);
}

TEST_CASE("octuple model") {
  auto specker = specker_system();
  CHECK_FALSE(octuple_model(specker).feasible);

  auto lg = leggett_garg_system({perfectly_correlated(), perfectly_correlated(), perfectly_correlated()});
  auto verdict = octuple_model(lg);
  REQUIRE(verdict.feasible);
  const auto& model = *verdict.model;
  CHECK(model.keys.size() == 6);
  CHECK(model.keys[0] == AssignmentKey{"Q1", "Q1Q2"});
  CHECK_FALSE(model.keys[0].content_keyed());
  CHECK(to_string(model.keys[0]) == "Q1@Q1Q2");
  CHECK(model.assignments.size() == 64);
  CHECK(verify_model(lg, model));
  auto support = support_of(model);
  REQUIRE(support.size() == 2);
  CHECK(support[0].first == Outcome(6, 0));
  CHECK(support[1].first == Outcome(6, 1));

  auto bell = octuple_model(bell_system(bell_uniform_parameters()));
  REQUIRE(bell.feasible);
  CHECK(bell.model->assignments.size() == 256);
}

TEST_CASE("octuple model without maximality is always feasible") {
  std::mt19937_64 rng(55);
  OctupleOptions loose{false};
  std::vector<System> systems{specker_system(), bell_system(pr_box_parameters())};
  for (int i = 0; i < 10; ++i) {
    systems.push_back(leggett_garg_system({testing::random_table(rng), testing::random_table(rng),
                                           testing::random_table(rng)}));
    systems.push_back(bell_system(bell_parameters({testing::random_table(rng), testing::random_table(rng),
                                                   testing::random_table(rng), testing::random_table(rng)})));
  }
  for (const auto& s : systems) {
    auto v = octuple_model(s, loose);
    REQUIRE(v.feasible);
    CHECK(verify_model(s, *v.model, false));
  }
}

TEST_CASE("verify_model rejects tampered weights") {
  auto system = correlated_bell();
  auto model = *fine_model(system).model;
  std::size_t first = 0, last = model.weights.size() - 1;
  model.weights[first] = Rational(3, 4);
  model.weights[last] = Rational(1, 4);
  CHECK_FALSE(verify_model(system, model));

  auto lg = leggett_garg_system({perfectly_correlated(), perfectly_correlated(), perfectly_correlated()});
  // A coupling that reproduces the bunches but not the maximal equality mass.
  auto loose = octuple_model(lg, OctupleOptions{false});
  REQUIRE(loose.feasible);
  CHECK(verify_model(lg, *loose.model, false));
}

TEST_CASE("the three verdicts agree on consistently connected systems") {
  std::mt19937_64 rng(4242);
  int contextual = 0, noncontextual = 0;
  for (int trial = 0; trial < 40; ++trial) {
    auto s = trial % 2 ? testing::random_consistent_rank3(rng) : testing::random_consistent_bell(rng);
    const bool cbd = !cbd_contextuality(s).contextual;
    auto fine = fine_model(s);
    auto oct = octuple_model(s);
    CHECK(cbd == fine.feasible);
    CHECK(cbd == oct.feasible);
    if (fine.feasible) CHECK(verify_model(s, *fine.model));
    if (oct.feasible) CHECK(verify_model(s, *oct.model));
    (cbd ? noncontextual : contextual)++;
  }
  CHECK(contextual > 0);
  CHECK(noncontextual > 0);
}
