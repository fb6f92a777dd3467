// Acceptance suite: one PASS/FAIL line per criterion, non-zero exit on failure.

#include <contextlab/coupling.hpp>
#include <contextlab/hidden_variable.hpp>
#include <contextlab/report.hpp>
#include <contextlab/scenarios.hpp>
#include <contextlab/system_file.hpp>

#include <support/oracles.hpp>

#include <sys/wait.h>
#include <unistd.h>

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

using namespace contextlab;
namespace fs = std::filesystem;

namespace {

using Clock = std::chrono::steady_clock;

struct Result {
  bool pass = true;
  std::string note;
};

class Check {
 public:
  void require(bool ok, const std::string& what) {
    if (!ok && result_.pass) {
      result_.pass = false;
      result_.note = what;
    }
  }
  void note(const std::string& n) {
    if (result_.pass) result_.note = n;
  }
  const Result& result() const { return result_; }

 private:
  Result result_;
};

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string fmt_seconds(double s) {
  std::ostringstream out;
  out.precision(3);
  out << std::fixed << s << "s";
  return out.str();
}

Connection pair_connection(const std::vector<Rational>& m1, const std::vector<Rational>& m2) {
  VariableId a{"Q", "c1"}, b{"Q", "c2"};
  return {"Q",
          {a, b},
          {Distribution::from_dense({a}, {m1.size()}, m1), Distribution::from_dense({b}, {m2.size()}, m2)}};
}

// 1. Specker reproduction.
void specker(Check& c) {
  auto start = Clock::now();
  auto s = specker_system();
  c.require(is_consistently_connected(s).consistent, "not consistently connected");
  for (const auto& conn : connections_of(s)) {
    c.require(maximal_coupling_value(conn) == 1, "maximal value of " + conn.content + " is not 1");
    auto coupling = maximal_coupling(conn);
    c.require(coupling.joint.probability(Outcome{0, 0}) == Rational(1, 2) &&
                  coupling.joint.probability(Outcome{1, 1}) == Rational(1, 2),
              "maximal coupling of " + conn.content + " is not the diagonal 1/2, 1/2");
    c.require(*testing::transportation_max_equal(conn.marginals[0].dense(), conn.marginals[1].dense()).optimum == 1,
              "LP oracle disagrees for " + conn.content);
  }
  c.require(cbd_contextuality(s).contextual, "not contextual");
  c.require(testing::globally_consistent_assignments(s) == 0, "oracle found a consistent assignment");
  double t = seconds_since(start);
  c.require(t < 1.0, "took " + fmt_seconds(t));
  c.note("max values 1, 1, 1; contextual; " + fmt_seconds(t));
}

// 2. Removing any one maximality row makes the Specker program feasible.
void single_relaxation(Check& c) {
  auto start = Clock::now();
  auto s = specker_system();
  c.require(solve(build_coupling_program(s).lp).status == LpStatus::Infeasible, "full program feasible");
  for (const auto& conn : connections_of(s)) {
    CouplingOptions relaxed{{conn.content}};
    auto program = build_coupling_program(s, relaxed);
    auto r = solve(program.lp);
    c.require(r.status == LpStatus::Feasible, "still infeasible without " + conn.content);
    if (r.status == LpStatus::Feasible) c.require(satisfies(program.lp, r.witness), "witness fails the rows");
    auto v = cbd_contextuality(s, relaxed);
    c.require(!v.contextual && v.witness && verify_system_coupling(s, *v.witness, relaxed),
              "relaxed verdict not verified for " + conn.content);
  }
  double t = seconds_since(start);
  c.require(t < 1.0, "took " + fmt_seconds(t));
  c.note("3 relaxations feasible, full infeasible; " + fmt_seconds(t));
}

// 3. Non-signaling identities.
void nonsignaling(Check& c) {
  std::mt19937_64 rng(303);
  const PairTable plus{Rational(3, 8), Rational(1, 8), Rational(1, 8), Rational(3, 8)};
  const PairTable minus{Rational(1, 8), Rational(3, 8), Rational(3, 8), Rational(1, 8)};
  std::vector<std::array<Rational, 16>> sets{bell_parameters({plus, plus, plus, minus}), pr_box_parameters(),
                                             bell_uniform_parameters()};
  for (int i = 0; i < 200; ++i) {
    const Rational a1 = testing::random_probability(rng), a2 = testing::random_probability(rng);
    const Rational b1 = testing::random_probability(rng), b2 = testing::random_probability(rng);
    sets.push_back(bell_parameters({testing::random_table_with_marginals(rng, a1, b1),
                                    testing::random_table_with_marginals(rng, a1, b2),
                                    testing::random_table_with_marginals(rng, a2, b1),
                                    testing::random_table_with_marginals(rng, a2, b2)}));
  }
  for (const auto& p : sets) {
    // p1 + p2 = p3 + p4 and its siblings, straight from the parameters.
    c.require(p[0] + p[1] == p[2] + p[3], "p1+p2 != p3+p4 in generated set");
    auto report = nonsignaling_report(bell_system(p));
    c.require(report.size() == 8, "expected 8 comparisons");
    for (const auto& e : report) c.require(e.equal, "comparison marked unequal on a non-signaling set");
  }

  auto signaling = bell_parameters({independent_uniform(),
                                    PairTable{Rational(1, 8), Rational(1, 8), Rational(3, 8), Rational(3, 8)},
                                    independent_uniform(), independent_uniform()});
  std::size_t unequal = 0;
  for (const auto& e : nonsignaling_report(bell_system(signaling))) {
    if (e.equal) continue;
    ++unequal;
    c.require(e.content == "A1" && e.first_context == "A1B1" && e.second_context == "A1B2",
              "wrong comparison named: " + e.content + " " + e.first_context + "/" + e.second_context);
  }
  c.require(unequal == 2, "expected the two A1 comparisons to be flagged");
  c.note(std::to_string(sets.size()) + " non-signaling sets all equal; signaling A1 in A1B1 vs A1B2 named");
}

// 4. Closed form against the transportation LP.
void closed_form(Check& c) {
  std::mt19937_64 rng(404);
  int n = 0;
  for (; n < 1200; ++n) {
    const std::size_t d = 2 + n % 3;
    auto m1 = testing::random_distribution(rng, d, 64);
    auto m2 = testing::random_distribution(rng, d, 64);
    auto lp = testing::transportation_max_equal(m1, m2);
    if (lp.status != LpStatus::Feasible) {
      c.require(false, "oracle LP not feasible");
      continue;
    }
    auto closed = maximal_coupling_value(pair_connection(m1, m2));
    c.require(closed == *lp.optimum, "mismatch: closed " + to_string(closed) + " vs LP " + to_string(*lp.optimum));
    if (d == 2) c.require(closed == testing::binary_max_equal_by_endpoints(m1[0], m2[0]), "binary endpoint mismatch");
  }
  c.note(std::to_string(n) + " connections, zero mismatches");
}

// 5. Fine, octuple and CbD verdicts agree.
void three_way(Check& c) {
  std::mt19937_64 rng(505);
  int bell_ctx = 0, bell_non = 0, r3_ctx = 0, r3_non = 0, disagreements = 0;
  for (int i = 0; i < 400; ++i) {
    const bool bell = i < 200;
    auto s = bell ? testing::random_consistent_bell(rng) : testing::random_consistent_rank3(rng);
    c.require(is_consistently_connected(s).consistent, "generator produced an inconsistent system");
    const bool noncontextual = !cbd_contextuality(s).contextual;
    const bool fine = fine_model(s).feasible;
    const bool oct = octuple_model(s).feasible;
    if (fine != oct || fine != noncontextual) ++disagreements;
    if (bell) (noncontextual ? bell_non : bell_ctx)++;
    else (noncontextual ? r3_non : r3_ctx)++;
  }
  c.require(disagreements == 0, std::to_string(disagreements) + " disagreements");
  c.require(bell_ctx > 0 && bell_non > 0 && r3_ctx > 0 && r3_non > 0, "sample lacks both verdict classes");
  c.note("Bell 200 (" + std::to_string(bell_ctx) + " contextual), rank-3 200 (" + std::to_string(r3_ctx) +
         " contextual), 0 disagreements");
}

// 6. Known points.
void known_points(Check& c) {
  auto cor = perfectly_correlated(), anti = perfectly_anticorrelated();
  struct Point {
    std::string name;
    std::function<System()> build;
    bool contextual;
  };
  std::vector<Point> points{
      {"uniform Bell", [] { return bell_system(bell_uniform_parameters()); }, false},
      {"PR box", [] { return bell_system(pr_box_parameters()); }, true},
      {"correlated LG", [&] { return leggett_garg_system({cor, cor, cor}); }, false},
      {"two-correlated-one-anti LG", [&] { return leggett_garg_system({cor, cor, anti}); }, true},
  };
  std::string times;
  for (const auto& p : points) {
    auto start = Clock::now();
    auto v = cbd_contextuality(p.build());
    double t = seconds_since(start);
    c.require(v.contextual == p.contextual, p.name + " has the wrong verdict");
    c.require(t < 1.0, p.name + " took " + fmt_seconds(t));
    times += (times.empty() ? "" : ", ") + p.name + " " + fmt_seconds(t);
  }
  c.note(times);
}

std::vector<std::pair<std::string, System>> fixtures() {
  std::vector<std::pair<std::string, System>> out;
  std::vector<fs::path> paths;
  for (const auto& entry : fs::directory_iterator(CONTEXTLAB_DATA_DIR))
    if (entry.path().extension() == ".system") paths.push_back(entry.path());
  std::sort(paths.begin(), paths.end());
  for (const auto& p : paths) {
    try {
      out.emplace_back(p.filename().string(), load_system(p.string()));
    } catch (const Error&) {
      // Deliberately malformed fixtures.
    }
  }
  return out;
}

// 7. Every feasible witness re-verifies exactly.
void witnesses(Check& c) {
  auto systems = fixtures();
  c.require(systems.size() >= 5, "expected the shipped fixtures");
  std::mt19937_64 rng(707);
  for (int i = 0; i < 30; ++i) {
    systems.emplace_back("random", testing::random_consistent_bell(rng));
    systems.emplace_back("random", leggett_garg_system({testing::random_table(rng), testing::random_table(rng),
                                                         testing::random_table(rng)}));
  }
  int verified = 0;
  for (const auto& [name, s] : systems) {
    auto v = cbd_contextuality(s);
    if (v.witness) {
      c.require(verify_system_coupling(s, *v.witness), name + ": CbD witness fails");
      ++verified;
    }
    for (const auto& conn : connections_of(s)) {
      CouplingOptions relaxed{{conn.content}};
      auto r = cbd_contextuality(s, relaxed);
      if (r.witness) {
        c.require(verify_system_coupling(s, *r.witness, relaxed), name + ": relaxed witness fails");
        ++verified;
      }
    }
    if (auto f = fine_model(s); f.model) {
      c.require(verify_model(s, *f.model), name + ": fine model fails");
      ++verified;
    }
    if (auto o = octuple_model(s); o.model) {
      c.require(verify_model(s, *o.model), name + ": octuple model fails");
      ++verified;
    }
  }
  c.note(std::to_string(verified) + " witnesses verified over " + std::to_string(systems.size()) + " systems");
}

std::string run(const std::string& command, int& status) {
  std::string out;
  FILE* pipe = popen(command.c_str(), "r");
  if (!pipe) {
    status = -1;
    return out;
  }
  char buffer[4096];
  std::size_t n;
  while ((n = fread(buffer, 1, sizeof buffer, pipe)) > 0) out.append(buffer, n);
  int raw = pclose(pipe);
  status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return out;
}

// 8. CLI round trip.
void cli_round_trip(Check& c) {
  const std::string cli = CONTEXTLAB_CLI_PATH;
  auto dir = fs::temp_directory_path() / ("contextlab-acceptance-" + std::to_string(::getpid()));
  fs::create_directories(dir);
  auto cor = perfectly_correlated(), anti = perfectly_anticorrelated();
  struct Case {
    std::string args;
    System expected;
  };
  std::vector<Case> cases{
      {"specker", specker_system()},
      {"bell", bell_system(bell_uniform_parameters())},
      {"bell --preset pr-box", bell_system(pr_box_parameters())},
      {"leggett-garg --preset correlated", leggett_garg_system({cor, cor, cor})},
      {"leggett-garg --preset two-correlated-one-anti", leggett_garg_system({cor, cor, anti})},
      {"rank2 --tables \"1/2,0,0,1/2;0,1/2,1/2,0\"", rank2_system(cor, anti)},
  };
  int index = 0;
  for (const auto& k : cases) {
    auto file = (dir / ("case" + std::to_string(index++) + ".system")).string();
    int status = 0;
    run(cli + " scenario " + k.args + " --out " + file, status);
    c.require(status == 0, "scenario " + k.args + " exited " + std::to_string(status));
    if (status != 0) continue;
    c.require(load_system(file) == k.expected, "scenario " + k.args + " wrote a different system");

    int s1 = 0, s2 = 0;
    auto first = run(cli + " check " + file + " --json", s1);
    auto second = run(cli + " check " + file + " --json", s2);
    c.require(s1 == 0 && s2 == 0, "check exited non-zero for " + k.args);
    c.require(!first.empty() && first == second, "JSON not byte-stable for " + k.args);
    auto library = analyze(k.expected);
    c.require(first == render_json(library), "CLI JSON differs from library rendering for " + k.args);
    try {
      c.require(parse_report_verdicts(first) == verdicts_of(library), "verdicts differ for " + k.args);
    } catch (const Error& e) {
      c.require(false, std::string("report did not parse: ") + e.what());
    }
  }
  fs::remove_all(dir);
  c.note(std::to_string(cases.size()) + " scenarios round-tripped, JSON byte-identical across runs");
}

}  // namespace

int main() {
  struct Criterion {
    int number;
    const char* name;
    void (*run)(Check&);
  };
  const Criterion criteria[] = {
      {1, "Specker reproduction", specker},
      {2, "single relaxation makes Specker feasible", single_relaxation},
      {3, "non-signaling identities", nonsignaling},
      {4, "closed form equals LP optimum", closed_form},
      {5, "fine / octuple / CbD agreement", three_way},
      {6, "known points", known_points},
      {7, "witness re-verification", witnesses},
      {8, "CLI round trip", cli_round_trip},
  };
  int failures = 0;
  for (const auto& cr : criteria) {
    Check check;
    auto start = Clock::now();
    try {
      cr.run(check);
    } catch (const std::exception& e) {
      check.require(false, std::string("exception: ") + e.what());
    }
    const auto& r = check.result();
    if (!r.pass) ++failures;
    std::cout << (r.pass ? "[PASS] " : "[FAIL] ") << cr.number << ". " << cr.name << " - " << r.note << " ("
              << fmt_seconds(seconds_since(start)) << ")\n";
  }
  std::cout << (failures == 0 ? "all criteria passed\n" : std::to_string(failures) + " criteria failed\n");
  return failures == 0 ? 0 : 1;
}
