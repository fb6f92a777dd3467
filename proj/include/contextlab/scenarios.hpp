#pragma once

// Builders for the standard binary systems: Bell/CHSH (rank-4 cyclic),
// Specker and Leggett-Garg (rank 3), order-effect pairs (rank 2) and general
// cyclic systems of rank n.

#include <contextlab/model.hpp>

#include <array>
#include <string>
#include <string_view>
#include <vector>

namespace contextlab {

/// Outcome labels of a binary content. ZeroOne renders anti-correlation as
/// value complement, PlusMinus as negation; both are "the other value".
enum class BinaryLabels { ZeroOne, PlusMinus };

std::vector<std::string> binary_values(BinaryLabels labels);

/// Joint table of a two-content bunch, row-major over (first, second):
/// {Pr(v0,v0), Pr(v0,v1), Pr(v1,v0), Pr(v1,v1)}.
using PairTable = std::array<Rational, 4>;

PairTable perfectly_correlated();
PairTable perfectly_anticorrelated();
PairTable independent_uniform();

System specker_system(BinaryLabels labels = BinaryLabels::ZeroOne);

/// `p[k]` is p_{k+1} in the Bell table layout:
///
///           (A1,B1)     (A1,B2)     (A2,B1)     (A2,B2)
///   a=+1    p1  p2      p3  p4      p9  p10     p11 p12
///   a=-1    p5  p6      p7  p8      p13 p14     p15 p16
///
/// with columns b=+1, b=-1.
System bell_system(const std::array<Rational, 16>& p, BinaryLabels labels = BinaryLabels::PlusMinus);

/// Blocks in context order (A1,B1), (A1,B2), (A2,B1), (A2,B2).
std::array<Rational, 16> bell_parameters(const std::array<PairTable, 4>& blocks);
std::array<Rational, 16> bell_uniform_parameters();
/// Three perfectly correlated settings and one perfectly anti-correlated (A2,B2).
std::array<Rational, 16> pr_box_parameters();

/// Contexts (Q1,Q2), (Q2,Q3), (Q1,Q3).
System leggett_garg_system(const std::array<PairTable, 3>& tables, BinaryLabels labels = BinaryLabels::ZeroOne);

/// Two distinct contexts "c1", "c2" over the same contents {Q1, Q2}.
System rank2_system(const PairTable& first, const PairTable& second, BinaryLabels labels = BinaryLabels::ZeroOne);

/// Rank n >= 3: contexts (Q1,Q2), ..., (Q{n-1},Qn), (Q1,Qn); tables[i] belongs
/// to the i-th context. Rank 2 delegates to rank2_system.
System cyclic_system(const std::vector<PairTable>& tables, BinaryLabels labels = BinaryLabels::ZeroOne);

enum class ScenarioKind { BellChsh, Specker, LeggettGarg, Rank2, CyclicN };

struct ScenarioSpec {
  ScenarioKind kind = ScenarioKind::Specker;
  /// Bell: 4 tables; Leggett-Garg: 3; rank 2: 2; cyclic: n. Ignored for Specker.
  std::vector<PairTable> tables;
  BinaryLabels labels = BinaryLabels::ZeroOne;
};

/// "bell", "specker", "leggett-garg", "rank2", "cyclic"; throws UnknownScenario.
ScenarioKind parse_scenario_kind(std::string_view name);
const char* to_string(ScenarioKind kind);

/// Throws ValidationError when the table count does not fit the kind.
System build_scenario(const ScenarioSpec& spec);

}  // namespace contextlab
