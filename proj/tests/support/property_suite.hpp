#pragma once

// Randomized checks of the algebraic identities the measures are supposed to
// satisfy. The suite is shared by the unit tests and the acceptance runner,
// so it reports failures as strings instead of asserting.

#include <algorithm>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "roughdep/evaluation.hpp"
#include "roughdep/measures.hpp"
#include "roughdep/selection.hpp"
#include "generators.hpp"

namespace properties {

struct Report {
  int systems = 0;
  std::vector<std::string> failures;

  bool ok() const { return failures.empty(); }
};

namespace detail {

constexpr std::size_t kMaxRecordedFailures = 25;

inline void expect(Report& report, int trial, bool ok, const char* what) {
  if (ok || report.failures.size() >= kMaxRecordedFailures) return;
  report.failures.push_back(std::string(what) + " (system " + std::to_string(trial) + ")");
}

inline roughdep::Fraction abs_diff(roughdep::Fraction a, roughdep::Fraction b) {
  const roughdep::Fraction d = a - b;
  return d < roughdep::Fraction(0) ? -d : d;
}

constexpr roughdep::MeasureId kAllMeasures[] = {
    roughdep::MeasureId::cla, roughdep::MeasureId::rel, roughdep::MeasureId::dir,
    roughdep::MeasureId::ecd};

}  // namespace detail

// Runs every identity against `systems` random decision systems. Exercised
// identities, per system:
//   1. every measure of every tested subset lies in [0, 1]
//   2. ecd(R) = 1 exactly when the positive region is the whole universe
//   3. ecd(R) >= cla(R), with equality exactly at consistency
//   4. cla is monotone under subset growth
//   5. ecd is monotone under subset growth
//   6. measures depend only on the induced partition (duplicated column)
//   7. relabeling a conditional attribute changes nothing
//   8. permuting decision labels changes nothing
//   9. masses add across a block-respecting split of the universe
//  10. flipping one decision label moves ecd by at most 1/|U|
// plus two cross-implementation checks: the contingency path reproduces ecd,
// and resubstitution accuracy equals ecd.
inline Report run_theorem_suite(std::uint64_t seed, int systems) {
  using namespace roughdep;
  Report report;
  std::mt19937_64 rng(seed);

  for (int trial = 0; trial < systems; ++trial) {
    const DecisionSystem s = generators::random_system(rng);
    const std::size_t n = s.object_count();
    const AttributeSet all = s.all_conditionals();
    const AttributeSet sub = generators::random_subset(rng, all);
    const auto ex = [&](bool ok, const char* what) {
      detail::expect(report, trial, ok, what);
    };

    // 1. Range.
    for (const AttributeSet& attrs : {AttributeSet{}, sub, all}) {
      for (const auto id : detail::kAllMeasures) {
        const Fraction v = dependency(s, attrs, id);
        ex(Fraction(0) <= v && v <= Fraction(1), "measure out of [0,1]");
      }
    }

    // 2 and 3. ecd against cla and against consistency.
    const Fraction cla_sub = classical_dependency(s, sub);
    const Fraction ecd_sub = expected_confidence_dependency(s, sub);
    const bool consistent = positive_region(s, sub).size() == n;
    ex((ecd_sub == Fraction(1)) == consistent, "ecd=1 must mean full positive region");
    ex((cla_sub == Fraction(1)) == consistent, "cla=1 must mean full positive region");
    ex(ecd_sub >= cla_sub, "ecd must dominate cla");
    ex((ecd_sub == cla_sub) == consistent, "ecd=cla only at consistency");

    const DecisionSystem cons = generators::make_consistent(s, rng);
    ex(expected_confidence_dependency(cons, all) == Fraction(1),
       "a functional decision must give ecd(C)=1");
    ex(classical_dependency(cons, all) == Fraction(1),
       "a functional decision must give cla(C)=1");

    // 4 and 5. Monotonicity along a random chain sub <= grown <= all.
    AttributeSet grown = sub;
    for (const auto a : all.indices())
      if (rng() % 2 == 0) grown = grown.with(a);
    ex(classical_dependency(s, sub) <= classical_dependency(s, grown) &&
           classical_dependency(s, grown) <= classical_dependency(s, all),
       "cla must be monotone");
    ex(ecd_sub <= expected_confidence_dependency(s, grown) &&
           expected_confidence_dependency(s, grown) <=
               expected_confidence_dependency(s, all),
       "ecd must be monotone");

    // 6. Partition locality via a duplicated column.
    const std::size_t col = all.indices()[rng() % all.size()];
    const DecisionSystem dup = generators::with_duplicated_column(s, col);
    const std::size_t copy = dup.decision_index() - 1;
    for (const auto id : detail::kAllMeasures) {
      const Fraction base = dependency(s, sub, id);
      ex(dependency(dup, sub, id) == base, "extra column must not shift old subsets");
      if (sub.contains(col)) {
        ex(dependency(dup, sub.with(copy), id) == base,
           "adding a duplicate column must not change any measure");
        ex(dependency(dup, sub.without(col).with(copy), id) == base,
           "swapping in a duplicate column must not change any measure");
      }
    }

    // 7. Conditional relabeling invariance.
    const std::size_t card = s.dictionary(col).size();
    const DecisionSystem relabeled =
        relabel(s, col, generators::random_bijection(rng, card));
    for (const auto id : detail::kAllMeasures)
      ex(dependency(relabeled, sub, id) == dependency(s, sub, id),
         "relabeling a conditional must not change any measure");

    // 8. Decision relabeling invariance.
    const std::size_t classes = s.dictionary(s.decision_index()).size();
    const DecisionSystem permuted =
        permute_decision_labels(s, generators::random_bijection(rng, classes));
    for (const auto id : detail::kAllMeasures)
      ex(dependency(permuted, sub, id) == dependency(s, sub, id),
         "permuting decision labels must not change any measure");

    // 9. Additivity across a split that respects the blocks of U/sub.
    const Partition blocks = partition_by(s, sub);
    if (blocks.block_count() >= 2) {
      std::vector<std::size_t> left_members;
      const std::size_t keep = rng() % blocks.block_count();
      for (std::size_t b = 0; b < blocks.block_count(); ++b) {
        if (b == keep || rng() % 2 == 0) {
          if (b != keep && left_members.size() + blocks.blocks()[b].size() == n) continue;
          for (const auto x : blocks.blocks()[b]) left_members.push_back(x);
        }
      }
      std::sort(left_members.begin(), left_members.end());
      if (!left_members.empty() && left_members.size() < n) {
        const auto [left, right] = split_universe(s, left_members);
        ex(weighted_confidence_mass(s, sub) ==
               weighted_confidence_mass(left, sub) + weighted_confidence_mass(right, sub),
           "majority mass must add across a block-respecting split");
        const Fraction pooled = Fraction(left.object_count()) *
                                    expected_confidence_dependency(left, sub) +
                                Fraction(right.object_count()) *
                                    expected_confidence_dependency(right, sub);
        ex(pooled == Fraction(n) * ecd_sub, "ecd must pool across a split");
        const Fraction pos = Fraction(positive_region(left, sub).size()) +
                             Fraction(positive_region(right, sub).size());
        ex(pos == Fraction(n) * cla_sub, "positive regions must add across a split");
      }
    }

    // 10. One flipped decision label moves the mass by at most one object.
    if (classes >= 2) {
      auto values = generators::value_matrix(s);
      const std::size_t victim = rng() % n;
      const std::size_t cell = victim * s.attribute_count() + s.decision_index();
      values[cell] = (values[cell] + 1) % static_cast<std::uint32_t>(classes);
      const DecisionSystem flipped = generators::with_values(s, std::move(values));
      ex(detail::abs_diff(expected_confidence_dependency(flipped, sub), ecd_sub) <=
             Fraction(1, static_cast<long long>(n)),
         "one label flip may move ecd by at most 1/|U|");
    }

    // Cross-implementation checks.
    ex(ecd_from_contingency(contingency(s, sub)) == ecd_sub,
       "contingency path must reproduce ecd");
    ex(evaluate_resubstitution(s, sub).accuracy == ecd_sub,
       "resubstitution accuracy must equal ecd");

    ++report.systems;
  }
  return report;
}

}  // namespace properties
