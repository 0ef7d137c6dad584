#include <algorithm>
#include <random>

#include "doctest.h"
#include "roughdep/selection.hpp"
#include "support/generators.hpp"

using namespace roughdep;

namespace {

void check_step(const SelectionStep& step, std::size_t attribute, StepAction action,
                Fraction value) {
  CHECK(step.attribute == attribute);
  CHECK(step.action == action);
  CHECK(step.value == value);
}

DecisionSystem constant_decision_system() {
  std::vector<AttributeDescriptor> attrs = {
      {"x", AttributeKind::categorical, AttributeRole::conditional},
      {"d", AttributeKind::categorical, AttributeRole::decision},
  };
  std::vector<std::vector<std::string>> dicts = {{"u", "v"}, {"p"}};
  return DecisionSystem(std::move(attrs), 1, std::move(dicts), {0, 0, 1, 0, 0, 0}, 3);
}

}  // namespace

TEST_CASE("forward selection under ecd walks the frozen hiring trace") {
  const DecisionSystem s = hiring_fixture();
  const SelectionTrace t = forward_select(s, MeasureId::ecd);

  CHECK(t.measure == MeasureId::ecd);
  CHECK(t.target == Fraction(13, 14));
  REQUIRE(t.steps.size() == 5);
  check_step(t.steps[0], 1, StepAction::added, Fraction(11, 14));
  check_step(t.steps[1], 0, StepAction::added, Fraction(12, 14));  // tie broken by index
  check_step(t.steps[2], 2, StepAction::added, Fraction(12, 14));  // zero-gain rounds
  check_step(t.steps[3], 3, StepAction::added, Fraction(12, 14));
  check_step(t.steps[4], 4, StepAction::added, Fraction(13, 14));
  CHECK(t.result == s.all_conditionals());
  CHECK(t.converged);
  CHECK(t.warnings.empty());
}

TEST_CASE("forward selection under cla stops early and is not minimal") {
  const DecisionSystem s = hiring_fixture();
  const SelectionTrace t = forward_select(s, MeasureId::cla);

  CHECK(t.target == Fraction(12, 14));
  REQUIRE(t.steps.size() == 4);
  check_step(t.steps[0], 1, StepAction::added, Fraction(4, 14));
  check_step(t.steps[1], 0, StepAction::added, Fraction(8, 14));
  check_step(t.steps[2], 3, StepAction::added, Fraction(10, 14));
  check_step(t.steps[3], 4, StepAction::added, Fraction(12, 14));
  CHECK(t.result == AttributeSet({0, 1, 3, 4}));
  CHECK(t.converged);

  // The greedy set reaches the target but still contains a redundant attribute.
  CHECK_FALSE(is_reduct(s, t.result, MeasureId::cla));
  CHECK(is_reduct(s, AttributeSet({1, 3, 4}), MeasureId::cla));
}

TEST_CASE("backward elimination drops Test then Exp on hiring") {
  const DecisionSystem s = hiring_fixture();

  SUBCASE("under cla") {
    const SelectionTrace t = backward_eliminate(s, MeasureId::cla);
    REQUIRE(t.steps.size() == 2);
    check_step(t.steps[0], 2, StepAction::removed, Fraction(12, 14));
    check_step(t.steps[1], 0, StepAction::removed, Fraction(12, 14));
    CHECK(t.result == AttributeSet({1, 3, 4}));
    CHECK(t.converged);
  }

  SUBCASE("under ecd") {
    const SelectionTrace t = backward_eliminate(s, MeasureId::ecd);
    REQUIRE(t.steps.size() == 2);
    check_step(t.steps[0], 2, StepAction::removed, Fraction(13, 14));
    check_step(t.steps[1], 0, StepAction::removed, Fraction(13, 14));
    CHECK(t.result == AttributeSet({1, 3, 4}));
    CHECK(is_reduct(s, t.result, MeasureId::ecd));
  }
}

TEST_CASE("non-monotone measures carry a warning") {
  const DecisionSystem s = hiring_fixture();
  for (const auto id : {MeasureId::rel, MeasureId::dir}) {
    CHECK_FALSE(forward_select(s, id).warnings.empty());
    CHECK_FALSE(backward_eliminate(s, id).warnings.empty());
  }
  for (const auto id : {MeasureId::cla, MeasureId::ecd}) {
    CHECK(forward_select(s, id).warnings.empty());
    CHECK(backward_eliminate(s, id).warnings.empty());
  }
}

TEST_CASE("the hiring table has exactly two reducts under cla and under ecd") {
  const DecisionSystem s = hiring_fixture();
  const std::vector<AttributeSet> expected = {AttributeSet({1, 3, 4}),
                                              AttributeSet({2, 3, 4})};
  CHECK(exhaustive_reducts(s, MeasureId::cla) == expected);
  CHECK(exhaustive_reducts(s, MeasureId::ecd) == expected);

  for (const auto& r : expected) {
    CHECK(is_reduct(s, r, MeasureId::cla));
    CHECK(is_reduct(s, r, MeasureId::ecd));
  }
  CHECK_FALSE(is_reduct(s, AttributeSet({3, 4}), MeasureId::cla));
  CHECK_FALSE(is_reduct(s, s.all_conditionals(), MeasureId::cla));
}

TEST_CASE("every exhaustively found reduct passes is_reduct for every measure") {
  const DecisionSystem s = hiring_fixture();
  for (const auto id : {MeasureId::cla, MeasureId::rel, MeasureId::dir, MeasureId::ecd}) {
    const auto reducts = exhaustive_reducts(s, id);
    CHECK_FALSE(reducts.empty());
    for (const auto& r : reducts) CHECK(is_reduct(s, r, id));
    // Size-then-lex order.
    for (std::size_t i = 1; i < reducts.size(); ++i) {
      const auto &a = reducts[i - 1].indices(), &b = reducts[i].indices();
      CHECK((a.size() < b.size() || (a.size() == b.size() && a < b)));
    }
  }
}

TEST_CASE("a constant decision needs no attributes at all") {
  const DecisionSystem s = constant_decision_system();
  CHECK(is_reduct(s, AttributeSet{}, MeasureId::cla));
  CHECK(is_reduct(s, AttributeSet{}, MeasureId::ecd));
  const auto reducts = exhaustive_reducts(s, MeasureId::ecd);
  REQUIRE(reducts.size() == 1);
  CHECK(reducts.front() == AttributeSet{});

  const SelectionTrace t = forward_select(s, MeasureId::ecd);
  CHECK(t.steps.empty());
  CHECK(t.result == AttributeSet{});
  CHECK(t.converged);
}

TEST_CASE("the attribute cap and bad subsets are rejected") {
  const DecisionSystem s = hiring_fixture();
  CHECK_THROWS_AS(exhaustive_reducts(s, MeasureId::cla, 4), std::invalid_argument);
  CHECK_NOTHROW(exhaustive_reducts(s, MeasureId::cla, 5));
  CHECK_THROWS_AS(is_reduct(s, AttributeSet({5}), MeasureId::cla), std::invalid_argument);
  CHECK_THROWS_AS(is_reduct(s, AttributeSet({9}), MeasureId::cla), std::invalid_argument);
}

TEST_CASE("backward elimination under rel can stall on a non-minimal set") {
  // On this system rel(C) = 3/4 and rel({a2}) = 3/4, but removing any single
  // attribute from C changes the value (4/7, 2/3, 2/3). Backward elimination
  // therefore keeps all three attributes even though {a2} alone suffices:
  // non-monotone measures carry no minimality guarantee, hence the warning.
  std::vector<AttributeDescriptor> attrs;
  for (const auto* name : {"a0", "a1", "a2"})
    attrs.push_back({name, AttributeKind::categorical, AttributeRole::conditional});
  attrs.push_back({"d", AttributeKind::categorical, AttributeRole::decision});
  std::vector<std::vector<std::string>> dicts = {
      {"v0", "v1"}, {"v0", "v1"}, {"v0", "v1", "v2"}, {"c0", "c1"}};
  const DecisionSystem s(std::move(attrs), 3, std::move(dicts),
                         {0, 1, 2, 0, 0, 0, 1, 0, 1, 1, 2, 0, 0, 1, 2, 0, 0, 0, 2, 1,
                          1, 0, 2, 1, 1, 1, 2, 1, 1, 1, 0, 0, 1, 0, 2, 0},
                         9);

  CHECK(dependency(s, s.all_conditionals(), MeasureId::rel) == Fraction(3, 4));
  CHECK(dependency(s, AttributeSet({2}), MeasureId::rel) == Fraction(3, 4));

  const SelectionTrace t = backward_eliminate(s, MeasureId::rel);
  CHECK(t.steps.empty());
  CHECK(t.result == s.all_conditionals());
  CHECK(t.converged);
  CHECK_FALSE(t.warnings.empty());

  // The single-removal criterion accepts C, yet the exhaustive search shows
  // the only subset-minimal reduct is {a2}.
  CHECK(is_reduct(s, s.all_conditionals(), MeasureId::rel));
  const auto reducts = exhaustive_reducts(s, MeasureId::rel);
  REQUIRE(reducts.size() == 1);
  CHECK(reducts.front() == AttributeSet({2}));
}

TEST_CASE("greedy selection agrees with the exhaustive oracle on random systems") {
  std::mt19937_64 rng(321);
  int checked = 0;
  for (int trial = 0; trial < 60; ++trial) {
    const DecisionSystem s = generators::random_system(rng);
    for (const auto id : {MeasureId::cla, MeasureId::ecd}) {
      const Fraction target = dependency(s, s.all_conditionals(), id);
      const auto reducts = exhaustive_reducts(s, id);
      REQUIRE_FALSE(reducts.empty());

      // Forward converges and reaches the target value.
      const SelectionTrace fwd = forward_select(s, id);
      CHECK(fwd.converged);
      CHECK(dependency(s, fwd.result, id) == target);
      CHECK(reducts.front().size() <= fwd.result.size());

      // Backward lands exactly on a minimal reduct or at least a target-hitting set
      // no smaller than the smallest reduct.
      const SelectionTrace bwd = backward_eliminate(s, id);
      CHECK(bwd.converged);
      CHECK(dependency(s, bwd.result, id) == target);
      CHECK(reducts.front().size() <= bwd.result.size());

      // Backward results contain no removable attribute, so they are reducts.
      CHECK(is_reduct(s, bwd.result, id));
      CHECK(std::find(reducts.begin(), reducts.end(), bwd.result) != reducts.end());
      ++checked;
    }
  }
  CHECK(checked == 120);
}
