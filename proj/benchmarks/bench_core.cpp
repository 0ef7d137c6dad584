#include <random>
#include <vector>

#include <benchmark/benchmark.h>

#include "roughdep/measures.hpp"
#include "roughdep/selection.hpp"

using namespace roughdep;

namespace {

// A synthetic system with `objects` rows over ten conditional attributes of
// mixed cardinality plus a noisy derived decision.
DecisionSystem synthetic(std::size_t objects) {
  constexpr std::size_t conditionals = 10;
  std::mt19937_64 rng(12345);

  std::vector<AttributeDescriptor> attributes;
  std::vector<std::vector<std::string>> dictionaries;
  std::vector<std::size_t> cards;
  for (std::size_t a = 0; a < conditionals; ++a) {
    attributes.push_back({"a" + std::to_string(a), AttributeKind::categorical,
                          AttributeRole::conditional});
    const std::size_t card = 2 + a % 5;
    cards.push_back(card);
    std::vector<std::string> dict;
    for (std::size_t v = 0; v < card; ++v) dict.push_back("v" + std::to_string(v));
    dictionaries.push_back(std::move(dict));
  }
  attributes.push_back({"d", AttributeKind::categorical, AttributeRole::decision});
  dictionaries.push_back({"c0", "c1", "c2"});

  std::vector<std::uint32_t> values;
  values.reserve(objects * (conditionals + 1));
  for (std::size_t x = 0; x < objects; ++x) {
    std::uint32_t mix = 0;
    for (std::size_t a = 0; a < conditionals; ++a) {
      const auto v = static_cast<std::uint32_t>(rng() % cards[a]);
      values.push_back(v);
      if (a < 3) mix += v;
    }
    const std::uint32_t label = rng() % 10 == 0 ? rng() % 3 : mix % 3;
    values.push_back(label);
  }
  return DecisionSystem(std::move(attributes), conditionals, std::move(dictionaries),
                        std::move(values), objects);
}

void bm_partition(benchmark::State& state) {
  const DecisionSystem s = synthetic(static_cast<std::size_t>(state.range(0)));
  const AttributeSet attrs({0, 1, 2, 3, 4});
  for (auto _ : state) {
    const Partition p = partition_by(s, attrs);
    benchmark::DoNotOptimize(p.block_count());
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void bm_ecd(benchmark::State& state) {
  const DecisionSystem s = synthetic(static_cast<std::size_t>(state.range(0)));
  const AttributeSet attrs({0, 1, 2, 3, 4});
  for (auto _ : state) {
    benchmark::DoNotOptimize(expected_confidence_dependency(s, attrs));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void bm_forward_select(benchmark::State& state) {
  const DecisionSystem s = synthetic(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    const SelectionTrace t = forward_select(s, MeasureId::ecd);
    benchmark::DoNotOptimize(t.result.size());
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

}  // namespace

BENCHMARK(bm_partition)->Arg(1000)->Arg(10000)->Arg(100000);
BENCHMARK(bm_ecd)->Arg(1000)->Arg(10000)->Arg(100000);
BENCHMARK(bm_forward_select)->Arg(1000)->Arg(10000);

BENCHMARK_MAIN();
