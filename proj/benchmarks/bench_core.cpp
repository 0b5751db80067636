#include <benchmark/benchmark.h>

#include <random>

#include "sbw/catalog.hpp"
#include "sbw/classification.hpp"
#include "sbw/crossed_module.hpp"

using namespace sbw;

namespace {

const char* const kGroups[] = {"C2", "C4", "C2xC2", "S3", "D8", "Q8"};

// Mackey product of basis classes of G x G; repeats hit the memo.
void BM_Compose(benchmark::State& state) {
  const auto g = named_group(kGroups[state.range(0)]);
  const auto classes = enumerate_sections(direct_product(g, g));
  std::mt19937_64 rng(1);
  std::vector<std::pair<SectionKey, SectionKey>> work;
  for (int i = 0; i < 64; ++i)
    work.push_back({key_of((*classes)[rng() % classes->size()].canonical),
                    key_of((*classes)[rng() % classes->size()].canonical)});
  std::size_t i = 0;
  for (auto _ : state) {
    const auto& [a, b] = work[i++ % work.size()];
    benchmark::DoNotOptimize(compose(class_element(g, g, a), class_element(g, g, b)));
  }
  state.SetLabel(g->name());
}
BENCHMARK(BM_Compose)->DenseRange(0, 5);

void BM_Canonical(benchmark::State& state) {
  const auto g = named_group(kGroups[state.range(0)]);
  const auto x = direct_product(g, g);
  std::mt19937_64 rng(2);
  const auto classes = enumerate_sections(x);
  std::vector<Section> work;
  for (int i = 0; i < 64; ++i) {
    const auto& c = (*classes)[rng() % classes->size()].canonical;
    const Elem z = static_cast<Elem>(rng() % x->order());
    work.push_back(make_section(conjugate(c.T, z), conjugate(c.S, z)));
  }
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(canonical(work[i++ % work.size()]));
  state.SetLabel(g->name());
}
BENCHMARK(BM_Canonical)->DenseRange(0, 5);

void BM_PosetAndMobius(benchmark::State& state) {
  const auto g = named_group(kGroups[state.range(0)]);
  const auto poset = build_poset(g);
  for (auto _ : state) benchmark::DoNotOptimize(MobiusTable(poset->order));
  state.SetLabel(g->name() + ", " + std::to_string(poset->size()) + " pairs");
}
BENCHMARK(BM_PosetAndMobius)->DenseRange(0, 5);

void BM_IsoSearch(benchmark::State& state) {
  const auto q8 = named_group("Q8"), d8 = named_group("D8");
  const auto pq = build_poset(q8), pd = build_poset(d8);
  std::vector<std::pair<CrossedModule, CrossedModule>> work;
  for (std::size_t a = 0; a < pq->size(); ++a)
    for (std::size_t b = 0; b < pd->size(); ++b) {
      auto x = from_pair(pq->pairs[a].K, pq->pairs[a].P), y = from_pair(pd->pairs[b].K, pd->pairs[b].P);
      if (x.A->order() == y.A->order() && x.B->order() == y.B->order()) work.push_back({std::move(x), std::move(y)});
    }
  std::size_t i = 0;
  for (auto _ : state) {
    const auto& [x, y] = work[i++ % work.size()];
    benchmark::DoNotOptimize(iso_search(x, y));
  }
  state.SetLabel(std::to_string(work.size()) + " Q8/D8 pairs of equal shape");
}
BENCHMARK(BM_IsoSearch);

}  // namespace

BENCHMARK_MAIN();
