#include <benchmark/benchmark.h>

#include "algebra/classify.hpp"
#include "algebra/isomorphism.hpp"
#include "algebra/permutation.hpp"
#include "algebra/ring.hpp"

namespace {

using namespace algebra;

void BM_ClassifyS4(benchmark::State& state) {
  CayleyTable t = symmetric_group_table(4);
  for (auto _ : state) benchmark::DoNotOptimize(classify_magma(t));
}
BENCHMARK(BM_ClassifyS4);

void BM_SubgroupsS3(benchmark::State& state) {
  CayleyTable t = symmetric_group_table(3);
  for (auto _ : state) benchmark::DoNotOptimize(subgroups(t));
}
BENCHMARK(BM_SubgroupsS3);

void BM_IsomorphismS3Triangle(benchmark::State& state) {
  CayleyTable s3 = symmetric_group_table(3);
  CayleyTable tri = triangle_group().table;
  for (auto _ : state) benchmark::DoNotOptimize(are_isomorphic(s3, tri));
}
BENCHMARK(BM_IsomorphismS3Triangle);

void BM_RingClassifyZ12(benchmark::State& state) {
  RingTables rt = residue_ring(12);
  for (auto _ : state) benchmark::DoNotOptimize(ring_classify(rt.add, rt.mul));
}
BENCHMARK(BM_RingClassifyZ12);

}  // namespace
